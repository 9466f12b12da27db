// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "flex/corpus.hpp"
#include "flex/discharge.hpp"
#include "flex/list_color.hpp"
#include "flex/named_graphs.hpp"
#include "flex/reducible.hpp"
#include "flex/resolve.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace flex;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

// Every degree tuple within the pattern's bounded ranges, restricted to
// minimum degree 4 hosts.
std::vector<std::vector<int>> degree_tuples(const Pattern& p)
{
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < p.vertex_count(); ++i) {
        const DegreeRange r = p.host_degree[i];
        const int lo = std::max({r.lo, 4, p.internal_degree(i)});
        const int hi = r.bounded() ? r.hi : lo;
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int d = lo; d <= hi; ++d) {
                next.push_back(t);
                next.back().push_back(d);
            }
        out = std::move(next);
    }
    return out;
}

Outcome verify_library(const std::vector<std::string>& ids)
{
    Outcome o;
    int runs = 0;
    for (const std::string& id : ids)
        for (const auto& degrees : degree_tuples(configuration(id))) {
            ++runs;
            const ReducibilityReport r = verify_configuration(id, degrees);
            if (!r.reducible()) {
                o.pass = false;
                o.detail += " " + id + "(" + join(degrees) + ") not reducible;";
            }
        }
    if (o.pass)
        o.detail = std::to_string(ids.size()) + " configurations, " + std::to_string(runs) + " degree tuples reducible";
    return o;
}

Outcome criterion1()
{
    return verify_library({"B1a", "B1b", "B2a", "B2b", "B2c", "B3", "B4i", "B4ii", "B5", "B6"});
}

Outcome criterion2()
{
    Outcome o = verify_library({"D1", "D2"});
    for (int d = 0; d <= 3; ++d) {
        const int degrees[] = {d};
        if (!verify_configuration("Z0", degrees).reducible()) {
            o.pass = false;
            o.detail += " Z0 fails at degree " + std::to_string(d) + ";";
        }
    }
    if (o.pass)
        o.detail += "; Z0 reducible for host degrees 0-3";
    return o;
}

Outcome criterion3()
{
    Graph g(12);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for (Vertex v = 0, leaf = 3; v < 3; ++v)
        for (int j = 0; j < 3; ++j)
            g.add_edge(v, leaf++);
    const Vertex tri[] = {0, 1, 2};
    Outcome o;
    if (residual_sizes(g, tri, {}, 5) != SizeFunction{2, 2, 2})
        return {false, "gadget residual sizes are not (2,2,2)"};
    const ReducibilityReport r = check_fix(g, tri, {}, 5);
    if (r.fix_ok || !r.witness)
        return {false, "FIX unexpectedly holds"};
    if (find_l_coloring(g.induced(std::vector<Vertex>{0, 1, 2}), r.witness->system))
        return {false, "witness system is colorable"};
    std::ostringstream s;
    s << "FIX fails at vertex " << r.witness->where.front() << "; witness lists";
    for (Vertex v = 0; v < 3; ++v) {
        s << " {";
        for (std::size_t i = 0; i < r.witness->system[v].size(); ++i)
            s << (i ? "," : "") << r.witness->system[v][i];
        s << "}";
    }
    s << " have no coloring";
    o.detail = s.str();
    return o;
}

Outcome criterion4()
{
    struct Spot {
        const char* id;
        std::vector<int> degrees;  // empty: canonical
        SizeFunction expected;
    };
    const std::vector<Spot> spots = {
        {"B1a", {}, {5, 3, 2, 2, 2}},       {"B2b", {}, {4, 3, 3, 2, 2}},
        {"B3", {}, {3, 3, 4, 2}},           {"B4i", {}, {4, 3, 3, 3, 2}},
        {"B4ii", {}, {3, 3, 4, 3, 2}},      {"B5", {5, 5, 4, 5, 4}, {3, 2, 4, 3, 2}},
        {"B6", {}, {5, 3, 3, 2, 2, 2}},     {"D1", {5, 4, 4, 4}, {2, 3, 3, 3}},
        {"D2", {5, 4, 4, 4, 4}, {2, 3, 3, 3, 3}},
    };
    Outcome o;
    int values = 0;
    for (const Spot& s : spots) {
        const Pattern& p = configuration(s.id);
        const auto degrees = s.degrees.empty() ? canonical_degrees(p) : s.degrees;
        std::vector<Vertex> h(static_cast<std::size_t>(p.vertex_count()));
        std::iota(h.begin(), h.end(), 0);
        const SizeFunction got = residual_sizes(witness_host(p, degrees), h, {}, 5);
        values += static_cast<int>(got.size());
        if (got != s.expected) {
            o.pass = false;
            o.detail += std::string(" ") + s.id + " gives " + join(got) + ";";
        }
    }
    if (o.pass)
        o.detail = std::to_string(values) + " available-color counts over " + std::to_string(spots.size()) +
                   " configurations agree";
    return o;
}

std::vector<PlaneGraph> corpus(Generator gen, std::optional<GraphClass> c, int count, int lo, int hi,
                               std::uint64_t seed)
{
    CorpusSpec spec;
    spec.generator = gen;
    spec.filter = c;
    spec.count = count;
    spec.min_vertices = lo;
    spec.max_vertices = hi;
    spec.seed = seed;
    return generate_corpus(spec);
}

struct Conservation {
    int runs = 0, conserved = 0;
    void record(const ChargeLedger& l)
    {
        ++runs;
        conserved += l.initial_sum() == l.final_sum();
    }
};

Outcome criterion5(Conservation& cons)
{
    const auto graphs = corpus(Generator::RandomThinned, std::nullopt, 200, 4, 40, 501);
    Outcome o;
    if (graphs.size() != 200)
        return {false, "only " + std::to_string(graphs.size()) + " graphs generated"};
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const PlaneGraph& g = graphs[i];
        const bool hop = initial_charges(g, DischargeMode::Hopper).initial_sum() == Rational(-8);
        const bool hou = initial_charges(g, DischargeMode::House).initial_sum() == Rational(-12);
        if (!g.graph().connected() || !hop || !hou) {
            o.pass = false;
            o.detail += " graph " + std::to_string(i) + ";";
        }
        for (GraphClass c : {GraphClass::H1, GraphClass::H2})
            if (is_class_member(g.graph(), c))
                cons.record(apply_rules(g, mode_of(c)));
    }
    if (o.pass)
        o.detail = "200 connected plane graphs: hopper sum -8 and house sum -12 on each";
    return o;
}

Outcome criterion7(Conservation& cons)
{
    Outcome o;
    std::ostringstream s;
    for (GraphClass c : {GraphClass::H1, GraphClass::H2}) {
        auto graphs = corpus(Generator::RandomThinned, c, 150, 8, 30, c == GraphClass::H1 ? 701 : 702);
        auto dense = corpus(Generator::MinDegreeFour, c, 100, 24, 60, c == GraphClass::H1 ? 703 : 704);
        graphs.insert(graphs.end(), dense.begin(), dense.end());
        int z0 = 0, found = 0, gap = 0, contradiction = 0;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const AuditReport r = audit(graphs[i], c);
            cons.record(r.ledger);
            switch (r.verdict) {
            case Verdict::Z0: {
                ++z0;
                const auto m = find_configurations(graphs[i].graph(), c);
                if (m.empty() || m.front().config_id != "Z0") {
                    o.pass = false;
                    s << " graph " << i << " has degree <= 3 but no Z0 match;";
                }
                break;
            }
            case Verdict::ConfigurationFound:
                ++found;
                break;
            case Verdict::RuleGap:
                ++gap;
                break;
            case Verdict::TheoremContradiction:
                ++contradiction;
                o.pass = false;
                s << " " << to_string(c) << " graph " << i << " THEOREM-CONTRADICTION;";
                break;
            }
        }
        if (graphs.size() < 200)
            o.pass = false;
        s << " " << to_string(c) << ": " << graphs.size() << " graphs, Z0 " << z0 << ", configuration " << found
          << ", rule-gap " << gap << ", contradiction " << contradiction << ";";
    }
    o.detail = s.str().substr(1);
    o.detail.pop_back();
    return o;
}

Outcome criterion6(const Conservation& cons)
{
    Outcome o;
    o.pass = cons.runs > 0 && cons.conserved == cons.runs;
    o.detail = std::to_string(cons.conserved) + "/" + std::to_string(cons.runs) + " apply_rules runs conserve charge";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    std::uint64_t full = 0, intersecting = 0;
    int graphs = 0, guaranteed = 0, counterexamples = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            ++graphs;
            std::vector<int> sizes;
            for (Vertex v = 0; v < n; ++v)
                sizes.push_back(g.degree(v));
            if (!degree_colorable_guarantee(g, sizes))
                continue;
            ++guaranteed;
            const auto adj = adjacency_masks(g);
            // Every system is colorable iff every pairwise-intersecting one is:
            // merging two colors with disjoint types keeps list sizes and
            // colorings lift back. Small domains are enumerated in full.
            const bool all = std::accumulate(sizes.begin(), sizes.end(), 0) <= 18;
            const std::uint64_t seen = for_each_list_system(sizes, !all, [&](const ListSystem& s) {
                if (!find_l_coloring(g, s.to_lists()) || !mask_colorable(adj, s.masks)) {
                    ++counterexamples;
                    return false;
                }
                return true;
            });
            (all ? full : intersecting) += seen;
        }
    o.pass = counterexamples == 0;
    o.detail = std::to_string(graphs) + " connected graphs, " + std::to_string(guaranteed) + " with the guarantee; " +
               std::to_string(full) + " systems in full, " + std::to_string(intersecting) +
               " intersecting systems; " + std::to_string(counterexamples) + " counterexamples";
    return o;
}

ListAssignment random_lists(int n, int size, int palette, std::mt19937_64& rng)
{
    std::vector<Color> all(static_cast<std::size_t>(palette));
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<Color>> out;
    for (int v = 0; v < n; ++v) {
        std::shuffle(all.begin(), all.end(), rng);
        out.emplace_back(all.begin(), all.begin() + size);
    }
    return ListAssignment(out);
}

Outcome criterion9()
{
    Outcome o;
    std::mt19937_64 rng(909);
    long extensions = 0;
    int graphs = 0;
    for (GraphClass c : {GraphClass::H1, GraphClass::H2}) {
        auto gs = corpus(Generator::RandomThinned, c, 30, 8, 30, c == GraphClass::H1 ? 901 : 902);
        auto dense = corpus(Generator::MinDegreeFour, c, 20, 24, 48, c == GraphClass::H1 ? 903 : 904);
        gs.insert(gs.end(), dense.begin(), dense.end());
        if (gs.size() != 50)
            o.pass = false;
        for (const PlaneGraph& pg : gs) {
            ++graphs;
            const Graph& g = pg.graph();
            const ResolutionResult r = find_resolution(g, c);
            if (!r.ok()) {
                o.pass = false;
                o.detail += " stuck;";
                continue;
            }
            const ListAssignment lists = random_lists(g.vertex_count(), 5, 10, rng);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                for (Color col : lists[v]) {
                    ++extensions;
                    try {
                        const Coloring phi = extend_coloring(g, lists, *r.resolution, FixedPolicy{v, col});
                        if (phi[v] != col || !is_proper_l_coloring(g, lists, phi))
                            throw ExtendError(ExtendErrorKind::InvariantBreach, "bad coloring");
                    } catch (const ExtendError& e) {
                        o.pass = false;
                        o.detail += std::string(" ") + e.what() + ";";
                    }
                }
        }
    }
    o.detail = std::to_string(graphs) + " graphs resolved, " + std::to_string(extensions) +
               " fixed(v,c) extensions" + o.detail;
    return o;
}

Outcome criterion10()
{
    Outcome o;
    std::ostringstream s;
    {
        const Graph k3 = named::cycle(3).graph();
        const auto r = oracle_max_satisfaction(k3, ListAssignment::uniform(3, {0, 1, 2}),
                                               WeightedRequest::unit({{{0, 0}, {1, 0}, {2, 0}}}));
        o.pass = o.pass && r.ratio == Rational(1, 3);
        s << "K3 unanimous ratio " << format_rational(r.ratio);
    }
    {
        const Graph edge = named::path(2).graph();
        const auto e = empirical_epsilon(edge, ListAssignment::uniform(2, {0, 1, 2, 3, 4}), {}, 1000);
        o.pass = o.pass && e.exhaustive && e.min_ratio == Rational(1, 2);
        s << "; edge full-domain minimum " << format_rational(e.min_ratio);
    }
    std::mt19937_64 rng(1010);
    int instances = 0, violations = 0;
    for (GraphClass c : {GraphClass::H1, GraphClass::H2}) {
        auto gs = corpus(Generator::RandomThinned, c, 150, 3, 12, c == GraphClass::H1 ? 1001 : 1002);
        auto small = corpus(Generator::ExhaustiveSmall, c, 1000, 1, 6, 0);
        gs.insert(gs.end(), small.begin(), small.end());
        for (const PlaneGraph& pg : gs) {
            const Graph& g = pg.graph();
            if (g.vertex_count() > 12)
                continue;
            const ListAssignment lists = random_lists(g.vertex_count(), 5, 8, rng);
            WeightedRequest w;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (rng() % 4 != 0)
                    w.weight[{v, lists[v][rng() % 5]}] = Rational(static_cast<std::int64_t>(1 + rng() % 5), 3);
            if (w.total() == Rational(0))
                w.weight[{0, lists[0][0]}] = Rational(1);
            const ResolutionResult r = find_resolution(g, c);
            if (!r.ok()) {
                ++violations;
                continue;
            }
            const Coloring phi = extend_coloring(g, lists, *r.resolution, RequestGreedyPolicy{w});
            const OracleResult best = oracle_max_satisfaction(g, lists, w);
            ++instances;
            if (!is_proper_l_coloring(g, lists, phi) || w.honored(phi) > best.honored)
                ++violations;
        }
    }
    o.pass = o.pass && violations == 0 && instances > 0;
    s << "; greedy <= oracle on " << instances - violations << "/" << instances << " instances";
    o.detail = s.str();
    return o;
}

}  // namespace

int main()
{
    std::vector<std::pair<Outcome, double>> results(11);
    Conservation cons;
    auto timed = [&](int id, const std::function<Outcome()>& f) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        results[id] = {o, std::chrono::duration<double>(Clock::now() - t0).count()};
    };
    timed(1, criterion1);
    timed(2, criterion2);
    timed(3, criterion3);
    timed(4, criterion4);
    timed(5, [&] { return criterion5(cons); });
    timed(7, [&] { return criterion7(cons); });
    timed(6, [&] { return criterion6(cons); });
    timed(8, criterion8);
    timed(9, criterion9);
    timed(10, criterion10);

    bool all = true;
    for (int id = 1; id <= 10; ++id) {
        const auto& [o, secs] = results[id];
        all = all && o.pass;
        std::cout << "criterion " << std::setw(2) << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
                  << " [" << std::fixed << std::setprecision(1) << secs << "s]\n";
    }
    return all ? 0 : 1;
}

#include "flex/resolve.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

#include "flex/plane_graph.hpp"

namespace flex {

namespace {

std::vector<Vertex> minus_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Vertex> local_ids(const std::vector<Vertex>& whole, const std::vector<Vertex>& part)
{
    std::vector<Vertex> out;
    for (Vertex v : part)
        out.push_back(static_cast<Vertex>(std::lower_bound(whole.begin(), whole.end(), v) - whole.begin()));
    return out;
}

}  // namespace

ResolutionResult find_resolution(const Graph& g, GraphClass c, int k, int b)
{
    Resolution res;
    std::vector<std::vector<Vertex>> stack;
    {
        auto comps = g.components();
        stack.assign(comps.rbegin(), comps.rend());
    }
    bool last_took_all = false;
    while (!stack.empty()) {
        const std::vector<Vertex> comp = std::move(stack.back());
        stack.pop_back();
        const Graph local = g.induced(comp);
        std::optional<ResolutionStep> step;
        for (const Pattern& p : configuration_library(c)) {
            if (p.vertex_count() > b)
                continue;
            for (const Match& m : find_matches(local, p)) {
                const ReducibilityReport& report = verify_cached(local, m.map, k, c, p.id);
                if (!report.reducible())
                    continue;
                std::vector<Vertex> h;
                for (Vertex x : m.map)
                    h.push_back(comp[x]);
                std::sort(h.begin(), h.end());
                step = ResolutionStep{std::move(h), {}, p.id, report};
                break;
            }
            if (step)
                break;
        }
        if (!step)
            return {std::nullopt, comp};

        const std::vector<Vertex> rest = minus_sorted(comp, step->h);
        last_took_all = rest.empty() && stack.empty();
        auto parts = g.induced(rest).components();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            std::vector<Vertex> ids;
            for (Vertex x : *it)
                ids.push_back(rest[x]);
            stack.push_back(std::move(ids));
        }
        res.steps.push_back(std::move(*step));
    }
    if (last_took_all && !res.steps.empty()) {
        ResolutionStep last = std::move(res.steps.back());
        res.steps.pop_back();
        res.residue = std::move(last.h);
        res.residue_config = std::move(last.config_id);
        res.residue_report = std::move(last.report);
    }
    return {std::move(res), {}};
}

std::string check_resolution(const Graph& g, GraphClass c, const Resolution& r, int k, int b)
{
    std::vector<Vertex> alive(static_cast<std::size_t>(g.vertex_count()));
    std::iota(alive.begin(), alive.end(), 0);
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        const std::string where = "step " + std::to_string(i) + ": ";
        if (!std::is_sorted(s.h.begin(), s.h.end()) || !std::includes(alive.begin(), alive.end(), s.h.begin(), s.h.end()))
            return where + "H is not a subset of the current graph";
        if (!std::includes(s.h.begin(), s.h.end(), s.b.begin(), s.b.end()))
            return where + "boundary is not inside H";
        const auto inner = minus_sorted(s.h, s.b);
        if (static_cast<int>(inner.size()) > b)
            return where + "peels more than b vertices";
        const Graph cur = g.induced(alive);
        auto rep = check_boundary_reducible(cur, local_ids(alive, s.h), local_ids(alive, s.b), k, c);
        if (!rep.reducible())
            return where + "not boundary-reducible in the current graph";
        alive = minus_sorted(alive, inner);
    }
    std::vector<Vertex> residue = r.residue;
    std::sort(residue.begin(), residue.end());
    if (residue != alive)
        return "residue differs from the remaining graph";
    if (residue.empty())
        return {};
    if (static_cast<int>(residue.size()) > b)
        return "residue larger than b";
    const Graph cur = g.induced(alive);
    std::vector<Vertex> all(alive.size());
    std::iota(all.begin(), all.end(), 0);
    if (!check_boundary_reducible(cur, all, {}, k, c).reducible())
        return "residue is not boundary-reducible";
    return {};
}

WeightedRequest WeightedRequest::unit(const Request& r)
{
    WeightedRequest w;
    for (auto [v, c] : r.entries)
        w.weight[{v, c}] = Rational(1);
    return w;
}

Rational WeightedRequest::total() const
{
    Rational t(0);
    for (const auto& [key, x] : weight)
        t += x;
    return t;
}

Rational WeightedRequest::weight_of(Vertex v, Color c) const
{
    auto it = weight.find({v, c});
    return it == weight.end() ? Rational(0) : it->second;
}

Rational WeightedRequest::honored(const Coloring& phi) const
{
    Rational t(0);
    for (const auto& [key, x] : weight)
        if (key.first < static_cast<Vertex>(phi.size()) && phi[key.first] == key.second)
            t += x;
    return t;
}

void validate_request(const ListAssignment& lists, const WeightedRequest& w)
{
    for (const auto& [key, x] : w.weight) {
        auto [v, c] = key;
        if (v < 0 || v >= lists.vertex_count())
            throw RequestError("request names vertex " + std::to_string(v) + " outside the graph");
        if (!lists.contains(v, c))
            throw RequestError("requested color " + std::to_string(c) + " not in L(" + std::to_string(v) + ")");
        if (x < Rational(0))
            throw RequestError("negative weight");
    }
}

namespace {

// Integer weights over a common denominator.
struct ScaledWeights {
    std::vector<std::vector<std::int64_t>> w;  // w[v][i] for the i-th color of lists[v]
    std::int64_t denominator = 1;
};

ScaledWeights scale(const ListAssignment& lists, const WeightedRequest& req)
{
    ScaledWeights s;
    for (const auto& [key, x] : req.weight)
        s.denominator = std::lcm(s.denominator, x.denominator());
    s.w.resize(static_cast<std::size_t>(lists.vertex_count()));
    for (Vertex v = 0; v < lists.vertex_count(); ++v)
        for (Color c : lists[v]) {
            const Rational x = req.weight_of(v, c);
            s.w[v].push_back(x.numerator() * (s.denominator / x.denominator()));
        }
    return s;
}

// Exhaustive search over proper colorings of g from lists, in vertex order
// with colors ascending, keeping the first coloring of maximum weight.
class MaxWeightSearch {
public:
    MaxWeightSearch(const Graph& g, const ListAssignment& lists, const ScaledWeights& w)
        : g_(g), lists_(lists), w_(w), phi_(g.vertex_count(), -1), suffix_(g.vertex_count() + 1, 0)
    {
        for (int v = g.vertex_count() - 1; v >= 0; --v) {
            std::int64_t m = 0;
            for (auto x : w.w[v])
                m = std::max(m, x);
            suffix_[v] = suffix_[v + 1] + m;
        }
    }

    std::optional<std::pair<Coloring, std::int64_t>> run()
    {
        rec(0, 0);
        if (best_value_ < 0)
            return std::nullopt;
        return std::make_pair(best_, best_value_);
    }

private:
    void rec(int v, std::int64_t value)
    {
        if (v == g_.vertex_count()) {
            if (value > best_value_) {
                best_value_ = value;
                best_ = phi_;
            }
            return;
        }
        if (best_value_ >= 0 && value + suffix_[v] <= best_value_)
            return;
        const auto& list = lists_[v];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Color c = list[i];
            bool clash = false;
            for (Vertex u : g_.neighbors(v))
                if (u < v && phi_[u] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            phi_[v] = c;
            rec(v + 1, value + w_.w[v][i]);
            if (best_value_ >= 0 && value + suffix_[v] <= best_value_)
                break;
        }
        phi_[v] = -1;
    }

    const Graph& g_;
    const ListAssignment& lists_;
    const ScaledWeights& w_;
    Coloring phi_;
    std::vector<std::int64_t> suffix_;
    Coloring best_;
    std::int64_t best_value_ = -1;
};

}  // namespace

Coloring extend_coloring(const Graph& g, const ListAssignment& lists, const Resolution& r, const ExtendPolicy& policy,
                         int k)
{
    const int n = g.vertex_count();
    if (lists.vertex_count() != n)
        throw ExtendError(ExtendErrorKind::BadInput, "list assignment does not cover the graph");
    for (Vertex v = 0; v < n; ++v)
        if (lists.size_of(v) < k)
            throw ExtendError(ExtendErrorKind::BadInput,
                              "list of vertex " + std::to_string(v) + " shorter than " + std::to_string(k));

    // Blocks in coloring order: residue, then steps from last to first.
    std::vector<std::vector<Vertex>> blocks;
    if (!r.residue.empty()) {
        auto res = r.residue;
        std::sort(res.begin(), res.end());
        blocks.push_back(std::move(res));
    }
    for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it)
        blocks.push_back(minus_sorted(it->h, it->b));
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (Vertex v : blocks[i]) {
            if (block_of[v] >= 0)
                throw ExtendError(ExtendErrorKind::BadInput, "vertex " + std::to_string(v) + " peeled twice");
            block_of[v] = static_cast<int>(i);
        }
    for (Vertex v = 0; v < n; ++v)
        if (block_of[v] < 0)
            throw ExtendError(ExtendErrorKind::BadInput, "vertex " + std::to_string(v) + " not covered");

    const FixedPolicy* fixed = std::get_if<FixedPolicy>(&policy);
    const RequestGreedyPolicy* greedy = std::get_if<RequestGreedyPolicy>(&policy);
    if (fixed && (fixed->v < 0 || fixed->v >= n || !lists.contains(fixed->v, fixed->c)))
        throw ExtendError(ExtendErrorKind::BadInput, "fixed binding is outside the lists");
    if (greedy) {
        try {
            validate_request(lists, greedy->request);
        } catch (const RequestError& e) {
            throw ExtendError(ExtendErrorKind::BadInput, e.what());
        }
    }

    Coloring phi(static_cast<std::size_t>(n), -1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& block = blocks[bi];
        bool guaranteed = true;
        std::vector<std::vector<Color>> eff;
        for (Vertex v : block) {
            std::vector<Color> l;
            for (Color c : lists[v]) {
                bool used = false;
                for (Vertex u : g.neighbors(v))
                    if (phi[u] == c) {
                        used = true;
                        break;
                    }
                if (!used)
                    l.push_back(c);
            }
            eff.push_back(std::move(l));
        }
        if (fixed) {
            const int fb = block_of[fixed->v];
            if (static_cast<int>(bi) == fb) {
                auto pos = std::lower_bound(block.begin(), block.end(), fixed->v) - block.begin();
                auto& l = eff[pos];
                const bool has = std::binary_search(l.begin(), l.end(), fixed->c);
                l.clear();
                if (has)
                    l.push_back(fixed->c);
            } else if (static_cast<int>(bi) < fb) {
                int touched = 0;
                for (std::size_t i = 0; i < block.size(); ++i)
                    if (g.has_edge(block[i], fixed->v)) {
                        ++touched;
                        auto& l = eff[i];
                        l.erase(std::remove(l.begin(), l.end(), fixed->c), l.end());
                    }
                guaranteed = touched <= k - 2;
            }
        }

        const Graph local = g.induced(block);
        const ListAssignment el(eff);
        std::optional<Coloring> sol;
        if (greedy) {
            WeightedRequest lw;
            for (std::size_t i = 0; i < block.size(); ++i)
                for (Color c : el[static_cast<Vertex>(i)]) {
                    const Rational x = greedy->request.weight_of(block[i], c);
                    if (x != Rational(0))
                        lw.weight[{static_cast<Vertex>(i), c}] = x;
                }
            const ScaledWeights sw = scale(el, lw);
            if (auto best = MaxWeightSearch(local, el, sw).run())
                sol = std::move(best->first);
        } else {
            sol = find_l_coloring(local, el);
        }
        if (!sol) {
            std::ostringstream msg;
            msg << "no coloring of peeled set {";
            for (std::size_t i = 0; i < block.size(); ++i)
                msg << (i ? " " : "") << block[i];
            msg << "} from its remaining lists";
            throw ExtendError(guaranteed ? ExtendErrorKind::InvariantBreach : ExtendErrorKind::Unguaranteed, msg.str());
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            phi[block[i]] = (*sol)[i];
    }
    if (!is_proper_l_coloring(g, lists, phi) || (fixed && phi[fixed->v] != fixed->c))
        throw ExtendError(ExtendErrorKind::InvariantBreach, "assembled coloring failed re-validation");
    return phi;
}

OracleResult oracle_max_satisfaction(const Graph& g, const ListAssignment& lists, const WeightedRequest& w)
{
    if (g.vertex_count() > 12)
        throw std::invalid_argument("oracle_max_satisfaction supports at most 12 vertices");
    validate_request(lists, w);
    const Rational total = w.total();
    if (total <= Rational(0))
        throw std::invalid_argument("request has zero total weight");
    const ScaledWeights sw = scale(lists, w);
    auto best = MaxWeightSearch(g, lists, sw).run();
    if (!best)
        throw UncolorableError("graph is not L-colorable");
    OracleResult out;
    out.best = std::move(best->first);
    out.honored = Rational(best->second, sw.denominator);
    out.total = total;
    out.ratio = out.honored / total;
    return out;
}

EpsilonResult empirical_epsilon(const Graph& g, const ListAssignment& lists, std::span<const Vertex> domain,
                                std::uint64_t trials, std::uint64_t seed)
{
    std::vector<Vertex> dom(domain.begin(), domain.end());
    if (dom.empty()) {
        dom.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(dom.begin(), dom.end(), 0);
    }
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    for (Vertex v : dom)
        if (lists.size_of(v) == 0)
            throw std::invalid_argument("empty list in request domain");

    std::uint64_t space = 1;
    for (Vertex v : dom) {
        const auto s = static_cast<std::uint64_t>(lists.size_of(v));
        space = space > trials ? space : space * s;
    }

    EpsilonResult out;
    out.exhaustive = space <= trials;
    auto consider = [&](const std::vector<int>& pick) {
        Request r;
        for (std::size_t i = 0; i < dom.size(); ++i)
            r.entries.emplace_back(dom[i], lists[dom[i]][pick[i]]);
        const Rational ratio = oracle_max_satisfaction(g, lists, WeightedRequest::unit(r)).ratio;
        if (out.requests == 0 || ratio < out.min_ratio) {
            out.min_ratio = ratio;
            out.minimizer = std::move(r);
        }
        ++out.requests;
    };

    std::vector<int> pick(dom.size(), 0);
    if (out.exhaustive) {
        while (true) {
            consider(pick);
            std::size_t i = 0;
            while (i < dom.size() && ++pick[i] == lists.size_of(dom[i]))
                pick[i++] = 0;
            if (i == dom.size())
                break;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            for (std::size_t i = 0; i < dom.size(); ++i)
                pick[i] = std::uniform_int_distribution<int>(0, lists.size_of(dom[i]) - 1)(rng);
            consider(pick);
        }
    }
    return out;
}

WeightedRequest parse_requests(std::istream& in, const ListAssignment& lists)
{
    WeightedRequest w;
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto colon = line.find(':');
        std::istringstream head(line.substr(0, colon));
        std::string kind;
        if (!(head >> kind))
            continue;
        if (!header) {
            std::string version;
            if (kind != "requests" || !(head >> version) || version != "v1" || colon != std::string::npos)
                throw ParseError(lineno, "expected header 'requests v1'");
            header = true;
            continue;
        }
        if ((kind != "r" && kind != "w") || colon == std::string::npos)
            throw ParseError(lineno, "expected 'r <v>: <c>' or 'w <v> <c>: <weight>'");
        long long v = -1, c = -1;
        std::string extra, value;
        std::istringstream tail(line.substr(colon + 1));
        if (!(head >> v))
            throw ParseError(lineno, "bad vertex id");
        if (kind == "w" && !(head >> c))
            throw ParseError(lineno, "bad color");
        if (head >> extra)
            throw ParseError(lineno, "unexpected '" + extra + "'");
        if (!(tail >> value) || (tail >> extra))
            throw ParseError(lineno, "expected exactly one value after ':'");
        Rational x(1);
        try {
            if (kind == "r") {
                std::size_t used = 0;
                c = std::stoll(value, &used);
                if (used != value.size())
                    throw std::invalid_argument("color");
            } else {
                x = parse_nonneg_rational(value);
            }
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad value '" + value + "'");
        }
        if (v < 0 || v >= lists.vertex_count())
            throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
        if (c < 0 || !lists.contains(static_cast<Vertex>(v), static_cast<Color>(c)))
            throw ParseError(lineno, "color " + std::to_string(c) + " not in L(" + std::to_string(v) + ")");
        const std::pair<Vertex, Color> key{static_cast<Vertex>(v), static_cast<Color>(c)};
        if (w.weight.count(key))
            throw ParseError(lineno, "repeated request for vertex " + std::to_string(v) + " color " + std::to_string(c));
        w.weight[key] = x;
    }
    if (!header)
        throw ParseError(0, "missing header 'requests v1'");
    return w;
}

WeightedRequest parse_requests(std::string_view text, const ListAssignment& lists)
{
    std::istringstream in{std::string(text)};
    return parse_requests(in, lists);
}

std::string format_requests(const WeightedRequest& w)
{
    std::ostringstream out;
    out << "requests v1\n";
    for (const auto& [key, x] : w.weight)
        out << "w " << key.first << " " << key.second << ": " << format_rational(x) << "\n";
    return out.str();
}

std::string format_resolution(const Resolution& r)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        out << "step " << i + 1 << ": " << s.config_id << " peel";
        for (Vertex v : minus_sorted(s.h, s.b))
            out << " " << v;
        out << " boundary";
        for (Vertex v : s.b)
            out << " " << v;
        out << "\n";
    }
    if (r.residue.empty()) {
        out << "residue: none\n";
    } else {
        out << "residue: " << r.residue_config;
        for (Vertex v : r.residue)
            out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace flex

#include "flex/cli.hpp"

#include "flex/corpus.hpp"
#include "flex/discharge.hpp"
#include "flex/embedding.hpp"
#include "flex/named_graphs.hpp"
#include "flex/reducible.hpp"
#include "flex/resolve.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

namespace flex {

namespace {

// Thrown inside a command to leave with a specific code.
struct Exit {
    int code;
};

PlaneGraph named_graph(std::string_view spec)
{
    std::string name(spec), arg;
    if (auto colon = name.find(':'); colon != std::string::npos) {
        arg = name.substr(colon + 1);
        name.resize(colon);
    }
    auto size = [&](int fallback) {
        if (arg.empty())
            return fallback;
        std::size_t used = 0;
        const int n = std::stoi(arg, &used);
        if (used != arg.size() || n < 1)
            throw std::invalid_argument("bad size '" + arg + "'");
        return n;
    };
    static const std::map<std::string, PlaneGraph (*)()> fixed = {
        {"single-vertex", named::single_vertex}, {"k4", named::k4},
        {"diamond", named::diamond},             {"octahedron", named::octahedron},
        {"icosahedron", named::icosahedron},     {"dodecahedron", named::dodecahedron},
        {"prism", named::triangular_prism},      {"cube", named::cube},
        {"hopper", named::hopper},               {"house", named::house},
    };
    if (auto it = fixed.find(name); it != fixed.end() && arg.empty())
        return it->second();
    if (name == "path")
        return named::path(size(2));
    if (name == "cycle")
        return named::cycle(size(3));
    if (name == "star")
        return named::star(size(3));
    throw std::invalid_argument("unknown named graph '" + std::string(spec) + "'");
}

PlaneGraph load_graph(const std::string& where)
{
    if (where.rfind("named:", 0) == 0)
        return named_graph(std::string_view(where).substr(6));
    std::ifstream in(where);
    if (!in)
        throw ParseError(0, "cannot open '" + where + "'");
    return parse_plane_graph(in);
}

ListAssignment load_lists(const std::string& where, const std::vector<Color>& uniform, int n)
{
    if (where.empty())
        return ListAssignment::uniform(n, uniform);
    std::ifstream in(where);
    if (!in)
        throw ParseError(0, "cannot open '" + where + "'");
    return parse_lists(in, n);
}

WeightedRequest load_requests(const std::string& where, const ListAssignment& lists)
{
    std::ifstream in(where);
    if (!in)
        throw ParseError(0, "cannot open '" + where + "'");
    return parse_requests(in, lists);
}

void require_class(const Graph& g, GraphClass c, std::ostream& err)
{
    if (!is_class_member(g, c)) {
        err << "error: graph is not in class " << to_string(c) << "\n";
        throw Exit{ExitClass};
    }
}

std::string join(const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += " " + std::to_string(v);
    return s;
}

void print_coloring(std::ostream& out, const Coloring& phi)
{
    for (std::size_t v = 0; v < phi.size(); ++v)
        out << "phi " << v << ": " << phi[v] << "\n";
}

Resolution resolve_or_exit(const Graph& g, GraphClass c, int k, int b, std::ostream& out)
{
    ResolutionResult r = find_resolution(g, c, k, b);
    if (!r.ok()) {
        out << "stuck:" << join(r.stuck) << "\n";
        throw Exit{ExitStuck};
    }
    return std::move(*r.resolution);
}

Coloring extend_or_exit(const Graph& g, const ListAssignment& lists, const Resolution& r, const ExtendPolicy& p, int k,
                        std::ostream& err)
{
    try {
        return extend_coloring(g, lists, r, p, k);
    } catch (const ExtendError& e) {
        err << "error: " << e.what() << "\n";
        throw Exit{e.kind() == ExtendErrorKind::BadInput ? ExitParse : ExitInvariant};
    }
}

std::string ratio_text(const Rational& honored, const Rational& total)
{
    if (total == Rational(0))
        return "-";
    return format_rational(honored / total);
}

struct Options {
    std::string graph, lists, requests, target, fix, mode = "hopper", cls, generator = "random-triangulation-thinned",
                                                       out_dir;
    std::vector<Color> uniform{0, 1, 2, 3, 4};
    std::vector<int> degrees;
    int k = 5, b = 7, count = 100, min_vertices = 8, max_vertices = 30;
    std::uint64_t seed = 1, trials = 1000;
    bool verify = false, epsilon = false;
};

int cmd_detect(const Options& o, std::ostream& out, std::ostream&)
{
    const PlaneGraph g = load_graph(o.graph);
    out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << " faces " << g.face_count() << "\n";
    std::vector<GraphClass> classes{GraphClass::H1, GraphClass::H2};
    if (!o.cls.empty())
        classes = {parse_graph_class(o.cls)};
    bool member = true;
    for (GraphClass c : classes) {
        const auto occ = c == GraphClass::H1 ? find_hopper(g.graph()) : find_house(g.graph());
        for (const Match& m : occ)
            out << (c == GraphClass::H1 ? "hopper:" : "house:") << join(m.map) << "\n";
        out << "class " << to_string(c) << ": " << (occ.empty() ? "member" : "not member") << "\n";
        member = member && occ.empty();
        for (const Match& m : find_configurations(g.graph(), c))
            out << "config " << m.config_id << ":" << join(m.map) << "\n";
    }
    return !o.cls.empty() && !member ? ExitClass : ExitOk;
}

int cmd_verify_config(const Options& o, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> ids;
    if (o.target == "all")
        ids = configuration_ids();
    else
        ids = {o.target};
    if (!o.degrees.empty() && ids.size() != 1) {
        err << "error: --degrees needs a single configuration\n";
        return ExitParse;
    }
    int ok = 0;
    for (const std::string& id : ids) {
        const Pattern* p = nullptr;
        try {
            p = &configuration(id);
        } catch (const std::out_of_range&) {
            err << "error: unknown configuration '" << id << "'\n";
            return ExitParse;
        }
        std::vector<int> degrees = o.degrees.empty() ? canonical_degrees(*p) : o.degrees;
        if (static_cast<int>(degrees.size()) != p->vertex_count()) {
            err << "error: " << id << " needs " << p->vertex_count() << " degrees\n";
            return ExitParse;
        }
        for (int i = 0; i < p->vertex_count(); ++i)
            if (!p->host_degree[i].contains(degrees[i]) || degrees[i] < p->internal_degree(i)) {
                err << "error: degree " << degrees[i] << " not allowed for " << id << " vertex " << p->names[i]
                    << "\n";
                return ExitParse;
            }
        const Graph host = witness_host(*p, degrees);
        std::vector<Vertex> h(static_cast<std::size_t>(p->vertex_count()));
        std::iota(h.begin(), h.end(), 0);
        const ReducibilityReport r = check_boundary_reducible(host, h, {}, o.k, configuration_class(id), id);
        out << format_report(r);
        ok += r.reducible();
    }
    out << "reducible " << ok << "/" << ids.size() << "\n";
    return ok == static_cast<int>(ids.size()) ? ExitOk : ExitInvariant;
}

int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err)
{
    const PlaneGraph g = load_graph(o.graph);
    const GraphClass c = parse_graph_class(o.cls);
    require_class(g.graph(), c, err);
    const Resolution r = resolve_or_exit(g.graph(), c, o.k, o.b, out);
    out << format_resolution(r);
    if (o.verify) {
        if (std::string fault = check_resolution(g.graph(), c, r, o.k, o.b); !fault.empty()) {
            err << "error: " << fault << "\n";
            return ExitInvariant;
        }
        out << "verified\n";
    }
    return ExitOk;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err)
{
    const PlaneGraph g = load_graph(o.graph);
    const GraphClass c = parse_graph_class(o.cls);
    const ListAssignment lists = load_lists(o.lists, o.uniform, g.vertex_count());
    require_class(g.graph(), c, err);
    ExtendPolicy policy = PlainPolicy{};
    if (!o.fix.empty()) {
        const auto colon = o.fix.find(':');
        if (colon == std::string::npos) {
            err << "error: --fix expects <v>:<c>\n";
            return ExitParse;
        }
        policy = FixedPolicy{std::stoi(o.fix.substr(0, colon)), std::stoi(o.fix.substr(colon + 1))};
    }
    const Resolution r = resolve_or_exit(g.graph(), c, o.k, o.b, out);
    print_coloring(out, extend_or_exit(g.graph(), lists, r, policy, o.k, err));
    return ExitOk;
}

int cmd_flex(const Options& o, std::ostream& out, std::ostream& err)
{
    const PlaneGraph g = load_graph(o.graph);
    const GraphClass c = parse_graph_class(o.cls);
    const ListAssignment lists = load_lists(o.lists, o.uniform, g.vertex_count());
    const WeightedRequest w = o.requests.empty() ? WeightedRequest{} : load_requests(o.requests, lists);
    require_class(g.graph(), c, err);
    const Resolution r = resolve_or_exit(g.graph(), c, o.k, o.b, out);
    const Coloring phi = extend_or_exit(g.graph(), lists, r, RequestGreedyPolicy{w}, o.k, err);
    const Rational total = w.total();
    out << "total: " << format_rational(total) << "\n";
    out << "greedy: " << format_rational(w.honored(phi)) << " ratio " << ratio_text(w.honored(phi), total) << "\n";
    if (g.vertex_count() > 12) {
        out << "oracle: skipped (more than 12 vertices)\n";
    } else if (total > Rational(0)) {
        try {
            const OracleResult best = oracle_max_satisfaction(g.graph(), lists, w);
            out << "oracle: " << format_rational(best.honored) << " ratio " << format_rational(best.ratio) << "\n";
        } catch (const UncolorableError& e) {
            err << "error: " << e.what() << "\n";
            return ExitInvariant;
        }
    }
    if (o.epsilon && g.vertex_count() <= 12) {
        const EpsilonResult e = empirical_epsilon(g.graph(), lists, {}, o.trials, o.seed);
        out << "epsilon: " << format_rational(e.min_ratio) << " over " << e.requests << " requests ("
            << (e.exhaustive ? "exhaustive" : "sampled, seed " + std::to_string(o.seed)) << ")\n";
        out << "minimizer:";
        for (auto [v, col] : e.minimizer.entries)
            out << " " << v << "=" << col;
        out << "\n";
    }
    print_coloring(out, phi);
    return ExitOk;
}

int cmd_discharge(const Options& o, std::ostream& out, std::ostream& err)
{
    const PlaneGraph g = load_graph(o.graph);
    const DischargeMode mode = parse_discharge_mode(o.mode);
    AuditReport r;
    try {
        r = audit(g, mode == DischargeMode::Hopper ? GraphClass::H1 : GraphClass::H2);
    } catch (const ModeViolation& e) {
        err << "error: " << e.what() << "\n";
        return ExitClass;
    }
    out << format_ledger(r.ledger) << format_verdict(r);
    return r.conserved && r.verdict != Verdict::TheoremContradiction ? ExitOk : ExitInvariant;
}

CorpusSpec corpus_spec(const Options& o)
{
    CorpusSpec spec;
    spec.generator = parse_generator(o.generator);
    spec.count = o.count;
    spec.min_vertices = o.min_vertices;
    spec.max_vertices = o.max_vertices;
    if (!o.cls.empty() && o.cls != "none")
        spec.filter = parse_graph_class(o.cls);
    spec.seed = o.seed;
    return spec;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream&)
{
    const CorpusSpec spec = corpus_spec(o);
    const GraphClass c = spec.filter.value_or(GraphClass::H1);
    const auto corpus = generate_corpus(spec);
    out << "audit class " << to_string(c) << " generator " << to_string(spec.generator) << " seed " << spec.seed
        << " graphs " << corpus.size() << "\n";
    std::map<Verdict, int> counts;
    int conserved = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const PlaneGraph& g = corpus[i];
        const AuditReport r = audit(g, c);
        ++counts[r.verdict];
        conserved += r.conserved;
        out << "graph " << i << ": n " << g.vertex_count() << " m " << g.edge_count() << " delta " << r.min_degree
            << " " << format_verdict(r);
    }
    out << "verdicts:";
    for (Verdict v : {Verdict::Z0, Verdict::ConfigurationFound, Verdict::RuleGap, Verdict::TheoremContradiction})
        out << " " << to_string(v) << " " << counts[v];
    out << "\nconserved: " << conserved << "/" << corpus.size() << "\n";
    const bool fine = counts[Verdict::TheoremContradiction] == 0 && conserved == static_cast<int>(corpus.size());
    return fine ? ExitOk : ExitInvariant;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err)
{
    const CorpusSpec spec = corpus_spec(o);
    const auto corpus = generate_corpus(spec);
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            std::ostringstream name;
            name << "graph_" << std::setw(4) << std::setfill('0') << i << ".pg";
            const auto path = std::filesystem::path(o.out_dir) / name.str();
            std::ofstream f(path);
            if (!(f << format_plane_graph(corpus[i]))) {
                err << "error: cannot write " << path.string() << "\n";
                return ExitParse;
            }
            out << path.string() << "\n";
        }
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            out << "# graph " << i << " seed " << spec.seed << "\n" << format_plane_graph(corpus[i]);
    }
    if (static_cast<int>(corpus.size()) < spec.count)
        err << "warning: generated " << corpus.size() << " of " << spec.count << " graphs\n";
    return ExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"List coloring, reducibility and discharging for hopper-free and house-free planar graphs",
                 "flexcolor"};
    app.require_subcommand(1);

    auto class_opt = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--class", o.cls, "H1 (hopper-free) or H2 (house-free)");
        if (required)
            opt->required();
    };
    auto corpus_opts = [&](CLI::App* s) {
        s->add_option("--generator", o.generator, "exhaustive-small, random-triangulation-thinned, min-degree-4");
        s->add_option("--count", o.count);
        s->add_option("--min-vertices", o.min_vertices);
        s->add_option("--max-vertices", o.max_vertices);
        s->add_option("--seed", o.seed);
    };
    auto resolve_opts = [&](CLI::App* s) {
        s->add_option("--k", o.k, "list size")->check(CLI::Range(2, 16));
        s->add_option("--b", o.b, "largest peeled set")->check(CLI::Range(1, 16));
    };

    auto* detect = app.add_subcommand("detect", "report hoppers, houses and configuration matches");
    detect->add_option("graph", o.graph)->required();
    class_opt(detect, false);

    auto* verify = app.add_subcommand("verify-config", "check FIX and FORB on a library configuration");
    verify->add_option("id", o.target, "configuration id or 'all'")->required();
    verify->add_option("--k", o.k)->check(CLI::Range(2, 16));
    verify->add_option("--degrees", o.degrees, "host degree per pattern vertex")->delimiter(',');

    auto* resolve = app.add_subcommand("resolve", "peel the graph into verified configurations");
    resolve->add_option("graph", o.graph)->required();
    class_opt(resolve, true);
    resolve_opts(resolve);
    resolve->add_flag("--verify", o.verify, "replay the resolution without the cache");

    auto* color = app.add_subcommand("color", "list-color along a resolution");
    color->add_option("graph", o.graph)->required();
    color->add_option("lists", o.lists, "lists v1 file (default: every vertex gets --uniform)");
    color->add_option("--uniform", o.uniform, "shared list")->delimiter(',');
    color->add_option("--fix", o.fix, "<v>:<c>");
    class_opt(color, true);
    resolve_opts(color);

    auto* flex = app.add_subcommand("flex", "honor requests greedily and compare with the exact optimum");
    flex->add_option("graph", o.graph)->required();
    flex->add_option("lists", o.lists, "lists v1 file, or '' for --uniform");
    flex->add_option("requests", o.requests, "requests v1 file");
    flex->add_option("--uniform", o.uniform)->delimiter(',');
    flex->add_flag("--epsilon", o.epsilon, "minimum exact ratio over unit requests");
    flex->add_option("--trials", o.trials);
    flex->add_option("--seed", o.seed);
    class_opt(flex, true);
    resolve_opts(flex);

    auto* discharge = app.add_subcommand("discharge", "run the discharging rules and audit the result");
    discharge->add_option("graph", o.graph)->required();
    discharge->add_option("--mode", o.mode, "hopper or house");

    auto* audit_cmd = app.add_subcommand("audit", "audit a generated corpus");
    corpus_opts(audit_cmd);
    class_opt(audit_cmd, true);

    auto* gen = app.add_subcommand("gen", "write a generated corpus");
    corpus_opts(gen);
    class_opt(gen, false);
    gen->add_option("--out", o.out_dir, "directory for one file per graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitOk : ExitParse;
    }

    try {
        if (*detect)
            return cmd_detect(o, out, err);
        if (*verify)
            return cmd_verify_config(o, out, err);
        if (*resolve)
            return cmd_resolve(o, out, err);
        if (*color)
            return cmd_color(o, out, err);
        if (*flex)
            return cmd_flex(o, out, err);
        if (*discharge)
            return cmd_discharge(o, out, err);
        if (*audit_cmd)
            return cmd_audit(o, out, err);
        return cmd_gen(o, out, err);
    } catch (const Exit& e) {
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitParse;
    } catch (const ModeViolation& e) {
        err << "error: " << e.what() << "\n";
        return ExitClass;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return ExitParse;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return ExitParse;
    }
}

}  // namespace flex

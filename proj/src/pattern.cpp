#include "flex/pattern.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flex {

std::string_view to_string(GraphClass c)
{
    return c == GraphClass::H1 ? "H1" : "H2";
}

GraphClass parse_graph_class(std::string_view text)
{
    if (text == "H1" || text == "h1" || text == "hopper")
        return GraphClass::H1;
    if (text == "H2" || text == "h2" || text == "house")
        return GraphClass::H2;
    throw std::invalid_argument("unknown graph class '" + std::string(text) + "' (expected H1|H2)");
}

int Pattern::internal_degree(int p) const
{
    int d = 0;
    for (auto [a, b] : edges)
        if (a == p || b == p)
            ++d;
    return d;
}

std::vector<Vertex> Match::vertex_set() const
{
    auto s = map;
    std::sort(s.begin(), s.end());
    return s;
}

namespace {

// Search plan: pattern vertices in BFS order; every vertex after the first
// has an earlier neighbor (its anchor) whose image bounds the candidates.
struct Plan {
    std::vector<int> order;
    std::vector<int> anchor;                 // by position in order
    std::vector<std::vector<int>> back_adj;  // earlier pattern neighbors, by position
};

Plan make_plan(const Pattern& p)
{
    const int k = p.vertex_count();
    std::vector<std::vector<int>> adj(k);
    for (auto [a, b] : p.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Plan plan;
    std::vector<int> pos(k, -1);
    plan.order.push_back(0);
    pos[0] = 0;
    for (std::size_t head = 0; head < plan.order.size(); ++head)
        for (int w : adj[plan.order[head]])
            if (pos[w] < 0) {
                pos[w] = static_cast<int>(plan.order.size());
                plan.order.push_back(w);
            }
    if (static_cast<int>(plan.order.size()) != k)
        throw std::logic_error("pattern " + p.id + " is not connected");
    plan.anchor.assign(k, -1);
    plan.back_adj.assign(k, {});
    for (int i = 0; i < k; ++i) {
        const int pv = plan.order[i];
        for (int w : adj[pv])
            if (pos[w] < i) {
                plan.back_adj[i].push_back(w);
                if (plan.anchor[i] < 0 || pos[w] < pos[plan.anchor[i]])
                    plan.anchor[i] = w;
            }
    }
    return plan;
}

template <typename Visit>
bool search(const Graph& host, const Pattern& p, const Plan& plan, std::vector<Vertex>& map,
            std::vector<char>& used, int depth, Visit& visit)
{
    const int k = p.vertex_count();
    if (depth == k)
        return visit(map);
    const int pv = plan.order[depth];
    auto try_vertex = [&](Vertex h) {
        if (used[h] || !p.host_degree[pv].contains(host.degree(h)))
            return false;
        for (int w : plan.back_adj[depth])
            if (!host.has_edge(map[w], h))
                return false;
        map[pv] = h;
        used[h] = 1;
        const bool stop = search(host, p, plan, map, used, depth + 1, visit);
        used[h] = 0;
        map[pv] = -1;
        return stop;
    };
    if (depth == 0) {
        for (Vertex h = 0; h < host.vertex_count(); ++h)
            if (try_vertex(h))
                return true;
    } else {
        for (Vertex h : host.neighbors(map[plan.anchor[depth]]))
            if (try_vertex(h))
                return true;
    }
    return false;
}

std::vector<Edge> edge_image(const Pattern& p, const std::vector<Vertex>& map)
{
    std::vector<Edge> img;
    for (auto [a, b] : p.edges)
        img.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
    std::sort(img.begin(), img.end());
    return img;
}

Pattern make(std::string id, std::vector<std::string> names, std::vector<Edge> edges,
             std::vector<DegreeRange> degrees, Pattern::Dedup dedup = Pattern::Dedup::VertexSet)
{
    Pattern p;
    p.id = std::move(id);
    p.names = std::move(names);
    p.edges = std::move(edges);
    p.host_degree = std::move(degrees);
    p.dedup = dedup;
    return p;
}

using D = DegreeRange;

// A vertex v with its full neighborhood v1..vd, triangle v v1 v2.
Pattern b1(std::string id, int d)
{
    std::vector<std::string> names{"v"};
    std::vector<Edge> edges{{1, 2}};
    std::vector<D> deg{D::exactly(d)};
    for (int i = 1; i <= d; ++i) {
        names.push_back("v" + std::to_string(i));
        edges.emplace_back(0, i);
        deg.push_back(D::exactly(i == 2 ? 5 : 4));
    }
    return make(std::move(id), names, edges, deg);
}

// A vertex v of degree d with 4-neighbors v1..v(d-1), triangle v v1 v2.
Pattern b2(std::string id, int d)
{
    std::vector<std::string> names{"v"};
    std::vector<Edge> edges{{1, 2}};
    std::vector<D> deg{D::exactly(d)};
    for (int i = 1; i < d; ++i) {
        names.push_back("v" + std::to_string(i));
        edges.emplace_back(0, i);
        deg.push_back(D::exactly(4));
    }
    return make(std::move(id), names, edges, deg);
}

std::vector<Pattern> build_h1_library()
{
    const std::vector<std::string> v1to4{"v1", "v2", "v3", "v4"};
    const std::vector<std::string> v1to5{"v1", "v2", "v3", "v4", "v5"};
    const std::vector<std::string> v1to6{"v1", "v2", "v3", "v4", "v5", "v6"};
    // Cycle v1v2v3v4 with chord v1v3; extra edges appended per item.
    const std::vector<Edge> chorded{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
    auto with = [&](std::vector<Edge> extra) {
        auto e = chorded;
        e.insert(e.end(), extra.begin(), extra.end());
        return e;
    };

    std::vector<Pattern> lib;
    lib.push_back(make("Z0", {"v"}, {}, {D::at_most(3)}));
    lib.push_back(b1("B1a", 4));
    lib.push_back(b1("B1b", 5));
    lib.push_back(b2("B2a", 4));
    lib.push_back(b2("B2b", 5));
    lib.push_back(b2("B2c", 6));
    lib.push_back(make("B3", v1to4, chorded, {D::exactly(5), D::exactly(4), D::exactly(4), D::exactly(5)}));
    lib.push_back(make("B4i", v1to5, with({{0, 4}}),
                       {D::exactly(5), D::exactly(4), D::exactly(5), D::exactly(4), D::exactly(4)}));
    lib.push_back(make("B4ii", v1to5, with({{0, 4}}),
                       {D::exactly(6), D::exactly(4), D::exactly(4), D::exactly(4), D::exactly(4)}));
    lib.push_back(make("B5", v1to5, with({{3, 4}}),
                       {D::at_most(5), D::at_most(5), D::exactly(4), D::exactly(5), D::exactly(4)}));
    lib.push_back(make("B6", v1to6, with({{0, 4}, {0, 5}}),
                       {D::exactly(5), D::exactly(4), D::exactly(5), D::exactly(5), D::exactly(4), D::exactly(4)}));
    return lib;
}

std::vector<Pattern> build_h2_library()
{
    std::vector<Pattern> lib;
    lib.push_back(make("Z0", {"v"}, {}, {D::at_most(3)}));
    lib.push_back(make("D1", {"v", "v1", "v2", "v3"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                       {D::at_most(5), D::exactly(4), D::exactly(4), D::exactly(4)}));
    lib.push_back(make("D2", {"v", "v1", "v2", "v3", "v4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                       {D::at_most(5), D::exactly(4), D::exactly(4), D::exactly(4), D::exactly(4)}));
    return lib;
}

}  // namespace

std::vector<Match> find_matches(const Graph& host, const Pattern& pattern)
{
    const Plan plan = make_plan(pattern);
    std::vector<Vertex> map(pattern.vertex_count(), -1);
    std::vector<char> used(host.vertex_count(), 0);
    std::vector<std::vector<Vertex>> raw;
    auto collect = [&](const std::vector<Vertex>& m) {
        raw.push_back(m);
        return false;
    };
    search(host, pattern, plan, map, used, 0, collect);
    std::sort(raw.begin(), raw.end());

    std::vector<Match> out;
    std::set<std::vector<Vertex>> seen_sets;
    std::set<std::vector<Edge>> seen_edges;
    for (auto& m : raw) {
        bool fresh = false;
        if (pattern.dedup == Pattern::Dedup::VertexSet) {
            auto s = m;
            std::sort(s.begin(), s.end());
            fresh = seen_sets.insert(std::move(s)).second;
        } else {
            fresh = seen_edges.insert(edge_image(pattern, m)).second;
        }
        if (fresh)
            out.push_back(Match{pattern.id, std::move(m)});
    }
    return out;
}

bool has_match(const Graph& host, const Pattern& pattern)
{
    const Plan plan = make_plan(pattern);
    std::vector<Vertex> map(pattern.vertex_count(), -1);
    std::vector<char> used(host.vertex_count(), 0);
    auto stop = [](const std::vector<Vertex>&) { return true; };
    return search(host, pattern, plan, map, used, 0, stop);
}

bool validate_match(const Graph& host, const Pattern& pattern, const Match& match)
{
    if (static_cast<int>(match.map.size()) != pattern.vertex_count())
        return false;
    auto s = match.vertex_set();
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        return false;
    for (Vertex h : match.map)
        if (h < 0 || h >= host.vertex_count())
            return false;
    for (auto [a, b] : pattern.edges)
        if (!host.has_edge(match.map[a], match.map[b]))
            return false;
    for (int p = 0; p < pattern.vertex_count(); ++p)
        if (!pattern.host_degree[p].contains(host.degree(match.map[p])))
            return false;
    return true;
}

const Pattern& hopper_pattern()
{
    static const Pattern p = make("hopper", {"c", "a1", "a2", "b1", "b2"},
                                  {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}},
                                  std::vector<D>(5, D::any()), Pattern::Dedup::EdgeImage);
    return p;
}

const Pattern& house_pattern()
{
    static const Pattern p = make("house", {"t", "a", "b", "c", "d"},
                                  {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 1}},
                                  std::vector<D>(5, D::any()), Pattern::Dedup::EdgeImage);
    return p;
}

std::vector<Match> find_hopper(const Graph& g)
{
    return find_matches(g, hopper_pattern());
}

std::vector<Match> find_house(const Graph& g)
{
    return find_matches(g, house_pattern());
}

bool is_class_member(const Graph& g, GraphClass c)
{
    return !has_match(g, c == GraphClass::H1 ? hopper_pattern() : house_pattern());
}

const std::vector<Pattern>& configuration_library(GraphClass c)
{
    static const std::vector<Pattern> h1 = build_h1_library();
    static const std::vector<Pattern> h2 = build_h2_library();
    return c == GraphClass::H1 ? h1 : h2;
}

const std::vector<std::string>& configuration_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& p : configuration_library(GraphClass::H1))
            out.push_back(p.id);
        for (const auto& p : configuration_library(GraphClass::H2))
            if (p.id != "Z0")
                out.push_back(p.id);
        return out;
    }();
    return ids;
}

const Pattern& configuration(std::string_view id)
{
    for (GraphClass c : {GraphClass::H1, GraphClass::H2})
        for (const auto& p : configuration_library(c))
            if (p.id == id)
                return p;
    throw std::out_of_range("unknown configuration '" + std::string(id) + "'");
}

GraphClass configuration_class(std::string_view id)
{
    for (const auto& p : configuration_library(GraphClass::H1))
        if (p.id == id)
            return GraphClass::H1;
    for (const auto& p : configuration_library(GraphClass::H2))
        if (p.id == id)
            return GraphClass::H2;
    throw std::out_of_range("unknown configuration '" + std::string(id) + "'");
}

std::vector<Match> find_configurations(const Graph& g, GraphClass c)
{
    std::vector<Match> out;
    for (const auto& p : configuration_library(c)) {
        auto m = find_matches(g, p);
        out.insert(out.end(), std::make_move_iterator(m.begin()), std::make_move_iterator(m.end()));
    }
    return out;
}

std::vector<int> canonical_degrees(const Pattern& p)
{
    std::vector<int> out;
    for (int i = 0; i < p.vertex_count(); ++i) {
        const auto& r = p.host_degree[i];
        if (!r.bounded())
            throw std::logic_error("pattern " + p.id + " has an unbounded degree at " + p.names[i]);
        out.push_back(r.hi);
    }
    return out;
}

Graph witness_host(const Pattern& p, std::span<const int> degrees)
{
    const int k = p.vertex_count();
    int leaves = 0;
    for (int i = 0; i < k; ++i) {
        const int extra = degrees[i] - p.internal_degree(i);
        if (extra < 0)
            throw std::invalid_argument("degree " + std::to_string(degrees[i]) + " below pattern degree at " +
                                        p.names[i]);
        leaves += extra;
    }
    Graph g(k + leaves);
    for (auto [a, b] : p.edges)
        g.add_edge(a, b);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int j = p.internal_degree(i); j < degrees[i]; ++j)
            g.add_edge(i, next++);
    return g;
}

bool is_forbidding(const Graph& g, std::span<const Vertex> s, GraphClass c)
{
    const int n = g.vertex_count();
    Graph aug(n + 1);
    for (auto [u, v] : g.edges())
        aug.add_edge(u, v);
    for (Vertex x : s)
        aug.add_edge(n, x);
    return is_class_member(aug, c);
}

}  // namespace flex

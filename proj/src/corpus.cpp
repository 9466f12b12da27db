#include "flex/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "flex/embedding.hpp"

namespace flex {

Generator parse_generator(std::string_view text)
{
    if (text == "exhaustive-small")
        return Generator::ExhaustiveSmall;
    if (text == "random-triangulation-thinned" || text == "random")
        return Generator::RandomThinned;
    if (text == "min-degree-4")
        return Generator::MinDegreeFour;
    throw std::invalid_argument("unknown generator '" + std::string(text) + "'");
}

std::string_view to_string(Generator g)
{
    switch (g) {
    case Generator::ExhaustiveSmall:
        return "exhaustive-small";
    case Generator::RandomThinned:
        return "random-triangulation-thinned";
    case Generator::MinDegreeFour:
        return "min-degree-4";
    }
    return "?";
}

namespace {

using Rotations = std::vector<std::vector<Vertex>>;

std::size_t index_of(const std::vector<Vertex>& rot, Vertex v)
{
    return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), v) - rot.begin());
}

// Vertex after u in the rotation at w: the face left of dart u->w continues
// with w->next_after(w, u).
Vertex next_after(const Rotations& rot, Vertex w, Vertex u)
{
    const auto& r = rot[w];
    return r[(index_of(r, u) + 1) % r.size()];
}

void insert_after(std::vector<Vertex>& r, Vertex after, Vertex v)
{
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(index_of(r, after) + 1), v);
}

void erase_value(std::vector<Vertex>& r, Vertex v)
{
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(index_of(r, v)));
}

Graph graph_of(const Rotations& rot)
{
    Graph g(static_cast<int>(rot.size()));
    for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u)
        for (Vertex w : rot[u])
            if (u < w)
                g.add_edge(u, w);
    return g;
}

bool connected_without(const Graph& g, Vertex a, Vertex b)
{
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> todo{a};
    seen[a] = 1;
    while (!todo.empty()) {
        Vertex v = todo.back();
        todo.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if ((v == a && w == b) || (v == b && w == a) || seen[w])
                continue;
            seen[w] = 1;
            todo.push_back(w);
        }
    }
    return seen[b] != 0;
}

}  // namespace

PlaneGraph random_triangulation(int n, int flips, std::mt19937_64& rng)
{
    if (n < 3)
        throw std::invalid_argument("random_triangulation needs n >= 3");
    Rotations rot{{1, 2}, {2, 0}, {0, 1}};
    // Every face is a triangle; a uniform dart picks a uniform face.
    auto random_dart = [&]() {
        std::vector<std::pair<Vertex, Vertex>> darts;
        for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u)
            for (Vertex w : rot[u])
                darts.emplace_back(u, w);
        return darts[std::uniform_int_distribution<std::size_t>(0, darts.size() - 1)(rng)];
    };
    for (Vertex x = 3; x < n; ++x) {
        auto [a, b] = random_dart();
        const Vertex c = next_after(rot, b, a);
        insert_after(rot[b], a, x);
        insert_after(rot[c], b, x);
        insert_after(rot[a], c, x);
        rot.push_back({b, a, c});
    }
    for (int t = 0; t < flips; ++t) {
        auto [u, w] = random_dart();
        const Vertex x = next_after(rot, w, u);  // face (u, w, x)
        const Vertex y = next_after(rot, u, w);  // face (w, u, y)
        if (x == y || rot[u].size() <= 3 || rot[w].size() <= 3)
            continue;
        if (std::find(rot[x].begin(), rot[x].end(), y) != rot[x].end())
            continue;
        erase_value(rot[u], w);
        erase_value(rot[w], u);
        insert_after(rot[x], w, y);
        insert_after(rot[y], u, x);
    }
    return PlaneGraph::build(std::move(rot));
}

PlaneGraph thin_to_class(const PlaneGraph& g, std::optional<GraphClass> c, int extra, std::mt19937_64& rng)
{
    Rotations rot;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        rot.push_back(g.rotation(v));

    auto remove_edge = [&](Vertex a, Vertex b) {
        erase_value(rot[a], b);
        erase_value(rot[b], a);
    };

    if (c) {
        const Pattern& forbidden = *c == GraphClass::H1 ? hopper_pattern() : house_pattern();
        while (true) {
            const Graph cur = graph_of(rot);
            const auto occ = find_matches(cur, forbidden);
            if (occ.empty())
                break;
            std::map<Edge, int> hits;
            for (const auto& m : occ)
                for (auto [a, b] : forbidden.edges)
                    ++hits[{std::min(m.map[a], m.map[b]), std::max(m.map[a], m.map[b])}];
            std::vector<std::pair<std::pair<int, int>, Edge>> scored;
            for (auto [e, h] : hits)
                scored.push_back({{std::min(cur.degree(e.first), cur.degree(e.second)), h}, e});
            const auto best_score =
                std::max_element(scored.begin(), scored.end(), [](auto& l, auto& r) { return l.first < r.first; })->first;
            std::vector<Edge> best;
            for (auto& [s, e] : scored)
                if (s == best_score)
                    best.push_back(e);
            const Edge e = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)];
            remove_edge(e.first, e.second);
        }
    }

    for (int t = 0; t < extra; ++t) {
        const Graph cur = graph_of(rot);
        auto edges = cur.edges();
        if (edges.empty())
            break;
        const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        if (connected_without(cur, e.first, e.second))
            remove_edge(e.first, e.second);
    }
    return PlaneGraph::build(std::move(rot));
}

std::optional<PlaneGraph> random_triangulation_min_degree(int n, int k, std::mt19937_64& rng)
{
    const PlaneGraph start = random_triangulation(n, 2 * n, rng);
    Rotations rot;
    for (Vertex v = 0; v < start.vertex_count(); ++v)
        rot.push_back(start.rotation(v));
    auto deficit_of = [&](Vertex v, int delta) { return std::max(0, k - static_cast<int>(rot[v].size()) - delta); };
    int deficit = 0;
    for (Vertex v = 0; v < n; ++v)
        deficit += deficit_of(v, 0);
    std::uniform_int_distribution<Vertex> pick_vertex(0, n - 1);
    for (long t = 0; deficit > 0 && t < 400L * n; ++t) {
        const Vertex u = pick_vertex(rng);
        const Vertex w = rot[u][std::uniform_int_distribution<std::size_t>(0, rot[u].size() - 1)(rng)];
        const Vertex x = next_after(rot, w, u);
        const Vertex y = next_after(rot, u, w);
        if (x == y || rot[u].size() <= 3 || rot[w].size() <= 3)
            continue;
        if (std::find(rot[x].begin(), rot[x].end(), y) != rot[x].end())
            continue;
        const int before = deficit_of(u, 0) + deficit_of(w, 0) + deficit_of(x, 0) + deficit_of(y, 0);
        const int after = deficit_of(u, -1) + deficit_of(w, -1) + deficit_of(x, 1) + deficit_of(y, 1);
        if (after > before)
            continue;
        deficit += after - before;
        erase_value(rot[u], w);
        erase_value(rot[w], u);
        insert_after(rot[x], w, y);
        insert_after(rot[y], u, x);
    }
    if (deficit > 0)
        return std::nullopt;
    return PlaneGraph::build(std::move(rot));
}

PlaneGraph medial_graph(const PlaneGraph& g)
{
    std::map<Edge, Vertex> id;
    for (const Edge& e : g.graph().edges())
        id.emplace(e, static_cast<Vertex>(id.size()));
    auto edge_of = [&](Dart d) {
        const Vertex a = g.tail(d), b = g.head(d);
        return id.at({std::min(a, b), std::max(a, b)});
    };
    Graph m(static_cast<int>(id.size()));
    for (Face f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) < 3)
            throw std::invalid_argument("medial_graph needs every face of length >= 3");
        for (Dart d : g.face_darts(f)) {
            const Vertex a = edge_of(d), b = edge_of(g.next_in_face(d));
            if (a == b || m.has_edge(a, b))
                throw std::invalid_argument("medial graph would not be simple");
            m.add_edge(a, b);
        }
    }
    return embed_or_throw(m);
}

PlaneGraph add_chords(const PlaneGraph& start, GraphClass c, int count, std::mt19937_64& rng)
{
    PlaneGraph g = start;
    for (int added = 0; added < count;) {
        struct Chord {
            Vertex a, a_before, b, b_before;
        };
        std::vector<Chord> chords;
        for (Face f = 0; f < g.face_count(); ++f) {
            const auto& ds = g.face_darts(f);
            const int k = static_cast<int>(ds.size());
            for (int i = 0; i < k; ++i)
                for (int j = i + 2; j < k; ++j) {
                    if (i == 0 && j == k - 1)
                        continue;
                    const Vertex a = g.tail(ds[i]), b = g.tail(ds[j]);
                    if (a == b || g.graph().has_edge(a, b))
                        continue;
                    chords.push_back({a, g.tail(ds[(i + k - 1) % k]), b, g.tail(ds[(j + k - 1) % k])});
                }
        }
        std::shuffle(chords.begin(), chords.end(), rng);
        bool progressed = false;
        for (const Chord& ch : chords) {
            Graph h = g.graph();
            h.add_edge(ch.a, ch.b);
            if (!is_class_member(h, c))
                continue;
            // Inside the face, a's walk arrives from a_before; the chord goes
            // right after it in a's rotation, likewise at b.
            Rotations rot;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                rot.push_back(g.rotation(v));
            insert_after(rot[ch.a], ch.a_before, ch.b);
            insert_after(rot[ch.b], ch.b_before, ch.a);
            g = PlaneGraph::build(std::move(rot));
            progressed = true;
            break;
        }
        if (!progressed)
            break;
        ++added;
    }
    return g;
}

std::optional<PlaneGraph> min_degree_four_member(GraphClass c, int n0, int chords, std::mt19937_64& rng)
{
    const int k = c == GraphClass::H1 ? 4 : 5;
    auto tri = random_triangulation_min_degree(n0, k, rng);
    if (!tri)
        return std::nullopt;
    PlaneGraph base = medial_graph(*tri);
    if (c == GraphClass::H1)
        base = medial_graph(base);
    if (!is_class_member(base.graph(), c))
        return std::nullopt;
    return add_chords(base, c, chords, rng);
}

std::vector<Graph> connected_graphs(int n)
{
    if (n < 1 || n > 6)
        throw std::invalid_argument("connected_graphs supports 1..6 vertices");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const int m = static_cast<int>(pairs.size());
    auto pair_index = [&](int u, int v) {
        if (u > v)
            std::swap(u, v);
        return static_cast<int>(std::find(pairs.begin(), pairs.end(), Edge{u, v}) - pairs.begin());
    };
    std::vector<std::vector<int>> perm_maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            map[i] = pair_index(perm[pairs[i].first], perm[pairs[i].second]);
        perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        bool canonical = true;
        for (const auto& map : perm_maps) {
            std::uint32_t img = 0;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1)
                    img |= std::uint32_t{1} << map[i];
            if (img < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical)
            continue;
        Graph g(n);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        if (g.connected())
            out.push_back(std::move(g));
    }
    return out;
}

std::vector<PlaneGraph> generate_corpus(const CorpusSpec& spec)
{
    if (spec.min_vertices < 1 || spec.max_vertices < spec.min_vertices)
        throw std::invalid_argument("bad vertex range");
    std::vector<PlaneGraph> out;
    auto keep = [&](const PlaneGraph& g) {
        return !spec.filter || is_class_member(g.graph(), *spec.filter);
    };

    if (spec.generator == Generator::ExhaustiveSmall) {
        for (int n = spec.min_vertices; n <= std::min(spec.max_vertices, 6); ++n)
            for (const Graph& g : connected_graphs(n)) {
                if (static_cast<int>(out.size()) >= spec.count)
                    return out;
                if (auto pg = planar_embedding(g); pg && keep(*pg))
                    out.push_back(std::move(*pg));
            }
        return out;
    }

    std::mt19937_64 rng(spec.seed);
    const int lo = std::max(spec.min_vertices, 3);
    const int hi = std::max(spec.max_vertices, lo);
    // Bounded so an unsatisfiable corpus request terminates.
    for (long attempt = 0; static_cast<int>(out.size()) < spec.count && attempt < 200L * spec.count + 1000; ++attempt) {
        const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
        if (spec.generator == Generator::MinDegreeFour) {
            // Pick the base triangulation size so the result lands in range.
            const GraphClass c = spec.filter.value_or(GraphClass::H1);
            const int per = c == GraphClass::H1 ? 6 : 3;
            const int min0 = c == GraphClass::H1 ? 6 : 12;
            const int n0 = std::max(min0, (n + 6 * per / 3) / per);
            if (per * n0 - (c == GraphClass::H1 ? 12 : 6) > hi)
                continue;
            const int chords = std::uniform_int_distribution<int>(0, n0)(rng);
            auto g = min_degree_four_member(c, n0, chords, rng);
            if (g && g->vertex_count() >= lo && keep(*g))
                out.push_back(std::move(*g));
            continue;
        }
        const PlaneGraph tri = random_triangulation(n, 2 * n, rng);
        const int extra = std::uniform_int_distribution<int>(0, n / 2)(rng);
        PlaneGraph g = thin_to_class(tri, spec.filter, extra, rng);
        if (keep(g))
            out.push_back(std::move(g));
    }
    return out;
}

}  // namespace flex

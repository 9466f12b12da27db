#include "flex/plane_graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace flex {

namespace {

int index_in(const std::vector<Vertex>& rot, Vertex x)
{
    auto it = std::find(rot.begin(), rot.end(), x);
    return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

}  // namespace

PlaneGraph PlaneGraph::build(std::vector<std::vector<Vertex>> rotation)
{
    const int n = static_cast<int>(rotation.size());
    if (n == 0)
        throw GraphError(GraphErrorKind::Disconnected, "empty graph");

    for (Vertex v = 0; v < n; ++v) {
        auto sorted = rotation[v];
        for (Vertex u : sorted) {
            if (u < 0 || u >= n)
                throw GraphError(GraphErrorKind::OutOfRange,
                                 "vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(u));
            if (u == v)
                throw GraphError(GraphErrorKind::NonSimple, "loop at vertex " + std::to_string(v));
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError(GraphErrorKind::NonSimple, "repeated neighbor in rotation of " + std::to_string(v));
    }

    PlaneGraph g;
    g.graph_ = Graph(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : rotation[v]) {
            if (index_in(rotation[u], v) < 0)
                throw GraphError(GraphErrorKind::InconsistentRotation,
                                 std::to_string(v) + " lists " + std::to_string(u) + " but not vice versa");
            if (v < u)
                g.graph_.add_edge(v, u);
        }
    if (!g.graph_.connected())
        throw GraphError(GraphErrorKind::Disconnected, "graph is not connected");

    g.rotation_ = std::move(rotation);
    g.dart_offset_.resize(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        g.dart_offset_[v + 1] = g.dart_offset_[v] + static_cast<int>(g.rotation_[v].size());
    const int darts = g.dart_offset_[n];
    g.dart_tail_.resize(darts);
    g.dart_head_.resize(darts);
    g.twin_.resize(darts);
    g.next_.resize(darts);
    g.dart_face_.assign(darts, -1);

    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(g.rotation_[v].size()); ++i) {
            const Dart d = g.dart_offset_[v] + i;
            const Vertex w = g.rotation_[v][i];
            g.dart_tail_[d] = v;
            g.dart_head_[d] = w;
            const int back = index_in(g.rotation_[w], v);
            g.twin_[d] = g.dart_offset_[w] + back;
            const int deg_w = static_cast<int>(g.rotation_[w].size());
            g.next_[d] = g.dart_offset_[w] + (back + 1) % deg_w;
        }

    for (Dart start = 0; start < darts; ++start) {
        if (g.dart_face_[start] >= 0)
            continue;
        const Face f = static_cast<Face>(g.faces_.size());
        std::vector<Dart> walk;
        for (Dart d = start; g.dart_face_[d] < 0; d = g.next_[d]) {
            g.dart_face_[d] = f;
            walk.push_back(d);
        }
        g.faces_.push_back(std::move(walk));
    }
    if (darts == 0)
        g.faces_.emplace_back();

    if (g.vertex_count() - g.edge_count() + g.face_count() != 2)
        throw GraphError(GraphErrorKind::NotPlanar, "rotation system does not describe a plane embedding (V-E+F = " +
                                                        std::to_string(g.vertex_count() - g.edge_count() +
                                                                       g.face_count()) +
                                                        ")");

    g.labels_.resize(n);
    for (Vertex v = 0; v < n; ++v)
        g.labels_[v] = v;
    return g;
}

Dart PlaneGraph::dart_between(Vertex u, Vertex v) const
{
    const int i = index_in(rotation_[u], v);
    return i < 0 ? -1 : dart_offset_[u] + i;
}

std::vector<Vertex> PlaneGraph::face_vertices(Face f) const
{
    std::vector<Vertex> out;
    out.reserve(faces_[f].size());
    for (Dart d : faces_[f])
        out.push_back(dart_tail_[d]);
    return out;
}

std::vector<Face> PlaneGraph::faces_at(Vertex v) const
{
    if (degree(v) == 0)
        return {0};
    std::vector<Face> out;
    for (Dart d = dart_offset_[v]; d < dart_offset_[v + 1]; ++d)
        if (std::find(out.begin(), out.end(), dart_face_[d]) == out.end())
            out.push_back(dart_face_[d]);
    return out;
}

int PlaneGraph::f3(Vertex v) const
{
    int count = 0;
    for (Face f : faces_at(v))
        if (face_degree(f) == 3)
            ++count;
    return count;
}

int PlaneGraph::n_k(Face f, int k) const
{
    int count = 0;
    for (Dart d : faces_[f])
        if (degree(dart_tail_[d]) == k)
            ++count;
    return count;
}

std::vector<PlaneGraph> PlaneGraph::delete_vertices(std::span<const Vertex> removed) const
{
    const int n = vertex_count();
    std::vector<char> gone(n, 0);
    for (Vertex x : removed)
        gone[x] = 1;

    std::vector<PlaneGraph> out;
    std::vector<char> seen(n, 0);
    std::vector<int> local(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (gone[s] || seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : graph_.neighbors(comp[head]))
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        for (std::size_t i = 0; i < comp.size(); ++i)
            local[comp[i]] = static_cast<int>(i);

        std::vector<std::vector<Vertex>> rot(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : rotation_[comp[i]])
                if (!gone[w])
                    rot[i].push_back(local[w]);
        PlaneGraph piece = build(std::move(rot));
        for (std::size_t i = 0; i < comp.size(); ++i)
            piece.labels_[i] = labels_[comp[i]];
        out.push_back(std::move(piece));
    }
    return out;
}

PlaneGraph parse_plane_graph(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    bool header = false;
    std::vector<std::vector<Vertex>> rot;
    std::vector<char> given;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            continue;
        if (!header) {
            std::string version;
            if (word != "planegraph" || !(ls >> version) || version != "v1")
                throw ParseError(lineno, "expected header 'planegraph v1'");
            header = true;
            continue;
        }
        if (word == "n") {
            if (n >= 0)
                throw ParseError(lineno, "duplicate 'n' line");
            if (!(ls >> n) || n <= 0)
                throw ParseError(lineno, "expected positive vertex count");
            rot.assign(n, {});
            given.assign(n, 0);
            continue;
        }
        if (word == "rot") {
            if (n < 0)
                throw ParseError(lineno, "'rot' before 'n'");
            std::string rest;
            std::getline(ls, rest);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw ParseError(lineno, "expected 'rot <v>: <neighbors>'");
            std::istringstream vs(rest.substr(0, colon));
            long long v = -1;
            std::string extra;
            if (!(vs >> v) || (vs >> extra))
                throw ParseError(lineno, "bad vertex id");
            if (v < 0 || v >= n)
                throw ParseError(lineno, "vertex id " + std::to_string(v) + " out of range");
            if (given[v])
                throw ParseError(lineno, "duplicate rot line for vertex " + std::to_string(v));
            given[v] = 1;
            std::istringstream ns(rest.substr(colon + 1));
            std::string tok;
            while (ns >> tok) {
                std::size_t used = 0;
                long long u = -1;
                try {
                    u = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size())
                    throw ParseError(lineno, "bad neighbor '" + tok + "'");
                if (u < 0 || u >= n)
                    throw ParseError(lineno, "neighbor id " + std::to_string(u) + " out of range");
                rot[v].push_back(static_cast<Vertex>(u));
            }
            continue;
        }
        throw ParseError(lineno, "unknown directive '" + word + "'");
    }
    if (!header)
        throw ParseError(0, "missing header 'planegraph v1'");
    if (n < 0)
        throw ParseError(0, "missing 'n' line");
    for (Vertex v = 0; v < n; ++v)
        if (!given[v] && n > 1)
            throw ParseError(0, "missing rot line for vertex " + std::to_string(v));
    try {
        return PlaneGraph::build(std::move(rot));
    } catch (const GraphError& e) {
        throw ParseError(0, e.what());
    }
}

PlaneGraph parse_plane_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_plane_graph(in);
}

std::string format_plane_graph(const PlaneGraph& g)
{
    std::ostringstream out;
    out << "planegraph v1\n";
    out << "n " << g.vertex_count() << "\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v << ":";
        for (Vertex u : g.rotation(v))
            out << " " << u;
        out << "\n";
    }
    return out.str();
}

}  // namespace flex

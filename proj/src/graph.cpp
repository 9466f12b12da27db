#include "flex/graph.hpp"

#include <algorithm>
#include <limits>

namespace flex {

Graph::Graph(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count)) {}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges)
{
    Graph g(vertex_count);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_)
        d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& a : adj_)
        d = std::min(d, static_cast<int>(a.size()));
    return d;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> pos(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        pos[vertices[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : adj_[vertices[i]])
            if (pos[w] > static_cast<int>(i))
                h.add_edge(static_cast<int>(i), pos[w]);
    return h;
}

std::vector<std::vector<Vertex>> Graph::components() const
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(adj_.size(), 0);
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : adj_[comp[head]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const
{
    return vertex_count() <= 1 || components().size() == 1;
}

}  // namespace flex

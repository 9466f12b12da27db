#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flex {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with sorted adjacency lists. Used for everything
// that does not need the embedding: pattern matching, list coloring and the
// configuration verifier.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    static Graph from_edges(int vertex_count, std::span<const Edge> edges);

    // Throws std::invalid_argument on loops, repeated edges or bad ids.
    void add_edge(Vertex u, Vertex v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    std::vector<Edge> edges() const;
    int max_degree() const;
    int min_degree() const;

    // Vertex i of the result is vertices[i] of this graph.
    Graph induced(std::span<const Vertex> vertices) const;

    // Vertex sets of the connected components, each sorted, ordered by
    // smallest member.
    std::vector<std::vector<Vertex>> components() const;
    bool connected() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

}  // namespace flex

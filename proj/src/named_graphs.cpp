#include "flex/named_graphs.hpp"

#include "flex/embedding.hpp"

#include <array>

namespace flex::named {

namespace {

PlaneGraph from_edges(int n, std::span<const Edge> edges)
{
    return embed_or_throw(Graph::from_edges(n, edges));
}

}  // namespace

PlaneGraph single_vertex()
{
    return PlaneGraph::build({{}});
}

PlaneGraph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

PlaneGraph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

PlaneGraph star(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

PlaneGraph k4()
{
    constexpr std::array<Edge, 6> e{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return from_edges(4, e);
}

PlaneGraph diamond()
{
    constexpr std::array<Edge, 5> e{{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
    return from_edges(4, e);
}

PlaneGraph octahedron()
{
    constexpr std::array<Edge, 12> e{{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                      {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};
    return from_edges(6, e);
}

PlaneGraph icosahedron()
{
    constexpr std::array<Edge, 30> e{{{0, 1},  {0, 5},  {0, 7},  {0, 8},  {0, 11}, {1, 2},   {1, 5},  {1, 6},
                                      {1, 8},  {2, 3},  {2, 6},  {2, 8},  {2, 9},  {3, 4},   {3, 6},  {3, 9},
                                      {3, 10}, {4, 5},  {4, 6},  {4, 10}, {4, 11}, {5, 6},   {5, 11}, {7, 8},
                                      {7, 9},  {7, 10}, {7, 11}, {8, 9},  {9, 10}, {10, 11}}};
    return from_edges(12, e);
}

PlaneGraph dodecahedron()
{
    constexpr std::array<Edge, 30> e{{{0, 1},   {0, 10},  {0, 19},  {1, 2},   {1, 8},   {2, 3},   {2, 6},   {3, 4},
                                      {3, 19},  {4, 5},   {4, 17},  {5, 6},   {5, 15},  {6, 7},   {7, 8},   {7, 14},
                                      {8, 9},   {9, 10},  {9, 13},  {10, 11}, {11, 12}, {11, 18}, {12, 13}, {12, 16},
                                      {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}}};
    return from_edges(20, e);
}

PlaneGraph triangular_prism()
{
    constexpr std::array<Edge, 9> e{{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}};
    return from_edges(6, e);
}

PlaneGraph cube()
{
    constexpr std::array<Edge, 12> e{{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                      {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};
    return from_edges(8, e);
}

PlaneGraph hopper()
{
    constexpr std::array<Edge, 6> e{{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}};
    return from_edges(5, e);
}

PlaneGraph house()
{
    constexpr std::array<Edge, 6> e{{{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 4}, {4, 0}}};
    return from_edges(5, e);
}

}  // namespace flex::named

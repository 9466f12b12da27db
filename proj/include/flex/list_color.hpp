#pragma once

#include "flex/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flex {

using Color = int;

// Per-vertex color lists. Colors are opaque non-negative labels; each list is
// kept sorted and duplicate-free.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int vertex_count) : lists_(static_cast<std::size_t>(vertex_count)) {}
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    // Same list for every vertex.
    static ListAssignment uniform(int vertex_count, std::vector<Color> list);

    int vertex_count() const { return static_cast<int>(lists_.size()); }
    const std::vector<Color>& operator[](Vertex v) const { return lists_[v]; }
    void set(Vertex v, std::vector<Color> list);
    bool contains(Vertex v, Color c) const;
    int size_of(Vertex v) const { return static_cast<int>(lists_[v].size()); }

    // Sorted union of all lists.
    std::vector<Color> palette() const;
    const std::vector<std::vector<Color>>& lists() const { return lists_; }

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<Color>> lists_;
};

using Coloring = std::vector<Color>;

enum class ColoringErrorKind { FixedConflict, BadOrder, ListMismatch };

class ColoringError : public std::runtime_error {
public:
    ColoringError(ColoringErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ColoringErrorKind kind() const { return kind_; }

private:
    ColoringErrorKind kind_;
};

bool is_proper_l_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi);

// Exact backtracking: most constrained vertex first (ties: smallest id),
// colors tried in increasing order. nullopt iff no L-coloring exists.
std::optional<Coloring> find_l_coloring(const Graph& g, const ListAssignment& lists);

// Colors vertices in `order`, each with its smallest color not used by an
// already colored or fixed neighbor. Throws ColoringError(FixedConflict) when
// the bindings are off-list or improper, ColoringError(BadOrder) when order
// is not a permutation.
std::optional<Coloring> greedy_color_in_order(const Graph& g, const ListAssignment& lists,
                                              std::span<const Vertex> order,
                                              std::span<const std::pair<Vertex, Color>> fixed = {});

// Vertex sets of the 2-connected blocks (bridges are 2-vertex blocks, an
// isolated vertex is a 1-vertex block).
std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g);

// The sufficient condition for L-colorability of a connected graph with
// |L(u)| >= deg(u): some list is longer than its degree, or some block is
// neither complete nor an odd cycle. Throws std::invalid_argument if g is
// disconnected.
bool degree_colorable_guarantee(const Graph& g, std::span<const int> list_sizes);
bool degree_colorable_guarantee(const Graph& g, const ListAssignment& lists);

// Bitmask kernel for graphs with at most 64 vertices and lists drawn from
// colors 0..63. adjacency[v] and lists[v] are bit sets.
bool mask_colorable(std::span<const std::uint64_t> adjacency, std::span<const std::uint64_t> lists,
                    std::span<int> coloring_out = {});
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// `lists v1` text format: header line then `L <v>: <c1> <c2> ...`, one line
// per vertex 0..vertex_count-1.
ListAssignment parse_lists(std::istream& in, int vertex_count);
ListAssignment parse_lists(std::string_view text, int vertex_count);
std::string format_lists(const ListAssignment& lists);

}  // namespace flex

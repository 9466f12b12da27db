#pragma once

#include "flex/graph.hpp"

#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace flex {

// H1: hopper-free planar graphs. H2: house-free planar graphs.
enum class GraphClass { H1, H2 };

std::string_view to_string(GraphClass c);
GraphClass parse_graph_class(std::string_view text);  // "H1"/"hopper", "H2"/"house"

struct DegreeRange {
    int lo = 0;
    int hi = std::numeric_limits<int>::max();

    static DegreeRange exactly(int d) { return {d, d}; }
    static DegreeRange at_most(int d) { return {0, d}; }
    static DegreeRange at_least(int d) { return {d, std::numeric_limits<int>::max()}; }
    static DegreeRange any() { return {}; }

    bool contains(int d) const { return lo <= d && d <= hi; }
    bool bounded() const { return hi != std::numeric_limits<int>::max(); }
};

// A small connected pattern with host-degree constraints. Occurrences are
// not required to be induced.
struct Pattern {
    enum class Dedup {
        VertexSet,  // one match per image vertex set
        EdgeImage,  // one match per image edge set
    };

    std::string id;
    std::vector<std::string> names;  // display name per pattern vertex
    std::vector<Edge> edges;
    std::vector<DegreeRange> host_degree;
    Dedup dedup = Dedup::VertexSet;

    int vertex_count() const { return static_cast<int>(names.size()); }
    int internal_degree(int p) const;
};

struct Match {
    std::string config_id;
    std::vector<Vertex> map;  // pattern vertex -> host vertex

    std::vector<Vertex> vertex_set() const;  // sorted image
    friend bool operator==(const Match&, const Match&) = default;
};

// All occurrences of `pattern` in `host`, deduplicated per pattern.dedup,
// sorted by the mapped vertex tuple. The representative of each class is its
// lexicographically smallest tuple.
std::vector<Match> find_matches(const Graph& host, const Pattern& pattern);
bool has_match(const Graph& host, const Pattern& pattern);

// Re-checks injectivity, required edges and degree constraints.
bool validate_match(const Graph& host, const Pattern& pattern, const Match& match);

const Pattern& hopper_pattern();
const Pattern& house_pattern();

std::vector<Match> find_hopper(const Graph& g);
std::vector<Match> find_house(const Graph& g);

// True iff g contains no hopper (H1) / no house (H2).
bool is_class_member(const Graph& g, GraphClass c);

// Configuration library of a class, in resolution priority order:
// H1: Z0 B1a B1b B2a B2b B2c B3 B4i B4ii B5 B6; H2: Z0 D1 D2.
const std::vector<Pattern>& configuration_library(GraphClass c);
// All ids across both libraries: Z0,B1a,...,B6,D1,D2.
const std::vector<std::string>& configuration_ids();
// Throws std::out_of_range for an unknown id.
const Pattern& configuration(std::string_view id);
// Class whose library holds the id (Z0 reports H1).
GraphClass configuration_class(std::string_view id);

// Library matches in library order, then by mapped tuple.
std::vector<Match> find_configurations(const Graph& g, GraphClass c);

// Host degrees used to realize a pattern: the exact value, or the upper end of
// a bounded range (larger degrees leave fewer available colors).
std::vector<int> canonical_degrees(const Pattern& p);

// The pattern's edges plus pendant leaves so that pattern vertex i has degree
// degrees[i]. Pattern vertices keep ids 0..k-1. Leaves add no cycles, so they
// create no triangles, 4-cycles, hoppers or houses.
Graph witness_host(const Pattern& p, std::span<const int> degrees);

// True iff g plus one new vertex adjacent exactly to `s` has no hopper (H1)
// or no house (H2).
bool is_forbidding(const Graph& g, std::span<const Vertex> s, GraphClass c);

}  // namespace flex

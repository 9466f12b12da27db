#pragma once

#include "flex/pattern.hpp"
#include "flex/plane_graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace flex {

enum class Generator {
    ExhaustiveSmall,  // every connected planar graph in the vertex range, up to isomorphism
    RandomThinned,    // stacked triangulation, random flips, edge deletions
    MinDegreeFour,    // 4-regular in-class base graphs plus class-preserving chords
};

Generator parse_generator(std::string_view text);  // "exhaustive-small", "random-triangulation-thinned", "min-degree-4"
std::string_view to_string(Generator g);

struct CorpusSpec {
    Generator generator = Generator::RandomThinned;
    int count = 100;
    int min_vertices = 8;
    int max_vertices = 30;
    std::optional<GraphClass> filter;
    std::uint64_t seed = 1;
};

// Same spec, same corpus. With a filter every graph is a class member; the
// thinning deletes edges of forbidden occurrences until none is left.
std::vector<PlaneGraph> generate_corpus(const CorpusSpec& spec);

// Insert each new vertex into a uniformly random face, then `flips` random
// edge flips that keep the graph simple. n >= 3.
PlaneGraph random_triangulation(int n, int flips, std::mt19937_64& rng);

// Deletes edges of forbidden occurrences until g is in class c, preferring
// the edge whose smaller endpoint degree is largest; then deletes up to
// `extra` further random non-bridge edges. Occurrence edges lie on cycles,
// so the graph stays connected.
PlaneGraph thin_to_class(const PlaneGraph& g, std::optional<GraphClass> c, int extra, std::mt19937_64& rng);

// Random triangulation on n vertices driven to minimum degree >= k by flips
// that never raise the total degree deficit; nullopt if it stalls.
std::optional<PlaneGraph> random_triangulation_min_degree(int n, int k, std::mt19937_64& rng);

// Vertices are the edges of g, adjacent when consecutive on a face walk.
// Requires every face walk to be a cycle of length >= 3 (g 2-connected with
// minimum degree >= 3), so the result is simple and 4-regular.
PlaneGraph medial_graph(const PlaneGraph& g);

// Adds up to `count` random face chords, each kept only if the graph stays
// in class c.
PlaneGraph add_chords(const PlaneGraph& g, GraphClass c, int count, std::mt19937_64& rng);

// A minimum-degree-4 member of class c. H1: medial of the medial of a
// triangulation with minimum degree 4 on n0 vertices (6 n0 - 12 vertices,
// one triangle per vertex). H2: medial of a triangulation with minimum
// degree 5 (3 n0 - 6 vertices, triangles meet only 5+-faces). Then up to
// `chords` class-preserving chords. nullopt if the base is not in class.
std::optional<PlaneGraph> min_degree_four_member(GraphClass c, int n0, int chords, std::mt19937_64& rng);

// Every connected graph on n vertices up to isomorphism, n <= 6.
std::vector<Graph> connected_graphs(int n);

}  // namespace flex

#include <doctest.h>

#include "flex/corpus.hpp"
#include "flex/named_graphs.hpp"

#include <algorithm>

using namespace flex;

namespace {

int min_degree(const Graph& g)
{
    int d = g.vertex_count() > 0 ? g.degree(0) : 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

}  // namespace

TEST_CASE("connected graphs up to isomorphism")
{
    const int expected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        const auto gs = connected_graphs(n);
        CHECK(static_cast<int>(gs.size()) == expected[n - 1]);
        for (const Graph& g : gs)
            CHECK(g.connected());
    }
}

TEST_CASE("generator names")
{
    for (Generator g : {Generator::ExhaustiveSmall, Generator::RandomThinned, Generator::MinDegreeFour})
        CHECK(parse_generator(to_string(g)) == g);
    CHECK(parse_generator("random") == Generator::RandomThinned);
    CHECK_THROWS_AS(parse_generator("nope"), std::invalid_argument);
}

TEST_CASE("random triangulations are triangulations")
{
    std::mt19937_64 rng(4);
    for (int n = 3; n <= 30; ++n) {
        const PlaneGraph t = random_triangulation(n, 3 * n, rng);
        CHECK(t.vertex_count() == n);
        CHECK(t.graph().edge_count() == 3 * n - 6);
        for (Face f = 0; f < t.face_count(); ++f)
            CHECK(t.face_degree(f) == 3);
    }
}

TEST_CASE("medial graphs")
{
    // The medial of the octahedron is the cuboctahedron; of the cube too.
    for (const PlaneGraph& p : {named::octahedron(), named::cube()}) {
        const PlaneGraph m = medial_graph(p);
        CHECK(m.vertex_count() == 12);
        CHECK(m.graph().edge_count() == 24);
        CHECK(min_degree(m.graph()) == 4);
        CHECK(m.face_count() == 14);
    }
    CHECK_THROWS_AS(medial_graph(named::path(3)), std::invalid_argument);
}

TEST_CASE("min-degree triangulations")
{
    std::mt19937_64 rng(8);
    int found = 0;
    for (int t = 0; t < 10; ++t)
        if (auto g = random_triangulation_min_degree(16, 5, rng)) {
            ++found;
            CHECK(min_degree(g->graph()) >= 5);
            CHECK(g->graph().edge_count() == 3 * 16 - 6);
        }
    CHECK(found > 0);
}

TEST_CASE("filtered corpora are deterministic class members")
{
    for (GraphClass c : {GraphClass::H1, GraphClass::H2})
        for (Generator gen : {Generator::RandomThinned, Generator::MinDegreeFour}) {
            CorpusSpec spec;
            spec.generator = gen;
            spec.filter = c;
            spec.count = 20;
            spec.min_vertices = gen == Generator::MinDegreeFour ? 24 : 8;
            spec.max_vertices = gen == Generator::MinDegreeFour ? 50 : 24;
            spec.seed = 42;
            const auto a = generate_corpus(spec);
            const auto b = generate_corpus(spec);
            REQUIRE(a.size() == 20);
            for (std::size_t i = 0; i < a.size(); ++i) {
                const Graph& g = a[i].graph();
                CHECK(g.edges() == b[i].graph().edges());
                CHECK(is_class_member(g, c));
                CHECK(g.connected());
                CHECK(g.vertex_count() >= spec.min_vertices);
                CHECK(g.vertex_count() <= spec.max_vertices);
                if (gen == Generator::MinDegreeFour)
                    CHECK(min_degree(g) >= 4);
            }
        }
}

TEST_CASE("chords keep the class")
{
    std::mt19937_64 rng(2);
    const PlaneGraph base = named::dodecahedron();
    for (GraphClass c : {GraphClass::H1, GraphClass::H2}) {
        const PlaneGraph g = add_chords(base, c, 10, rng);
        CHECK(is_class_member(g.graph(), c));
        // A pentagon chord leaves a triangle on a 4-cycle: a house.
        if (c == GraphClass::H2)
            CHECK(g.graph().edge_count() == base.graph().edge_count());
        else
            CHECK(g.graph().edge_count() == base.graph().edge_count() + 10);
    }
}

TEST_CASE("exhaustive-small corpus")
{
    CorpusSpec spec;
    spec.generator = Generator::ExhaustiveSmall;
    spec.min_vertices = 1;
    spec.max_vertices = 5;
    spec.count = 1000;
    CHECK(generate_corpus(spec).size() == 1 + 1 + 2 + 6 + 20);  // K5 is the only nonplanar one
    spec.filter = GraphClass::H1;
    for (const PlaneGraph& g : generate_corpus(spec))
        CHECK(is_class_member(g.graph(), GraphClass::H1));
}

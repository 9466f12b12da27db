#include <doctest.h>

#include "flex/named_graphs.hpp"
#include "flex/reducible.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace flex;

namespace {

using Raw = std::vector<std::vector<int>>;  // one sorted list per vertex

void subsets_of_size(int universe, int size, std::vector<std::vector<int>>& out)
{
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == size) {
            out.push_back(pick);
            return;
        }
        for (int c = from; c < universe; ++c) {
            pick.push_back(c);
            self(self, c + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

std::set<Raw> all_raw(const std::vector<int>& sizes, int universe)
{
    std::set<Raw> out;
    Raw cur;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == sizes.size()) {
            out.insert(cur);
            return;
        }
        std::vector<std::vector<int>> choices;
        subsets_of_size(universe, sizes[v], choices);
        for (auto& c : choices) {
            cur.push_back(c);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Images of a system under every injective recoloring into {0..universe-1}.
std::set<Raw> images(const ListAssignment& l, int universe)
{
    const int used = static_cast<int>(l.palette().size());
    std::set<Raw> out;
    std::vector<int> map;
    std::vector<char> taken(universe, 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(map.size()) == used) {
            Raw r;
            for (const auto& list : l.lists()) {
                std::vector<int> img;
                for (Color c : list)
                    img.push_back(map[c]);
                std::sort(img.begin(), img.end());
                r.push_back(img);
            }
            out.insert(r);
            return;
        }
        for (int c = 0; c < universe; ++c) {
            if (taken[c])
                continue;
            taken[c] = 1;
            map.push_back(c);
            self(self);
            map.pop_back();
            taken[c] = 0;
        }
    };
    rec(rec);
    return out;
}

bool all_colorable(const Graph& g, const std::vector<int>& sizes, bool intersecting)
{
    const auto adj = adjacency_masks(g);
    bool ok = true;
    for_each_list_system(sizes, intersecting, [&](const ListSystem& s) {
        ok = mask_colorable(adj, s.masks);
        return ok;
    });
    return ok;
}

Graph random_connected(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    while (true) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        if (g.connected())
            return g;
    }
}

std::vector<Vertex> iota_vec(int n)
{
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// The K3 gadget: a triangle whose corners each have three pendant leaves, so
// deg_G = 5 and the residual sizes are (2,2,2).
Graph k3_gadget()
{
    Graph g(12);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    int next = 3;
    for (int v = 0; v < 3; ++v)
        for (int j = 0; j < 3; ++j)
            g.add_edge(v, next++);
    return g;
}

}  // namespace

TEST_CASE("residual sizes match the available-color counts")
{
    struct Row {
        const char* id;
        std::vector<int> degrees;  // empty: canonical
        SizeFunction sizes;
    };
    const std::vector<Row> rows{
        {"B1a", {}, {5, 3, 2, 2, 2}},
        {"B1b", {}, {5, 3, 2, 2, 2, 2}},
        {"B2a", {}, {4, 3, 3, 2}},
        {"B2b", {}, {4, 3, 3, 2, 2}},
        {"B2c", {}, {4, 3, 3, 2, 2, 2}},
        {"B3", {}, {3, 3, 4, 2}},
        {"B4i", {}, {4, 3, 3, 3, 2}},
        {"B4ii", {}, {3, 3, 4, 3, 2}},
        {"B5", {5, 5, 4, 5, 4}, {3, 2, 4, 3, 2}},
        {"B6", {}, {5, 3, 3, 2, 2, 2}},
        {"D1", {5, 4, 4, 4}, {2, 3, 3, 3}},
        {"D2", {5, 4, 4, 4, 4}, {2, 3, 3, 3, 3}},
    };
    for (const auto& row : rows) {
        const Pattern& p = configuration(row.id);
        const auto d = row.degrees.empty() ? canonical_degrees(p) : row.degrees;
        const Graph host = witness_host(p, d);
        CHECK_MESSAGE(residual_sizes(host, iota_vec(p.vertex_count()), {}, 5) == row.sizes, row.id);
    }

    const Graph star = named::star(3).graph();
    const Vertex center[] = {0};
    CHECK(residual_sizes(star, center, {}, 5) == SizeFunction{2});
}

TEST_CASE("residual_sizes errors")
{
    const Graph k3 = named::cycle(3).graph();
    const Vertex all[] = {0, 1, 2};
    CHECK_THROWS_AS(residual_sizes(k3, all, all, 5), ReducibilityError);
    const Vertex one[] = {0};
    try {
        residual_sizes(named::star(6).graph(), one, {}, 5);
        FAIL("expected NegativeResidual");
    } catch (const ReducibilityError& e) {
        CHECK(e.kind() == ReducibilityErrorKind::NegativeResidual);
    }
    const Vertex twice[] = {0, 0};
    CHECK_THROWS_AS(residual_sizes(k3, twice, {}, 5), ReducibilityError);
    // Boundary vertices do not count toward deg_{H-B}.
    const Vertex b[] = {2};
    CHECK(residual_sizes(k3, all, b, 5) == SizeFunction{4, 4});
}

TEST_CASE("lower_at and subtract_indicator")
{
    CHECK(lower_at({5, 3, 2, 2, 2}, 0) == SizeFunction{1, 3, 2, 2, 2});
    CHECK(lower_at(lower_at({5, 3}, 0), 0) == lower_at({5, 3}, 0));
    CHECK(lower_at({5, 3}, 0)[1] == 3);
    const int first[] = {0};
    CHECK(subtract_indicator({3, 3, 2}, first) == SizeFunction{2, 3, 2});
    CHECK(subtract_indicator({3, 3, 2}, {}) == SizeFunction{3, 3, 2});
    const int both[] = {0, 1};
    CHECK_THROWS_AS(subtract_indicator({1, 1}, both), ReducibilityError);
}

TEST_CASE("canonical list system counts")
{
    CHECK(enumerate_canonical_list_systems(std::vector<int>{1, 1}) ==
          std::vector<ListAssignment>{ListAssignment({{0}, {0}}), ListAssignment({{0}, {1}})});
    CHECK(count_list_systems(std::vector<int>{1, 1, 1}) == 5);
    CHECK(count_list_systems(std::vector<int>{2, 2}) == 3);
    // Frozen from an independent dynamic-programming count.
    CHECK(count_list_systems(std::vector<int>{5, 3, 2, 2, 2}) == 7088);
    CHECK(count_list_systems(std::vector<int>{1, 3, 2, 2, 2}) == 1056);
    CHECK(count_list_systems(std::vector<int>{5, 3, 3, 2, 2, 2}) == 389282);
    CHECK(count_list_systems(std::vector<int>{1, 3, 3, 2, 2, 2}) == 32019);
    CHECK(count_list_systems(std::vector<int>{4, 3, 3, 2, 2, 2}) == 313944);
    CHECK(count_list_systems(std::vector<int>{2, 2, 2, 2, 2, 2}) == 29388);
    CHECK(count_list_systems(std::vector<int>{3, 3, 3, 3, 3, 3}) == 2406208);
    CHECK(count_list_systems(std::vector<int>{0, 0}) == 1);
}

TEST_CASE("canonical systems expand to exactly all raw systems")
{
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> sizes(n, 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == n) {
                const int universe = std::accumulate(sizes.begin(), sizes.end(), 0);
                std::set<Raw> expanded;
                std::size_t total = 0;
                for (const auto& l : enumerate_canonical_list_systems(sizes)) {
                    CHECK(static_cast<int>(l.palette().size()) <= universe);
                    for (int u = 0; u < n; ++u)
                        CHECK(l.size_of(u) == sizes[u]);
                    auto img = images(l, universe);
                    total += img.size();
                    expanded.insert(img.begin(), img.end());
                }
                // Disjoint orbits: no two yielded systems are recolorings.
                CHECK(total == expanded.size());
                CHECK(expanded == all_raw(sizes, universe));
                return;
            }
            for (int s = 0; s <= 2; ++s) {
                sizes[v] = s;
                self(self, v + 1);
            }
        };
        rec(rec, 0);
    }
}

TEST_CASE("colors are numbered by first use")
{
    for_each_list_system(std::vector<int>{2, 3, 2, 1}, false, [](const ListSystem& s) {
        int next = 0;
        const ListAssignment l = s.to_lists();
        for (const auto& list : l.lists())
            for (Color c : list)
                if (c >= next) {
                    REQUIRE(c == next);
                    ++next;
                }
        return true;
    });
}

TEST_CASE("intersecting systems decide colorability on small graphs")
{
    std::mt19937_64 rng(424242);
    int uncolorable = 0;
    for (int t = 0; t < 400; ++t) {
        const int n = 2 + t % 4;
        const Graph g = random_connected(rng, n, 0.6);
        std::vector<int> sizes(n);
        std::uniform_int_distribution<int> pick(1, 3);
        for (int v = 0; v < n; ++v)
            sizes[v] = std::min(pick(rng), g.degree(v) + 1);
        const bool full = all_colorable(g, sizes, false);
        CHECK(full == all_colorable(g, sizes, true));
        if (!full)
            ++uncolorable;
    }
    CHECK(uncolorable > 20);
    CHECK(count_list_systems(std::vector<int>{2, 2}, true) == 1);  // only equal lists
}

TEST_CASE("monotonicity spot check")
{
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int t = 0; t < 300 && checked < 60; ++t) {
        const int n = 3 + t % 3;
        const Graph g = random_connected(rng, n, 0.6);
        std::vector<int> sizes(n);
        std::uniform_int_distribution<int> pick(1, 3);
        for (int v = 0; v < n; ++v)
            sizes[v] = pick(rng);
        if (!all_colorable(g, sizes, false))
            continue;
        ++checked;
        sizes[std::uniform_int_distribution<int>(0, n - 1)(rng)] += 1;
        CHECK(all_colorable(g, sizes, false));
    }
    CHECK(checked == 60);
}

TEST_CASE("check_fix")
{
    SUBCASE("K3 gadget fails with a replayable witness")
    {
        const Graph g = k3_gadget();
        const Vertex tri[] = {0, 1, 2};
        CHECK(residual_sizes(g, tri, {}, 5) == SizeFunction{2, 2, 2});
        auto r = check_fix(g, tri, {}, 5);
        CHECK_FALSE(r.fix_ok);
        REQUIRE(r.witness);
        CHECK(r.witness->check == ReducibilityWitness::Check::Fix);
        CHECK(r.witness->where == std::vector<Vertex>{0});
        CHECK(r.witness->system == ListAssignment({{0}, {0, 1}, {0, 1}}));
        CHECK_FALSE(find_l_coloring(named::cycle(3).graph(), r.witness->system));
    }
    SUBCASE("single vertex")
    {
        for (int d = 0; d <= 4; ++d) {
            const Graph star = named::star(d).graph();
            const Vertex c[] = {0};
            CHECK(check_fix(star, c, {}, 5).fix_ok);
        }
    }
    SUBCASE("B3 at its exact degrees")
    {
        const auto r = verify_configuration("B3");
        CHECK(r.fix_ok);
        CHECK_FALSE(r.witness);
    }
}

TEST_CASE("check_forb")
{
    SUBCASE("B3 with S = {v1, v3}")
    {
        const Pattern& p = configuration("B3");
        const Graph host = witness_host(p, canonical_degrees(p));
        auto r = check_forb(host, iota_vec(4), {}, 5, GraphClass::H1);
        CHECK(r.forb_ok);
        CHECK(std::find(r.forbidding_sets.begin(), r.forbidding_sets.end(), std::vector<Vertex>{0, 2}) !=
              r.forbidding_sets.end());
    }
    SUBCASE("D1 with d(v) = 5 and S = {v1, v3}")
    {
        const Pattern& p = configuration("D1");
        const std::vector<int> d{5, 4, 4, 4};
        const Graph host = witness_host(p, d);
        auto r = check_forb(host, iota_vec(4), {}, 5, GraphClass::H2);
        CHECK(r.forb_ok);
        CHECK(std::find(r.forbidding_sets.begin(), r.forbidding_sets.end(), std::vector<Vertex>{1, 3}) !=
              r.forbidding_sets.end());
    }
    SUBCASE("fewer than two inner vertices")
    {
        const Graph star = named::star(2).graph();
        const Vertex c[] = {0};
        auto r = check_forb(star, c, {}, 5, GraphClass::H1);
        CHECK(r.forb_ok);
        CHECK(r.forbidding_sets.empty());
    }
}

TEST_CASE("library configurations are boundary-reducible")
{
    for (const auto& id : configuration_ids()) {
        const auto r = verify_configuration(id);
        CHECK_MESSAGE(r.reducible(), id);
        CHECK(r.config_id == id);
    }
    for (int d = 0; d <= 3; ++d) {
        const int deg[] = {d};
        CHECK(verify_configuration("Z0", deg).reducible());
    }
}

TEST_CASE("check_boundary_reducible")
{
    const Graph g = k3_gadget();
    const Vertex tri[] = {0, 1, 2};
    auto r = check_boundary_reducible(g, tri, {}, 5, GraphClass::H1, "K3");
    CHECK_FALSE(r.reducible());
    REQUIRE(r.witness);
    CHECK_FALSE(find_l_coloring(named::cycle(3).graph(), r.witness->system));
    CHECK_THROWS_AS(check_boundary_reducible(g, tri, tri, 5, GraphClass::H1), ReducibilityError);

    const std::string text = format_report(r);
    CHECK(text.find("FIX fail\n") != std::string::npos);
    CHECK(text.find("lists v1\n") != std::string::npos);

    // Nonempty boundary: in the gadget the inner edge keeps one color per end;
    // in a bare triangle it keeps four.
    const Vertex b[] = {2};
    CHECK(residual_sizes(g, tri, b, 5) == SizeFunction{1, 1});
    CHECK_FALSE(check_boundary_reducible(g, tri, b, 5, GraphClass::H1).reducible());
    CHECK(check_boundary_reducible(named::cycle(3).graph(), tri, b, 5, GraphClass::H1).reducible());
}

TEST_CASE("verify_cached reuses reports")
{
    const Pattern& p = configuration("B4i");
    const Graph host = witness_host(p, canonical_degrees(p));
    const auto h = iota_vec(p.vertex_count());
    const auto& a = verify_cached(host, h, 5, GraphClass::H1, "B4i");
    const auto& b = verify_cached(host, h, 5, GraphClass::H1, "B4i");
    CHECK(&a == &b);
    CHECK(a.reducible());
}

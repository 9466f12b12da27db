#pragma once

#include "flex/list_color.hpp"
#include "flex/pattern.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flex {

// Target list length per vertex of H - B, indexed in the order H - B is given.
using SizeFunction = std::vector<int>;

enum class ReducibilityErrorKind { NegativeResidual, BoundaryNotProper, BadSubgraph };

class ReducibilityError : public std::runtime_error {
public:
    ReducibilityError(ReducibilityErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ReducibilityErrorKind kind() const { return kind_; }

private:
    ReducibilityErrorKind kind_;
};

// size(v) = k - deg_G(v) + deg_{H-B}(v) for v in H \ B, in the order of `h`.
// Throws NegativeResidual, BoundaryNotProper (B not a proper subset of H) or
// BadSubgraph (repeated or out-of-range ids).
SizeFunction residual_sizes(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b, int k);

SizeFunction lower_at(const SizeFunction& sizes, int v);
// Decrements exactly the positions in s; throws NegativeResidual if a list
// would become empty.
SizeFunction subtract_indicator(const SizeFunction& sizes, std::span<const int> s);

// A list system up to color renaming: the multiset of color classes, each
// recorded as the bit set of vertices whose list holds that color. Color i is
// types[i]; types are ordered so colors come out numbered by first use over
// vertices in id order.
struct ListSystem {
    int vertex_count = 0;
    std::vector<std::uint32_t> types;
    std::vector<std::uint64_t> masks;  // masks[v] has bit i iff color i is in L(v)

    ListAssignment to_lists() const;
};

// Visits one representative of every color-renaming class of list systems
// with |L(v)| = sizes[v] exactly. With intersecting_only, only systems in
// which every two color classes share a vertex are visited. The visitor
// returns false to stop. Returns the number of systems visited.
// Requires at most 16 vertices and sum(sizes) <= 64.
std::uint64_t for_each_list_system(std::span<const int> sizes, bool intersecting_only,
                                   const std::function<bool(const ListSystem&)>& visit);
std::uint64_t count_list_systems(std::span<const int> sizes, bool intersecting_only = false);
std::vector<ListAssignment> enumerate_canonical_list_systems(std::span<const int> sizes);

struct ReducibilityWitness {
    enum class Check { Fix, Forb };
    Check check = Check::Fix;
    std::vector<Vertex> where;  // fixed vertex, or the set S (ids of G)
    ListAssignment system;      // lists on H - B, local order
};

struct ReducibilityReport {
    std::string config_id;
    bool fix_ok = true;
    bool forb_ok = true;
    std::optional<ReducibilityWitness> witness;
    std::uint64_t systems_checked = 0;
    std::vector<std::vector<Vertex>> forbidding_sets;  // S tested by FORB, ids of G

    bool reducible() const { return fix_ok && forb_ok; }
};

// FIX: every v of H - B lowered to one color, every system colorable.
ReducibilityReport check_fix(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b, int k);

// FORB: every class-forbidding S of H - B with 2 <= |S| <= k - 2, every
// system with sizes decremented on S colorable. Forbidding-ness is decided on
// the induced graph H - B alone.
ReducibilityReport check_forb(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b, int k,
                              GraphClass c);

// FIX then FORB; the witness is the first failure in (vertex or S, system)
// enumeration order.
ReducibilityReport check_boundary_reducible(const Graph& g, std::span<const Vertex> h, std::span<const Vertex> b,
                                            int k, GraphClass c, std::string config_id = {});

// check_boundary_reducible with empty boundary, memoized on (class, induced
// adjacency of H, residual sizes). Thread-safe.
const ReducibilityReport& verify_cached(const Graph& g, std::span<const Vertex> h, int k, GraphClass c,
                                        const std::string& config_id);

// A library configuration realized in witness_host with the given pattern
// vertex degrees (canonical_degrees when empty); k = 5, empty boundary.
ReducibilityReport verify_configuration(std::string_view id, std::span<const int> degrees = {});

std::string format_report(const ReducibilityReport& r);

}  // namespace flex

#pragma once

#include "flex/list_color.hpp"
#include "flex/pattern.hpp"
#include "flex/rational.hpp"
#include "flex/reducible.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace flex {

struct ResolutionStep {
    std::vector<Vertex> h;  // sorted ids of G
    std::vector<Vertex> b;  // boundary, sorted; empty for library configurations
    std::string config_id;
    ReducibilityReport report;
};

// Peels in order; the residue is what remains after the last step and may be
// empty. When the final verified match covers everything left, it is stored
// as the residue instead of a step.
struct Resolution {
    std::vector<ResolutionStep> steps;
    std::vector<Vertex> residue;
    std::string residue_config;  // empty iff residue is empty
    ReducibilityReport residue_report;
};

struct ResolutionResult {
    std::optional<Resolution> resolution;
    std::vector<Vertex> stuck;  // ids of G of a component with no verified match
    bool ok() const { return resolution.has_value(); }
};

// Greedy peeling over a stack of components. On each component the first
// library match (library order, then mapped tuple) with at most b peeled
// vertices that verifies against the current graph is removed. Expects g in
// class c.
ResolutionResult find_resolution(const Graph& g, GraphClass c, int k = 5, int b = 7);

// Replays the nested sequence and re-verifies every step and the residue
// without the cache. Returns an empty string or a description of the fault.
std::string check_resolution(const Graph& g, GraphClass c, const Resolution& r, int k = 5, int b = 7);

// Unit weights on (v, r(v)).
struct Request {
    std::vector<std::pair<Vertex, Color>> entries;  // sorted by vertex, one per vertex
};

struct WeightedRequest {
    std::map<std::pair<Vertex, Color>, Rational> weight;

    static WeightedRequest unit(const Request& r);
    Rational total() const;
    Rational weight_of(Vertex v, Color c) const;
    Rational honored(const Coloring& phi) const;
};

class RequestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws RequestError if a weighted pair names a vertex out of range or a
// color outside that vertex's list.
void validate_request(const ListAssignment& lists, const WeightedRequest& w);

enum class ExtendErrorKind {
    InvariantBreach,  // a step whose success was verified could not be colored
    Unguaranteed,     // fixed(v,c) pushed more than k-2 neighbors of v into one earlier step and it failed
    BadInput,         // lists too short, bad fixed binding or request
};

class ExtendError : public std::runtime_error {
public:
    ExtendError(ExtendErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ExtendErrorKind kind() const { return kind_; }

private:
    ExtendErrorKind kind_;
};

struct PlainPolicy {};
struct FixedPolicy {
    Vertex v;
    Color c;
};
struct RequestGreedyPolicy {
    WeightedRequest request;
};
using ExtendPolicy = std::variant<PlainPolicy, FixedPolicy, RequestGreedyPolicy>;

// Colors the residue, then the steps in reverse order, each on H_i - B_i with
// L(v) minus the colors of already colored neighbors. fixed(v,c) gives v the
// list {c} and removes c from v's neighbors in every earlier colored step.
// request-greedy maximizes honored weight per step, ties by the smallest
// coloring in id order. The result is re-validated as a proper L-coloring.
Coloring extend_coloring(const Graph& g, const ListAssignment& lists, const Resolution& r,
                         const ExtendPolicy& policy = PlainPolicy{}, int k = 5);

struct OracleResult {
    Coloring best;
    Rational honored;
    Rational total;
    Rational ratio;  // honored / total
};

class UncolorableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact maximum of the honored weight over all L-colorings by branch and
// bound in vertex id order; among maxima the lexicographically smallest
// coloring. Requires |V| <= 12 and total > 0. Throws UncolorableError.
OracleResult oracle_max_satisfaction(const Graph& g, const ListAssignment& lists, const WeightedRequest& w);

struct EpsilonResult {
    Rational min_ratio;
    Request minimizer;
    std::uint64_t requests = 0;
    bool exhaustive = false;
};

// Minimum oracle ratio over unit requests on `domain` (all vertices when
// empty). All requests are tried when there are at most `trials` of them,
// otherwise `trials` are sampled with the seed.
EpsilonResult empirical_epsilon(const Graph& g, const ListAssignment& lists, std::span<const Vertex> domain,
                                std::uint64_t trials, std::uint64_t seed = 0);

// `requests v1`: `r <v>: <c>` (weight 1) and `w <v> <c>: <weight>` lines.
WeightedRequest parse_requests(std::istream& in, const ListAssignment& lists);
WeightedRequest parse_requests(std::string_view text, const ListAssignment& lists);
std::string format_requests(const WeightedRequest& w);

// `step <i>: <id> peel <v...> boundary <v...>` lines, then
// `residue: <id> <v...>` or `residue: none`.
std::string format_resolution(const Resolution& r);

}  // namespace flex

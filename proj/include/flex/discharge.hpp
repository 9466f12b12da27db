#pragma once

#include "flex/pattern.hpp"
#include "flex/plane_graph.hpp"
#include "flex/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flex {

// Hopper mode: c(v) = d(v) - 4, c(f) = d(f) - 4, total -8.
// House mode:  c(v) = d(v) - 6, c(f) = 2 d(f) - 6, total -12.
enum class DischargeMode { Hopper, House };

std::string_view to_string(DischargeMode m);
DischargeMode parse_discharge_mode(std::string_view text);  // "hopper"/"H1", "house"/"H2"
DischargeMode mode_of(GraphClass c);

struct Element {
    enum class Kind { Vertex, Face } kind;
    int id;

    std::string name() const;  // "v3", "f7"
    friend auto operator<=>(const Element&, const Element&) = default;
};

struct Transfer {
    std::string rule;  // "R1", "R3.2", ...
    Element from, to;
    Rational amount;
};

// Face degrees are boundary walk lengths. A transfer addressed to a doubleton
// credits its lower-numbered face.
struct ChargeLedger {
    DischargeMode mode = DischargeMode::Hopper;
    std::vector<Rational> vertex_initial, face_initial;
    std::vector<Rational> vertex_final, face_final;
    std::vector<Transfer> transfers;

    Rational initial_sum() const;
    Rational final_sum() const;
    Rational initial_of(Element e) const;
    Rational final_of(Element e) const;
};

class ModeViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Transfers empty, final = initial.
ChargeLedger initial_charges(const PlaneGraph& g, DischargeMode mode);

struct FaceClass {
    DischargeMode mode = DischargeMode::Hopper;
    std::vector<char> bad_face;     // per face, in the active mode's sense
    std::vector<char> singleton;    // 3-face whose edge-neighbors are all 4+-faces
    std::vector<int> doubleton;     // the one 3-face sharing an edge, else -1
    std::vector<int> cluster;       // per 3-face: smallest face id of its edge-connected 3-face cluster; -1 otherwise
    std::vector<char> bad_vertex;   // hopper mode: 4-vertex on a bad face
    std::vector<int> n_b_star;      // hopper mode, 5-vertices with f3 = 1; else -1
    std::vector<int> n_b;           // hopper mode, 5-vertices with f3 = 2; else -1
};

// Throws ModeViolation when g is outside the mode's class, or in hopper mode
// when a 4+-vertex has f3 >= 3.
FaceClass classify(const PlaneGraph& g, DischargeMode mode);

// Rules in order, senders ascending, recipients in rotation or walk order.
// Zero amounts are not recorded. Throws ModeViolation.
ChargeLedger apply_rules(const PlaneGraph& g, DischargeMode mode);
ChargeLedger apply_rules(const PlaneGraph& g, DischargeMode mode, std::vector<std::string>& notes);

enum class Verdict {
    Z0,                     // minimum degree <= 3
    ConfigurationFound,
    TheoremContradiction,   // no configuration, no negative element
    RuleGap,                // no configuration, some negative element
};

std::string_view to_string(Verdict v);

struct ChargeItem {
    std::string name;  // "v3", "f2", or "f2+f5" for a 3-face cluster
    Rational charge;
};

struct AuditReport {
    GraphClass graph_class = GraphClass::H1;
    Verdict verdict = Verdict::Z0;
    ChargeLedger ledger;
    bool conserved = false;
    int min_degree = 0;
    std::vector<ChargeItem> negative;  // vertices, 4+-faces, 3-face clusters
    std::vector<Match> configurations;
    std::vector<std::string> notes;    // R2 splits and other irregular firings
};

// Runs the rules of the class's mode and find_configurations independently.
// Throws ModeViolation if g is not in class.
AuditReport audit(const PlaneGraph& g, GraphClass c);

// Charge table, transfer log and totals.
std::string format_ledger(const ChargeLedger& l);
std::string format_verdict(const AuditReport& r);

}  // namespace flex

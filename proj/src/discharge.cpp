#include "flex/discharge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace flex {

std::string_view to_string(DischargeMode m)
{
    return m == DischargeMode::Hopper ? "hopper" : "house";
}

DischargeMode parse_discharge_mode(std::string_view text)
{
    if (text == "hopper" || text == "H1")
        return DischargeMode::Hopper;
    if (text == "house" || text == "H2")
        return DischargeMode::House;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

DischargeMode mode_of(GraphClass c)
{
    return c == GraphClass::H1 ? DischargeMode::Hopper : DischargeMode::House;
}

std::string Element::name() const
{
    return (kind == Kind::Vertex ? "v" : "f") + std::to_string(id);
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Z0:
        return "Z0";
    case Verdict::ConfigurationFound:
        return "CONFIGURATION";
    case Verdict::TheoremContradiction:
        return "THEOREM-CONTRADICTION";
    case Verdict::RuleGap:
        return "RULE-GAP";
    }
    return "?";
}

namespace {

Rational sum_of(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    return std::accumulate(a.begin(), a.end(), Rational(0)) + std::accumulate(b.begin(), b.end(), Rational(0));
}

std::vector<Face> three_faces_at(const PlaneGraph& g, Vertex v)
{
    std::vector<Face> out;
    for (Face f : g.faces_at(v))
        if (g.face_degree(f) == 3)
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

bool on_face(const PlaneGraph& g, Face f, Vertex u)
{
    for (Dart d : g.face_darts(f))
        if (g.tail(d) == u)
            return true;
    return false;
}

bool on_any(const PlaneGraph& g, const std::vector<Face>& fs, Vertex u)
{
    return std::any_of(fs.begin(), fs.end(), [&](Face f) { return on_face(g, f, u); });
}

std::vector<Vertex> distinct_vertices(const PlaneGraph& g, const std::vector<Face>& fs)
{
    std::vector<Vertex> out;
    for (Face f : fs)
        for (Dart d : g.face_darts(f))
            out.push_back(g.tail(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_mode(const PlaneGraph& g, DischargeMode mode)
{
    if (mode == DischargeMode::Hopper) {
        if (auto h = find_hopper(g.graph()); !h.empty())
            throw ModeViolation("hopper mode needs a hopper-free graph; hopper centered at vertex " +
                                std::to_string(h.front().map[0]));
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) >= 4 && g.f3(v) >= 3)
                throw ModeViolation("vertex " + std::to_string(v) + " of degree >= 4 lies on three 3-faces");
    } else if (auto h = find_house(g.graph()); !h.empty()) {
        std::string vs;
        for (Vertex v : h.front().vertex_set())
            vs += " " + std::to_string(v);
        throw ModeViolation("house mode needs a house-free graph; house on" + vs);
    }
}

class LedgerBuilder {
public:
    explicit LedgerBuilder(ChargeLedger l) : l_(std::move(l)) {}

    void send(std::string rule, Element from, Element to, Rational amount)
    {
        if (amount == Rational(0))
            return;
        slot(from) -= amount;
        slot(to) += amount;
        l_.transfers.push_back({std::move(rule), from, to, amount});
    }
    ChargeLedger take() { return std::move(l_); }

private:
    Rational& slot(Element e)
    {
        return e.kind == Element::Kind::Vertex ? l_.vertex_final[e.id] : l_.face_final[e.id];
    }
    ChargeLedger l_;
};

Element vtx(Vertex v)
{
    return {Element::Kind::Vertex, v};
}

Element fce(Face f)
{
    return {Element::Kind::Face, f};
}

void hopper_rules(const PlaneGraph& g, const FaceClass& fc, LedgerBuilder& out, std::vector<std::string>& notes)
{
    const int n = g.vertex_count();
    const Rational sixth(1, 6);

    std::vector<Rational> received(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < 5)
            continue;
        const auto tri = three_faces_at(g, v);
        for (Vertex u : g.rotation(v))
            if (fc.bad_vertex[u] && !on_any(g, tri, u)) {
                out.send("R1", vtx(v), vtx(u), sixth);
                received[u] += sixth;
            }
    }

    // Second phase: R1 is the only rule paying 4-vertices.
    for (Vertex u = 0; u < n; ++u) {
        if (!fc.bad_vertex[u] || received[u] == Rational(0))
            continue;
        std::vector<Face> bad;
        for (Face f : three_faces_at(g, u))
            if (fc.bad_face[f])
                bad.push_back(f);
        if (bad.size() > 1)
            notes.push_back("RULE-GAP: bad 4-vertex " + std::to_string(u) + " lies on " + std::to_string(bad.size()) +
                            " bad 3-faces; R2 splits its charge equally");
        for (Face f : bad)
            out.send("R2", vtx(u), fce(f), received[u] / static_cast<std::int64_t>(bad.size()));
    }

    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d < 5)
            continue;
        const auto tri = three_faces_at(g, v);
        if (tri.empty())
            continue;
        const Face target = tri.front();
        if (d == 5 && tri.size() == 1) {
            std::vector<int> other;
            for (Dart e : g.face_darts(target))
                if (g.tail(e) != v)
                    other.push_back(g.degree(g.tail(e)));
            std::sort(other.begin(), other.end());
            const int x = other[0], y = other[1];
            const int nb = fc.n_b_star[v];
            if ((x == 4 || y == 4) && y <= 5) {
                if (nb >= 3)
                    notes.push_back("R3.1 at vertex " + std::to_string(v) + " with n_b* = " + std::to_string(nb) +
                                    " pays the n_b* >= 1 amount");
                out.send("R3.1", vtx(v), fce(target), nb == 0 ? Rational(1) : Rational(2, 3));
            } else if (x == 4) {
                out.send("R3.2", vtx(v), fce(target), Rational(1, 2));
            } else if (x >= 5) {
                out.send("R3.3", vtx(v), fce(target), nb == 0 ? Rational(1) : Rational(1, 2));
            }
        } else if (d == 5 && tri.size() == 2) {
            out.send("R4", vtx(v), fce(target), Rational(1) - sixth * fc.n_b[v]);
        } else if (d == 6 && tri.size() == 1) {
            out.send("R5.1", vtx(v), fce(target), Rational(4, 3));
        } else if (d == 6) {
            int fours = 0;
            for (Vertex u : distinct_vertices(g, tri))
                fours += g.degree(u) == 4;
            if (fours <= 2)
                out.send("R5.2", vtx(v), fce(target), Rational(3, 2));
            else
                out.send("R5.3", vtx(v), fce(target), Rational(2));
        } else if (tri.size() == 1) {
            out.send("R6.1", vtx(v), fce(target), Rational(4, 3));
        } else {
            out.send("R6.2", vtx(v), fce(target), Rational(2));
        }
    }
}

void house_rules(const PlaneGraph& g, const FaceClass& fc, LedgerBuilder& out)
{
    for (Face f = 0; f < g.face_count(); ++f) {
        const int d = g.face_degree(f);
        if (d < 4)
            continue;
        for (Dart e : g.face_darts(f)) {
            const Vertex v = g.tail(e);
            const int dv = g.degree(v);
            if (d == 4 && fc.bad_face[f]) {
                if (dv == 4)
                    out.send("R1", fce(f), vtx(v), Rational(2, 3));
            } else if (d == 4) {
                if (dv <= 5)
                    out.send("R2", fce(f), vtx(v), Rational(1, 2));
            } else if (d == 5) {
                if (dv == 4)
                    out.send("R3", fce(f), vtx(v), Rational(1));
                else if (dv == 5)
                    out.send("R3", fce(f), vtx(v), Rational(1, 2));
            } else if (dv <= 5) {
                out.send("R4", fce(f), vtx(v), Rational(1));
            }
        }
    }
}

}  // namespace

Rational ChargeLedger::initial_sum() const
{
    return sum_of(vertex_initial, face_initial);
}

Rational ChargeLedger::final_sum() const
{
    return sum_of(vertex_final, face_final);
}

Rational ChargeLedger::initial_of(Element e) const
{
    return e.kind == Element::Kind::Vertex ? vertex_initial.at(e.id) : face_initial.at(e.id);
}

Rational ChargeLedger::final_of(Element e) const
{
    return e.kind == Element::Kind::Vertex ? vertex_final.at(e.id) : face_final.at(e.id);
}

ChargeLedger initial_charges(const PlaneGraph& g, DischargeMode mode)
{
    ChargeLedger l;
    l.mode = mode;
    const int vshift = mode == DischargeMode::Hopper ? 4 : 6;
    const int fscale = mode == DischargeMode::Hopper ? 1 : 2;
    const int fshift = mode == DischargeMode::Hopper ? 4 : 6;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        l.vertex_initial.emplace_back(g.degree(v) - vshift);
    for (Face f = 0; f < g.face_count(); ++f)
        l.face_initial.emplace_back(fscale * g.face_degree(f) - fshift);
    l.vertex_final = l.vertex_initial;
    l.face_final = l.face_initial;
    return l;
}

FaceClass classify(const PlaneGraph& g, DischargeMode mode)
{
    check_mode(g, mode);
    const int n = g.vertex_count(), nf = g.face_count();
    FaceClass fc;
    fc.mode = mode;
    fc.bad_face.assign(nf, 0);
    fc.singleton.assign(nf, 0);
    fc.doubleton.assign(nf, -1);
    fc.cluster.assign(nf, -1);
    fc.bad_vertex.assign(n, 0);
    fc.n_b_star.assign(n, -1);
    fc.n_b.assign(n, -1);

    std::vector<Face> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Face f) {
        while (parent[f] != f)
            f = parent[f] = parent[parent[f]];
        return f;
    };
    for (Face f = 0; f < nf; ++f) {
        if (g.face_degree(f) != 3)
            continue;
        std::vector<Face> tri;
        for (Dart d : g.face_darts(f)) {
            const Face h = g.face_of(g.twin(d));
            if (h != f && g.face_degree(h) == 3 && std::find(tri.begin(), tri.end(), h) == tri.end())
                tri.push_back(h);
        }
        fc.singleton[f] = tri.empty();
        if (tri.size() == 1)
            fc.doubleton[f] = tri.front();
        for (Face h : tri) {
            const Face a = find(f), b = find(h);
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    for (Face f = 0; f < nf; ++f)
        if (g.face_degree(f) == 3)
            fc.cluster[f] = find(f);

    for (Face f = 0; f < nf; ++f) {
        const int d = g.face_degree(f);
        if (mode == DischargeMode::House) {
            fc.bad_face[f] = g.n_k(f, 4) == d - 1;
            continue;
        }
        if (d != 3)
            continue;
        int fours = 0, high = 0;
        for (Dart e : g.face_darts(f)) {
            fours += g.degree(g.tail(e)) == 4;
            high = std::max(high, g.degree(g.tail(e)));
        }
        fc.bad_face[f] = fours >= 2 && high <= 5;
    }
    if (mode == DischargeMode::House)
        return fc;

    for (Face f = 0; f < nf; ++f)
        if (fc.bad_face[f])
            for (Dart e : g.face_darts(f))
                if (g.degree(g.tail(e)) == 4)
                    fc.bad_vertex[g.tail(e)] = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 5)
            continue;
        const auto tri = three_faces_at(g, v);
        if (tri.size() != 1 && tri.size() != 2)
            continue;
        int count = 0;
        for (Vertex u : g.rotation(v))
            if (fc.bad_vertex[u] && !on_any(g, tri, u))
                ++count;
        (tri.size() == 1 ? fc.n_b_star : fc.n_b)[v] = count;
    }
    return fc;
}

ChargeLedger apply_rules(const PlaneGraph& g, DischargeMode mode, std::vector<std::string>& notes)
{
    const FaceClass fc = classify(g, mode);
    LedgerBuilder out(initial_charges(g, mode));
    if (mode == DischargeMode::Hopper)
        hopper_rules(g, fc, out, notes);
    else
        house_rules(g, fc, out);
    return out.take();
}

ChargeLedger apply_rules(const PlaneGraph& g, DischargeMode mode)
{
    std::vector<std::string> notes;
    return apply_rules(g, mode, notes);
}

AuditReport audit(const PlaneGraph& g, GraphClass c)
{
    AuditReport r;
    r.graph_class = c;
    const DischargeMode mode = mode_of(c);
    r.ledger = apply_rules(g, mode, r.notes);
    r.conserved = r.ledger.initial_sum() == r.ledger.final_sum();
    r.min_degree = g.vertex_count() == 0 ? 0 : g.degree(0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        r.min_degree = std::min(r.min_degree, g.degree(v));
    if (r.min_degree <= 3) {
        r.verdict = Verdict::Z0;
        return r;
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (r.ledger.vertex_final[v] < Rational(0))
            r.negative.push_back({vtx(v).name(), r.ledger.vertex_final[v]});
    // In hopper mode a 3-face is judged together with its edge-adjacent 3-faces.
    for (Face f = 0; f < g.face_count(); ++f)
        if ((mode == DischargeMode::House || g.face_degree(f) != 3) && r.ledger.face_final[f] < Rational(0))
            r.negative.push_back({fce(f).name(), r.ledger.face_final[f]});
    if (mode == DischargeMode::Hopper) {
        std::map<Face, ChargeItem> clusters;
        const FaceClass fc = classify(g, mode);
        for (Face f = 0; f < g.face_count(); ++f) {
            if (fc.cluster[f] < 0)
                continue;
            auto [it, fresh] = clusters.try_emplace(fc.cluster[f], ChargeItem{fce(f).name(), Rational(0)});
            if (!fresh)
                it->second.name += "+" + fce(f).name();
            it->second.charge += r.ledger.face_final[f];
        }
        for (auto& [root, item] : clusters)
            if (item.charge < Rational(0))
                r.negative.push_back(item);
    }

    r.configurations = find_configurations(g.graph(), c);
    if (!r.configurations.empty())
        r.verdict = Verdict::ConfigurationFound;
    else if (r.negative.empty())
        r.verdict = Verdict::TheoremContradiction;
    else
        r.verdict = Verdict::RuleGap;
    return r;
}

std::string format_ledger(const ChargeLedger& l)
{
    std::ostringstream out;
    out << "mode: " << to_string(l.mode) << "\n";
    for (std::size_t v = 0; v < l.vertex_initial.size(); ++v)
        out << "v" << v << ": " << format_rational(l.vertex_initial[v]) << " -> " << format_rational(l.vertex_final[v])
            << "\n";
    for (std::size_t f = 0; f < l.face_initial.size(); ++f)
        out << "f" << f << ": " << format_rational(l.face_initial[f]) << " -> " << format_rational(l.face_final[f])
            << "\n";
    for (const Transfer& t : l.transfers)
        out << "rule " << t.rule << ": " << t.from.name() << " -> " << t.to.name() << " : "
            << format_rational(t.amount) << "\n";
    out << "total: " << format_rational(l.initial_sum()) << " -> " << format_rational(l.final_sum()) << "\n";
    return out.str();
}

std::string format_verdict(const AuditReport& r)
{
    std::ostringstream out;
    out << "verdict: " << to_string(r.verdict);
    if (r.verdict == Verdict::Z0) {
        out << " (minimum degree " << r.min_degree << ")";
    } else if (r.verdict == Verdict::ConfigurationFound) {
        const Match& m = r.configurations.front();
        out << " " << m.config_id << " at";
        for (Vertex v : m.map)
            out << " " << v;
        out << " (" << r.configurations.size() << " matches)";
    } else if (r.verdict == Verdict::RuleGap) {
        out << " negative";
        for (const ChargeItem& x : r.negative)
            out << " " << x.name << "=" << format_rational(x.charge);
    }
    out << "\n";
    for (const std::string& note : r.notes)
        out << "note: " << note << "\n";
    if (!r.conserved)
        out << "note: charge not conserved\n";
    return out.str();
}

}  // namespace flex

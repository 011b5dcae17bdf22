#include "pg/discharging.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace pg {

namespace {

std::vector<int> walk_degrees(const PlaneGraph& g, int f) {
    std::vector<int> d;
    for (int v : g.face(f).walk) d.push_back(g.degree(v));
    return d;
}

std::vector<int> sorted_degrees(const PlaneGraph& g, int f) {
    auto d = walk_degrees(g, f);
    std::sort(d.begin(), d.end());
    return d;
}

// distinct faces at v, in first-dart order
std::vector<int> faces_at_distinct(const PlaneGraph& g, int v) {
    std::vector<int> out;
    for (int f : g.faces_at(v))
        if (std::find(out.begin(), out.end(), f) == std::end(out)) out.push_back(f);
    return out;
}

// outer neighbor of a 3-vertex v relative to triangle f
int outer_neighbor(const PlaneGraph& g, int v, int f) {
    const auto& face = g.face(f);
    for (int w : g.rotation(v))
        if (!face.contains(w)) return w;
    return -1;
}

bool is_344(const PlaneGraph& g, int f) {
    return sorted_degrees(g, f) == std::vector<int>{3, 4, 4};
}

} // namespace

bool RoleTags::weak_on(const RootedPlaneGraph& g, int v, int f) const {
    const auto& base = g.base();
    int o = outer_neighbor(base, v, f);
    if (o < 0) return false;
    return !g.on_c0(o) && base.degree(o) == 3;
}

RoleTags classify_roles(const RootedPlaneGraph& g) {
    const auto& base = g.base();
    int n = base.vertex_count();
    int nf = base.face_count();
    RoleTags r;
    r.on_c0.assign(n, 0);
    r.bad4.assign(n, 0);
    r.bad5.assign(n, 0);
    r.weak3.assign(n, 0);
    r.strong3.assign(n, 0);
    r.weak5.assign(n, 0);
    r.weak6.assign(n, 0);
    r.poor.assign(n, 0);
    r.rich.assign(n, 0);
    r.q4.assign(n, {});
    r.bad_face.assign(nf, 0);
    r.light.assign(nf, 0);
    r.superlight.assign(nf, 0);
    r.pendant_owners.assign(nf, {});
    r.pendant_faces.assign(n, {});

    for (int v = 0; v < n; ++v) r.on_c0[v] = g.on_c0(v);

    auto in_F3 = [&](int f) { return base.face(f).degree() == 3 && g.in_F(f); };
    auto in_F4 = [&](int f) {
        return base.face(f).degree() == 4 && base.face(f).is_simple() && g.in_F(f);
    };

    // pendant 3-faces: triangle in F3 with a 3-vertex whose outer neighbor
    // is the owner
    for (int f = 0; f < nf; ++f) {
        if (!in_F3(f)) continue;
        for (int v : base.face(f).boundary) {
            if (base.degree(v) != 3) continue;
            int o = outer_neighbor(base, v, f);
            if (o >= 0 &&
                std::find(r.pendant_owners[f].begin(), r.pendant_owners[f].end(), o) ==
                    r.pendant_owners[f].end()) {
                r.pendant_owners[f].push_back(o);
                r.pendant_faces[o].push_back(f);
            }
        }
        std::sort(r.pendant_owners[f].begin(), r.pendant_owners[f].end());
    }

    // bad 4-vertices, then bad faces
    for (int v = 0; v < n; ++v) {
        if (g.on_c0(v) || base.degree(v) != 4) continue;
        for (int f : faces_at_distinct(base, v))
            if (in_F3(f) && is_344(base, f)) r.bad4[v] = 1;
    }
    for (int f = 0; f < nf; ++f) {
        if (!in_F3(f)) continue;
        auto d = sorted_degrees(base, f);
        if (d[0] == 3 && d[1] == 4 && d[2] >= 5) {
            for (int v : base.face(f).boundary)
                if (base.degree(v) == 4 && r.bad4[v]) r.bad_face[f] = 1;
        }
    }

    // weak/strong 3-vertices (per vertex: relative to its F3 triangle)
    for (int v = 0; v < n; ++v) {
        if (g.on_c0(v) || base.degree(v) != 3) continue;
        for (int f : faces_at_distinct(base, v)) {
            if (!in_F3(f)) continue;
            if (r.weak_on(g, v, f))
                r.weak3[v] = 1;
            else
                r.strong3[v] = 1;
        }
    }

    // poor / rich
    for (int v = 0; v < n; ++v) {
        if (g.on_c0(v)) continue;
        bool all4 = base.degree(v) > 0;
        for (int f : base.faces_at(v))
            if (!in_F4(f)) all4 = false;
        r.poor[v] = all4;
        r.rich[v] = !all4;
    }

    // light / superlight 4-faces: one 3, two 4s, one 5+; superlight when both
    // 4-vertices are poor
    for (int f = 0; f < nf; ++f) {
        if (!in_F4(f)) continue;
        auto d = sorted_degrees(base, f);
        if (d[0] == 3 && d[1] == 4 && d[2] == 4 && d[3] >= 5) {
            bool both_poor = true;
            for (int v : base.face(f).boundary)
                if (base.degree(v) == 4 && !r.poor[v]) both_poor = false;
            r.superlight[f] = both_poor;
            r.light[f] = !both_poor;
        }
    }

    // Q4 sets
    for (int v = 0; v < n; ++v) {
        if (g.on_c0(v) || base.degree(v) < 5) continue;
        for (int u : base.rotation(v)) {
            if (g.on_c0(u) || base.degree(u) != 4 || !r.poor[u]) continue;
            bool on3444 = false;
            for (int f : faces_at_distinct(base, u))
                if (in_F4(f) && sorted_degrees(base, f) == std::vector<int>{3, 4, 4, 4})
                    on3444 = true;
            if (on3444) r.q4[v].push_back(u);
        }
        std::sort(r.q4[v].begin(), r.q4[v].end());
    }

    // weak 5- and 6-vertices
    for (int v = 0; v < n; ++v) {
        if (g.on_c0(v)) continue;
        int d = base.degree(v);
        if (d == 5) {
            int t553 = 0, bad = 0;
            for (int f : faces_at_distinct(base, v)) {
                if (!in_F3(f)) continue;
                auto p = sorted_degrees(base, f);
                // (5,5-,3) seen from v: the other two are a 3 and a 5-
                if (p[0] == 3 && p[2] == 5 && p[1] <= 5) {
                    ++t553;
                    bad += r.bad_face[f];
                }
            }
            // reading adopted for the pendant clause: v itself has a pendant
            // 3-face (the alternative reading is flagged in the docs)
            if (t553 >= 2 && bad >= 1 && !r.pendant_faces[v].empty()) r.weak5[v] = 1;
        } else if (d == 6) {
            int bad643 = 0, f356 = 0;
            for (int f : faces_at_distinct(base, v)) {
                if (!in_F3(f)) continue;
                auto p = sorted_degrees(base, f);
                if (p == std::vector<int>{3, 4, 6} && r.bad_face[f]) ++bad643;
                if (p[0] == 3 && p[1] >= 5 && p[2] == 6) ++f356;
            }
            if (bad643 >= 2 && f356 >= 1) r.weak6[v] = 1;
        }
        if (d == 5) {
            for (int f : faces_at_distinct(base, v)) {
                if (!in_F3(f)) continue;
                auto p = sorted_degrees(base, f);
                bool bad345 = r.bad_face[f] && p == std::vector<int>{3, 4, 5};
                bool f335 = p == std::vector<int>{3, 3, 5};
                if (bad345 || f335) r.bad5[v] = 1;
            }
        }
    }

    return r;
}

Rational ChargeLedger::total_initial() const {
    Rational s;
    for (const auto& x : vertex_initial) s += x;
    for (const auto& x : face_initial) s += x;
    return s;
}

Rational ChargeLedger::total_final() const {
    Rational s;
    for (const auto& x : vertex_final) s += x;
    for (const auto& x : face_final) s += x;
    return s;
}

ChargeLedger initial_charges(const RootedPlaneGraph& g) {
    const auto& base = g.base();
    ChargeLedger led;
    led.outer_face = g.outer_face();
    led.vertex_initial.resize(base.vertex_count());
    led.face_initial.resize(base.face_count());
    for (int v = 0; v < base.vertex_count(); ++v)
        led.vertex_initial[v] = Rational(2 * base.degree(v) - 6);
    for (int f = 0; f < base.face_count(); ++f)
        led.face_initial[f] = f == g.outer_face() ? Rational(base.face(f).degree() + 6)
                                                  : Rational(base.face(f).degree() - 6);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    return led;
}

namespace {

struct RuleEngine {
    const RootedPlaneGraph& g;
    const PlaneGraph& base;
    const RoleTags& roles;
    ChargeLedger led;

    RuleEngine(const RootedPlaneGraph& g_, const RoleTags& roles_)
        : g(g_), base(g_.base()), roles(roles_), led(initial_charges(g_)) {}

    void move(Element from, Element to, Rational amount, const char* rule) {
        if (amount.is_zero()) return;
        (from.kind == Element::Vertex ? led.vertex_final[from.index]
                                      : led.face_final[from.index]) -= amount;
        (to.kind == Element::Vertex ? led.vertex_final[to.index]
                                    : led.face_final[to.index]) += amount;
        led.transfers.push_back({from, to, amount, rule});
    }
    void flag(const std::string& msg) { led.ambiguities.push_back(msg); }

    bool in_F3(int f) const { return base.face(f).degree() == 3 && g.in_F(f); }
    bool in_F4(int f) const {
        return base.face(f).degree() == 4 && base.face(f).is_simple() && g.in_F(f);
    }

    // cyclic walk positions of f relative to v: the three other vertices of a
    // simple 4-face, in walk order starting after v
    std::array<int, 3> others_of_4face(int f, int v) const {
        const auto& w = base.face(f).walk;
        int p = 0;
        while (w[p] != v) ++p;
        return {w[(p + 1) % 4], w[(p + 2) % 4], w[(p + 3) % 4]};
    }

    // R1: interior 4-vertices
    void rule1() {
        for (int v = 0; v < base.vertex_count(); ++v) {
            if (g.on_c0(v) || base.degree(v) != 4) continue;
            int n344 = 0;
            for (int f : faces_at_distinct(base, v))
                if (in_F3(f) && is_344(base, f)) ++n344;
            if (n344 >= 2)
                flag("vertex " + std::to_string(v + 1) +
                     " lies on two (3,4,4)-triangles; R1.1 pays 5/4 to each");
            for (int f : faces_at_distinct(base, v)) {
                if (in_F3(f)) {
                    Rational amt = is_344(base, f) ? frac(5, 4)
                                   : roles.bad4[v] ? frac(3, 4)
                                                   : Rational(1);
                    move({Element::Vertex, v}, {Element::Face, f}, amt, "R1.1");
                } else if (in_F4(f)) {
                    move({Element::Vertex, v}, {Element::Face, f}, r12_amount(v, f), "R1.2");
                }
            }
        }
    }

    Rational r12_amount(int v, int f) {
        auto [a, b, c] = others_of_4face(f, v);
        int da = base.degree(a), db = base.degree(b), dc = base.degree(c);
        bool tier1 = (da == 3 && db == 3 && dc >= 4) || (dc == 3 && db == 3 && da >= 4);
        bool f4443 = std::multiset<int>{da, db, dc} == std::multiset<int>{3, 4, 4};
        if (tier1) {
            if (roles.rich[v])
                flag("rich 4-vertex " + std::to_string(v + 1) +
                     " on a (4,3,3,4+)-face: first R1.2 tier applies");
            return Rational(1);
        }
        if (f4443 && roles.rich[v])
            flag("rich 4-vertex " + std::to_string(v + 1) +
                 " on a (4,4,4,3)-face: overlapping R1.2 tiers agree on 2/3");
        if (f4443 || roles.rich[v]) return frac(2, 3);
        return frac(1, 2);
    }

    // R2: interior 5+ vertices
    void rule2() {
        for (int v = 0; v < base.vertex_count(); ++v) {
            if (g.on_c0(v) || base.degree(v) < 5) continue;
            for (int f : faces_at_distinct(base, v)) {
                if (in_F3(f))
                    rule21(v, f);
                else if (in_F4(f))
                    rule22(v, f);
            }
            for (int u : roles.q4[v])
                move({Element::Vertex, v}, {Element::Vertex, u}, frac(1, 6), "R2.3");
        }
    }

    void rule21(int v, int f) {
        const auto& w = base.face(f).walk;
        int u = -1, x = -1;
        for (int y : w)
            if (y != v) (u < 0 ? u : x) = y;
        int du = base.degree(u), dx = base.degree(x);
        if (du > dx) {
            std::swap(u, x);
            std::swap(du, dx);
        } // du <= dx
        if (du == 3 && dx == 3) {
            move({Element::Vertex, v}, {Element::Face, f}, Rational(2), "R2a");
        } else if (du == 3 && dx == 4) {
            bool bad = roles.bad4[x];
            bool weak = roles.weak_on(g, u, f);
            Rational amt = bad ? (weak ? frac(9, 4) : frac(7, 4)) : (weak ? Rational(2) : frac(3, 2));
            move({Element::Vertex, v}, {Element::Face, f}, amt, "R2b");
        } else if (du == 3) { // dx >= 5
            Rational amt = roles.vertex_weak(v) ? frac(5, 4) : frac(7, 4);
            move({Element::Vertex, v}, {Element::Face, f}, amt, "R2c");
        } else { // (5+,4+,4+)
            int bad4s = (du == 4 && roles.bad4[u]) + (dx == 4 && roles.bad4[x]);
            Rational amt = bad4s == 2 ? frac(3, 2) : bad4s == 1 ? frac(5, 4) : Rational(1);
            move({Element::Vertex, v}, {Element::Face, f}, amt, "R2d");
        }
    }

    void rule22(int v, int f) {
        auto [a, b, c] = others_of_4face(f, v);
        int da = base.degree(a), db = base.degree(b), dc = base.degree(c);
        int threes = (da == 3) + (db == 3) + (dc == 3);
        bool adjacent_threes = (da == 3 && db == 3 && dc >= 4) || (dc == 3 && db == 3 && da >= 4);
        if (adjacent_threes) {
            move({Element::Vertex, v}, {Element::Face, f}, Rational(1), "R2.2");
            return;
        }
        if (threes >= 2) {
            flag("4-face " + std::to_string(f) + " at vertex " + std::to_string(v + 1) +
                 " has diagonal 3-vertices; no R2.2 tier applies");
            return;
        }
        if (threes == 1) {
            if (roles.superlight[f]) {
                move({Element::Vertex, v}, {Element::Face, f}, Rational(1), "R2.2");
            } else if (roles.light[f]) {
                move({Element::Vertex, v}, {Element::Face, f}, frac(5, 6), "R2.2");
            } else {
                // one 3-vertex, at most one 4-vertex: the (3,4,5+,5+) tier,
                // with its 4 read as 4+ the way the face analysis applies it
                move({Element::Vertex, v}, {Element::Face, f}, frac(3, 4), "R2.2");
            }
            return;
        }
        move({Element::Vertex, v}, {Element::Face, f}, frac(1, 2), "R2.2");
    }

    // R3: pendant 3-faces
    void rule3() {
        for (int f = 0; f < base.face_count(); ++f)
            for (int o : roles.pendant_owners[f])
                if (base.degree(o) >= 4)
                    move({Element::Vertex, o}, {Element::Face, f}, frac(1, 2), "R3");
    }

    // R4: vertices on C0 pay incident faces by class
    void rule4() {
        for (int v = 0; v < base.vertex_count(); ++v) {
            if (!g.on_c0(v)) continue;
            for (int f : faces_at_distinct(base, v)) {
                if (g.is_outer(f)) continue;
                int deg = base.face(f).degree();
                int inc = g.c0_incidence(f);
                if (deg == 3 && inc == 1)
                    move({Element::Vertex, v}, {Element::Face, f}, Rational(3), "R4");
                else if (deg == 3 && inc == 2)
                    move({Element::Vertex, v}, {Element::Face, f}, frac(3, 2), "R4");
                else if (deg == 4 && inc == 2)
                    move({Element::Vertex, v}, {Element::Face, f}, Rational(1), "R4");
                else if (deg == 4 && inc == 1)
                    flag("4-face " + std::to_string(f) + " touches C0 in exactly one vertex");
            }
        }
    }

    // R5: C0 pays its low-degree vertices; one clause can refund it
    void rule5() {
        Element c0{Element::Face, g.outer_face()};
        int s2 = 0;
        std::vector<int> twos;
        for (int v : base.face(g.outer_face()).boundary) {
            int d = base.degree(v);
            if (d == 2) {
                ++s2;
                twos.push_back(v);
            }
            Rational amt = d == 2   ? Rational(2)
                           : d == 3 ? frac(3, 2)
                           : d == 4 ? Rational(1)
                           : d == 5 ? frac(1, 2)
                                    : Rational(0);
            if (!amt.is_zero()) move(c0, {Element::Vertex, v}, amt, "R5");
        }
        if (g.c0_length() == 7 && s2 == 6) {
            std::vector<int> candidates;
            for (int f = 0; f < base.face_count(); ++f) {
                if (g.is_outer(f)) continue;
                bool all = true;
                for (int v : twos)
                    if (!base.face(f).contains(v)) all = false;
                if (all) candidates.push_back(f);
            }
            if (candidates.empty()) {
                flag("seven-cycle C0 with six 2-vertices but no single face meets them all");
            } else {
                if (candidates.size() > 1)
                    flag("several faces meet all six 2-vertices of C0; least index pays");
                move({Element::Face, candidates.front()}, c0, Rational(1), "R5");
            }
        }
    }

    ChargeLedger run() {
        rule1();
        rule2();
        rule3();
        rule4();
        rule5();
        return std::move(led);
    }
};

} // namespace

ChargeLedger apply_rules(const RootedPlaneGraph& g, const RoleTags& roles) {
    return RuleEngine(g, roles).run();
}

ChargeLedger apply_rules(const RootedPlaneGraph& g) {
    return apply_rules(g, classify_roles(g));
}

FinalReport final_report(const RootedPlaneGraph& g, const ChargeLedger& ledger,
                         const std::vector<PatternHit>& hits) {
    FinalReport rep;
    rep.total_final = ledger.total_final();
    auto consider = [&](Element e, const Rational& charge, const std::vector<int>& verts) {
        if (!charge.negative()) return;
        NegativeElement ne{e, charge, {}};
        for (const auto& h : hits) {
            bool near = false;
            for (int v : h.vertices)
                if (std::find(verts.begin(), verts.end(), v) != verts.end()) near = true;
            if (near) ne.nearby.push_back(h);
        }
        rep.negatives.push_back(std::move(ne));
    };
    for (int v = 0; v < g.base().vertex_count(); ++v)
        consider({Element::Vertex, v}, ledger.vertex_final[v], {v});
    for (int f = 0; f < g.base().face_count(); ++f)
        consider({Element::Face, f}, ledger.face_final[f], g.base().face(f).boundary);
    return rep;
}

std::string element_name(const ChargeLedger& ledger, const Element& e) {
    if (e.kind == Element::Vertex) return "v" + std::to_string(e.index + 1);
    if (e.index == ledger.outer_face) return "C0";
    return "f" + std::to_string(e.index);
}

std::string ledger_text(const RootedPlaneGraph& g, const ChargeLedger& ledger) {
    std::ostringstream out;
    const auto& base = g.base();
    auto line = [&](Element e, const Rational& init, const Rational& fin) {
        out << element_name(ledger, e) << " initial " << init.str();
        for (const auto& t : ledger.transfers) {
            if (t.from == e)
                out << " " << t.rule << "->" << element_name(ledger, t.to) << " " << t.amount.str();
            if (t.to == e)
                out << " " << t.rule << "<-" << element_name(ledger, t.from) << " " << t.amount.str();
        }
        out << " final " << fin.str() << "\n";
    };
    for (int v = 0; v < base.vertex_count(); ++v)
        line({Element::Vertex, v}, ledger.vertex_initial[v], ledger.vertex_final[v]);
    for (int f = 0; f < base.face_count(); ++f)
        line({Element::Face, f}, ledger.face_initial[f], ledger.face_final[f]);
    out << "total initial " << ledger.total_initial().str() << " final "
        << ledger.total_final().str() << "\n";
    for (const auto& a : ledger.ambiguities) out << "note " << a << "\n";
    return out.str();
}

std::string ledger_kv(const RootedPlaneGraph& g, const ChargeLedger& ledger) {
    std::ostringstream out;
    const auto& base = g.base();
    for (int v = 0; v < base.vertex_count(); ++v) {
        out << "vertex." << (v + 1) << ".initial " << ledger.vertex_initial[v].str() << "\n";
        out << "vertex." << (v + 1) << ".final " << ledger.vertex_final[v].str() << "\n";
    }
    for (int f = 0; f < base.face_count(); ++f) {
        std::string key = f == ledger.outer_face ? "C0" : "face." + std::to_string(f);
        out << key << ".initial " << ledger.face_initial[f].str() << "\n";
        out << key << ".final " << ledger.face_final[f].str() << "\n";
    }
    for (size_t i = 0; i < ledger.transfers.size(); ++i) {
        const auto& t = ledger.transfers[i];
        out << "transfer." << i << " " << t.rule << " " << element_name(ledger, t.from) << " "
            << element_name(ledger, t.to) << " " << t.amount.str() << "\n";
    }
    out << "total.initial " << ledger.total_initial().str() << "\n";
    out << "total.final " << ledger.total_final().str() << "\n";
    return out.str();
}

} // namespace pg

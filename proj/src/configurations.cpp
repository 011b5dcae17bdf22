#include "pg/configurations.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pg {

std::vector<int> Configuration::shell() const {
    std::vector<char> in_core(graph.n, 0);
    for (int v : core) in_core[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < graph.n; ++v)
        if (!in_core[v]) out.push_back(v);
    return out;
}

std::vector<int> Configuration::shell_fixed() const {
    std::vector<char> drop(graph.n, 0);
    for (int v : core) drop[v] = 1;
    for (int v : recolorable) drop[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < graph.n; ++v)
        if (!drop[v]) out.push_back(v);
    return out;
}

void Configuration::check(bool enforce_size) const {
    if (spec.k() < 1) throw std::invalid_argument(name + ": empty color spec");
    if (static_cast<int>(allowance.size()) != graph.n)
        throw std::invalid_argument(name + ": allowance size mismatch");
    std::vector<char> in_core(graph.n, 0);
    for (int v : core) {
        if (v < 0 || v >= graph.n) throw std::invalid_argument(name + ": core out of range");
        in_core[v] = 1;
    }
    for (int v : recolorable)
        if (v < 0 || v >= graph.n || in_core[v])
            throw std::invalid_argument(name + ": recolorable must lie in the shell");
    std::vector<char> is_fixed(graph.n, 1);
    for (int v : core) is_fixed[v] = 0;
    for (int v : recolorable) is_fixed[v] = 0;
    for (auto [a, b] : equalities)
        if (a < 0 || b < 0 || a >= graph.n || b >= graph.n || !is_fixed[a] || !is_fixed[b])
            throw std::invalid_argument(name + ": equalities must join fixed shell vertices");
    if (enforce_size && static_cast<int>(shell().size()) > 14)
        throw ConfigTooLarge(name + ": shell larger than 14 vertices");
}

namespace {

// Backtracking over core + recolorable vertices. Fixed shell keeps its
// colors; its internal defect budget is min(allowance, cap). Search
// vertices use their color's cap.
struct Extender {
    const AbstractGraph& g;
    const ColorSpec& spec;
    std::vector<int> order;
    std::vector<int> color;
    std::vector<int> used;
    std::vector<int> limit;

    explicit Extender(const Configuration& cfg)
        : g(cfg.graph), spec(cfg.spec), color(g.n, 0), used(g.n, 0), limit(g.n, 0) {
        order = cfg.core;
        for (int v : cfg.recolorable) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }

    bool search(size_t at) {
        if (at == order.size()) return true;
        int v = order[at];
        for (int c = 1; c <= spec.k(); ++c) {
            int mine = 0;
            bool ok = true;
            for (int w : g.adj[v])
                if (color[w] == c) {
                    if (used[w] + 1 > limit[w]) {
                        ok = false;
                        break;
                    }
                    ++mine;
                }
            if (!ok || mine > spec.cap(c)) continue;
            color[v] = c;
            limit[v] = spec.cap(c);
            used[v] = mine;
            for (int w : g.adj[v])
                if (color[w] == c && w != v) ++used[w];
            if (search(at + 1)) return true;
            for (int w : g.adj[v])
                if (color[w] == c && w != v) --used[w];
            color[v] = 0;
            limit[v] = 0;
            used[v] = 0;
        }
        return false;
    }
};

bool admissible(const Configuration& cfg, const std::vector<int>& fixed,
                const std::vector<int>& col) {
    for (auto [a, b] : cfg.equalities)
        if (col[a] != col[b]) return false;
    for (int v : fixed) {
        int same = 0;
        for (int w : cfg.graph.adj[v])
            if (col[w] != 0 && col[w] == col[v]) ++same;
        if (same > std::min(cfg.allowance[v], cfg.spec.cap(col[v]))) return false;
    }
    return true;
}

bool extend_once(const Configuration& cfg, const std::vector<int>& fixed,
                 const std::vector<int>& col) {
    Extender ext(cfg);
    for (int v : fixed) {
        ext.color[v] = col[v];
        ext.limit[v] = std::min(cfg.allowance[v], cfg.spec.cap(col[v]));
    }
    for (int v : fixed) {
        int same = 0;
        for (int w : cfg.graph.adj[v])
            if (ext.color[w] != 0 && ext.color[w] == col[v]) ++same;
        ext.used[v] = same;
    }
    return ext.search(0);
}

} // namespace

ReducibilityReport verify_local_extendability(const Configuration& cfg) {
    cfg.check();
    ReducibilityReport rep;
    rep.name = cfg.name;
    auto fixed = cfg.shell_fixed();
    int k = cfg.spec.k();
    int m = static_cast<int>(fixed.size());

    std::vector<int> col(cfg.graph.n, 0);
    if (m == 0) {
        rep.precolorings_tried = 1;
        if (extend_once(cfg, fixed, col))
            rep.extendable = 1;
        else {
            rep.ok = false;
            rep.witness = col;
        }
        return rep;
    }
    std::vector<int> odo(m, 1);
    while (true) {
        for (int i = 0; i < m; ++i) col[fixed[i]] = odo[i];
        if (admissible(cfg, fixed, col)) {
            ++rep.precolorings_tried;
            if (extend_once(cfg, fixed, col)) {
                ++rep.extendable;
            } else {
                rep.ok = false;
                if (!rep.witness) rep.witness = col;
            }
        }
        int i = m - 1;
        while (i >= 0 && odo[i] == k) odo[i--] = 1;
        if (i < 0) break;
        ++odo[i];
    }
    return rep;
}

bool recheck_witness(const Configuration& cfg, const std::vector<int>& witness) {
    auto fixed = cfg.shell_fixed();
    if (!admissible(cfg, fixed, witness)) return false;
    return !extend_once(cfg, fixed, witness);
}

namespace {

struct Builder {
    Configuration c;
    Builder(std::string name, std::string anchor, std::string note, int n,
            const std::string& spec = "1,1,0") {
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.note = std::move(note);
        c.graph = AbstractGraph(n);
        c.allowance.assign(n, 0);
        c.spec = ColorSpec::parse(spec);
    }
    Builder& e(int u, int v) {
        c.graph.add_edge(u, v);
        return *this;
    }
    Builder& core(std::vector<int> s) {
        c.core = std::move(s);
        return *this;
    }
    Builder& recolor(std::vector<int> r) {
        c.recolorable = std::move(r);
        return *this;
    }
    Builder& allow(int v, int a) {
        c.allowance[v] = a;
        return *this;
    }
    Builder& equal(int a, int b) {
        c.equalities.emplace_back(a, b);
        return *this;
    }
    Configuration build() {
        c.check();
        return std::move(c);
    }
};

// 3-vertex 0 adjacent to interior 3-vertices 1,2; third neighbor 3; the
// outer colors of 1 and 2 are pinned by 4..7
Configuration entry_l231() {
    return Builder("L2.3-1", "L2.3(1)", "interior 3-vertex adjacent to two interior 3-vertices",
                   8)
        .e(0, 1)
        .e(0, 2)
        .e(0, 3)
        .e(1, 4)
        .e(1, 5)
        .e(2, 6)
        .e(2, 7)
        .core({0, 1, 2})
        .build();
}

// triangle (0,1,2) with deg(2) = 4; the two 3-vertices are deleted, their
// strong outer neighbors 3,4 may absorb one defect each
Configuration entry_l232_334() {
    return Builder("L2.3-2-334", "L2.3(2)",
                   "(3,3,4)-triangle off the outer cycle with strong outer neighbors", 7)
        .e(0, 1)
        .e(1, 2)
        .e(2, 0)
        .e(0, 3)
        .e(1, 4)
        .e(2, 5)
        .e(2, 6)
        .core({0, 1})
        .allow(3, 1)
        .allow(4, 1)
        .build();
}

Configuration entry_l232_333() {
    return Builder("L2.3-2-333", "L2.3(2)",
                   "(3,3,3)-triangle off the outer cycle with strong outer neighbors", 6)
        .e(0, 1)
        .e(1, 2)
        .e(2, 0)
        .e(0, 3)
        .e(1, 4)
        .e(2, 5)
        .core({0, 1})
        .allow(3, 1)
        .allow(4, 1)
        .build();
}

// 4-vertex 0 on a (3,4,4)-triangle (0,1,2) with an interior 3-neighbor 3 off
// the face; the second 4-vertex of the triangle is recolorable
Configuration entry_l233() {
    return Builder("L2.3-3", "L2.3(3)",
                   "4-vertex with exactly one triangle, a (3,4,4), and an interior 3-vertex "
                   "among its off-face neighbors",
                   10)
        .e(0, 1)
        .e(0, 2)
        .e(1, 2)
        .e(0, 3)
        .e(0, 4)
        .e(1, 5)
        .e(2, 6)
        .e(2, 7)
        .e(3, 8)
        .e(3, 9)
        .core({0, 1, 3})
        .recolor({2})
        .build();
}

// 5-vertex 0 with triangles (0,1,2) = bad (5,4,3) and (0,3,4) = (5,4,4)
// whose 4-vertices are both bad; all three bad-witness triangles and their
// fringes are present, so every deleted neighborhood is closed
Configuration entry_l244() {
    return Builder("L2.4-4", "L2.4(4)",
                   "5-vertex on a bad (3,4,5)-triangle and a (4,4,5)-triangle with two bad "
                   "4-vertices",
                   22)
        .e(0, 1)
        .e(0, 2)
        .e(1, 2)
        .e(0, 3)
        .e(0, 4)
        .e(3, 4)
        .e(0, 5)
        .e(1, 6)
        .e(1, 7)
        .e(6, 7)
        .e(2, 12)
        .e(3, 8)
        .e(3, 9)
        .e(8, 9)
        .e(4, 10)
        .e(4, 11)
        .e(10, 11)
        .e(6, 13)
        .e(7, 14)
        .e(7, 15)
        .e(8, 16)
        .e(9, 17)
        .e(9, 18)
        .e(10, 19)
        .e(11, 20)
        .e(11, 21)
        .core({0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11})
        .build();
}

// (3,5,5)-triangle (0,1,2), all three weak: 0's outer neighbor 3 is an
// interior 3-vertex, 1 and 2 carry a bad 4-neighbor triangle plus a pendant
// triangle each. One wing is deleted with the face, the other recolored.
Configuration entry_l251() {
    return Builder("L2.5-1", "L2.5(1)", "(3,5,5)-triangle whose three vertices are all weak", 20)
        .e(0, 1)
        .e(0, 2)
        .e(1, 2)
        .e(0, 3)
        .e(1, 4)
        .e(1, 5)
        .e(4, 5)
        .e(4, 7)
        .e(4, 8)
        .e(7, 8)
        .e(1, 6)
        .e(5, 9)
        .e(6, 10)
        .e(6, 11)
        .e(2, 12)
        .e(2, 13)
        .e(12, 13)
        .e(12, 15)
        .e(12, 16)
        .e(15, 16)
        .e(2, 14)
        .e(13, 17)
        .e(14, 18)
        .e(14, 19)
        .core({0, 1, 2, 4, 5, 6})
        .recolor({12, 13, 14})
        .allow(7, 1)
        .allow(8, 1)
        .allow(15, 1)
        .allow(16, 1)
        .build();
}

// bad 5-vertex 0: bad (5,4,3)-triangle (0,1,2) and a 4-face (0,5,7,6) whose
// diagonal 7 is a 3-vertex; the diagonal pair 5,6 of the 4-face is
// identified and 7 is recolored
Configuration entry_l27() {
    return Builder("L2.7-identification", "L2.7",
                   "bad-structure 5-vertex on a 4-face with a 3-vertex diagonal; the other "
                   "diagonal pair shares one color",
                   14)
        .e(0, 1)
        .e(0, 2)
        .e(1, 2)
        .e(1, 3)
        .e(1, 4)
        .e(3, 4)
        .e(0, 5)
        .e(0, 6)
        .e(5, 7)
        .e(6, 7)
        .e(7, 8)
        .e(0, 9)
        .e(2, 10)
        .e(3, 11)
        .e(3, 12)
        .e(4, 13)
        .core({0, 1, 2, 3, 4})
        .recolor({7})
        .equal(5, 6)
        .build();
}

// 4-vertex 0 on consecutive 4-faces (0,1,5,2) and (0,2,6,3) whose shared
// corner 2 and far mid 6 are 3-vertices; the outer corners 1,3 take one
// color, as after identifying them with 2
Configuration entry_l291() {
    return Builder("L2.9-1", "L2.9(1)",
                   "4-vertex on two consecutive 4-faces meeting in a 3-vertex, the second "
                   "face carrying a 3-vertex mid",
                   8)
        .e(0, 1)
        .e(0, 2)
        .e(0, 3)
        .e(0, 4)
        .e(1, 5)
        .e(5, 2)
        .e(2, 6)
        .e(6, 3)
        .e(6, 7)
        .recolor({0, 2, 6})
        .equal(1, 3)
        .allow(1, 1)
        .allow(3, 1)
        .allow(5, 1)
        .build();
}

// (5,4,3,4)-face (0,1,2,3) at a poor 5-vertex 0, both 4-corners on
// (3,4,4,4)-faces through 2's third neighbor 4; the independent quadruple
// 0,2,5,6 around the recolored vertices is identified
Configuration entry_l2104() {
    return Builder("L2.10-4", "L2.10(4)",
                   "(5,4,3,4)-face at a poor 5-vertex whose 4-corners both lie on "
                   "(3,4,4,4)-faces",
                   10)
        .e(0, 1)
        .e(1, 2)
        .e(2, 3)
        .e(3, 0)
        .e(1, 5)
        .e(5, 4)
        .e(2, 4)
        .e(3, 6)
        .e(6, 4)
        .e(1, 7)
        .e(3, 8)
        .e(4, 9)
        .recolor({1, 3, 4})
        .equal(0, 2)
        .equal(2, 5)
        .equal(5, 6)
        .build();
}

// poor 5-vertex 0, corners 1..5 and mids 6..10; 3-vertices at corners 1,3
// and mid 6, a 4-vertex at corner 5. The center and the 4-corner are
// deleted; mids and corners across them are identified.
Configuration entry_l2105() {
    return Builder("L2.10-5", "L2.10(5)",
                   "poor 5-vertex with 3-vertices at two corners and a mid, and a 4-vertex "
                   "corner",
                   13)
        .e(0, 1)
        .e(0, 2)
        .e(0, 3)
        .e(0, 4)
        .e(0, 5)
        .e(1, 6)
        .e(6, 2)
        .e(2, 7)
        .e(7, 3)
        .e(3, 8)
        .e(8, 4)
        .e(4, 9)
        .e(9, 5)
        .e(5, 10)
        .e(10, 1)
        .e(6, 11)
        .e(5, 12)
        .core({0, 5})
        .recolor({1, 3, 6})
        .equal(2, 4)
        .equal(9, 10)
        .build();
}

// poor 4-vertex 0 inside the (5,3,4,4)-face context: opposite corners are a
// 3-vertex 1 and a 4-vertex 3, contradicting the degree claims the argument
// chains through. Mids and far corners are identified in opposite pairs.
Configuration entry_l2106() {
    return Builder("L2.10-6", "L2.10(6)",
                   "(5,3,4,4)-face whose poor 4-vertex shares a (3,4,4,4)-face with the other "
                   "poor corner",
                   10)
        .e(0, 1) // center and its corners 1..4
        .e(0, 2)
        .e(0, 3)
        .e(0, 4)
        .e(5, 1) // mids 5..8 between consecutive corners
        .e(5, 2)
        .e(6, 2)
        .e(6, 3)
        .e(7, 3)
        .e(7, 4)
        .e(8, 4)
        .e(8, 1)
        .e(3, 9) // fourth neighbor of the 4-corner
        .recolor({0, 1, 3})
        .equal(5, 6)
        .equal(2, 4)
        .equal(7, 8)
        .allow(5, 1)
        .allow(6, 1)
        .allow(7, 1)
        .allow(8, 1)
        .allow(2, 1)
        .allow(4, 1)
        .build();
}

} // namespace

std::vector<Configuration> catalog() {
    std::vector<Configuration> out;
    out.push_back(entry_l231());
    out.push_back(entry_l232_334());
    out.push_back(entry_l232_333());
    out.push_back(entry_l233());
    out.push_back(entry_l244());
    out.push_back(entry_l251());
    out.push_back(entry_l27());
    out.push_back(entry_l291());
    out.push_back(entry_l2104());
    out.push_back(entry_l2105());
    out.push_back(entry_l2106());
    return out;
}

Configuration catalog_entry(const std::string& name) {
    for (auto& c : catalog())
        if (c.name == name) return c;
    if (name == "L2.3-2-333-degraded") return falsified_333_variant();
    throw std::invalid_argument("no catalog entry named " + name);
}

Configuration falsified_333_variant() {
    Configuration c = entry_l232_333();
    c.name = "L2.3-2-333-degraded";
    c.note = "negative control: the (3,3,3)-triangle with every allowance forced to zero";
    std::fill(c.allowance.begin(), c.allowance.end(), 0);
    return c;
}

namespace {

bool in_F3(const RootedPlaneGraph& g, int f) {
    return g.base().face(f).degree() == 3 && g.in_F(f);
}
bool in_F4(const RootedPlaneGraph& g, int f) {
    return g.base().face(f).degree() == 4 && g.base().face(f).is_simple() && g.in_F(f);
}

std::vector<int> face_profile(const PlaneGraph& g, int f) {
    std::vector<int> d;
    for (int v : g.face(f).walk) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> distinct_faces_at(const PlaneGraph& g, int v) {
    std::vector<int> out;
    for (int f : g.faces_at(v))
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    return out;
}

// other vertices of a simple 4-face, in walk order after v
std::array<int, 3> face4_others(const PlaneGraph& g, int f, int v) {
    const auto& w = g.face(f).walk;
    int p = 0;
    while (w[p] != v) ++p;
    return {w[(p + 1) % 4], w[(p + 2) % 4], w[(p + 3) % 4]};
}

} // namespace

std::vector<PatternHit> scan_graph(const RootedPlaneGraph& g, const RoleTags& roles) {
    const auto& base = g.base();
    int n = base.vertex_count();
    std::vector<PatternHit> hits;
    auto add = [&](const char* name, std::vector<int> vs, std::string detail) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        hits.push_back({name, std::move(vs), std::move(detail)});
    };

    // L2.3-1: interior 3-vertex with two interior 3-neighbors
    for (int v = 0; v < n; ++v) {
        if (!g.interior(v) || base.degree(v) != 3) continue;
        std::vector<int> i3;
        for (int w : base.rotation(v))
            if (g.interior(w) && base.degree(w) == 3) i3.push_back(w);
        for (size_t i = 0; i < i3.size(); ++i)
            for (size_t j = i + 1; j < i3.size(); ++j)
                add("L2.3-1", {v, i3[i], i3[j]}, "");
    }

    // L2.3-2: any interior-drawn (3,3,4-)-triangle
    for (int f = 0; f < base.face_count(); ++f) {
        if (g.is_outer(f) || base.face(f).degree() != 3) continue;
        auto p = face_profile(base, f);
        if (p[0] == 3 && p[1] == 3 && p[2] <= 4)
            add("L2.3-2", base.face(f).boundary,
                "touches C0 in " + std::to_string(g.c0_incidence(f)) + " vertices");
    }

    // L2.3-3: 4-vertex with exactly one triangle, a (3,4,4) in F3, and an
    // interior 3-neighbor off that triangle
    for (int v = 0; v < n; ++v) {
        if (!g.interior(v) || base.degree(v) != 4) continue;
        std::vector<int> tris;
        for (int f : distinct_faces_at(base, v))
            if (in_F3(g, f)) tris.push_back(f);
        if (tris.size() != 1 || face_profile(base, tris[0]) != std::vector<int>{3, 4, 4}) continue;
        for (int w : base.rotation(v))
            if (!base.face(tris[0]).contains(w) && g.interior(w) && base.degree(w) == 3)
                add("L2.3-3", {v, w}, "");
    }

    // L2.4-4: 5-vertex on a bad (3,4,5)-triangle and a (4,4,5)-triangle with
    // both 4-vertices bad
    for (int v = 0; v < n; ++v) {
        if (!g.interior(v) || base.degree(v) != 5) continue;
        for (int f1 : distinct_faces_at(base, v)) {
            if (!in_F3(g, f1) || !roles.bad_face[f1]) continue;
            if (face_profile(base, f1) != std::vector<int>{3, 4, 5}) continue;
            for (int f3 : distinct_faces_at(base, v)) {
                if (f3 == f1 || !in_F3(g, f3)) continue;
                if (face_profile(base, f3) != std::vector<int>{4, 4, 5}) continue;
                bool both_bad = true;
                for (int w : base.face(f3).boundary)
                    if (base.degree(w) == 4 && !roles.bad4[w]) both_bad = false;
                if (both_bad) {
                    auto vs = base.face(f1).boundary;
                    for (int w : base.face(f3).boundary) vs.push_back(w);
                    add("L2.4-4", vs, "");
                }
            }
        }
    }

    // L2.5-1: (3,5+,5+)-triangle in F3 with three weak vertices
    for (int f = 0; f < base.face_count(); ++f) {
        if (!in_F3(g, f)) continue;
        auto p = face_profile(base, f);
        if (!(p[0] == 3 && p[1] >= 5)) continue;
        bool all_weak = true;
        for (int v : base.face(f).boundary) {
            int d = base.degree(v);
            bool weak = d == 3 ? roles.weak_on(g, v, f) : roles.vertex_weak(v);
            if (!weak) all_weak = false;
        }
        if (all_weak) add("L2.5-1", base.face(f).boundary, "");
    }

    // L2.7: bad-structure vertex on a 4-face whose diagonal is a 3-vertex
    for (int v = 0; v < n; ++v) {
        if (!g.interior(v)) continue;
        bool premise = roles.bad4[v];
        if (!premise && base.degree(v) == 5) {
            for (int f : distinct_faces_at(base, v)) {
                if (!in_F3(g, f)) continue;
                auto p = face_profile(base, f);
                if ((roles.bad_face[f] && p == std::vector<int>{3, 4, 5}) ||
                    p == std::vector<int>{3, 3, 5})
                    premise = true;
            }
        }
        if (!premise) continue;
        for (int f : distinct_faces_at(base, v)) {
            if (!in_F4(g, f)) continue;
            int diag = face4_others(base, f, v)[1];
            if (base.degree(diag) == 3) add("L2.7", {v, diag}, "");
        }
    }

    // L2.9-1: 4-face at a 4-vertex with a corner-mid pair of 3-vertices whose
    // flanking face is not a 6+-face
    for (int v = 0; v < n; ++v) {
        if (!g.interior(v) || base.degree(v) != 4) continue;
        for (int f : distinct_faces_at(base, v)) {
            if (!in_F4(g, f)) continue;
            auto [a, mid, b] = face4_others(base, f, v);
            for (int corner : {a, b}) {
                if (base.degree(corner) != 3 || base.degree(mid) != 3) continue;
                int f1 = base.face_of_dart(v, corner), f2 = base.face_of_dart(corner, v);
                int flank = f1 == f ? f2 : f1;
                if (base.face(flank).degree() < 6 && !g.is_outer(flank))
                    add("L2.9-1", {v, corner, mid}, "");
            }
        }
    }

    // poor-5 patterns
    for (int v = 0; v < n; ++v) {
        if (!g.interior(v) || base.degree(v) != 5 || !roles.poor[v]) continue;
        const auto& rot = base.rotation(v);
        std::array<int, 5> mid{};
        bool simple = true;
        for (int i = 0; i < 5; ++i) {
            int f = base.face_of_dart(v, rot[i]);
            if (!in_F4(g, f)) {
                simple = false;
                break;
            }
            mid[i] = face4_others(base, f, v)[1];
        }
        if (!simple) continue;
        auto in_q4 = [&](int u) {
            return std::binary_search(roles.q4[v].begin(), roles.q4[v].end(), u);
        };
        for (int i = 0; i < 5; ++i) {
            int c1 = rot[i], m = mid[i], c2 = rot[(i + 1) % 5];
            // L2.10-4: (5,4,3,4)-face with both corners in Q4
            if (base.degree(m) == 3 && base.degree(c1) == 4 && base.degree(c2) == 4 &&
                in_q4(c1) && in_q4(c2))
                add("L2.10-4", {v, c1, m, c2}, "");
            // L2.10-6: (5,3,4,4)-face, both 4s poor, far corner in Q4
            if (base.degree(c1) == 3 && base.degree(m) == 4 && base.degree(c2) == 4 &&
                roles.poor[m] && roles.poor[c2] && in_q4(c2))
                add("L2.10-6", {v, c1, m, c2}, "");
            if (base.degree(c2) == 3 && base.degree(m) == 4 && base.degree(c1) == 4 &&
                roles.poor[m] && roles.poor[c1] && in_q4(c1))
                add("L2.10-6", {v, c2, m, c1}, "");
            // L2.10-5: 3-vertices at corner i, mid i, corner i+2 and a
            // 4--vertex at another corner
            if (base.degree(c1) == 3 && base.degree(m) == 3 &&
                base.degree(rot[(i + 2) % 5]) == 3) {
                for (int j = 0; j < 5; ++j) {
                    if (j == i || j == (i + 2) % 5) continue;
                    if (base.degree(rot[j]) <= 4)
                        add("L2.10-5", {v, c1, m, rot[(i + 2) % 5], rot[j]}, "");
                }
            }
        }
    }

    std::sort(hits.begin(), hits.end(), [](const PatternHit& x, const PatternHit& y) {
        if (x.name != y.name) return x.name < y.name;
        return x.vertices < y.vertices;
    });
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](const PatternHit& x, const PatternHit& y) {
                               return x.name == y.name && x.vertices == y.vertices;
                           }),
               hits.end());
    return hits;
}

std::string write_configuration(const Configuration& cfg) {
    std::ostringstream out;
    out << "config " << cfg.name << "\n";
    out << "anchor " << cfg.anchor << "\n";
    out << "note " << cfg.note << "\n";
    out << "spec " << cfg.spec.str() << "\n";
    out << "vertices " << cfg.graph.n << "\n";
    out << "edges";
    for (int v = 0; v < cfg.graph.n; ++v)
        for (int w : cfg.graph.adj[v])
            if (v < w) out << " " << (v + 1) << "-" << (w + 1);
    out << "\n";
    out << "core";
    for (int v : cfg.core) out << " " << (v + 1);
    out << "\n";
    out << "recolor";
    for (int v : cfg.recolorable) out << " " << (v + 1);
    out << "\n";
    out << "allow";
    for (int v = 0; v < cfg.graph.n; ++v)
        if (cfg.allowance[v] != 0) out << " " << (v + 1) << ":" << cfg.allowance[v];
    out << "\n";
    out << "equal";
    for (auto [a, b] : cfg.equalities) out << " " << (a + 1) << "=" << (b + 1);
    out << "\n";
    out << "end\n";
    return out.str();
}

std::string write_catalog(const std::vector<Configuration>& cfgs) {
    std::string out;
    for (size_t i = 0; i < cfgs.size(); ++i) {
        if (i) out += "\n";
        out += write_configuration(cfgs[i]);
    }
    return out;
}

std::vector<Configuration> parse_catalog(const std::string& text) {
    std::istringstream in(text);
    std::vector<Configuration> out;
    std::string line;
    Configuration cur;
    bool open = false;
    auto fail = [](const std::string& m) { throw std::invalid_argument("catalog parse: " + m); };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "config") {
            if (open) fail("nested config block");
            cur = Configuration{};
            ls >> std::ws;
            std::getline(ls, cur.name);
            open = true;
        } else if (!open) {
            fail("content outside a config block");
        } else if (kw == "anchor") {
            ls >> std::ws;
            std::getline(ls, cur.anchor);
        } else if (kw == "note") {
            ls >> std::ws;
            std::getline(ls, cur.note);
        } else if (kw == "spec") {
            std::string s;
            ls >> s;
            cur.spec = ColorSpec::parse(s);
        } else if (kw == "vertices") {
            int n = 0;
            ls >> n;
            if (n <= 0) fail("bad vertex count");
            cur.graph = AbstractGraph(n);
            cur.allowance.assign(n, 0);
        } else if (kw == "edges") {
            std::string tok;
            while (ls >> tok) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) fail("bad edge " + tok);
                cur.graph.add_edge(std::stoi(tok.substr(0, dash)) - 1,
                                   std::stoi(tok.substr(dash + 1)) - 1);
            }
        } else if (kw == "core") {
            int v;
            while (ls >> v) cur.core.push_back(v - 1);
        } else if (kw == "recolor") {
            int v;
            while (ls >> v) cur.recolorable.push_back(v - 1);
        } else if (kw == "allow") {
            std::string tok;
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) fail("bad allowance " + tok);
                cur.allowance[std::stoi(tok.substr(0, colon)) - 1] =
                    std::stoi(tok.substr(colon + 1));
            }
        } else if (kw == "equal") {
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) fail("bad equality " + tok);
                cur.equalities.emplace_back(std::stoi(tok.substr(0, eq)) - 1,
                                            std::stoi(tok.substr(eq + 1)) - 1);
            }
        } else if (kw == "end") {
            cur.check(false);
            out.push_back(std::move(cur));
            open = false;
        } else {
            fail("unknown keyword " + kw);
        }
    }
    if (open) fail("unterminated config block");
    return out;
}

} // namespace pg

#include "pg/coloring.hpp"

#include "pg/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace pg {

ColorSpec ColorSpec::parse(const std::string& text) {
    ColorSpec spec;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        spec.caps.push_back(std::stoi(tok));
    if (spec.caps.empty()) throw std::invalid_argument("empty color spec");
    for (int c : spec.caps)
        if (c < 0) throw std::invalid_argument("negative defect cap");
    return spec;
}

std::string ColorSpec::str() const {
    std::string s;
    for (size_t i = 0; i < caps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(caps[i]);
    }
    return s;
}

bool Coloring::total() const {
    return std::all_of(color.begin(), color.end(), [](int c) { return c != 0; });
}

ValidationResult validate(const AbstractGraph& g, const ColorSpec& spec, const Coloring& c,
                          bool total) {
    if (static_cast<int>(c.color.size()) != g.n)
        throw std::invalid_argument("coloring size mismatch");
    for (int v = 0; v < g.n; ++v) {
        int col = c.color[v];
        if (col < 0 || col > spec.k())
            throw std::out_of_range("color out of range at vertex " + std::to_string(v + 1));
        if (total && col == 0)
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is uncolored");
    }
    for (int v = 0; v < g.n; ++v) {
        int col = c.color[v];
        if (col == 0) continue;
        int defect = 0;
        for (int w : g.adj[v]) defect += c.color[w] == col;
        if (defect > spec.cap(col)) {
            ValidationResult r;
            r.violation = ColorViolation{v, defect, spec.cap(col)};
            return r;
        }
    }
    return {};
}

std::optional<Coloring> solve(const AbstractGraph& g, const ColorSpec& spec, const Coloring& fixed,
                              const std::vector<unsigned>& forbidden) {
    const int n = g.n;
    const int k = spec.k();
    Coloring cur = fixed;
    std::vector<int> defect(n, 0);

    auto count_defect = [&](int v) {
        int d = 0;
        for (int w : g.adj[v]) d += cur.color[w] != 0 && cur.color[w] == cur.color[v];
        return d;
    };
    for (int v = 0; v < n; ++v)
        if (cur.colored(v)) defect[v] = count_defect(v);

    // assigning color c to v keeps things valid iff v's own defect fits and
    // every same-colored neighbor still has room
    auto fits = [&](int v, int c) {
        if (!forbidden.empty() && (forbidden[v] >> (c - 1)) & 1u) return false;
        int d = 0;
        for (int w : g.adj[v])
            if (cur.color[w] == c) {
                if (defect[w] + 1 > spec.cap(c)) return false;
                ++d;
            }
        return d <= spec.cap(c);
    };
    auto place = [&](int v, int c) {
        cur.color[v] = c;
        int d = 0;
        for (int w : g.adj[v])
            if (cur.color[w] == c) {
                ++defect[w];
                ++d;
            }
        defect[v] = d;
    };
    auto remove = [&](int v) {
        int c = cur.color[v];
        for (int w : g.adj[v])
            if (cur.color[w] == c) --defect[w];
        cur.color[v] = 0;
        defect[v] = 0;
    };

    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (!cur.colored(v)) order.push_back(v);

    // fixed part must already be internally consistent
    for (int v = 0; v < n; ++v)
        if (cur.colored(v) && defect[v] > spec.cap(cur.color[v])) return std::nullopt;

    int at = 0;
    std::vector<int> tried(order.size(), 0);
    while (true) {
        if (at == static_cast<int>(order.size())) return cur;
        int v = order[at];
        int c = tried[at] + 1;
        bool placed = false;
        for (; c <= k; ++c)
            if (fits(v, c)) {
                place(v, c);
                tried[at] = c;
                ++at;
                placed = true;
                break;
            }
        if (!placed) {
            tried[at] = 0;
            if (at == 0) return std::nullopt;
            --at;
            remove(order[at]);
        }
    }
}

std::optional<Coloring> superextend(const RootedPlaneGraph& g, const ColorSpec& spec,
                                    const Coloring& c0_coloring) {
    const auto& base = g.base();
    int n = base.vertex_count();
    if (static_cast<int>(c0_coloring.color.size()) != n)
        throw std::invalid_argument("coloring size mismatch");
    for (int v = 0; v < n; ++v) {
        bool want = g.on_c0(v);
        if (want != c0_coloring.colored(v))
            throw InvalidPrecoloring("precoloring must cover exactly the C0 vertices");
        if (c0_coloring.color[v] < 0 || c0_coloring.color[v] > spec.k())
            throw InvalidPrecoloring("precoloring color out of range");
    }
    // valid on the subgraph induced by C0 alone
    AbstractGraph induced(n);
    for (int v = 0; v < n; ++v)
        if (g.on_c0(v))
            for (int w : base.rotation(v))
                if (g.on_c0(w) && v < w) induced.add_edge(v, w);
    if (!validate(induced, spec, c0_coloring, false).valid())
        throw InvalidPrecoloring("precoloring is not valid on G[C0]");

    // hard constraint: off-C0 vertices avoid all colors of their C0 neighbors
    std::vector<unsigned> forbidden(n, 0);
    for (int v = 0; v < n; ++v) {
        if (g.on_c0(v)) continue;
        for (int w : base.rotation(v))
            if (g.on_c0(w)) forbidden[v] |= 1u << (c0_coloring.color[w] - 1);
    }
    return solve(base.abstract(), spec, c0_coloring, forbidden);
}

SuperextendReport verify_superextendability(const RootedPlaneGraph& g, const ColorSpec& spec) {
    auto family = check_family_membership(g.base());
    if (!family.in_family())
        throw NotInFamily("graph is outside the family: " + family.violation->describe());
    int len = g.c0_length();
    if (len != 3 && len != 7)
        throw BadC0Length("C0 must be a triangle or a 7-cycle, got length " + std::to_string(len));

    SuperextendReport report;
    report.c0_has_chords = !g.c0_chords().empty();
    const auto& c0 = g.outer_cycle();
    int n = g.base().vertex_count();
    int k = spec.k();

    AbstractGraph induced(n);
    for (int v : c0)
        for (int w : g.base().rotation(v))
            if (g.on_c0(w) && v < w) induced.add_edge(v, w);

    std::vector<int> assign(len, 1);
    while (true) {
        Coloring pre(n);
        for (int i = 0; i < len; ++i) pre.color[c0[i]] = assign[i];
        if (validate(induced, spec, pre, false).valid()) {
            ++report.precolorings_tried;
            if (!superextend(g, spec, pre).has_value()) {
                report.ok = false;
                if (!report.failing_precoloring) report.failing_precoloring = pre;
            }
        }
        int i = len - 1;
        while (i >= 0 && assign[i] == k) {
            assign[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++assign[i];
    }
    return report;
}

} // namespace pg

#include "pg/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pg {

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    std::vector<int> best, cur(k);
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < k; ++s) {
            for (int t = 0; t < k; ++t)
                cur[t] = dir == 0 ? cycle[(s + t) % k] : cycle[(s + k - t) % k];
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

std::vector<std::vector<int>> find_cycles_up_to(const AbstractGraph& g, int max_len) {
    if (max_len < 3 || max_len > 8) throw std::invalid_argument("cycle length bound must be in [3,8]");
    std::set<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);

    // paths start at their least vertex; all later vertices are larger
    auto dfs = [&](auto&& self, int start, int v) -> void {
        if (static_cast<int>(path.size()) >= 3 && g.has_edge(v, start))
            out.insert(canonical_cycle(path));
        if (static_cast<int>(path.size()) == max_len) return;
        for (int w : g.adj[v]) {
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < g.n; ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }

    std::vector<std::vector<int>> res(out.begin(), out.end());
    std::stable_sort(res.begin(), res.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return res;
}

namespace {

void require_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    if (k < 3) throw GraphError(GraphErrorKind::NotACycle, "cycle needs at least 3 vertices");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != k)
        throw GraphError(GraphErrorKind::NotACycle, "repeated vertex in cycle");
    for (int i = 0; i < k; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % k];
        if (u < 0 || u >= g.vertex_count() || !g.has_edge(u, v))
            throw GraphError(GraphErrorKind::NotACycle, "sequence is not a cycle of the graph");
    }
}

} // namespace

bool is_separating(const PlaneGraph& g, const std::vector<int>& cycle) {
    require_cycle(g, cycle);
    int k = static_cast<int>(cycle.size());
    int n = g.vertex_count();
    std::vector<int> cyc_pos(n, -1);
    for (int i = 0; i < k; ++i) cyc_pos[cycle[i]] = i;

    // side of each off-cycle vertex adjacent to the cycle: walking clockwise
    // in rot(c) from the cycle-successor of c, neighbors seen before the
    // cycle-predecessor are on one side, the rest on the other
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (cyc_pos[v] != -1 || comp[v] != -1) continue;
        comp[v] = ncomp;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.rotation(u))
                if (cyc_pos[w] == -1 && comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    if (ncomp < 2) {
        if (ncomp == 0) return false; // no vertices off the cycle at all
        // one component: still need to know if it has neighbors on both sides
    }

    bool side_seen[2] = {false, false};
    std::vector<char> comp_side_seen(ncomp, 0);
    for (int i = 0; i < k; ++i) {
        int c = cycle[i];
        int succ = cycle[(i + 1) % k];
        int pred = cycle[(i + k - 1) % k];
        const auto& rot = g.rotation(c);
        int d = static_cast<int>(rot.size());
        int at = 0;
        while (rot[at] != succ) ++at;
        int side = 0; // side 0: strictly between succ and pred clockwise
        for (int step = 1; step < d; ++step) {
            int w = rot[(at + step) % d];
            if (w == pred) {
                side = 1;
                continue;
            }
            if (cyc_pos[w] != -1) continue; // chord
            side_seen[side] = true;
            (void)comp_side_seen;
        }
    }
    return side_seen[0] && side_seen[1];
}

std::vector<CycleWitness> cycles_up_to(const PlaneGraph& g, int max_len) {
    auto raw = find_cycles_up_to(g.abstract(), max_len);
    std::vector<CycleWitness> out;
    out.reserve(raw.size());
    for (auto& c : raw) {
        CycleWitness w;
        w.facial = g.find_face(c) != -1;
        w.separating = is_separating(g, c);
        w.vertices = std::move(c);
        out.push_back(std::move(w));
    }
    return out;
}

std::string FamilyViolation::describe() const {
    auto seq = [](const std::vector<int>& c) {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i] + 1);
        }
        return s + ")";
    };
    if (kind == ViolationKind::FiveCycle) return "5-cycle " + seq(cycle);
    return "adjacent triangles " + seq(cycle) + " and " + seq(second_cycle);
}

FamilyVerdict check_family_membership(const AbstractGraph& g) {
    FamilyVerdict verdict;
    auto cycles = find_cycles_up_to(g, 5);
    std::vector<std::vector<int>> triangles;
    for (const auto& c : cycles) {
        if (c.size() == 5) {
            verdict.violation = FamilyViolation{ViolationKind::FiveCycle, c, {}};
            return verdict;
        }
        if (c.size() == 3) triangles.push_back(c);
    }
    auto share_edge = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int i = 0; i < 3; ++i) {
            int u = a[i], v = a[(i + 1) % 3];
            for (int j = 0; j < 3; ++j) {
                int x = b[j], y = b[(j + 1) % 3];
                if ((u == x && v == y) || (u == y && v == x)) return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < triangles.size(); ++i)
        for (size_t j = i + 1; j < triangles.size(); ++j)
            if (share_edge(triangles[i], triangles[j])) {
                verdict.violation =
                    FamilyViolation{ViolationKind::AdjacentTriangles, triangles[i], triangles[j]};
                return verdict;
            }
    return verdict;
}

FamilyVerdict check_family_membership(const PlaneGraph& g) {
    return check_family_membership(g.abstract());
}

} // namespace pg

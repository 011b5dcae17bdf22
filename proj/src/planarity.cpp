#include "pg/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace pg {

namespace {

using Edge = std::pair<int, int>;

Edge mk(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

struct Fragment {
    std::vector<int> attachments; // embedded vertices, ascending
    std::vector<int> inner;       // unembedded vertices, ascending (empty for a chord)
    Edge chord{-1, -1};
};

// Embeds one biconnected block (vertex ids are global). Faces are kept as
// consistently oriented simple cycles; a successful run returns them.
struct BlockEmbedder {
    const AbstractGraph& g;
    std::vector<int> verts;
    std::set<Edge> block_edges;
    std::set<Edge> embedded;
    std::vector<char> in_block;
    std::vector<char> is_embedded_vertex;
    std::vector<std::vector<int>> faces;

    BlockEmbedder(const AbstractGraph& g_, std::vector<int> verts_, std::set<Edge> edges_)
        : g(g_), verts(std::move(verts_)), block_edges(std::move(edges_)),
          in_block(g_.n, 0), is_embedded_vertex(g_.n, 0) {
        for (int v : verts) in_block[v] = 1;
    }

    std::vector<int> find_cycle() {
        std::vector<int> parent(g.n, -2);
        int start = verts[0];
        parent[start] = -1;
        std::vector<int> order{start};
        for (size_t i = 0; i < order.size(); ++i) {
            int u = order[i];
            for (int w : g.adj[u]) {
                if (!in_block[u] || !block_edges.count(mk(u, w))) continue;
                if (parent[w] == -2) {
                    parent[w] = u;
                    order.push_back(w);
                } else if (w != parent[u]) {
                    // back edge u-w closes a cycle
                    std::vector<int> pu, pw;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    std::set<int> su(pu.begin(), pu.end());
                    int meet = -1;
                    for (int x : pw)
                        if (su.count(x)) {
                            meet = x;
                            break;
                        }
                    std::vector<int> cyc;
                    for (int x = u; x != meet; x = parent[x]) cyc.push_back(x);
                    cyc.push_back(meet);
                    std::vector<int> tail;
                    for (int x = w; x != meet; x = parent[x]) tail.push_back(x);
                    std::reverse(tail.begin(), tail.end());
                    cyc.insert(cyc.end(), tail.begin(), tail.end());
                    return cyc;
                }
            }
        }
        return {};
    }

    std::vector<Fragment> fragments() {
        std::vector<Fragment> out;
        // chords
        for (const auto& e : block_edges)
            if (!embedded.count(e) && is_embedded_vertex[e.first] && is_embedded_vertex[e.second]) {
                Fragment f;
                f.attachments = {e.first, e.second};
                f.chord = e;
                out.push_back(std::move(f));
            }
        // components of the unembedded part
        std::vector<char> seen(g.n, 0);
        for (int v : verts) {
            if (is_embedded_vertex[v] || seen[v]) continue;
            Fragment f;
            std::set<int> att;
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                f.inner.push_back(u);
                for (int w : g.adj[u]) {
                    if (!block_edges.count(mk(u, w))) continue;
                    if (is_embedded_vertex[w])
                        att.insert(w);
                    else if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(f.inner.begin(), f.inner.end());
            f.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) {
            if (a.attachments != b.attachments) return a.attachments < b.attachments;
            return a.inner < b.inner;
        });
        return out;
    }

    std::vector<int> admissible_faces(const Fragment& f) {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
            std::set<int> fv(faces[i].begin(), faces[i].end());
            bool ok = true;
            for (int a : f.attachments)
                if (!fv.count(a)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(i);
        }
        return out;
    }

    // canonical path through a fragment between its two least attachments
    std::vector<int> fragment_path(const Fragment& f) {
        if (f.chord.first >= 0) return {f.chord.first, f.chord.second};
        int a = f.attachments[0], b = f.attachments[1];
        std::map<int, int> par;
        std::queue<int> q;
        std::set<int> inner(f.inner.begin(), f.inner.end());
        q.push(a);
        par[a] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.adj[u]) {
                if (!block_edges.count(mk(u, w))) continue;
                if (u == a && !inner.count(w)) continue; // leave a into the fragment
                if (w == b) {
                    std::vector<int> path{b};
                    for (int x = u; x != -1; x = par.count(x) ? par[x] : -1) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (inner.count(w) && !par.count(w)) {
                    par[w] = u;
                    q.push(w);
                }
            }
        }
        return {}; // unreachable in a biconnected block
    }

    bool embed_path_and_recurse(int face_idx, const std::vector<int>& path) {
        std::vector<int> walk = faces[face_idx];
        int a = path.front(), b = path.back();
        int k = static_cast<int>(walk.size());
        int pa = -1, pb = -1;
        for (int i = 0; i < k; ++i) {
            if (walk[i] == a) pa = i;
            if (walk[i] == b) pb = i;
        }
        std::vector<int> arc_ab, arc_ba; // a..b and b..a along the walk, endpoints included
        for (int i = pa;; i = (i + 1) % k) {
            arc_ab.push_back(walk[i]);
            if (i == pb) break;
        }
        for (int i = pb;; i = (i + 1) % k) {
            arc_ba.push_back(walk[i]);
            if (i == pa) break;
        }
        // face 1: a -> path -> b -> (arc b..a minus endpoints) -> a
        std::vector<int> f1(path.begin(), path.end());
        f1.insert(f1.end(), arc_ba.begin() + 1, arc_ba.end() - 1);
        // face 2: a -> (arc a..b) -> b -> reversed path interior -> a
        std::vector<int> f2(arc_ab.begin(), arc_ab.end() - 1);
        std::vector<int> rp(path.rbegin(), path.rend());
        f2.insert(f2.end(), rp.begin(), rp.end() - 1);

        std::vector<int> saved = std::move(faces[face_idx]);
        faces[face_idx] = std::move(f1);
        faces.push_back(std::move(f2));
        for (size_t i = 0; i + 1 < path.size(); ++i) embedded.insert(mk(path[i], path[i + 1]));
        std::vector<int> newly;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            newly.push_back(path[i]);
            is_embedded_vertex[path[i]] = 1;
        }

        if (run()) return true;

        for (int v : newly) is_embedded_vertex[v] = 0;
        for (size_t i = 0; i + 1 < path.size(); ++i) embedded.erase(mk(path[i], path[i + 1]));
        faces.pop_back();
        faces[face_idx] = std::move(saved);
        return false;
    }

    bool run() {
        if (embedded.size() == block_edges.size()) return true;
        auto frags = fragments();
        const Fragment* pick = nullptr;
        std::vector<int> pick_adm;
        for (const auto& f : frags) {
            auto adm = admissible_faces(f);
            if (adm.empty()) return false;
            if (!pick || adm.size() < pick_adm.size()) {
                pick = &f;
                pick_adm = adm;
                if (adm.size() == 1) break;
            }
        }
        auto path = fragment_path(*pick);
        if (path.empty()) return false;
        for (int fi : pick_adm)
            if (embed_path_and_recurse(fi, path)) return true;
        return false;
    }

    bool embed() {
        if (block_edges.size() == 1) {
            auto e = *block_edges.begin();
            faces.push_back({e.first, e.second});
            embedded.insert(e);
            is_embedded_vertex[e.first] = is_embedded_vertex[e.second] = 1;
            return true;
        }
        auto cyc = find_cycle();
        if (cyc.empty()) return false;
        faces.push_back(cyc);
        faces.push_back(std::vector<int>(cyc.rbegin(), cyc.rend()));
        for (size_t i = 0; i < cyc.size(); ++i) {
            embedded.insert(mk(cyc[i], cyc[(i + 1) % cyc.size()]));
            is_embedded_vertex[cyc[i]] = 1;
        }
        return run();
    }

    // rotations implied by the oriented face set: if (u,v) is followed by
    // (v,w) on a face, then u immediately follows w in v's clockwise order
    std::map<int, std::vector<int>> rotations() const {
        std::map<int, std::map<int, int>> succ; // v -> (w -> u)
        for (const auto& f : faces) {
            int k = static_cast<int>(f.size());
            for (int i = 0; i < k; ++i) {
                int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
                succ[v][w] = u;
            }
        }
        std::map<int, std::vector<int>> rot;
        for (auto& [v, nxt] : succ) {
            std::vector<int> order;
            int start = nxt.begin()->first;
            int cur = start;
            do {
                order.push_back(cur);
                cur = nxt.at(cur);
            } while (cur != start && static_cast<int>(order.size()) <= static_cast<int>(nxt.size()));
            rot[v] = order;
        }
        return rot;
    }
};

// biconnected blocks by lowpoint DFS
std::vector<std::pair<std::vector<int>, std::set<Edge>>> blocks_of(const AbstractGraph& g) {
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<Edge> stack;
    std::vector<std::pair<std::vector<int>, std::set<Edge>>> blocks;
    int counter = 0;

    std::function<void(int)> dfs = [&](int u) {
        num[u] = low[u] = counter++;
        for (int w : g.adj[u]) {
            if (num[w] == -1) {
                stack.push_back(mk(u, w));
                parent[w] = u;
                dfs(w);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= num[u]) {
                    std::set<Edge> es;
                    Edge top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        es.insert(top);
                    } while (top != mk(u, w));
                    std::set<int> vs;
                    for (const auto& e : es) {
                        vs.insert(e.first);
                        vs.insert(e.second);
                    }
                    blocks.emplace_back(std::vector<int>(vs.begin(), vs.end()), std::move(es));
                }
            } else if (w != parent[u] && num[w] < num[u]) {
                stack.push_back(mk(u, w));
                low[u] = std::min(low[u], num[w]);
            }
        }
    };
    dfs(0);
    return blocks;
}

} // namespace

std::optional<std::vector<std::vector<int>>> planar_rotation(const AbstractGraph& g) {
    if (g.n == 0 || !g.connected()) return std::nullopt;
    if (g.n >= 3 && g.edge_count() > 3 * g.n - 6) return std::nullopt;
    std::vector<std::vector<int>> rot(g.n);
    if (g.edge_count() == 0) return rot; // K1

    for (auto& [verts, edges] : blocks_of(g)) {
        BlockEmbedder be(g, verts, edges);
        if (!be.embed()) return std::nullopt;
        for (auto& [v, r] : be.rotations())
            rot[v].insert(rot[v].end(), r.begin(), r.end());
    }
    return rot;
}

} // namespace pg

#include "multicut/aux_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace multicut {

bool Matching::valid_on(const AuxGraph& g) const {
    std::set<int> seen;
    for (auto [u, v] : edges) {
        if (!g.edges.count({std::min(u, v), std::max(u, v)})) return false;
        if (!seen.insert(u).second) return false;
        if (!seen.insert(v).second) return false;
    }
    return true;
}

bool Matching::covers(int v) const {
    for (auto [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

int Matching::mate(int v) const {
    for (auto [a, b] : edges) {
        if (a == v) return b;
        if (b == v) return a;
    }
    return -1;
}

bool IndependentSet::valid_on(const AuxGraph& g) const {
    std::set<int> s(vertices.begin(), vertices.end());
    if (s.size() != vertices.size()) return false;
    for (int v : s)
        if (!g.vertices.count(v)) return false;
    for (auto& [u, v] : g.edges)
        if (s.count(u) && s.count(v)) return false;
    return true;
}

namespace {

// Blossom augmentation on a compressed 0..n-1 vertex range.
struct BlossomSolver {
    int n;
    std::vector<std::vector<int>> g;
    std::vector<int> match, parent, base;

    explicit BlossomSolver(int n_) : n(n_), g(n_), match(n_, -1) {}

    int lca(int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        std::vector<bool> used(n, false);
        parent.assign(n, -1);
        base.resize(n);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : g[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::vector<bool> in_blossom(n, false);
                    mark_path(v, cur, to, in_blossom);
                    mark_path(to, cur, v, in_blossom);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void solve() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_augmenting(v);
            while (u != -1) {
                int pv = parent[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

}  // namespace

Matching max_matching(const AuxGraph& g) {
    std::vector<int> ids(g.vertices.begin(), g.vertices.end());
    std::map<int, int> idx;
    for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);

    BlossomSolver solver(static_cast<int>(ids.size()));
    for (auto& [u, v] : g.edges) {
        solver.g[idx[u]].push_back(idx[v]);
        solver.g[idx[v]].push_back(idx[u]);
    }
    for (auto& adj : solver.g) std::sort(adj.begin(), adj.end());
    solver.solve();

    Matching m;
    for (size_t i = 0; i < ids.size(); ++i) {
        int j = solver.match[i];
        if (j > static_cast<int>(i)) m.edges.push_back({ids[i], ids[j]});
    }
    return m;
}

Matching greedy_matching(const AuxGraph& g) {
    if (g.edges.empty()) throw std::invalid_argument("greedy_matching: no edges");
    Matching m;
    std::set<int> used;
    for (auto& [u, v] : g.edges) {
        if (used.count(u) || used.count(v)) continue;
        used.insert(u);
        used.insert(v);
        m.edges.push_back({u, v});
    }
    return m;
}

IndependentSet greedy_independent_set(const AuxGraph& g) {
    IndependentSet s;
    std::set<int> removed;
    for (int v : g.vertices) {
        if (removed.count(v)) continue;
        s.vertices.push_back(v);
        removed.insert(v);
        for (auto& [a, b] : g.edges) {
            if (a == v) removed.insert(b);
            if (b == v) removed.insert(a);
        }
    }
    return s;
}

}  // namespace multicut

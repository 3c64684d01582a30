#include "multicut/packing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "multicut/aux_graph.hpp"

namespace multicut {

bool Packing::valid_on(const TreeInstance& inst) const {
    std::vector<std::set<Edge>> paths;
    for (int id : request_ids) {
        const Request* r = inst.request_by_id(id);
        if (!r) return false;
        PathView pv = inst.request_path(*r);
        paths.emplace_back(pv.edges.begin(), pv.edges.end());
    }
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j)
            for (const Edge& e : paths[i])
                if (paths[j].count(e)) return false;
    return true;
}

namespace {

struct PackingDP {
    const TreeInstance& inst;
    NodeId root;
    std::map<NodeId, NodeId> parent;
    std::map<NodeId, int> depth;
    std::vector<NodeId> bfs_order;

    struct RInfo {
        Request r;
        std::vector<NodeId> path;
        NodeId top;
    };
    std::vector<RInfo> reqs;
    std::map<NodeId, std::vector<int>> topped;  // node -> indices into reqs

    // state: (v, reserved endpoint z below v) with z = -1 for none
    std::map<std::pair<NodeId, NodeId>, long long> val;
    std::map<std::pair<NodeId, NodeId>, std::vector<int>> choice;

    explicit PackingDP(const TreeInstance& i) : inst(i) {
        root = inst.nodes().front();
        parent[root] = root;
        depth[root] = 0;
        std::deque<NodeId> q{root};
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop_front();
            bfs_order.push_back(v);
            for (NodeId w : inst.neighbors(v))
                if (!parent.count(w)) {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    q.push_back(w);
                }
        }
        for (const Request& r : inst.requests()) {
            RInfo info;
            info.r = r;
            info.path = inst.path_nodes(r.u, r.v);
            info.top = info.path.front();
            for (NodeId v : info.path)
                if (depth.at(v) < depth.at(info.top)) info.top = v;
            topped[info.top].push_back(static_cast<int>(reqs.size()));
            reqs.push_back(std::move(info));
        }
    }

    // child of v on the way down to descendant z
    NodeId child_toward(NodeId v, NodeId z) const {
        NodeId c = z;
        while (parent.at(c) != v) c = parent.at(c);
        return c;
    }

    long long solve(NodeId v, NodeId z) {
        if (z == v) z = -1;  // empty reservation below v
        auto key = std::make_pair(v, z);
        auto it = val.find(key);
        if (it != val.end()) return it->second;

        NodeId reserved_child = (z == -1) ? -1 : child_toward(v, z);
        long long base = 0;
        for (NodeId c : inst.neighbors(v)) {
            if (v != root && c == parent.at(v)) continue;
            base += solve(c, c == reserved_child ? z : -1);
        }

        // candidate requests topped at v whose reservations are free below
        AuxGraph g;
        std::map<std::pair<int, int>, int> pair_to_req;
        auto topit = topped.find(v);
        if (topit != topped.end()) {
            for (int ridx : topit->second) {
                const RInfo& info = reqs[ridx];
                std::vector<std::pair<NodeId, NodeId>> touched;  // (child, endpoint)
                bool ok = true;
                for (NodeId endpoint : {info.r.u, info.r.v}) {
                    if (endpoint == v) continue;
                    NodeId c = child_toward(v, endpoint);
                    if (c == reserved_child) { ok = false; break; }
                    if (solve(c, endpoint) != solve(c, -1)) { ok = false; break; }
                    touched.push_back({c, endpoint});
                }
                if (!ok || touched.empty()) continue;
                int u1 = touched[0].first;
                int u2 = touched.size() == 2 ? touched[1].first : -(ridx + 1);
                auto pr = std::make_pair(std::min(u1, u2), std::max(u1, u2));
                if (!pair_to_req.count(pr)) {
                    pair_to_req[pr] = ridx;
                    g.add_edge(pr.first, pr.second);
                }
            }
        }

        std::vector<int> chosen;
        long long matched = 0;
        if (g.edge_count() > 0) {
            Matching m = max_matching(g);
            matched = m.size();
            for (auto [a, b] : m.edges)
                chosen.push_back(pair_to_req.at({std::min(a, b), std::max(a, b)}));
        }
        std::sort(chosen.begin(), chosen.end());
        val[key] = base + matched;
        choice[key] = std::move(chosen);
        return val[key];
    }

    void extract(NodeId v, NodeId z, std::vector<int>& out) {
        if (z == v) z = -1;
        solve(v, z);
        auto key = std::make_pair(v, z);
        NodeId reserved_child = (z == -1) ? -1 : child_toward(v, z);
        std::map<NodeId, NodeId> child_state;
        for (int ridx : choice.at(key)) {
            out.push_back(reqs[ridx].r.id);
            for (NodeId endpoint : {reqs[ridx].r.u, reqs[ridx].r.v}) {
                if (endpoint == v) continue;
                child_state[child_toward(v, endpoint)] = endpoint;
            }
        }
        if (reserved_child != -1) child_state[reserved_child] = z;
        for (NodeId c : inst.neighbors(v)) {
            if (v != root && c == parent.at(v)) continue;
            auto cs = child_state.find(c);
            extract(c, cs == child_state.end() ? -1 : cs->second, out);
        }
    }
};

}  // namespace

Packing max_edge_disjoint_requests(const TreeInstance& inst) {
    Packing p;
    if (inst.requests().empty()) return p;
    PackingDP dp(inst);
    dp.solve(dp.root, -1);
    dp.extract(dp.root, -1, p.request_ids);
    std::sort(p.request_ids.begin(), p.request_ids.end());
    return p;
}

Packing max_edge_disjoint_requests_bruteforce(const TreeInstance& inst) {
    const auto& reqs = inst.requests();
    size_t m = reqs.size();
    if (m > 20) throw std::invalid_argument("bruteforce packing: too many requests");

    std::vector<std::set<Edge>> paths;
    for (const Request& r : reqs) {
        PathView pv = inst.request_path(r);
        paths.emplace_back(pv.edges.begin(), pv.edges.end());
    }
    std::vector<std::uint32_t> conflict(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            for (const Edge& e : paths[i])
                if (paths[j].count(e)) {
                    conflict[i] |= 1u << j;
                    break;
                }
        }

    std::uint32_t best_mask = 0;
    int best = 0;
    std::function<void(size_t, std::uint32_t, std::uint32_t, int)> rec =
        [&](size_t i, std::uint32_t taken, std::uint32_t banned, int count) {
            if (count + static_cast<int>(m - i) <= best) return;
            if (i == m) {
                if (count > best) {
                    best = count;
                    best_mask = taken;
                }
                return;
            }
            if (!(banned & (1u << i)))
                rec(i + 1, taken | (1u << i), banned | conflict[i], count + 1);
            rec(i + 1, taken, banned, count);
        };
    rec(0, 0, 0, 0);

    Packing p;
    for (size_t i = 0; i < m; ++i)
        if (best_mask & (1u << i)) p.request_ids.push_back(reqs[i].id);
    return p;
}

}  // namespace multicut

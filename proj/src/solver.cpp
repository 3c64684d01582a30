#include "multicut/solver.hpp"

#include <algorithm>
#include <functional>

namespace multicut {

bool is_multicut(const TreeInstance& inst, const std::vector<Edge>& s) {
    for (const Edge& e : s)
        if (!inst.has_edge(e)) throw std::out_of_range("unknown edge in cut");
    std::set<Edge> cut(s.begin(), s.end());
    for (const Request& r : inst.requests()) {
        PathView pv = inst.request_path(r);
        bool hit = false;
        for (const Edge& e : pv.edges)
            if (cut.count(e)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

namespace {

struct Branching {
    std::vector<Edge> edge_list;
    std::map<Edge, int> edge_index;
    std::vector<std::vector<int>> request_edges;  // per request, edge indices
    std::vector<Edge> cut;
    bool done = false;

    explicit Branching(const TreeInstance& inst) {
        edge_list = inst.edges();
        for (size_t i = 0; i < edge_list.size(); ++i)
            edge_index[edge_list[i]] = static_cast<int>(i);
        for (const Request& r : inst.requests()) {
            PathView pv = inst.request_path(r);
            std::vector<int> idxs;
            for (const Edge& e : pv.edges) idxs.push_back(edge_index.at(e));
            request_edges.push_back(std::move(idxs));
        }
    }

    bool edge_in_cut(int idx, const std::vector<bool>& in_cut) const {
        return in_cut[idx];
    }

    // greedy count of pairwise-disjoint uncut requests; lower bound on opt
    int disjoint_lower_bound(const std::vector<bool>& in_cut) const {
        std::vector<bool> used(edge_list.size(), false);
        int count = 0;
        std::vector<int> order(request_edges.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return request_edges[a].size() < request_edges[b].size();
        });
        for (int ri : order) {
            bool cutted = false, overlap = false;
            for (int e : request_edges[ri]) {
                if (in_cut[e]) { cutted = true; break; }
                if (used[e]) overlap = true;
            }
            if (cutted || overlap) continue;
            for (int e : request_edges[ri]) used[e] = true;
            count++;
        }
        return count;
    }

    bool rec(int k, std::vector<bool>& in_cut) {
        int pick = -1;
        size_t best_len = SIZE_MAX;
        for (size_t ri = 0; ri < request_edges.size(); ++ri) {
            bool cutted = false;
            for (int e : request_edges[ri])
                if (in_cut[e]) { cutted = true; break; }
            if (cutted) continue;
            if (request_edges[ri].size() < best_len) {
                best_len = request_edges[ri].size();
                pick = static_cast<int>(ri);
            }
        }
        if (pick == -1) return true;  // all requests cut
        if (k <= 0) return false;
        if (disjoint_lower_bound(in_cut) > k) return false;
        for (int e : request_edges[pick]) {
            in_cut[e] = true;
            if (rec(k - 1, in_cut)) {
                cut.push_back(edge_list[e]);
                in_cut[e] = false;
                return true;
            }
            in_cut[e] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Edge>> solve_decision(const TreeInstance& inst, int k) {
    if (k < 0) return std::nullopt;
    Branching b(inst);
    std::vector<bool> in_cut(b.edge_list.size(), false);
    if (!b.rec(k, in_cut)) return std::nullopt;
    std::sort(b.cut.begin(), b.cut.end());
    return b.cut;
}

int brute_force_opt(const TreeInstance& inst) {
    if (inst.edge_count() > 30)
        throw std::invalid_argument("instance too large for oracle");
    if (inst.requests().empty()) return 0;

    std::vector<Edge> edge_list = inst.edges();
    int ne = static_cast<int>(edge_list.size());
    std::vector<std::vector<int>> request_edges;
    std::map<Edge, int> edge_index;
    for (int i = 0; i < ne; ++i) edge_index[edge_list[i]] = i;
    for (const Request& r : inst.requests()) {
        PathView pv = inst.request_path(r);
        std::vector<int> idxs;
        for (const Edge& e : pv.edges) idxs.push_back(edge_index.at(e));
        request_edges.push_back(std::move(idxs));
    }

    auto covers_all = [&](std::uint64_t mask) {
        for (auto& redges : request_edges) {
            bool hit = false;
            for (int e : redges)
                if (mask & (1ull << e)) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    };

    for (int t = 1; t <= ne; ++t) {
        // enumerate size-t subsets
        std::vector<int> pick(t);
        std::function<bool(int, int)> enumerate = [&](int start, int depth) {
            if (depth == t) {
                std::uint64_t mask = 0;
                for (int e : pick) mask |= 1ull << e;
                return covers_all(mask);
            }
            for (int e = start; e < ne; ++e) {
                pick[depth] = e;
                if (enumerate(e + 1, depth + 1)) return true;
            }
            return false;
        };
        if (enumerate(0, 0)) return t;
    }
    return ne;
}

}  // namespace multicut

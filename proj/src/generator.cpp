#include "multicut/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace multicut {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed * 2654435769u + 1) {}
    // [0, n) without std::uniform_int_distribution (not portable)
    std::uint64_t next(std::uint64_t n) { return n == 0 ? 0 : eng() % n; }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

using PairList = std::vector<std::pair<NodeId, NodeId>>;

PairList shape_edges(TreeShape shape, int n, Rng& rng) {
    PairList edges;
    switch (shape) {
        case TreeShape::Path:
            for (int i = 1; i < n; ++i) edges.push_back({i - 1, i});
            break;
        case TreeShape::Caterpillar: {
            int spine = std::max(2, n / 2);
            for (int i = 1; i < spine; ++i) edges.push_back({i - 1, i});
            for (int i = spine; i < n; ++i)
                edges.push_back({rng.range(0, spine - 1), i});
            break;
        }
        case TreeShape::Spider: {
            int legs = std::min(n - 1, rng.range(3, 5));
            std::vector<NodeId> tips(legs, 0);
            int next_id = 1;
            while (next_id < n) {
                int leg = (next_id - 1) % legs;
                edges.push_back({tips[leg], next_id});
                tips[leg] = next_id++;
            }
            break;
        }
        case TreeShape::Random:
            for (int i = 1; i < n; ++i)
                edges.push_back({rng.range(0, i - 1), i});
            break;
    }
    return edges;
}

}  // namespace

TreeInstance gen_instance(const GenParams& params) {
    if (params.n_min < 2 || params.n_max < params.n_min || params.k_max < params.k_min)
        throw std::invalid_argument("bad generator ranges");
    Rng rng(params.seed);
    int n = rng.range(params.n_min, params.n_max);
    if (n < 2 && params.request_count > 0)
        throw std::invalid_argument("requests demanded on a tree with < 2 nodes");
    int k = rng.range(params.k_min, params.k_max);
    PairList edges = shape_edges(params.shape, n, rng);

    TreeInstance skeleton = TreeInstance::build(edges, {}, std::max(k, 0));
    PairList requests;
    std::set<std::pair<NodeId, NodeId>> used;
    int attempts = 0;
    while (static_cast<int>(requests.size()) < params.request_count &&
           attempts++ < params.request_count * 30) {
        int samples = 1 + std::min(3, std::abs(params.length_bias));
        std::pair<NodeId, NodeId> best{-1, -1};
        size_t best_len = 0;
        for (int s = 0; s < samples; ++s) {
            NodeId u = rng.range(0, n - 1), v = rng.range(0, n - 1);
            if (u == v) continue;
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            size_t len = skeleton.path_nodes(u, v).size() - 1;
            bool better = best.first == -1 ||
                          (params.length_bias > 0 ? len > best_len : len < best_len);
            if (params.length_bias == 0) better = best.first == -1;
            if (better) {
                best = key;
                best_len = len;
            }
        }
        if (best.first == -1 || used.count(best)) continue;
        used.insert(best);
        requests.push_back(best);
    }
    return TreeInstance::build(edges, requests, k);
}

namespace {

// builders emit edges/requests with symbolic ids, then a seeded relabeling
// permutes node ids so detection scan order varies across seeds
struct Sketch {
    PairList edges;
    PairList requests;
    NodeId next = 0;
    NodeId node() { return next++; }
    void edge(NodeId a, NodeId b) { edges.push_back({a, b}); }
    void request(NodeId a, NodeId b) { requests.push_back({a, b}); }

    TreeInstance finish(int k, Rng& rng) {
        std::vector<NodeId> perm(next);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = next - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.range(0, i)]);
        PairList e2, r2;
        for (auto [a, b] : edges) e2.push_back({perm[a], perm[b]});
        for (auto [a, b] : requests) r2.push_back({perm[a], perm[b]});
        return TreeInstance::build(e2, r2, k);
    }
};

TreeInstance trigger_rule0(int k, Rng& rng) {
    Sketch s;
    int len = rng.range(2, 5);
    std::vector<NodeId> path;
    for (int i = 0; i <= len; ++i) path.push_back(s.node());
    for (int i = 0; i < len; ++i) s.edge(path[i], path[i + 1]);
    int at = rng.range(0, len - 1);
    s.request(path[at], path[at + 1]);  // the unit request
    if (len >= 2 && rng.range(0, 1)) s.request(path.front(), path.back());
    return s.finish(k, rng);
}

TreeInstance trigger_rule1(int k, Rng& rng) {
    Sketch s;
    std::vector<NodeId> path;
    int gaps = rng.range(0, 1);
    for (int i = 0; i <= 2 * (k + 1) + gaps; ++i) path.push_back(s.node());
    for (size_t i = 0; i + 1 < path.size(); ++i) s.edge(path[i], path[i + 1]);
    for (int i = 0; i <= k; ++i) s.request(path[2 * i], path[2 * i + 2]);
    return s.finish(k, rng);
}

TreeInstance trigger_rule2(int k, Rng& rng) {
    Sketch s;
    int len = rng.range(2, 6);
    std::vector<NodeId> path;
    for (int i = 0; i <= len; ++i) path.push_back(s.node());
    for (int i = 0; i < len; ++i) s.edge(path[i], path[i + 1]);
    s.request(path[0], path[len]);  // single direction from leaf path[0]
    if (len >= 4 && rng.range(0, 1)) s.request(path[0], path[len - 1]);
    return s.finish(k, rng);
}

TreeInstance trigger_rule3(int k, Rng& rng) {
    // two spine nodes carrying leaf pairs; (p,u2) is included in (p,q)
    Sketch s;
    NodeId u1 = s.node(), u2 = s.node();
    NodeId p = s.node(), pp = s.node(), q = s.node(), qq = s.node();
    s.edge(u1, u2);
    for (NodeId leaf : {p, pp}) s.edge(u1, leaf);
    for (NodeId leaf : {q, qq}) s.edge(u2, leaf);
    s.request(p, pp);
    s.request(q, qq);
    s.request(p, q);
    s.request(pp, q);
    s.request(p, qq);
    s.request(p, u2);
    return s.finish(k, rng);
}

TreeInstance trigger_rule4(int k, Rng& rng) {
    // star: R = (a,b); the k+1 requests (a,t_i) pairwise meet only in e(a)
    Sketch s;
    NodeId center = s.node(), a = s.node(), b = s.node();
    s.edge(center, a);
    s.edge(center, b);
    s.request(a, b);
    for (int i = 0; i <= k; ++i) {
        NodeId t = s.node();
        s.edge(center, t);
        s.request(a, t);
        s.request(b, t);
    }
    return s.finish(k, rng);
}

TreeInstance trigger_rule5_small(int k, Rng& rng) {
    // k = 2: both pivots x,y see a full-spine wingspan dominating the
    // three endpoint-disjoint requests {(x,c),(y,c'),(d,d')}
    Sketch s;
    NodeId u1 = s.node(), u2 = s.node(), u3 = s.node();
    NodeId c = s.node(), cc = s.node();
    NodeId x = s.node(), y = s.node();
    NodeId d = s.node(), dd = s.node();
    s.edge(u1, u2);
    s.edge(u2, u3);
    for (NodeId leaf : {c, cc}) s.edge(u1, leaf);
    for (NodeId leaf : {x, y}) s.edge(u2, leaf);
    for (NodeId leaf : {d, dd}) s.edge(u3, leaf);
    s.request(c, cc);
    s.request(d, dd);
    s.request(x, c);
    s.request(x, d);
    s.request(y, cc);
    s.request(y, dd);
    return s.finish(k, rng);
}

TreeInstance trigger_rule5_bricks(int k, Rng& rng) {
    // k >= 3: staircase of k+1 mixed requests under one full wingspan;
    // staggered ends keep Common Factor silent, heavy overlap keeps the
    // packing at 3
    Sketch s;
    int m = 2 * k + 3;  // spine positions 0..m
    std::vector<NodeId> u;
    for (int i = 0; i <= m; ++i) u.push_back(s.node());
    for (int i = 0; i < m; ++i) s.edge(u[i], u[i + 1]);
    NodeId z = s.node(), zz = s.node(), y = s.node(), yy = s.node();
    s.edge(u[0], z);
    s.edge(u[0], zz);
    s.edge(u[m], y);
    s.edge(u[m], yy);
    s.request(z, zz);
    s.request(y, yy);
    std::vector<NodeId> ell, d;
    for (int i = 1; i <= k + 1; ++i) {
        NodeId leaf = s.node();
        s.edge(u[i], leaf);
        ell.push_back(leaf);
    }
    for (int i = 1; i <= k + 1; ++i) {
        NodeId leaf = s.node();
        s.edge(u[k + 1 + i], leaf);
        d.push_back(leaf);
    }
    NodeId x = s.node();
    s.edge(u[k + 1], x);
    s.request(x, z);
    s.request(x, y);
    for (int i = 1; i <= k + 1; ++i) {
        s.request(ell[i - 1], i % 2 ? z : zz);   // filler, leftward
        s.request(ell[i - 1], u[k + 1 + i]);     // brick, mixed
        s.request(d[i - 1], u[i]);               // mirror, mixed
        s.request(d[i - 1], i % 2 ? y : yy);     // filler, rightward
    }
    return s.finish(k, rng);
}

TreeInstance trigger_rule5b(int k, Rng& rng) {
    // spider: center I3-node sigma with leg A (holding x's only closest
    // R-neighbor w), a stub leg, and the caterpillar C; the k+1 crossing
    // requests leave C, so only rule (5b) sees them
    Sketch s;
    NodeId sigma = s.node();
    NodeId p1 = s.node(), p2 = s.node();
    NodeId w = s.node(), ww = s.node();
    s.edge(sigma, p1);
    s.edge(p1, p2);
    s.edge(p2, w);
    s.edge(p2, ww);
    NodeId q1 = s.node(), v = s.node(), vv = s.node();
    s.edge(sigma, q1);
    s.edge(q1, v);
    s.edge(q1, vv);
    int spine_len = 3 + (k + 1);  // c1, c2=f(x), then one node per beta, then end
    std::vector<NodeId> c;
    for (int i = 0; i < spine_len; ++i) c.push_back(s.node());
    s.edge(sigma, c[0]);
    for (int i = 0; i + 1 < spine_len; ++i) s.edge(c[i], c[i + 1]);
    NodeId cs = c.back();
    NodeId y = s.node(), yy = s.node();
    s.edge(cs, y);
    s.edge(cs, yy);
    NodeId x = s.node();
    s.edge(c[1], x);
    NodeId gamma = s.node();
    s.edge(c[0], gamma);

    s.request(w, ww);
    s.request(v, vv);
    s.request(y, yy);
    s.request(x, w);   // x's A-side minimal request; closest neighbor = w
    s.request(x, y);   // covers the B-side backbone
    s.request(gamma, w);
    s.request(gamma, y);
    s.request(v, y);
    s.request(vv, yy);
    std::vector<NodeId> alpha;
    for (int i = 0; i <= k; ++i) {
        NodeId a = s.node();
        s.edge(p1, a);
        alpha.push_back(a);
        NodeId beta = s.node();
        s.edge(c[2 + i], beta);
        s.request(beta, a);                // crossing request, zone1 x zone2
        s.request(a, i % 2 ? w : ww);      // alpha filler, deeper into leg A
        s.request(beta, i % 2 ? y : yy);   // beta filler, rightward
    }
    return s.finish(k, rng);
}

}  // namespace

TreeInstance gen_rule_trigger(RuleId rule, int k, std::uint64_t seed) {
    Rng rng(seed * 1000003 + static_cast<int>(rule));
    switch (rule) {
        case RuleId::UnitRequest:
            if (k < 1) throw std::invalid_argument("rule 0 trigger needs k >= 1");
            return trigger_rule0(k, rng);
        case RuleId::DisjointRequests:
            if (k < 1) throw std::invalid_argument("rule 1 trigger needs k >= 1");
            return trigger_rule1(k, rng);
        case RuleId::UniqueDirection:
            if (k < 1) throw std::invalid_argument("rule 2 trigger needs k >= 1");
            return trigger_rule2(k, rng);
        case RuleId::Inclusion:
            if (k < 2) throw std::invalid_argument("rule 3 trigger needs k >= 2");
            return trigger_rule3(k, rng);
        case RuleId::CommonFactor:
            if (k < 2) throw std::invalid_argument("rule 4 trigger needs k >= 2");
            return trigger_rule4(k, rng);
        case RuleId::DominatingWingspan:
        case RuleId::BidimensionalWingspan:
            if (k < 2) throw std::invalid_argument("rule 5 trigger needs k >= 2");
            return k == 2 ? trigger_rule5_small(k, rng) : trigger_rule5_bricks(k, rng);
        case RuleId::GeneralizedWingspan:
            if (k < 4) throw std::invalid_argument("rule 5b trigger needs k >= 4");
            return trigger_rule5b(k, rng);
    }
    throw std::invalid_argument("unknown rule");
}

}  // namespace multicut

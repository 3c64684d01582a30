#include "multicut/rules.hpp"

#include <algorithm>

#include "multicut/aux_graph.hpp"
#include "multicut/packing.hpp"
#include "multicut/predicates.hpp"

namespace multicut {

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::UnitRequest: return "unit_request";
        case RuleId::DisjointRequests: return "disjoint_requests";
        case RuleId::UniqueDirection: return "unique_direction";
        case RuleId::Inclusion: return "inclusion";
        case RuleId::CommonFactor: return "common_factor";
        case RuleId::DominatingWingspan: return "dominating_wingspan";
        case RuleId::BidimensionalWingspan: return "bidimensional_wingspan";
        case RuleId::GeneralizedWingspan: return "generalized_wingspan";
    }
    return "?";
}

const char* action_name(RuleAction a) {
    switch (a) {
        case RuleAction::DeleteEdgeAndDecrementK: return "delete_edge_and_decrement_k";
        case RuleAction::ContractEdge: return "contract_edge";
        case RuleAction::DropRequest: return "drop_request";
        case RuleAction::DeclareFalse: return "declare_false";
    }
    return "?";
}

std::optional<RuleApplication> detect_rule0(const TreeInstance& inst) {
    for (const Request& r : inst.requests()) {
        if (inst.request_length(r) != 1) continue;
        RuleApplication app;
        app.rule = RuleId::UnitRequest;
        app.action = RuleAction::DeleteEdgeAndDecrementK;
        app.pivot_request = r.id;
        app.pivot_edge = Edge(r.u, r.v);
        return app;
    }
    return std::nullopt;
}

std::optional<RuleApplication> detect_rule1(const TreeInstance& inst) {
    Packing p = max_edge_disjoint_requests(inst);
    if (p.size() < inst.budget() + 1) return std::nullopt;
    RuleApplication app;
    app.rule = RuleId::DisjointRequests;
    app.action = RuleAction::DeclareFalse;
    app.witness.request_ids.assign(p.request_ids.begin(),
                                   p.request_ids.begin() + inst.budget() + 1);
    return app;
}

std::optional<RuleApplication> detect_rule2(const TreeInstance& inst) {
    for (NodeId x : inst.nodes()) {
        std::vector<Request> mine;
        for (const Request& r : inst.requests())
            if (r.touches(x)) mine.push_back(r);

        if (inst.is_leaf(x) && inst.node_count() >= 2) {
            // a unit request from x means rule (0) precedes; no direction here
            bool unit = false;
            for (const Request& r : mine)
                if (inst.request_length(r) == 1) unit = true;
            if (unit) continue;
            std::optional<Edge> dir;
            bool same = true;
            for (const Request& r : mine) {
                Edge d = *direction_edge(inst, x, r);
                if (!dir)
                    dir = d;
                else if (*dir != d)
                    same = false;
            }
            if (!same) continue;
            RuleApplication app;
            app.rule = RuleId::UniqueDirection;
            app.action = RuleAction::ContractEdge;
            app.pivot_node = x;
            app.pivot_edge = Edge(x, inst.father(x));
            if (dir) app.witness.direction_edge = *dir;
            return app;
        }

        // inner case, restricted to degree-2 inner nodes
        if (inst.is_internal(x) && inst.degree(x) == 2 && inst.leaves_of(x).empty()) {
            std::optional<Edge> dir;
            bool same = true;
            for (const Request& r : mine) {
                Edge d = *direction_edge(inst, x, r);
                if (!dir)
                    dir = d;
                else if (*dir != d)
                    same = false;
            }
            if (!same) continue;
            auto ns = inst.neighbors(x);
            Edge to_contract(-1, -1);
            if (dir) {
                NodeId unused = -1;
                for (NodeId w : ns)
                    if (Edge(x, w) != *dir) unused = w;
                to_contract = Edge(x, unused);
            } else {
                to_contract = Edge(x, *ns.begin());  // no requests from x
            }
            RuleApplication app;
            app.rule = RuleId::UniqueDirection;
            app.action = RuleAction::ContractEdge;
            app.pivot_node = x;
            app.pivot_edge = to_contract;
            if (dir) app.witness.direction_edge = *dir;
            return app;
        }
    }
    return std::nullopt;
}

std::optional<RuleApplication> detect_rule3(const TreeInstance& inst) {
    const auto& reqs = inst.requests();
    std::vector<std::set<Edge>> paths;
    for (const Request& r : reqs) {
        PathView pv = inst.request_path(r);
        paths.emplace_back(pv.edges.begin(), pv.edges.end());
    }
    for (size_t big = 0; big < reqs.size(); ++big) {
        for (size_t small = 0; small < reqs.size(); ++small) {
            if (small == big) continue;
            if (!std::includes(paths[big].begin(), paths[big].end(),
                               paths[small].begin(), paths[small].end()))
                continue;
            RuleApplication app;
            app.rule = RuleId::Inclusion;
            app.action = RuleAction::DropRequest;
            app.pivot_request = reqs[big].id;
            app.witness.included_request = reqs[small].id;
            return app;
        }
    }
    return std::nullopt;
}

namespace {

struct CommonFactorScan {
    std::vector<Edge> y_edges;
    std::vector<int> y_requests;  // one request per Y edge
    std::vector<std::pair<Edge, Edge>> matched;
    std::vector<int> matched_requests;
    bool fires = false;
};

CommonFactorScan common_factor_scan(const TreeInstance& inst, const Request& cand) {
    CommonFactorScan out;
    PathView pv = inst.request_path(cand);
    std::set<Edge> pr(pv.edges.begin(), pv.edges.end());
    std::set<NodeId> pn(pv.nodes.begin(), pv.nodes.end());

    std::set<Edge> z;
    for (NodeId p : pv.nodes)
        for (NodeId w : inst.neighbors(p)) {
            Edge e(p, w);
            if (!pr.count(e)) z.insert(e);
        }

    // per request: its path edges inside Z (at most two, where it leaves R)
    std::map<int, std::vector<Edge>> exits;
    std::map<Edge, int> y_req;  // Y edge -> smallest qualifying request
    for (const Request& r : inst.requests()) {
        if (r.id == cand.id) continue;
        PathView rp = inst.request_path(r);
        std::vector<Edge> ze;
        for (const Edge& e : rp.edges)
            if (z.count(e)) ze.push_back(e);
        exits[r.id] = ze;
        // requests starting at a node of R's path mark their exit edge as Y
        if (pn.count(r.u) || pn.count(r.v))
            for (const Edge& e : ze)
                if (!y_req.count(e)) y_req[e] = r.id;
    }
    for (auto& [e, rid] : y_req) {
        out.y_edges.push_back(e);
        out.y_requests.push_back(rid);
    }

    int threshold = inst.budget() + 1 - static_cast<int>(out.y_edges.size());
    if (threshold <= 0) {
        out.fires = true;
        return out;
    }

    // matching over Z-Y edges linked by a request through both
    std::vector<Edge> zy;
    std::map<Edge, int> zy_index;
    for (const Edge& e : z)
        if (!y_req.count(e)) {
            zy_index[e] = static_cast<int>(zy.size());
            zy.push_back(e);
        }
    AuxGraph g;
    std::map<std::pair<int, int>, int> pair_req;
    for (auto& [rid, ze] : exits) {
        if (ze.size() != 2) continue;
        auto a = zy_index.find(ze[0]), b = zy_index.find(ze[1]);
        if (a == zy_index.end() || b == zy_index.end()) continue;
        auto pr_key = std::make_pair(std::min(a->second, b->second),
                                     std::max(a->second, b->second));
        if (!pair_req.count(pr_key)) {
            pair_req[pr_key] = rid;
            g.add_edge(pr_key.first, pr_key.second);
        }
    }
    if (g.edge_count() == 0) return out;
    Matching m = max_matching(g);
    if (m.size() < threshold) return out;
    for (auto [a, b] : m.edges) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        out.matched.push_back({zy[key.first], zy[key.second]});
        out.matched_requests.push_back(pair_req.at(key));
    }
    out.fires = true;
    return out;
}

}  // namespace

std::optional<RuleApplication> detect_rule4(const TreeInstance& inst) {
    for (const Request& cand : inst.requests()) {
        CommonFactorScan scan = common_factor_scan(inst, cand);
        if (!scan.fires) continue;
        RuleApplication app;
        app.rule = RuleId::CommonFactor;
        app.action = RuleAction::DropRequest;
        app.pivot_request = cand.id;
        app.witness.y_edges = scan.y_edges;
        app.witness.matched_edges = scan.matched;
        app.witness.request_ids = scan.y_requests;
        app.witness.request_ids.insert(app.witness.request_ids.end(),
                                       scan.matched_requests.begin(),
                                       scan.matched_requests.end());
        return app;
    }
    return std::nullopt;
}

namespace {

// Matching over the requests dominated by a window: vertices are nodes of
// the subcaterpillar, edges are dominated requests of the allowed kinds.
struct DominationMatch {
    std::vector<int> request_ids;
    int size = 0;
};

// endpoint-disjoint requests, each with both endpoints in the window's
// subcaterpillar, honoring the leaf-to-leaf/mixed restriction when asked
bool dominated_set_valid(const TreeInstance& inst, const std::vector<NodeId>& window,
                         const std::vector<int>& ids, bool internal_internal_allowed,
                         int need) {
    if (static_cast<int>(ids.size()) < need) return false;
    std::set<NodeId> subcat(window.begin(), window.end());
    for (NodeId v : window)
        if (inst.has_node(v) && inst.is_internal(v))
            for (NodeId leaf : inst.leaves_of(v)) subcat.insert(leaf);
    std::set<NodeId> used;
    for (int id : ids) {
        const Request* r = inst.request_by_id(id);
        if (!r) return false;
        if (!subcat.count(r->u) || !subcat.count(r->v)) return false;
        if (!internal_internal_allowed && inst.is_internal(r->u) && inst.is_internal(r->v))
            return false;
        if (!used.insert(r->u).second || !used.insert(r->v).second) return false;
    }
    return true;
}

DominationMatch dominated_matching(const TreeInstance& inst,
                                   const std::set<NodeId>& window,
                                   bool internal_internal_allowed) {
    std::set<NodeId> subcat = window;
    for (NodeId v : window)
        if (inst.has_node(v) && inst.is_internal(v))
            for (NodeId leaf : inst.leaves_of(v)) subcat.insert(leaf);

    AuxGraph g;
    std::map<std::pair<NodeId, NodeId>, int> pair_req;
    for (const Request& r : inst.requests()) {
        if (!subcat.count(r.u) || !subcat.count(r.v)) continue;
        bool u_int = inst.is_internal(r.u), v_int = inst.is_internal(r.v);
        if (!internal_internal_allowed && u_int && v_int) continue;
        auto key = std::make_pair(r.u, r.v);
        if (!pair_req.count(key)) {
            pair_req[key] = r.id;
            g.add_edge(r.u, r.v);
        }
    }
    DominationMatch out;
    if (g.edge_count() == 0) return out;
    Matching m = max_matching(g);
    out.size = m.size();
    for (auto [a, b] : m.edges)
        out.request_ids.push_back(pair_req.at({std::min(a, b), std::max(a, b)}));
    std::sort(out.request_ids.begin(), out.request_ids.end());
    return out;
}

}  // namespace

std::optional<RuleApplication> detect_rule5(const TreeInstance& inst,
                                            const NodePartition& part) {
    if (!inst.is_caterpillar())
        throw std::invalid_argument("rule 5 runs in caterpillar mode only");
    for (NodeId x : part.of_class(NodeClass::L2)) {
        Wingspan w = caterpillar_wingspan(inst, part, x);
        if (!w.has_left || !w.has_right) continue;
        std::set<NodeId> window(w.window.begin(), w.window.end());
        DominationMatch dm = dominated_matching(inst, window, false);
        if (dm.size < inst.budget() + 1) continue;
        RuleApplication app;
        app.rule = RuleId::DominatingWingspan;
        app.action = RuleAction::ContractEdge;
        app.pivot_node = x;
        app.pivot_edge = Edge(x, inst.father(x));
        app.witness.request_ids = dm.request_ids;
        if (static_cast<int>(app.witness.request_ids.size()) > inst.budget() + 1)
            app.witness.request_ids.resize(inst.budget() + 1);
        return app;
    }
    return std::nullopt;
}

std::optional<RuleApplication> detect_rule5a(const TreeInstance& inst,
                                             const NodePartition& part,
                                             const std::vector<Caterpillar>& decomp) {
    for (NodeId x : part.of_class(NodeClass::L2)) {
        auto ctx = leaf_context(inst, part, decomp, x, false);
        if (!ctx) continue;
        for (const GeneralWingspan& w : general_wingspans(inst, *ctx)) {
            std::set<NodeId> window;
            for (NodeId v : w.window)
                if (ctx->cat->on_backbone(v)) window.insert(v);
            if (window.empty()) continue;
            DominationMatch dm = dominated_matching(inst, window, true);
            if (dm.size < inst.budget() + 1) continue;
            RuleApplication app;
            app.rule = RuleId::BidimensionalWingspan;
            app.action = RuleAction::ContractEdge;
            app.pivot_node = x;
            app.pivot_edge = Edge(x, inst.father(x));
            app.witness.request_ids = dm.request_ids;
            if (static_cast<int>(app.witness.request_ids.size()) > inst.budget() + 1)
                app.witness.request_ids.resize(inst.budget() + 1);
            app.witness.wingspan_request_a = w.request_a;
            app.witness.wingspan_request_b = w.request_b;
            return app;
        }
    }
    return std::nullopt;
}

namespace {

// k+1 endpoint-disjoint requests between two disjoint node zones
std::optional<std::vector<int>> zone_matching(const TreeInstance& inst,
                                              const std::set<NodeId>& zone1,
                                              const std::set<NodeId>& zone2,
                                              int need) {
    AuxGraph g;
    std::map<std::pair<NodeId, NodeId>, int> pair_req;
    for (const Request& r : inst.requests()) {
        bool fwd = zone1.count(r.u) && zone2.count(r.v);
        bool bwd = zone2.count(r.u) && zone1.count(r.v);
        if (!fwd && !bwd) continue;
        auto key = std::make_pair(r.u, r.v);
        if (!pair_req.count(key)) {
            pair_req[key] = r.id;
            g.add_edge(r.u, r.v);
        }
    }
    if (g.edge_count() == 0) return need <= 0 ? std::make_optional(std::vector<int>{})
                                              : std::nullopt;
    Matching m = max_matching(g);
    if (m.size() < need) return std::nullopt;
    std::vector<int> ids;
    for (auto [a, b] : m.edges)
        ids.push_back(pair_req.at({std::min(a, b), std::max(a, b)}));
    std::sort(ids.begin(), ids.end());
    ids.resize(std::min<size_t>(ids.size(), static_cast<size_t>(std::max(need, 0))));
    return ids;
}

}  // namespace

std::optional<RuleApplication> detect_rule5b(const TreeInstance& inst,
                                             const NodePartition& part,
                                             const std::vector<Caterpillar>& decomp) {
    for (NodeId x : part.of_class(NodeClass::L2)) {
        for (bool swap : {false, true}) {
            auto ctx = leaf_context(inst, part, decomp, x, swap);
            if (!ctx) continue;
            if (!covers_caterpillar(inst, *ctx)) break;  // orientation-free gate

            std::vector<NodeId> closest;
            for (const Request& r : minimal_requests(inst, ctx->x))
                if (ctx->A.count(r.other(ctx->x))) closest.push_back(r.other(ctx->x));
            std::sort(closest.begin(), closest.end());
            closest.erase(std::unique(closest.begin(), closest.end()), closest.end());
            if (closest.empty()) continue;

            std::set<NodeId> zone1 = zone_toward(inst, ctx->x, ctx->b);
            bool all_pass = true;
            std::vector<std::vector<int>> per_z;
            for (NodeId z : closest) {
                std::set<NodeId> zone2 = zone_toward(inst, ctx->a, z);
                auto ids = zone_matching(inst, zone1, zone2, inst.budget() + 1);
                if (!ids) { all_pass = false; break; }
                per_z.push_back(*ids);
            }
            if (!all_pass) continue;

            RuleApplication app;
            app.rule = RuleId::GeneralizedWingspan;
            app.action = RuleAction::ContractEdge;
            app.pivot_node = x;
            app.pivot_edge = Edge(x, inst.father(x));
            app.witness.closest_neighbors = closest;
            app.witness.per_neighbor_requests = per_z;
            app.witness.swapped_sides = swap;
            return app;
        }
    }
    return std::nullopt;
}

TreeInstance apply_rule(const TreeInstance& inst, const RuleApplication& app) {
    TreeInstance out = inst;
    switch (app.action) {
        case RuleAction::DeleteEdgeAndDecrementK:
            out = inst.delete_edge(app.pivot_edge);
            out.set_budget(inst.budget() - 1);
            break;
        case RuleAction::ContractEdge:
            out = inst.contract_edge(app.pivot_edge);
            break;
        case RuleAction::DropRequest:
            out = inst.without_request(app.pivot_request);
            break;
        case RuleAction::DeclareFalse:
            out.set_verdict(Verdict::False);
            return out;
    }
    if (out.budget() < 0)
        out.set_verdict(Verdict::False);
    else if (out.requests().empty())
        out.set_verdict(Verdict::True);
    return out;
}

bool witness_valid(const TreeInstance& inst, const RuleApplication& app) {
    const int k = inst.budget();
    switch (app.rule) {
        case RuleId::UnitRequest: {
            const Request* r = inst.request_by_id(app.pivot_request);
            return r && inst.request_length(*r) == 1 && Edge(r->u, r->v) == app.pivot_edge;
        }
        case RuleId::DisjointRequests: {
            if (static_cast<int>(app.witness.request_ids.size()) < k + 1) return false;
            Packing p;
            p.request_ids = app.witness.request_ids;
            return p.valid_on(inst);
        }
        case RuleId::UniqueDirection: {
            NodeId x = app.pivot_node;
            if (!inst.has_node(x)) return false;
            std::vector<Request> mine;
            for (const Request& r : inst.requests())
                if (r.touches(x)) mine.push_back(r);
            for (const Request& r : mine) {
                auto d = direction_edge(inst, x, r);
                if (!d) return false;
                if (*d != app.witness.direction_edge) return false;
                if (Edge(r.u, r.v) == app.pivot_edge) return false;
            }
            if (inst.is_leaf(x)) return app.pivot_edge == Edge(x, inst.father(x));
            return inst.degree(x) == 2 && inst.leaves_of(x).empty() &&
                   app.pivot_edge.contains(x);
        }
        case RuleId::Inclusion: {
            const Request* big = inst.request_by_id(app.pivot_request);
            const Request* small = inst.request_by_id(app.witness.included_request);
            if (!big || !small || big->id == small->id) return false;
            PathView pb = inst.request_path(*big), ps = inst.request_path(*small);
            std::set<Edge> sb(pb.edges.begin(), pb.edges.end());
            for (const Edge& e : ps.edges)
                if (!sb.count(e)) return false;
            return true;
        }
        case RuleId::CommonFactor: {
            const Request* cand = inst.request_by_id(app.pivot_request);
            if (!cand) return false;
            PathView pv = inst.request_path(*cand);
            std::set<Edge> pr(pv.edges.begin(), pv.edges.end());
            std::set<NodeId> pn(pv.nodes.begin(), pv.nodes.end());
            std::set<Edge> seen;
            // Y edges: incident to the path, carried by a request from the path
            for (size_t i = 0; i < app.witness.y_edges.size(); ++i) {
                const Edge& e = app.witness.y_edges[i];
                if (pr.count(e) || !(pn.count(e.a) || pn.count(e.b))) return false;
                if (!seen.insert(e).second) return false;
                bool carried = false;
                for (const Request& r : inst.requests()) {
                    if (r.id == cand->id || !(pn.count(r.u) || pn.count(r.v))) continue;
                    PathView rp = inst.request_path(r);
                    for (const Edge& re : rp.edges)
                        if (re == e) { carried = true; break; }
                    if (carried) break;
                }
                if (!carried) return false;
            }
            for (auto& [e1, e2] : app.witness.matched_edges) {
                for (const Edge& e : {e1, e2}) {
                    if (pr.count(e) || !(pn.count(e.a) || pn.count(e.b))) return false;
                    if (!seen.insert(e).second) return false;  // disjoint from Y too
                }
                bool carried = false;
                for (const Request& r : inst.requests()) {
                    if (r.id == cand->id) continue;
                    PathView rp = inst.request_path(r);
                    std::set<Edge> re(rp.edges.begin(), rp.edges.end());
                    if (re.count(e1) && re.count(e2)) { carried = true; break; }
                }
                if (!carried) return false;
            }
            return static_cast<int>(app.witness.y_edges.size() +
                                    app.witness.matched_edges.size()) >= k + 1;
        }
        case RuleId::DominatingWingspan: {
            NodePartition part = classify_nodes(inst);
            Wingspan w = caterpillar_wingspan(inst, part, app.pivot_node);
            if (!w.has_left || !w.has_right) return false;
            return dominated_set_valid(inst, w.window, app.witness.request_ids, false,
                                       k + 1);
        }
        case RuleId::BidimensionalWingspan: {
            NodePartition part = classify_nodes(inst);
            auto decomp = caterpillar_decomposition(inst, part);
            auto ctx = leaf_context(inst, part, decomp, app.pivot_node, false);
            if (!ctx) return false;
            const Request* ra = inst.request_by_id(app.witness.wingspan_request_a);
            const Request* rb = inst.request_by_id(app.witness.wingspan_request_b);
            if (!ra || !rb) return false;
            std::set<NodeId> window;
            for (const Request* r : {ra, rb}) {
                PathView pv = inst.request_path(*r);
                for (NodeId v : pv.internal_nodes)
                    if (ctx->cat->on_backbone(v)) window.insert(v);
            }
            std::vector<NodeId> wv(window.begin(), window.end());
            return dominated_set_valid(inst, wv, app.witness.request_ids, true, k + 1);
        }
        case RuleId::GeneralizedWingspan: {
            NodePartition part = classify_nodes(inst);
            auto decomp = caterpillar_decomposition(inst, part);
            auto ctx = leaf_context(inst, part, decomp, app.pivot_node,
                                    app.witness.swapped_sides);
            if (!ctx || !covers_caterpillar(inst, *ctx)) return false;
            std::vector<NodeId> closest;
            for (const Request& r : minimal_requests(inst, ctx->x))
                if (ctx->A.count(r.other(ctx->x))) closest.push_back(r.other(ctx->x));
            std::sort(closest.begin(), closest.end());
            closest.erase(std::unique(closest.begin(), closest.end()), closest.end());
            if (closest.empty() || closest != app.witness.closest_neighbors) return false;
            if (app.witness.per_neighbor_requests.size() != closest.size()) return false;
            std::set<NodeId> zone1 = zone_toward(inst, ctx->x, ctx->b);
            for (size_t i = 0; i < closest.size(); ++i) {
                std::set<NodeId> zone2 = zone_toward(inst, ctx->a, closest[i]);
                const auto& ids = app.witness.per_neighbor_requests[i];
                if (static_cast<int>(ids.size()) < k + 1) return false;
                std::set<NodeId> used;
                for (int id : ids) {
                    const Request* r = inst.request_by_id(id);
                    if (!r) return false;
                    bool fwd = zone1.count(r->u) && zone2.count(r->v);
                    bool bwd = zone2.count(r->u) && zone1.count(r->v);
                    if (!fwd && !bwd) return false;
                    if (!used.insert(r->u).second || !used.insert(r->v).second)
                        return false;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace multicut

#include "multicut/wingspan.hpp"

#include <algorithm>
#include <deque>

namespace multicut {

std::vector<NodeId> caterpillar_spine(const TreeInstance& inst) {
    std::vector<NodeId> internals = inst.internal_nodes();
    if (internals.size() <= 1) return internals;
    std::set<NodeId> iset(internals.begin(), internals.end());
    auto ideg = [&](NodeId v) {
        int d = 0;
        for (NodeId w : inst.neighbors(v))
            if (iset.count(w)) d++;
        return d;
    };
    NodeId end = -1;
    for (NodeId v : internals) {
        if (ideg(v) > 2) throw std::invalid_argument("not a caterpillar");
        if (ideg(v) <= 1 && (end == -1 || v < end)) end = v;
    }
    std::vector<NodeId> spine{end};
    std::set<NodeId> used{end};
    while (spine.size() < internals.size()) {
        bool grew = false;
        for (NodeId w : inst.neighbors(spine.back()))
            if (iset.count(w) && !used.count(w)) {
                spine.push_back(w);
                used.insert(w);
                grew = true;
                break;
            }
        if (!grew) throw std::invalid_argument("not a caterpillar");
    }
    if (spine.front() > spine.back()) std::reverse(spine.begin(), spine.end());
    return spine;
}

std::set<NodeId> quasi_r_neighbors(const TreeInstance& inst, NodeId x) {
    if (!inst.is_leaf(x)) throw std::invalid_argument("quasi_r_neighbors wants a leaf");
    std::set<NodeId> out;
    for (const Request& r : inst.requests()) {
        if (!r.touches(x)) continue;
        NodeId t = r.other(x);
        out.insert(inst.is_internal(t) ? t : inst.father(t));
    }
    return out;
}

Wingspan caterpillar_wingspan(const TreeInstance& inst, const NodePartition& part,
                              NodeId x) {
    if (!part.is(x, NodeClass::L2))
        throw std::invalid_argument("wingspan pivot must be an L2-leaf");
    std::vector<NodeId> spine = caterpillar_spine(inst);
    std::map<NodeId, int> pos;
    for (size_t i = 0; i < spine.size(); ++i) pos[spine[i]] = static_cast<int>(i);

    NodeId f = inst.father(x);
    int pf = pos.at(f);
    Wingspan w;
    w.pivot = x;
    // closest neighbor per side; a side with none keeps the f(x) bound
    int lo = pf, hi = pf;
    for (NodeId q : quasi_r_neighbors(inst, x)) {
        auto it = pos.find(q);
        if (it == pos.end()) continue;
        if (it->second < pf) {
            lo = w.has_left ? std::max(lo, it->second) : it->second;
            w.has_left = true;
        } else if (it->second > pf) {
            hi = w.has_right ? std::min(hi, it->second) : it->second;
            w.has_right = true;
        }
    }
    for (int i = lo; i <= hi; ++i) w.window.push_back(spine[i]);
    for (NodeId v : w.window)
        for (NodeId leaf : inst.leaves_of(v)) {
            w.pendant.insert(leaf);
            if (part.is(leaf, NodeClass::L2)) w.size++;
        }
    return w;
}

std::vector<Request> minimal_requests(const TreeInstance& inst, NodeId x) {
    std::vector<Request> mine;
    for (const Request& r : inst.requests())
        if (r.touches(x)) mine.push_back(r);
    std::vector<std::set<Edge>> ipaths;
    for (const Request& r : mine) {
        PathView pv = inst.request_path(r);
        ipaths.emplace_back(pv.internal_edges.begin(), pv.internal_edges.end());
    }
    std::vector<Request> out;
    for (size_t i = 0; i < mine.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < mine.size() && minimal; ++j) {
            if (i == j) continue;
            bool j_subset = std::includes(ipaths[i].begin(), ipaths[i].end(),
                                          ipaths[j].begin(), ipaths[j].end());
            if (j_subset && ipaths[j] != ipaths[i]) minimal = false;
            if (ipaths[j] == ipaths[i] && mine[j].id < mine[i].id) minimal = false;
        }
        if (minimal) out.push_back(mine[i]);
    }
    return out;
}

std::optional<LeafContext> leaf_context(const TreeInstance& inst,
                                        const NodePartition& part,
                                        const std::vector<Caterpillar>& decomp,
                                        NodeId x, bool swap_sides) {
    if (!part.is(x, NodeClass::L2)) return std::nullopt;
    LeafContext ctx;
    ctx.x = x;
    ctx.f = inst.father(x);
    ctx.group = inst.leaves_of(ctx.f);
    for (const Caterpillar& c : decomp)
        if (c.on_backbone(ctx.f)) ctx.cat = &c;
    if (!ctx.cat) return std::nullopt;

    std::vector<NodeId> inbrs;
    for (NodeId w : inst.neighbors(ctx.f))
        if (inst.is_internal(w)) inbrs.push_back(w);
    if (inbrs.size() != 2) return std::nullopt;  // f(x) is I2 for L2-leaves
    if (swap_sides) std::swap(inbrs[0], inbrs[1]);

    std::set<NodeId> blocked(ctx.group.begin(), ctx.group.end());
    blocked.insert(ctx.f);
    auto component = [&](NodeId seed) {
        std::set<NodeId> comp{seed};
        std::deque<NodeId> q{seed};
        while (!q.empty()) {
            NodeId c = q.front();
            q.pop_front();
            for (NodeId w : inst.neighbors(c))
                if (!blocked.count(w) && comp.insert(w).second) q.push_back(w);
        }
        return comp;
    };
    ctx.A = component(inbrs[0]);
    ctx.B = component(inbrs[1]);

    ctx.a = ctx.f;
    ctx.b = ctx.f;
    if (!ctx.cat->trivial) {
        if (ctx.A.count(ctx.cat->extremity_a)) ctx.a = ctx.cat->extremity_a;
        if (ctx.A.count(ctx.cat->extremity_b)) ctx.a = ctx.cat->extremity_b;
        if (ctx.B.count(ctx.cat->extremity_a)) ctx.b = ctx.cat->extremity_a;
        if (ctx.B.count(ctx.cat->extremity_b)) ctx.b = ctx.cat->extremity_b;
    }
    return ctx;
}

std::vector<GeneralWingspan> general_wingspans(const TreeInstance& inst,
                                               const LeafContext& ctx) {
    std::vector<Request> mins = minimal_requests(inst, ctx.x);
    std::vector<GeneralWingspan> out;
    for (const Request& ra : mins) {
        if (!ctx.A.count(ra.other(ctx.x))) continue;
        for (const Request& rb : mins) {
            if (!ctx.B.count(rb.other(ctx.x))) continue;
            GeneralWingspan w;
            w.request_a = ra.id;
            w.request_b = rb.id;
            for (const Request* r : {&ra, &rb}) {
                PathView pv = inst.request_path(*r);
                for (NodeId v : pv.internal_nodes) w.window.insert(v);
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::set<NodeId> zone_toward(const TreeInstance& inst, NodeId x, NodeId y) {
    std::set<NodeId> zone;
    std::vector<NodeId> path = x == y ? std::vector<NodeId>{x} : inst.path_nodes(x, y);
    for (NodeId v : path) {
        zone.insert(v);
        if (inst.is_internal(v))
            for (NodeId leaf : inst.leaves_of(v)) zone.insert(leaf);
    }
    return zone;
}

bool covers_caterpillar(const TreeInstance& inst, const LeafContext& ctx) {
    std::vector<Request> mins = minimal_requests(inst, ctx.x);
    const std::vector<NodeId>& backbone = ctx.cat->backbone;
    auto covered_by = [&](const Request& r1, const Request& r2) {
        std::set<NodeId> inodes;
        for (const Request* r : {&r1, &r2}) {
            PathView pv = inst.request_path(*r);
            for (NodeId v : pv.internal_nodes) inodes.insert(v);
        }
        for (NodeId v : backbone)
            if (!inodes.count(v)) return false;
        return true;
    };
    for (size_t i = 0; i < mins.size(); ++i)
        for (size_t j = i; j < mins.size(); ++j)
            if (covered_by(mins[i], mins[j])) return true;
    return false;
}

}  // namespace multicut

#include "multicut/predicates.hpp"

#include <algorithm>

namespace multicut {

RequestPredicates request_predicates(const TreeInstance& inst, const Request& r1,
                                     const Request& r2) {
    RequestPredicates out;
    PathView p1 = inst.request_path(r1), p2 = inst.request_path(r2);
    std::set<Edge> e1(p1.edges.begin(), p1.edges.end());
    std::set<Edge> i1(p1.internal_edges.begin(), p1.internal_edges.end());
    std::set<Edge> i2(p2.internal_edges.begin(), p2.internal_edges.end());
    for (const Edge& e : p2.edges)
        if (e1.count(e)) out.common_factor.insert(e);
    out.disjoint = out.common_factor.empty();
    out.dominates = std::includes(i1.begin(), i1.end(), i2.begin(), i2.end());
    std::set<NodeId> ends{r1.u, r1.v, r2.u, r2.v};
    out.endpoint_disjoint = ends.size() == 4;
    return out;
}

std::optional<Edge> direction_edge(const TreeInstance& inst, NodeId x,
                                   const Request& r) {
    if (!r.touches(x)) return std::nullopt;
    std::vector<NodeId> path = inst.path_nodes(x, r.other(x));
    if (inst.is_leaf(x)) {
        if (path.size() < 3) return std::nullopt;  // unit request, no direction
        return Edge(path[1], path[2]);
    }
    return Edge(path[0], path[1]);
}

std::map<int, Edge> directions_from(const TreeInstance& inst, NodeId x) {
    std::map<int, Edge> out;
    for (const Request& r : inst.requests()) {
        if (!r.touches(x)) continue;
        auto d = direction_edge(inst, x, r);
        if (d) out[r.id] = *d;
    }
    return out;
}

}  // namespace multicut

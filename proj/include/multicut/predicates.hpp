#pragma once

#include <map>
#include <optional>
#include <set>

#include "multicut/tree_instance.hpp"

namespace multicut {

struct RequestPredicates {
    bool dominates = false;          // internal path of r1 contains r2's
    std::set<Edge> common_factor;    // intersection of the two paths
    bool endpoint_disjoint = false;  // four pairwise different endpoints
    bool disjoint = false;           // edge sets disjoint
};

RequestPredicates request_predicates(const TreeInstance& inst, const Request& r1,
                                     const Request& r2);

/// Discriminating edge of a request seen from x: second path edge for a
/// leaf, first for an internal node. Length-1 requests from a leaf have no
/// direction and are omitted.
std::optional<Edge> direction_edge(const TreeInstance& inst, NodeId x,
                                   const Request& r);

/// Direction edge of every request with endpoint x, keyed by request id.
std::map<int, Edge> directions_from(const TreeInstance& inst, NodeId x);

}  // namespace multicut

#pragma once

#include <vector>

#include "multicut/tree_instance.hpp"

namespace multicut {

/// Pairwise edge-disjoint request set.
struct Packing {
    std::vector<int> request_ids;  // ascending
    int size() const { return static_cast<int>(request_ids.size()); }
    bool valid_on(const TreeInstance& inst) const;
};

/// Exact maximum set of pairwise edge-disjoint requests. Processes nodes
/// bottom-up; at each node the routable choice is a maximum matching over
/// the child edges, with a reservation state per vertical path so that a
/// locally tied choice can never block a strictly better packing above
/// (plain greedy matching per level is not exact; see the unit tests for
/// a five-request counterexample).
Packing max_edge_disjoint_requests(const TreeInstance& inst);

/// Exhaustive cross-check, exponential in the request count (guarded).
Packing max_edge_disjoint_requests_bruteforce(const TreeInstance& inst);

}  // namespace multicut

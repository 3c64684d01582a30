#pragma once

#include <optional>
#include <vector>

#include "multicut/tree_instance.hpp"

namespace multicut {

/// True iff every request path contains an edge of s.
/// Throws when an edge of s is not in the tree.
bool is_multicut(const TreeInstance& inst, const std::vector<Edge>& s);

/// Bounded-depth branching: pick the uncut request with the shortest path
/// and branch on each of its edges. Sound and complete for "multicut of
/// size <= k exists"; returns one such multicut when it does.
std::optional<std::vector<Edge>> solve_decision(const TreeInstance& inst, int k);

/// Exact minimum multicut size by exhaustive subset search (test oracle;
/// kept well away from the rules' code paths). Guarded to <= 30 edges.
int brute_force_opt(const TreeInstance& inst);

}  // namespace multicut

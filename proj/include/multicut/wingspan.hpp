#pragma once

#include <optional>
#include <set>
#include <vector>

#include "multicut/classification.hpp"
#include "multicut/tree_instance.hpp"

namespace multicut {

/// Ordered internal path of a caterpillar tree, smaller-id end first.
/// Throws when the internal nodes do not induce a path.
std::vector<NodeId> caterpillar_spine(const TreeInstance& inst);

/// Internal nodes y such that there is a request xy, or a request xz with
/// z a leaf hanging from y. x must be a leaf.
std::set<NodeId> quasi_r_neighbors(const TreeInstance& inst, NodeId x);

/// Caterpillar-mode wingspan of an L2-leaf: the spine window between the
/// closest quasi-R-neighbor on each side of f(x), falling back to f(x)
/// on a side with no neighbor. size counts pending L2-leaves.
struct Wingspan {
    NodeId pivot = -1;
    std::vector<NodeId> window;   // spine segment, path order
    std::set<NodeId> pendant;     // leaves hanging from the window
    int size = 0;                 // number of L2-leaves in pendant
    bool has_left = false;        // quasi-R-neighbor exists on that side
    bool has_right = false;

    bool in_subcaterpillar(NodeId v) const {
        if (pendant.count(v)) return true;
        for (NodeId w : window)
            if (w == v) return true;
        return false;
    }
};

Wingspan caterpillar_wingspan(const TreeInstance& inst, const NodePartition& part,
                              NodeId x);

/// Requests from x whose internal path is inclusion-minimal among x's
/// requests; among equal internal paths only the smallest id is minimal.
std::vector<Request> minimal_requests(const TreeInstance& inst, NodeId x);

/// Per-leaf environment for the general-tree rules: the caterpillar C of
/// x, the two components A(x), B(x) of T - f(x) - Gr(x) and the
/// extremities a(x), b(x) (falling back to f(x) on a side whose component
/// holds no extremity of C).
struct LeafContext {
    NodeId x = -1;
    NodeId f = -1;
    std::vector<NodeId> group;  // leaves at f(x), including x
    const Caterpillar* cat = nullptr;
    std::set<NodeId> A, B;
    NodeId a = -1, b = -1;
};

/// swap_sides flips which component plays A. Returns nothing when x is not
/// an L2-leaf or f(x) does not have exactly two internal neighbors.
std::optional<LeafContext> leaf_context(const TreeInstance& inst,
                                        const NodePartition& part,
                                        const std::vector<Caterpillar>& decomp,
                                        NodeId x, bool swap_sides);

/// General-mode wingspan: internal-node restriction of the union of two
/// minimal requests of x reaching into A(x) and B(x) respectively.
struct GeneralWingspan {
    int request_a = -1;
    int request_b = -1;
    std::set<NodeId> window;  // internal nodes of the union of both paths
};

std::vector<GeneralWingspan> general_wingspans(const TreeInstance& inst,
                                               const LeafContext& ctx);

/// Nodes lying toward y from x: the x-y path plus leaves rooted on it.
std::set<NodeId> zone_toward(const TreeInstance& inst, NodeId x, NodeId y);

/// x covers its caterpillar: two minimal requests whose internal paths
/// jointly contain every backbone node of C.
bool covers_caterpillar(const TreeInstance& inst, const LeafContext& ctx);

}  // namespace multicut

#pragma once

#include <map>
#include <set>
#include <vector>

#include "multicut/tree_instance.hpp"

namespace multicut {

enum class NodeClass { I1, I2, I3, L1, L2, L2Prime, L3 };

const char* node_class_name(NodeClass c);

/// Total classification of the node set into the seven classes, plus the
/// inner-node flags and the leaf->parent group map. For degenerate trees
/// (no internal node) every node is L1 and the decomposition below returns
/// one trivial component.
struct NodePartition {
    std::map<NodeId, NodeClass> cls;
    std::map<NodeId, NodeId> group_of;  // leaf -> internal node it hangs from
    std::set<NodeId> inner;             // internal nodes with no pendant leaf
    std::set<NodeId> bad_leaves;        // endpoints of group requests

    bool is(NodeId v, NodeClass c) const {
        auto it = cls.find(v);
        return it != cls.end() && it->second == c;
    }
    int count(NodeClass c) const {
        int n = 0;
        for (auto& [v, k] : cls)
            if (k == c) n++;
        return n;
    }
    std::vector<NodeId> of_class(NodeClass c) const {
        std::vector<NodeId> out;
        for (auto& [v, k] : cls)
            if (k == c) out.push_back(v);
        return out;
    }
};

NodePartition classify_nodes(const TreeInstance& inst);

/// Maximal connected component of T - I3 - L3. backbone holds the nodes
/// internal in T, ordered along the path with the smaller-id extremity
/// first; extremities are the endpoints of the component's own internal
/// path (equal when the component is trivial).
struct Caterpillar {
    std::vector<NodeId> backbone;        // internal nodes of T, path order
    std::vector<NodeId> pendant_leaves;  // leaves of T hanging from backbone
    NodeId extremity_a = -1;
    NodeId extremity_b = -1;
    bool trivial = true;

    bool on_backbone(NodeId v) const {
        for (NodeId b : backbone)
            if (b == v) return true;
        return false;
    }
};

std::vector<Caterpillar> caterpillar_decomposition(const TreeInstance& inst,
                                                   const NodePartition& part);

/// Fixed orientation of one caterpillar's backbone: position of each
/// backbone node, smaller-id extremity side first ("left").
std::map<NodeId, int> backbone_positions(const Caterpillar& cat);

}  // namespace multicut

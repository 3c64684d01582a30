#pragma once

#include <optional>
#include <vector>

#include "multicut/classification.hpp"
#include "multicut/tree_instance.hpp"
#include "multicut/wingspan.hpp"

namespace multicut {

enum class RuleId {
    UnitRequest = 0,
    DisjointRequests = 1,
    UniqueDirection = 2,
    Inclusion = 3,
    CommonFactor = 4,
    DominatingWingspan = 5,
    BidimensionalWingspan = 6,
    GeneralizedWingspan = 7,
};

const char* rule_name(RuleId r);

enum class RuleAction {
    DeleteEdgeAndDecrementK,
    ContractEdge,
    DropRequest,
    DeclareFalse,
};

const char* action_name(RuleAction a);

/// Certificate allowing the precondition of a fired rule to be re-checked
/// without rerunning detection.
struct RuleWitness {
    std::vector<int> request_ids;  // packing (1) / matched requests (4,5,5a)
    std::vector<Edge> y_edges;     // rule 4: the Y set
    std::vector<std::pair<Edge, Edge>> matched_edges;    // rule 4 matching on Z-Y
    std::vector<NodeId> closest_neighbors;               // rule 5b: the z's
    std::vector<std::vector<int>> per_neighbor_requests; // rule 5b: one matching per z
    bool swapped_sides = false;   // rule 5b: which component played A(x)
    int wingspan_request_a = -1;  // rule 5a: minimal request pair spanning W
    int wingspan_request_b = -1;
    Edge direction_edge{-1, -1};  // rule 2: common direction
    int included_request = -1;    // rule 3: the request R contained in R'
};

struct RuleApplication {
    RuleId rule;
    RuleAction action;
    NodeId pivot_node = -1;
    Edge pivot_edge{-1, -1};
    int pivot_request = -1;
    RuleWitness witness;
};

// Detections scan pivots in ascending id and report the first hit without
// mutating anything. Each assumes the earlier rules in the paper's order
// were not applicable (the kernelizer enforces the order).
std::optional<RuleApplication> detect_rule0(const TreeInstance& inst);
std::optional<RuleApplication> detect_rule1(const TreeInstance& inst);
std::optional<RuleApplication> detect_rule2(const TreeInstance& inst);
std::optional<RuleApplication> detect_rule3(const TreeInstance& inst);
std::optional<RuleApplication> detect_rule4(const TreeInstance& inst);
/// Caterpillar mode only; throws on non-caterpillar input.
std::optional<RuleApplication> detect_rule5(const TreeInstance& inst,
                                            const NodePartition& part);
std::optional<RuleApplication> detect_rule5a(const TreeInstance& inst,
                                             const NodePartition& part,
                                             const std::vector<Caterpillar>& decomp);
std::optional<RuleApplication> detect_rule5b(const TreeInstance& inst,
                                             const NodePartition& part,
                                             const std::vector<Caterpillar>& decomp);

/// Applies the action on a copy and normalizes the verdict:
/// budget below zero => FALSE, empty request set => TRUE.
TreeInstance apply_rule(const TreeInstance& inst, const RuleApplication& app);

/// Independent re-validation of the witness against the instance the rule
/// fired on (disjointness, matching size, domination and the like).
bool witness_valid(const TreeInstance& inst, const RuleApplication& app);

}  // namespace multicut

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multicut/rules.hpp"
#include "multicut/tree_instance.hpp"

namespace multicut {

enum class Mode { Caterpillar, General };

const char* mode_name(Mode m);

struct TraceStep {
    RuleApplication app;
    long long potential_after = 0;
    Edge pivot_origin{-1, -1};  // original endpoints of the touched edge
};

/// Ordered log of one kernelization run. The potential (sum of request
/// path lengths plus node count) strictly decreases at every step, which
/// bounds the iteration count; replaying the steps from the initial
/// instance reproduces the final digest bit for bit.
struct KernelTrace {
    std::vector<TraceStep> steps;
    std::uint64_t initial_digest = 0;
    std::uint64_t final_digest = 0;
    long long initial_potential = 0;
    long long initial_request_length_sum = 0;

    std::string to_text() const;
};

/// Requestless leaves are irrelevant to the decision; the driver prunes
/// them at the start and after every step (not counted as iterations).
TreeInstance canonicalize(const TreeInstance& inst);

/// First applicable rule in the paper's order: (0)..(4) then (5) in
/// caterpillar mode, (0)..(4),(5a),(5b) in general mode.
std::optional<RuleApplication> first_applicable(const TreeInstance& inst, Mode mode);

/// Resolved instances are replaced by a canonical two-node instance:
/// k = 0 with one request on the single edge (FALSE) or none (TRUE).
TreeInstance canonical_true_instance();
TreeInstance canonical_false_instance();

/// Fixed-point driver: apply the first applicable rule until none applies
/// or the verdict resolves. Throws on caterpillar-mode input that is not
/// a caterpillar.
std::pair<TreeInstance, KernelTrace> kernelize(const TreeInstance& inst, Mode mode);

/// Re-applies a recorded step list; used to check trace reproducibility.
TreeInstance replay_trace(const TreeInstance& initial,
                          const std::vector<TraceStep>& steps, Mode mode);

struct StructuralReport {
    int nodes = 0, edges = 0, requests = 0, k = 0;
    Verdict verdict = Verdict::Open;
    bool caterpillar = false;
    int i1 = 0, i2 = 0, i3 = 0, l1 = 0, l2 = 0, l2prime = 0, l3 = 0;
    int inner = 0;
    int bad_leaves = 0;
    int caterpillar_count = 0;
    int max_wingspan_size = -1;  // caterpillar instances only
    int max_r_neighbors_per_direction = 0;
    int max_node_to_group_requests = 0;
    int max_group_to_group_requests = 0;
    bool reduced_caterpillar = false;
    bool reduced_general = false;
};

StructuralReport structural_report(const TreeInstance& inst);

struct ClaimCheck {
    std::string id;
    long long bound = 0;
    long long observed = 0;
    bool pass = false;
};

/// Concrete-constant size claims checked against a reduced instance's
/// report. Throws when the report does not come from a fixed point of
/// the given mode; resolved (non-OPEN) instances give a vacuous pass.
std::vector<ClaimCheck> verify_kernel_bounds(const StructuralReport& report, int k,
                                             Mode mode);

struct KernelizedSolve {
    bool sat = false;
    std::vector<Edge> cut;  // edges of the ORIGINAL instance
};

/// Kernelize-then-branch; certificates are lifted back to original edges
/// through contraction origins plus the edges deleted by rule (0).
KernelizedSolve solve_with_kernel(const TreeInstance& inst, Mode mode);

}  // namespace multicut

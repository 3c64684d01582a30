#pragma once

#include <cstdint>

#include "multicut/rules.hpp"
#include "multicut/tree_instance.hpp"

namespace multicut {

enum class TreeShape { Path, Caterpillar, Spider, Random };

/// Seeded instance generation; integer-only arithmetic on a mt19937_64
/// stream, so a fixed seed reproduces the same instance on any platform.
struct GenParams {
    int n_min = 5;
    int n_max = 20;
    TreeShape shape = TreeShape::Random;
    int request_count = 6;
    int length_bias = 0;  // <0 favors short requests, >0 long, 0 uniform
    int k_min = 1;
    int k_max = 4;
    std::uint64_t seed = 1;
};

TreeInstance gen_instance(const GenParams& params);

/// Instance on which the named rule is the first applicable one (in the
/// general-mode cascade; rule 5 triggers are caterpillars, so the same
/// instance fires rule 5 in caterpillar mode and 5a in general mode).
/// Feasible budgets differ per rule: rules 0-2 need k >= 1, rules 3-5a
/// k >= 2 and rule 5b k >= 4; smaller budgets throw (with k+1 disjoint
/// group requests forced at the tree's ends, an earlier rule always
/// preempts - see the generator tests).
TreeInstance gen_rule_trigger(RuleId rule, int k, std::uint64_t seed = 1);

}  // namespace multicut

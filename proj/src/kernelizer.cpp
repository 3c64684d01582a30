#include "multicut/kernelizer.hpp"

#include <algorithm>
#include <sstream>

#include "multicut/predicates.hpp"
#include "multicut/solver.hpp"
#include "multicut/wingspan.hpp"

namespace multicut {

const char* mode_name(Mode m) {
    return m == Mode::Caterpillar ? "caterpillar" : "general";
}

TreeInstance canonicalize(const TreeInstance& inst) {
    return inst.prune_requestless_leaves();
}

std::optional<RuleApplication> first_applicable(const TreeInstance& inst, Mode mode) {
    if (inst.verdict() != Verdict::Open) return std::nullopt;
    if (auto app = detect_rule0(inst)) return app;
    if (auto app = detect_rule1(inst)) return app;
    if (auto app = detect_rule2(inst)) return app;
    if (auto app = detect_rule3(inst)) return app;
    if (auto app = detect_rule4(inst)) return app;
    NodePartition part = classify_nodes(inst);
    if (mode == Mode::Caterpillar) {
        if (auto app = detect_rule5(inst, part)) return app;
    } else {
        auto decomp = caterpillar_decomposition(inst, part);
        if (auto app = detect_rule5a(inst, part, decomp)) return app;
        if (auto app = detect_rule5b(inst, part, decomp)) return app;
    }
    return std::nullopt;
}

TreeInstance canonical_true_instance() {
    return TreeInstance::build({{0, 1}}, {}, 0);
}

TreeInstance canonical_false_instance() {
    return TreeInstance::build({{0, 1}}, {{0, 1}}, 0);
}

namespace {

TreeInstance finalize_verdict(const TreeInstance& inst) {
    if (inst.verdict() == Verdict::True) return canonical_true_instance();
    if (inst.verdict() == Verdict::False) return canonical_false_instance();
    return inst;
}

}  // namespace

std::pair<TreeInstance, KernelTrace> kernelize(const TreeInstance& inst, Mode mode) {
    if (mode == Mode::Caterpillar && !inst.is_caterpillar())
        throw std::invalid_argument("caterpillar mode on a non-caterpillar tree");

    TreeInstance cur = canonicalize(inst);
    KernelTrace trace;
    trace.initial_digest = cur.digest();
    trace.initial_potential = cur.potential();
    trace.initial_request_length_sum = cur.request_length_sum();

    while (cur.verdict() == Verdict::Open) {
        auto app = first_applicable(cur, mode);
        if (!app) break;
        TraceStep step;
        step.app = *app;
        if (app->action == RuleAction::DeleteEdgeAndDecrementK ||
            app->action == RuleAction::ContractEdge)
            step.pivot_origin = cur.origin(app->pivot_edge);
        cur = canonicalize(apply_rule(cur, *app));
        step.potential_after = cur.potential();
        trace.steps.push_back(std::move(step));
    }

    cur = finalize_verdict(cur);
    trace.final_digest = cur.digest();
    return {cur, trace};
}

TreeInstance replay_trace(const TreeInstance& initial,
                          const std::vector<TraceStep>& steps, Mode mode) {
    if (mode == Mode::Caterpillar && !initial.is_caterpillar())
        throw std::invalid_argument("caterpillar mode on a non-caterpillar tree");
    TreeInstance cur = canonicalize(initial);
    for (const TraceStep& s : steps) cur = canonicalize(apply_rule(cur, s.app));
    return finalize_verdict(cur);
}

std::string KernelTrace::to_text() const {
    std::ostringstream os;
    os << "# initial_digest=" << initial_digest
       << " potential=" << initial_potential
       << " request_length_sum=" << initial_request_length_sum << "\n";
    int i = 0;
    for (const TraceStep& s : steps) {
        os << "step=" << ++i << " rule=" << rule_name(s.app.rule)
           << " action=" << action_name(s.app.action);
        if (s.app.pivot_node != -1) os << " pivot_node=" << s.app.pivot_node;
        if (s.app.pivot_edge.a != -1)
            os << " pivot_edge=" << s.app.pivot_edge.a << "-" << s.app.pivot_edge.b;
        if (s.app.pivot_request != -1) os << " pivot_request=" << s.app.pivot_request;
        os << " potential=" << s.potential_after << "\n";
    }
    os << "# final_digest=" << final_digest << "\n";
    return os.str();
}

StructuralReport structural_report(const TreeInstance& inst) {
    StructuralReport rep;
    rep.nodes = inst.node_count();
    rep.edges = inst.edge_count();
    rep.requests = static_cast<int>(inst.requests().size());
    rep.k = inst.budget();
    rep.verdict = inst.verdict();
    rep.caterpillar = inst.is_caterpillar();

    NodePartition part = classify_nodes(inst);
    rep.i1 = part.count(NodeClass::I1);
    rep.i2 = part.count(NodeClass::I2);
    rep.i3 = part.count(NodeClass::I3);
    rep.l1 = part.count(NodeClass::L1);
    rep.l2 = part.count(NodeClass::L2);
    rep.l2prime = part.count(NodeClass::L2Prime);
    rep.l3 = part.count(NodeClass::L3);
    rep.inner = static_cast<int>(part.inner.size());
    rep.bad_leaves = static_cast<int>(part.bad_leaves.size());
    rep.caterpillar_count =
        static_cast<int>(caterpillar_decomposition(inst, part).size());

    if (rep.caterpillar) {
        rep.max_wingspan_size = 0;
        for (NodeId x : part.of_class(NodeClass::L2))
            rep.max_wingspan_size =
                std::max(rep.max_wingspan_size, caterpillar_wingspan(inst, part, x).size);
    }

    for (NodeId x : inst.nodes()) {
        std::map<Edge, int> per_direction;
        for (auto& [rid, e] : directions_from(inst, x))
            rep.max_r_neighbors_per_direction =
                std::max(rep.max_r_neighbors_per_direction, ++per_direction[e]);
        std::map<NodeId, int> per_group;
        for (const Request& r : inst.requests()) {
            if (!r.touches(x)) continue;
            NodeId t = r.other(x);
            if (inst.is_leaf(t))
                rep.max_node_to_group_requests =
                    std::max(rep.max_node_to_group_requests, ++per_group[inst.father(t)]);
        }
    }
    {
        std::map<std::pair<NodeId, NodeId>, int> per_pair;
        for (const Request& r : inst.requests()) {
            if (inst.node_count() < 3) break;
            if (!inst.is_leaf(r.u) || !inst.is_leaf(r.v)) continue;
            NodeId g1 = inst.father(r.u), g2 = inst.father(r.v);
            if (g1 == g2) continue;
            auto key = std::make_pair(std::min(g1, g2), std::max(g1, g2));
            rep.max_group_to_group_requests =
                std::max(rep.max_group_to_group_requests, ++per_pair[key]);
        }
    }

    if (inst.verdict() != Verdict::Open) {
        rep.reduced_caterpillar = rep.caterpillar;
        rep.reduced_general = true;
    } else {
        bool pruned = canonicalize(inst).digest() == inst.digest();
        rep.reduced_general = pruned && !first_applicable(inst, Mode::General);
        rep.reduced_caterpillar =
            rep.caterpillar && pruned && !first_applicable(inst, Mode::Caterpillar);
    }
    return rep;
}

std::vector<ClaimCheck> verify_kernel_bounds(const StructuralReport& report, int k,
                                             Mode mode) {
    bool reduced = mode == Mode::Caterpillar ? report.reduced_caterpillar
                                             : report.reduced_general;
    if (!reduced) throw std::invalid_argument("report from a non-reduced instance");
    std::vector<ClaimCheck> rows;
    if (report.verdict != Verdict::Open) return rows;  // vacuous

    const long long kk = k;
    auto add = [&](const std::string& id, long long bound, long long observed) {
        rows.push_back({id, bound, observed, observed <= bound});
    };
    add("bad_leaves", 2 * (kk + 1) * (2 * kk + 1) - 1, report.bad_leaves);
    if (mode == Mode::Caterpillar)
        add("wingspan_size", 2 * (kk + 1) * (4 * kk + 3) - 1, report.max_wingspan_size);
    add("i1_count", kk, report.i1);
    add("i3_count", kk, report.i3);
    add("caterpillar_count", 2 * kk - 1, report.caterpillar_count);
    add("r_neighbors_per_direction", kk + 1, report.max_r_neighbors_per_direction);
    add("node_to_group_requests", kk + 1, report.max_node_to_group_requests);
    add("group_to_group_requests", (2 * kk + 1) * (kk + 2) - 1,
        report.max_group_to_group_requests);
    return rows;
}

KernelizedSolve solve_with_kernel(const TreeInstance& inst, Mode mode) {
    auto [kernel, trace] = kernelize(inst, mode);
    KernelizedSolve out;

    std::vector<Edge> deleted;
    for (const TraceStep& s : trace.steps)
        if (s.app.action == RuleAction::DeleteEdgeAndDecrementK)
            deleted.push_back(s.pivot_origin);

    if (kernel.verdict() == Verdict::False) return out;
    if (kernel.verdict() == Verdict::True) {
        out.sat = true;
        out.cut = deleted;
    } else {
        auto cut = solve_decision(kernel, kernel.budget());
        if (!cut) return out;
        out.sat = true;
        for (const Edge& e : *cut) out.cut.push_back(kernel.origin(e));
        out.cut.insert(out.cut.end(), deleted.begin(), deleted.end());
    }
    std::sort(out.cut.begin(), out.cut.end());
    out.cut.erase(std::unique(out.cut.begin(), out.cut.end()), out.cut.end());
    if (!is_multicut(inst, out.cut) ||
        static_cast<int>(out.cut.size()) > inst.budget())
        throw std::logic_error("certificate lifting failed");
    return out;
}

}  // namespace multicut

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "multicut/generator.hpp"
#include "multicut/instance_io.hpp"
#include "multicut/kernelizer.hpp"
#include "multicut/solver.hpp"

using namespace multicut;

namespace {

constexpr int kExitUnsat = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

Mode parse_mode(const std::string& mode) {
    if (mode == "caterpillar") return Mode::Caterpillar;
    if (mode == "general") return Mode::General;
    throw CLI::ValidationError("--mode must be caterpillar or general");
}

int cmd_kernelize(const std::string& in, const std::string& out,
                  const std::string& mode_str, const std::string& trace_path) {
    TreeInstance inst;
    try {
        inst = parse_instance_file(in);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    Mode mode = parse_mode(mode_str);
    TreeInstance kernel;
    KernelTrace trace;
    try {
        std::tie(kernel, trace) = kernelize(inst, mode);
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!out.empty()) write_instance_file(kernel, out);
    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        tf << trace.to_text();
    }
    std::cout << "nodes_in=" << inst.node_count() << " nodes_out=" << kernel.node_count()
              << " k_in=" << inst.budget() << " k_out=" << kernel.budget()
              << " steps=" << trace.steps.size()
              << " verdict=" << verdict_name(kernel.verdict()) << "\n";
    return 0;
}

int cmd_solve(const std::string& in, int k_override, bool use_kernel) {
    TreeInstance inst;
    try {
        inst = parse_instance_file(in);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (k_override >= 0) {
        inst.set_budget(k_override);
        inst.set_verdict(inst.requests().empty()
                             ? Verdict::True
                             : (k_override == 0 ? Verdict::False : Verdict::Open));
    }

    std::map<NodeId, int> renum;
    int next = 1;
    for (NodeId v : inst.nodes()) renum[v] = next++;
    auto print_cut = [&](const std::vector<Edge>& cut) {
        std::cout << "SAT";
        for (const Edge& e : cut) std::cout << " " << renum.at(e.a) << "-" << renum.at(e.b);
        std::cout << "\n";
    };

    if (use_kernel) {
        KernelizedSolve res = solve_with_kernel(inst, Mode::General);
        if (!res.sat) {
            std::cout << "UNSAT\n";
            return kExitUnsat;
        }
        print_cut(res.cut);
        return 0;
    }
    auto cut = solve_decision(inst, inst.budget());
    if (!cut) {
        std::cout << "UNSAT\n";
        return kExitUnsat;
    }
    print_cut(*cut);
    return 0;
}

int cmd_verify(const std::string& in, int trials, std::uint64_t seed, int max_n,
               int max_k) {
    int pass = 0, fail = 0;
    auto check_one = [&](const TreeInstance& inst, const std::string& label) {
        auto [kernel, trace] = kernelize(inst, Mode::General);
        int opt = brute_force_opt(inst);
        bool truth = opt <= inst.budget();
        bool kernel_truth;
        if (kernel.verdict() == Verdict::True)
            kernel_truth = true;
        else if (kernel.verdict() == Verdict::False)
            kernel_truth = false;
        else
            kernel_truth = brute_force_opt(kernel) <= kernel.budget();
        bool ok = kernel_truth == truth;
        (ok ? pass : fail)++;
        std::cout << label << " n=" << inst.node_count() << " k=" << inst.budget()
                  << " oracle=" << (truth ? "SAT" : "UNSAT")
                  << " kernel=" << (kernel_truth ? "SAT" : "UNSAT")
                  << " verdict=" << verdict_name(kernel.verdict())
                  << (ok ? " pass" : " FAIL") << "\n";
    };

    try {
        if (!in.empty()) {
            check_one(parse_instance_file(in), "file=" + in);
        } else {
            for (int t = 0; t < trials; ++t) {
                GenParams p;
                p.n_min = 4;
                p.n_max = max_n;
                p.shape = static_cast<TreeShape>(t % 4);
                p.request_count = 2 + t % 9;
                p.k_min = 1;
                p.k_max = max_k;
                p.seed = seed + t;
                check_one(gen_instance(p), "trial=" + std::to_string(t));
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "pass=" << pass << " fail=" << fail << "\n";
    return fail == 0 ? 0 : kExitUnsat;
}

int cmd_stats(const std::string& in, const std::string& mode_str, bool need_reduced) {
    TreeInstance inst;
    try {
        inst = parse_instance_file(in);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    Mode mode = parse_mode(mode_str);
    StructuralReport rep = structural_report(inst);
    bool reduced =
        mode == Mode::Caterpillar ? rep.reduced_caterpillar : rep.reduced_general;
    if (need_reduced && !reduced) {
        std::cerr << "instance is not reduced for mode " << mode_name(mode) << "\n";
        return kExitUsage;
    }
    std::cout << "nodes=" << rep.nodes << " edges=" << rep.edges
              << " requests=" << rep.requests << " k=" << rep.k
              << " verdict=" << verdict_name(rep.verdict)
              << " caterpillar=" << (rep.caterpillar ? 1 : 0) << "\n";
    std::cout << "I1=" << rep.i1 << " I2=" << rep.i2 << " I3=" << rep.i3
              << " L1=" << rep.l1 << " L2=" << rep.l2 << " L2'=" << rep.l2prime
              << " L3=" << rep.l3 << " inner=" << rep.inner
              << " bad_leaves=" << rep.bad_leaves << "\n";
    std::cout << "caterpillars=" << rep.caterpillar_count
              << " max_wingspan_size=" << rep.max_wingspan_size
              << " max_r_neighbors_per_direction=" << rep.max_r_neighbors_per_direction
              << " max_node_to_group=" << rep.max_node_to_group_requests
              << " max_group_to_group=" << rep.max_group_to_group_requests
              << " reduced=" << (reduced ? 1 : 0) << "\n";
    if (reduced) {
        for (const ClaimCheck& c : verify_kernel_bounds(rep, rep.k, mode))
            std::cout << "claim=" << c.id << " bound=" << c.bound
                      << " observed=" << c.observed << " "
                      << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

int cmd_gen(const std::string& out, const std::string& shape_str, int n, int requests,
            int k, std::uint64_t seed, int length_bias) {
    GenParams p;
    if (shape_str == "path")
        p.shape = TreeShape::Path;
    else if (shape_str == "caterpillar")
        p.shape = TreeShape::Caterpillar;
    else if (shape_str == "spider")
        p.shape = TreeShape::Spider;
    else if (shape_str == "random")
        p.shape = TreeShape::Random;
    else {
        std::cerr << "unknown shape " << shape_str << "\n";
        return kExitUsage;
    }
    p.n_min = p.n_max = n;
    p.request_count = requests;
    p.k_min = p.k_max = k;
    p.seed = seed;
    p.length_bias = length_bias;
    TreeInstance inst;
    try {
        inst = gen_instance(p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (out.empty())
        std::cout << serialize_instance(inst);
    else
        write_instance_file(inst, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multicut-in-trees kernelization toolkit"};
    app.require_subcommand(1);

    std::string in, out, trace_path, mode_str = "general", shape = "random";
    int k_override = -1, trials = 100, max_n = 20, max_k = 4, n = 20, requests = 8, k = 3;
    int length_bias = 0;
    std::uint64_t seed = 1;
    bool use_kernel = false, need_reduced = false;

    auto* ck = app.add_subcommand("kernelize", "reduce an instance to its kernel");
    ck->add_option("input", in, "instance file")->required();
    ck->add_option("-o,--out", out, "kernel output file");
    ck->add_option("--mode", mode_str, "caterpillar|general");
    ck->add_option("--trace", trace_path, "write the rule application log");

    auto* cs = app.add_subcommand("solve", "decide the instance, print SAT/UNSAT");
    cs->add_option("input", in, "instance file")->required();
    cs->add_option("-k", k_override, "budget override");
    cs->add_flag("--use-kernel", use_kernel, "kernelize before branching");

    auto* cv = app.add_subcommand("verify", "compare kernel verdicts with the oracle");
    cv->add_option("input", in, "single instance file (otherwise generated)");
    cv->add_option("--trials", trials, "number of generated instances");
    cv->add_option("--seed", seed, "generator seed");
    cv->add_option("--max-n", max_n, "largest generated size");
    cv->add_option("--max-k", max_k, "largest generated budget");

    auto* ct = app.add_subcommand("stats", "structural report and size-claim table");
    ct->add_option("input", in, "instance file")->required();
    ct->add_option("--mode", mode_str, "caterpillar|general");
    ct->add_flag("--reduced", need_reduced, "fail unless the instance is reduced");

    auto* cg = app.add_subcommand("gen", "generate a seeded instance");
    cg->add_option("-o,--out", out, "output file (stdout otherwise)");
    cg->add_option("--shape", shape, "path|caterpillar|spider|random");
    cg->add_option("--n", n, "node count");
    cg->add_option("--requests", requests, "request count");
    cg->add_option("--k", k, "budget");
    cg->add_option("--seed", seed, "seed");
    cg->add_option("--length-bias", length_bias, "<0 short, 0 uniform, >0 long");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ck->parsed()) return cmd_kernelize(in, out, mode_str, trace_path);
        if (cs->parsed()) return cmd_solve(in, k_override, use_kernel);
        if (cv->parsed()) return cmd_verify(in, trials, seed, max_n, max_k);
        if (ct->parsed()) return cmd_stats(in, mode_str, need_reduced);
        if (cg->parsed())
            return cmd_gen(out, shape, n, requests, k, seed, length_bias);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

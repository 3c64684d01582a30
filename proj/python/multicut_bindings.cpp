#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "multicut/generator.hpp"
#include "multicut/instance_io.hpp"
#include "multicut/kernelizer.hpp"
#include "multicut/packing.hpp"
#include "multicut/solver.hpp"

namespace py = pybind11;
using namespace multicut;

namespace {

using EdgePair = std::pair<NodeId, NodeId>;

std::vector<EdgePair> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<EdgePair> out;
    for (const Edge& e : edges) out.push_back({e.a, e.b});
    return out;
}

TreeInstance build(const std::vector<EdgePair>& edges,
                   const std::vector<EdgePair>& requests, int k) {
    return TreeInstance::build(edges, requests, k);
}

Mode mode_from(const std::string& m) {
    if (m == "caterpillar") return Mode::Caterpillar;
    if (m == "general") return Mode::General;
    throw std::invalid_argument("mode must be 'caterpillar' or 'general'");
}

py::dict report_dict(const StructuralReport& r) {
    py::dict d;
    d["nodes"] = r.nodes;
    d["edges"] = r.edges;
    d["requests"] = r.requests;
    d["k"] = r.k;
    d["verdict"] = verdict_name(r.verdict);
    d["caterpillar"] = r.caterpillar;
    d["I1"] = r.i1;
    d["I2"] = r.i2;
    d["I3"] = r.i3;
    d["L1"] = r.l1;
    d["L2"] = r.l2;
    d["L2prime"] = r.l2prime;
    d["L3"] = r.l3;
    d["inner"] = r.inner;
    d["bad_leaves"] = r.bad_leaves;
    d["caterpillar_count"] = r.caterpillar_count;
    d["max_wingspan_size"] = r.max_wingspan_size;
    d["max_r_neighbors_per_direction"] = r.max_r_neighbors_per_direction;
    d["max_node_to_group_requests"] = r.max_node_to_group_requests;
    d["max_group_to_group_requests"] = r.max_group_to_group_requests;
    d["reduced_caterpillar"] = r.reduced_caterpillar;
    d["reduced_general"] = r.reduced_general;
    return d;
}

}  // namespace

PYBIND11_MODULE(_multicut, m) {
    m.doc() = "polynomial kernelization of unweighted multicut in trees";

    py::class_<TreeInstance>(m, "TreeInstance")
        .def_property_readonly("nodes", &TreeInstance::nodes)
        .def_property_readonly("edges",
                               [](const TreeInstance& t) { return edge_pairs(t.edges()); })
        .def_property_readonly("requests",
                               [](const TreeInstance& t) {
                                   std::vector<EdgePair> out;
                                   for (const Request& r : t.requests())
                                       out.push_back({r.u, r.v});
                                   return out;
                               })
        .def_property_readonly("k", &TreeInstance::budget)
        .def_property_readonly("verdict",
                               [](const TreeInstance& t) {
                                   return std::string(verdict_name(t.verdict()));
                               })
        .def_property_readonly("node_count", &TreeInstance::node_count)
        .def("digest", &TreeInstance::digest)
        .def("__repr__", [](const TreeInstance& t) {
            return "<TreeInstance n=" + std::to_string(t.node_count()) +
                   " m=" + std::to_string(t.requests().size()) +
                   " k=" + std::to_string(t.budget()) + " " + verdict_name(t.verdict()) +
                   ">";
        });

    m.def("build_instance", &build, py::arg("edges"), py::arg("requests"), py::arg("k"));
    m.def("parse", [](const std::string& text) {
        std::istringstream in(text);
        return parse_instance(in);
    });
    m.def("serialize", &serialize_instance);

    m.def(
        "kernelize",
        [](const TreeInstance& inst, const std::string& mode) {
            auto [kernel, trace] = kernelize(inst, mode_from(mode));
            return py::make_tuple(kernel, trace.to_text());
        },
        py::arg("instance"), py::arg("mode") = "general");

    m.def(
        "solve_decision",
        [](const TreeInstance& inst, int k) -> py::object {
            auto cut = solve_decision(inst, k);
            if (!cut) return py::none();
            return py::cast(edge_pairs(*cut));
        },
        py::arg("instance"), py::arg("k"));
    m.def(
        "solve_with_kernel",
        [](const TreeInstance& inst) -> py::object {
            KernelizedSolve res = solve_with_kernel(inst, Mode::General);
            if (!res.sat) return py::none();
            return py::cast(edge_pairs(res.cut));
        },
        py::arg("instance"));
    m.def("brute_force_opt", &brute_force_opt, py::arg("instance"));
    m.def(
        "max_edge_disjoint_requests",
        [](const TreeInstance& inst) { return max_edge_disjoint_requests(inst).request_ids; },
        py::arg("instance"));

    m.def("structural_report",
          [](const TreeInstance& inst) { return report_dict(structural_report(inst)); });
    m.def(
        "verify_kernel_bounds",
        [](const TreeInstance& inst, const std::string& mode) {
            StructuralReport rep = structural_report(inst);
            py::list rows;
            for (const ClaimCheck& c : verify_kernel_bounds(rep, rep.k, mode_from(mode))) {
                py::dict d;
                d["claim"] = c.id;
                d["bound"] = c.bound;
                d["observed"] = c.observed;
                d["pass"] = c.pass;
                rows.append(d);
            }
            return rows;
        },
        py::arg("instance"), py::arg("mode") = "general");

    m.def(
        "gen_instance",
        [](int n, const std::string& shape, int requests, int k, std::uint64_t seed) {
            GenParams p;
            p.n_min = p.n_max = n;
            p.request_count = requests;
            p.k_min = p.k_max = k;
            p.seed = seed;
            if (shape == "path")
                p.shape = TreeShape::Path;
            else if (shape == "caterpillar")
                p.shape = TreeShape::Caterpillar;
            else if (shape == "spider")
                p.shape = TreeShape::Spider;
            else
                p.shape = TreeShape::Random;
            return gen_instance(p);
        },
        py::arg("n"), py::arg("shape") = "random", py::arg("requests") = 6,
        py::arg("k") = 3, py::arg("seed") = 1);
    m.def(
        "gen_rule_trigger",
        [](int rule, int k, std::uint64_t seed) {
            return gen_rule_trigger(static_cast<RuleId>(rule), k, seed);
        },
        py::arg("rule"), py::arg("k"), py::arg("seed") = 1);
}

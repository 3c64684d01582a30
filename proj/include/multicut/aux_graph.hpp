#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "multicut/tree_instance.hpp"

namespace multicut {

/// Simple undirected graph over opaque integer vertex ids. Used for every
/// matching-based rule detection; labels optionally record which entity of
/// the instance a vertex stands for.
struct AuxGraph {
    std::set<int> vertices;
    std::set<std::pair<int, int>> edges;  // normalized u < v
    std::map<int, std::string> labels;

    void add_vertex(int v, const std::string& label = "") {
        vertices.insert(v);
        if (!label.empty()) labels[v] = label;
    }
    /// Ignores duplicates; throws on self-loops.
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        vertices.insert(u);
        vertices.insert(v);
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const {
        int d = 0;
        for (auto& [a, b] : edges)
            if (a == v || b == v) d++;
        return d;
    }
    int max_degree() const {
        int m = 0;
        for (int v : vertices) m = std::max(m, degree(v));
        return m;
    }
};

struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return static_cast<int>(edges.size()); }
    /// Pairwise vertex-disjoint and every edge present in g.
    bool valid_on(const AuxGraph& g) const;
    bool covers(int v) const;
    /// Matched partner or -1.
    int mate(int v) const;
};

struct IndependentSet {
    std::vector<int> vertices;
    int size() const { return static_cast<int>(vertices.size()); }
    bool valid_on(const AuxGraph& g) const;
};

/// Exact maximum-cardinality matching (blossom augmentation; handles odd
/// cycles). Deterministic: vertices and adjacency are scanned in id order.
Matching max_matching(const AuxGraph& g);

/// Maximal matching by ascending edge scan; size >= floor(m / (2*Delta-1)).
/// Throws when the graph has no edge.
Matching greedy_matching(const AuxGraph& g);

/// Greedy independent set by ascending vertex scan;
/// size >= floor(n / (Delta+1)).
IndependentSet greedy_independent_set(const AuxGraph& g);

}  // namespace multicut

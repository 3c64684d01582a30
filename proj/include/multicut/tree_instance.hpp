#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace multicut {

using NodeId = int;

/// Undirected tree edge, stored with endpoints normalized (a < b).
struct Edge {
    NodeId a = -1;
    NodeId b = -1;

    Edge() = default;
    Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
    bool contains(NodeId v) const { return a == v || b == v; }
    NodeId other(NodeId v) const { return a == v ? b : a; }
};

/// Unordered pair of distinct nodes plus a stable identifier.
/// The associated path is always recomputed from the current tree.
struct Request {
    NodeId u = -1;
    NodeId v = -1;
    int id = -1;

    Request() = default;
    Request(NodeId x, NodeId y, int rid)
        : u(x < y ? x : y), v(x < y ? y : x), id(rid) {}

    bool touches(NodeId n) const { return u == n || v == n; }
    NodeId other(NodeId n) const { return u == n ? v : u; }
    bool same_pair(const Request& o) const { return u == o.u && v == o.v; }
};

enum class Verdict { Open, True, False };

const char* verdict_name(Verdict v);

/// Ordered view of the unique tree path between two nodes.
/// internal_edges drops the pendant leaf edges (0, 1 or 2 of them).
struct PathView {
    std::vector<NodeId> nodes;           // x ... y
    std::vector<Edge> edges;             // nodes.size() - 1 entries
    std::vector<Edge> internal_edges;    // edges between internal nodes
    std::vector<NodeId> internal_nodes;  // nodes that are internal in T

    size_t length() const { return edges.size(); }
};

/// Tree + request multiset + budget. Value semantic; rewrite primitives
/// return modified copies so instances can be shared freely across threads.
class TreeInstance {
  public:
    TreeInstance() = default;

    /// Validates and canonicalizes the input: edge set must form a tree,
    /// request endpoints must exist and differ, duplicate endpoint pairs
    /// are merged (smallest id wins). Verdict is Open unless the request
    /// set is empty (True) or k == 0 with requests remaining (False).
    static TreeInstance build(const std::vector<std::pair<NodeId, NodeId>>& edge_list,
                              const std::vector<std::pair<NodeId, NodeId>>& request_list,
                              int k);

    // --- topology ---
    int node_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    bool has_node(NodeId v) const { return adj_.count(v) != 0; }
    bool has_edge(const Edge& e) const;
    std::vector<NodeId> nodes() const;
    std::vector<Edge> edges() const;
    const std::set<NodeId>& neighbors(NodeId v) const;
    int degree(NodeId v) const;
    bool is_leaf(NodeId v) const { return degree(v) == 1; }
    bool is_internal(NodeId v) const { return degree(v) >= 2; }
    std::vector<NodeId> internal_nodes() const;
    std::vector<NodeId> leaves() const;
    /// Leaves hanging from an internal node (its group).
    std::vector<NodeId> leaves_of(NodeId v) const;
    /// Parent of a leaf (its unique neighbor).
    NodeId father(NodeId leaf) const;
    /// True when the internal nodes induce a path (or there are <= 1 of them).
    bool is_caterpillar() const;

    // --- requests ---
    const std::vector<Request>& requests() const { return requests_; }
    const Request* request_by_id(int id) const;
    bool has_request_pair(NodeId x, NodeId y) const;

    // --- budget / verdict ---
    int budget() const { return budget_; }
    void set_budget(int k) { budget_ = k; }
    Verdict verdict() const { return verdict_; }
    void set_verdict(Verdict v) { verdict_ = v; }

    // --- paths ---
    std::vector<NodeId> path_nodes(NodeId x, NodeId y) const;
    PathView path_view(NodeId x, NodeId y) const;
    PathView request_path(const Request& r) const { return path_view(r.u, r.v); }
    size_t request_length(const Request& r) const;
    /// Sum of all request path lengths (Lemma-style termination measure).
    long long request_length_sum() const;
    /// request_length_sum + node count; strictly decreases under every rule.
    long long potential() const;

    // --- rewrite primitives ---
    /// Contract e: endpoints merge into the survivor (internal endpoint,
    /// ties by smaller id), requests through e shorten by one, requests
    /// whose endpoints merge are dropped, duplicates re-merged.
    TreeInstance contract_edge(const Edge& e) const;
    /// Delete e: remove every request whose path contains e, then contract.
    /// The caller adjusts the budget when a rule requires it.
    TreeInstance delete_edge(const Edge& e) const;
    /// Drop one request by id.
    TreeInstance without_request(int id) const;
    /// Remove leaves that are endpoint of no request, cascading. Trivially
    /// truth-preserving; the kernelizer canonicalizes with this between steps.
    TreeInstance prune_requestless_leaves() const;

    /// Original endpoints (in the instance this one was derived from via
    /// contractions) of a current edge. Identity right after build().
    Edge origin(const Edge& e) const;

    /// FNV-1a hash of the canonical serialization; replay checks use it.
    std::uint64_t digest() const;
    std::string canonical_string() const;

  private:
    std::map<NodeId, std::set<NodeId>> adj_;
    std::vector<Request> requests_;  // sorted by id, unique endpoint pairs
    std::map<Edge, Edge> origin_;
    int budget_ = 0;
    Verdict verdict_ = Verdict::Open;

    void dedupe_requests();
    TreeInstance merge_edge(const Edge& e) const;  // shared contract core
};

}  // namespace multicut

#include "multicut/tree_instance.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace multicut {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Open: return "OPEN";
        case Verdict::True: return "TRUE";
        case Verdict::False: return "FALSE";
    }
    return "?";
}

TreeInstance TreeInstance::build(const std::vector<std::pair<NodeId, NodeId>>& edge_list,
                                 const std::vector<std::pair<NodeId, NodeId>>& request_list,
                                 int k) {
    if (edge_list.empty()) throw std::invalid_argument("empty edge list");
    if (k < 0) throw std::invalid_argument("negative budget");

    TreeInstance t;
    t.budget_ = k;
    for (auto [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("self-loop edge");
        t.adj_[u];
        t.adj_[v];
        Edge e(u, v);
        if (t.origin_.count(e)) throw std::invalid_argument("duplicate edge");
        t.adj_[u].insert(v);
        t.adj_[v].insert(u);
        t.origin_[e] = e;
    }
    if (t.edge_count() != t.node_count() - 1)
        throw std::invalid_argument("cycle detected: |E| != |V|-1");

    // connectivity sweep
    {
        std::set<NodeId> seen;
        std::deque<NodeId> q{t.adj_.begin()->first};
        seen.insert(q.front());
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop_front();
            for (NodeId y : t.adj_.at(x))
                if (seen.insert(y).second) q.push_back(y);
        }
        if (static_cast<int>(seen.size()) != t.node_count())
            throw std::invalid_argument("disconnected edge set");
    }

    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (auto [x, y] : request_list) {
        if (x == y) throw std::invalid_argument("self-request");
        if (!t.has_node(x) || !t.has_node(y))
            throw std::invalid_argument("request endpoint not in tree");
        pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    int rid = 0;
    for (auto [x, y] : pairs) t.requests_.emplace_back(x, y, rid++);

    if (t.requests_.empty())
        t.verdict_ = Verdict::True;
    else if (k == 0)
        t.verdict_ = Verdict::False;
    return t;
}

int TreeInstance::edge_count() const {
    int deg = 0;
    for (auto& [v, ns] : adj_) deg += static_cast<int>(ns.size());
    return deg / 2;
}

bool TreeInstance::has_edge(const Edge& e) const {
    auto it = adj_.find(e.a);
    return it != adj_.end() && it->second.count(e.b) != 0;
}

std::vector<NodeId> TreeInstance::nodes() const {
    std::vector<NodeId> out;
    out.reserve(adj_.size());
    for (auto& [v, ns] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> TreeInstance::edges() const {
    std::vector<Edge> out;
    for (auto& [v, ns] : adj_)
        for (NodeId w : ns)
            if (v < w) out.emplace_back(v, w);
    return out;
}

const std::set<NodeId>& TreeInstance::neighbors(NodeId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::out_of_range("unknown node id");
    return it->second;
}

int TreeInstance::degree(NodeId v) const {
    return static_cast<int>(neighbors(v).size());
}

std::vector<NodeId> TreeInstance::internal_nodes() const {
    std::vector<NodeId> out;
    for (auto& [v, ns] : adj_)
        if (ns.size() >= 2) out.push_back(v);
    return out;
}

std::vector<NodeId> TreeInstance::leaves() const {
    std::vector<NodeId> out;
    for (auto& [v, ns] : adj_)
        if (ns.size() <= 1) out.push_back(v);
    return out;
}

std::vector<NodeId> TreeInstance::leaves_of(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId w : neighbors(v))
        if (is_leaf(w)) out.push_back(w);
    return out;
}

NodeId TreeInstance::father(NodeId leaf) const {
    if (!is_leaf(leaf)) throw std::invalid_argument("father() wants a leaf");
    return *neighbors(leaf).begin();
}

bool TreeInstance::is_caterpillar() const {
    for (NodeId v : internal_nodes()) {
        int internal_deg = 0;
        for (NodeId w : neighbors(v))
            if (is_internal(w)) internal_deg++;
        if (internal_deg > 2) return false;
    }
    return true;
}

const Request* TreeInstance::request_by_id(int id) const {
    for (const Request& r : requests_)
        if (r.id == id) return &r;
    return nullptr;
}

bool TreeInstance::has_request_pair(NodeId x, NodeId y) const {
    Request probe(x, y, -1);
    for (const Request& r : requests_)
        if (r.same_pair(probe)) return true;
    return false;
}

std::vector<NodeId> TreeInstance::path_nodes(NodeId x, NodeId y) const {
    if (x == y) throw std::invalid_argument("path endpoints equal");
    if (!has_node(x) || !has_node(y)) throw std::out_of_range("unknown node id");
    std::map<NodeId, NodeId> parent;
    std::deque<NodeId> q{x};
    parent[x] = x;
    while (!q.empty()) {
        NodeId c = q.front();
        q.pop_front();
        if (c == y) break;
        for (NodeId w : adj_.at(c))
            if (!parent.count(w)) {
                parent[w] = c;
                q.push_back(w);
            }
    }
    std::vector<NodeId> path;
    for (NodeId c = y;; c = parent.at(c)) {
        path.push_back(c);
        if (c == x) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

PathView TreeInstance::path_view(NodeId x, NodeId y) const {
    PathView pv;
    pv.nodes = path_nodes(x, y);
    for (size_t i = 0; i + 1 < pv.nodes.size(); ++i)
        pv.edges.emplace_back(pv.nodes[i], pv.nodes[i + 1]);
    size_t lo = 0, hi = pv.edges.size();
    if (is_leaf(pv.nodes.front())) lo++;
    if (is_leaf(pv.nodes.back()) && hi > lo) hi--;
    for (size_t i = lo; i < hi; ++i) pv.internal_edges.push_back(pv.edges[i]);
    for (NodeId v : pv.nodes)
        if (is_internal(v)) pv.internal_nodes.push_back(v);
    return pv;
}

size_t TreeInstance::request_length(const Request& r) const {
    return path_nodes(r.u, r.v).size() - 1;
}

long long TreeInstance::request_length_sum() const {
    long long s = 0;
    for (const Request& r : requests_) s += static_cast<long long>(request_length(r));
    return s;
}

long long TreeInstance::potential() const {
    return request_length_sum() + node_count();
}

void TreeInstance::dedupe_requests() {
    std::sort(requests_.begin(), requests_.end(),
              [](const Request& a, const Request& b) { return a.id < b.id; });
    std::vector<Request> keep;
    for (const Request& r : requests_) {
        bool dup = false;
        for (const Request& k : keep)
            if (k.same_pair(r)) { dup = true; break; }
        if (!dup) keep.push_back(r);
    }
    requests_ = std::move(keep);
}

TreeInstance TreeInstance::merge_edge(const Edge& e) const {
    if (!has_edge(e)) throw std::invalid_argument("edge absent");
    NodeId survivor, gone;
    bool a_int = is_internal(e.a), b_int = is_internal(e.b);
    if (a_int != b_int) {
        survivor = a_int ? e.a : e.b;
    } else {
        survivor = std::min(e.a, e.b);
    }
    gone = e.other(survivor);

    TreeInstance t = *this;
    t.adj_[survivor].erase(gone);
    t.adj_[gone].erase(survivor);
    t.origin_.erase(e);
    for (NodeId w : adj_.at(gone)) {
        if (w == survivor) continue;
        Edge old_edge(gone, w), new_edge(survivor, w);
        t.adj_[w].erase(gone);
        t.adj_[w].insert(survivor);
        t.adj_[survivor].insert(w);
        t.origin_[new_edge] = origin_.at(old_edge);
        t.origin_.erase(old_edge);
    }
    t.adj_.erase(gone);

    std::vector<Request> reqs;
    for (Request r : t.requests_) {
        if (r.u == gone) r = Request(survivor, r.v, r.id);
        if (r.v == gone) r = Request(r.u, survivor, r.id);
        if (r.u != r.v) reqs.push_back(r);
    }
    t.requests_ = std::move(reqs);
    t.dedupe_requests();
    return t;
}

TreeInstance TreeInstance::contract_edge(const Edge& e) const {
    return merge_edge(e);
}

TreeInstance TreeInstance::delete_edge(const Edge& e) const {
    if (!has_edge(e)) throw std::invalid_argument("edge absent");
    TreeInstance t = *this;
    std::vector<Request> keep;
    for (const Request& r : requests_) {
        auto path = path_nodes(r.u, r.v);
        bool through = false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (Edge(path[i], path[i + 1]) == e) { through = true; break; }
        if (!through) keep.push_back(r);
    }
    t.requests_ = std::move(keep);
    return t.merge_edge(e);
}

TreeInstance TreeInstance::without_request(int id) const {
    TreeInstance t = *this;
    auto it = std::find_if(t.requests_.begin(), t.requests_.end(),
                           [&](const Request& r) { return r.id == id; });
    if (it == t.requests_.end()) throw std::invalid_argument("unknown request id");
    t.requests_.erase(it);
    return t;
}

TreeInstance TreeInstance::prune_requestless_leaves() const {
    TreeInstance t = *this;
    bool changed = true;
    while (changed && t.node_count() > 1) {
        changed = false;
        for (NodeId v : t.leaves()) {
            bool used = false;
            for (const Request& r : t.requests_)
                if (r.touches(v)) { used = true; break; }
            if (!used) {
                t = t.merge_edge(Edge(v, t.father(v)));
                changed = true;
                break;
            }
        }
    }
    return t;
}

Edge TreeInstance::origin(const Edge& e) const {
    auto it = origin_.find(e);
    if (it == origin_.end()) throw std::out_of_range("edge absent");
    return it->second;
}

std::string TreeInstance::canonical_string() const {
    std::ostringstream os;
    os << "n=" << node_count() << ";k=" << budget_ << ";v=" << verdict_name(verdict_) << ";N:";
    for (NodeId v : nodes()) os << v << ",";
    os << ";E:";
    for (const Edge& e : edges()) os << e.a << "-" << e.b << ",";
    os << ";R:";
    for (const Request& r : requests_) os << r.u << "-" << r.v << ",";
    return os.str();
}

std::uint64_t TreeInstance::digest() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : canonical_string()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace multicut

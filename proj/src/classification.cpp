#include "multicut/classification.hpp"

#include <algorithm>
#include <deque>

namespace multicut {

const char* node_class_name(NodeClass c) {
    switch (c) {
        case NodeClass::I1: return "I1";
        case NodeClass::I2: return "I2";
        case NodeClass::I3: return "I3";
        case NodeClass::L1: return "L1";
        case NodeClass::L2: return "L2";
        case NodeClass::L2Prime: return "L2'";
        case NodeClass::L3: return "L3";
    }
    return "?";
}

NodePartition classify_nodes(const TreeInstance& inst) {
    NodePartition p;

    // bad leaves: endpoints of a request between two leaves of one group
    for (const Request& r : inst.requests()) {
        if (inst.node_count() < 3) break;
        if (inst.is_leaf(r.u) && inst.is_leaf(r.v) &&
            inst.father(r.u) == inst.father(r.v)) {
            p.bad_leaves.insert(r.u);
            p.bad_leaves.insert(r.v);
        }
    }

    std::vector<NodeId> internals = inst.internal_nodes();
    if (internals.empty()) {
        // degenerate: <= 2 nodes, no internal tree
        for (NodeId v : inst.nodes()) p.cls[v] = NodeClass::L1;
        return p;
    }

    for (NodeId v : internals) {
        int tdeg = 0;
        bool has_leaf = false;
        for (NodeId w : inst.neighbors(v)) {
            if (inst.is_internal(w))
                tdeg++;
            else
                has_leaf = true;
        }
        if (tdeg <= 1)
            p.cls[v] = NodeClass::I1;
        else if (tdeg == 2)
            p.cls[v] = NodeClass::I2;
        else
            p.cls[v] = NodeClass::I3;
        if (!has_leaf) p.inner.insert(v);
    }

    for (NodeId v : inst.nodes()) {
        if (inst.is_internal(v)) continue;
        NodeId f = inst.father(v);
        p.group_of[v] = f;
        switch (p.cls.at(f)) {
            case NodeClass::I1: p.cls[v] = NodeClass::L1; break;
            case NodeClass::I2:
                p.cls[v] = p.bad_leaves.count(v) ? NodeClass::L2Prime : NodeClass::L2;
                break;
            default: p.cls[v] = NodeClass::L3; break;
        }
    }
    return p;
}

std::vector<Caterpillar> caterpillar_decomposition(const TreeInstance& inst,
                                                   const NodePartition& part) {
    std::set<NodeId> removed;
    for (auto& [v, c] : part.cls)
        if (c == NodeClass::I3 || c == NodeClass::L3) removed.insert(v);

    std::set<NodeId> unseen;
    for (NodeId v : inst.nodes())
        if (!removed.count(v)) unseen.insert(v);

    std::vector<Caterpillar> out;
    while (!unseen.empty()) {
        NodeId start = *unseen.begin();
        std::set<NodeId> comp;
        std::deque<NodeId> q{start};
        comp.insert(start);
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop_front();
            for (NodeId y : inst.neighbors(x))
                if (!removed.count(y) && comp.insert(y).second) q.push_back(y);
        }
        for (NodeId v : comp) unseen.erase(v);

        Caterpillar cat;
        // degree within the component
        auto comp_degree = [&](NodeId v) {
            int d = 0;
            for (NodeId w : inst.neighbors(v))
                if (comp.count(w)) d++;
            return d;
        };
        std::vector<NodeId> own_internal;
        for (NodeId v : comp) {
            if (inst.is_internal(v))
                cat.backbone.push_back(v);
            else
                cat.pendant_leaves.push_back(v);
            if (comp_degree(v) >= 2) own_internal.push_back(v);
        }

        // order the backbone along its path
        if (cat.backbone.size() > 1) {
            std::set<NodeId> bset(cat.backbone.begin(), cat.backbone.end());
            auto bdeg = [&](NodeId v) {
                int d = 0;
                for (NodeId w : inst.neighbors(v))
                    if (bset.count(w)) d++;
                return d;
            };
            NodeId end = -1;
            for (NodeId v : cat.backbone)
                if (bdeg(v) <= 1 && (end == -1 || v < end)) end = v;
            std::vector<NodeId> ordered{end};
            std::set<NodeId> used{end};
            while (ordered.size() < cat.backbone.size()) {
                NodeId cur = ordered.back();
                for (NodeId w : inst.neighbors(cur))
                    if (bset.count(w) && !used.count(w)) {
                        ordered.push_back(w);
                        used.insert(w);
                        break;
                    }
            }
            if (ordered.front() > ordered.back())
                std::reverse(ordered.begin(), ordered.end());
            cat.backbone = ordered;
        }

        cat.trivial = own_internal.size() < 2;
        if (!cat.trivial) {
            // extremities: endpoints of the component's own internal path
            std::set<NodeId> iset(own_internal.begin(), own_internal.end());
            std::vector<NodeId> ends;
            for (NodeId v : own_internal) {
                int d = 0;
                for (NodeId w : inst.neighbors(v))
                    if (iset.count(w)) d++;
                if (d <= 1) ends.push_back(v);
            }
            std::sort(ends.begin(), ends.end());
            cat.extremity_a = ends.front();
            cat.extremity_b = ends.back();
        } else if (!own_internal.empty()) {
            cat.extremity_a = cat.extremity_b = own_internal.front();
        }
        std::sort(cat.pendant_leaves.begin(), cat.pendant_leaves.end());
        out.push_back(std::move(cat));
    }
    std::sort(out.begin(), out.end(), [](const Caterpillar& a, const Caterpillar& b) {
        NodeId x = a.backbone.empty() ? (a.pendant_leaves.empty() ? -1 : a.pendant_leaves[0])
                                      : a.backbone[0];
        NodeId y = b.backbone.empty() ? (b.pendant_leaves.empty() ? -1 : b.pendant_leaves[0])
                                      : b.backbone[0];
        return x < y;
    });
    return out;
}

std::map<NodeId, int> backbone_positions(const Caterpillar& cat) {
    std::map<NodeId, int> pos;
    for (size_t i = 0; i < cat.backbone.size(); ++i)
        pos[cat.backbone[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace multicut

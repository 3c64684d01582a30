#include "multicut/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace multicut {

TreeInstance parse_instance(std::istream& in) {
    std::string line;
    bool got_header = false;
    long long n = 0, m = 0, k = 0;
    std::vector<std::pair<NodeId, NodeId>> edges, requests;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (got_header || !(iss >> kind >> n >> m >> k) || kind != "multicut")
                throw ParseError("line " + std::to_string(ln) + ": bad header");
            if (n < 1 || m < 0 || k < 0)
                throw ParseError("line " + std::to_string(ln) + ": bad counts");
            got_header = true;
            continue;
        }
        if (!got_header)
            throw ParseError("line " + std::to_string(ln) + ": data before header");
        long long u = 0, v = 0;
        if (!(iss >> u >> v))
            throw ParseError("line " + std::to_string(ln) + ": expected two ids");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("line " + std::to_string(ln) + ": id out of range");
        if (tag == "e")
            edges.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1)});
        else if (tag == "r")
            requests.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1)});
        else
            throw ParseError("line " + std::to_string(ln) + ": unknown tag " + tag);
    }
    if (!got_header) throw ParseError("missing header");
    if (static_cast<long long>(edges.size()) != n - 1)
        throw ParseError("edge count does not match header");
    if (static_cast<long long>(requests.size()) != m)
        throw ParseError("request count does not match header");
    try {
        return TreeInstance::build(edges, requests, static_cast<int>(k));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

TreeInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_instance(in);
}

std::string serialize_instance(const TreeInstance& inst) {
    std::map<NodeId, int> renum;
    int next = 1;
    for (NodeId v : inst.nodes()) renum[v] = next++;

    std::ostringstream os;
    os << "c verdict " << verdict_name(inst.verdict()) << "\n";
    os << "p multicut " << inst.node_count() << " " << inst.requests().size() << " "
       << inst.budget() << "\n";
    for (const Edge& e : inst.edges())
        os << "e " << renum.at(e.a) << " " << renum.at(e.b) << "\n";
    std::vector<std::pair<int, int>> reqs;
    for (const Request& r : inst.requests()) {
        int x = renum.at(r.u), y = renum.at(r.v);
        reqs.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(reqs.begin(), reqs.end());
    for (auto [x, y] : reqs) os << "r " << x << " " << y << "\n";
    return os.str();
}

void write_instance_file(const TreeInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << serialize_instance(inst);
}

}  // namespace multicut

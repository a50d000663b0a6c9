#include "raag/graph_of_groups.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "raag/errors.hpp"

namespace raag {
namespace {

std::string edge_name(const GogEdge& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

} // namespace

GraphOfGroups::GraphOfGroups(SimplicialGraph host, std::vector<GogNode> nodes,
                             std::vector<GogEdge> edges)
    : host_(std::move(host)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const GogNode& x, const GogNode& y) { return x.id < y.id; });
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (nodes_[i].id == nodes_[i + 1].id)
            throw InputError("duplicate node id " + std::to_string(nodes_[i].id));
    for (const auto& node : nodes_)
        for (const auto& label : node.bag)
            if (!host_.has_vertex(label))
                throw InputError("bag of node " + std::to_string(node.id) +
                                 " contains unknown vertex '" + label + "'");
    for (auto& edge : edges_) {
        if (!has_node(edge.a) || !has_node(edge.b))
            throw InputError("edge " + edge_name(edge) + " references an unknown node");
        for (const auto& label : edge.adhesion)
            if (!host_.has_vertex(label))
                throw InputError("adhesion of edge " + edge_name(edge) +
                                 " contains unknown vertex '" + label + "'");
        if (edge.a > edge.b) std::swap(edge.a, edge.b);
    }
    std::sort(edges_.begin(), edges_.end(), [](const GogEdge& x, const GogEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
}

bool GraphOfGroups::has_node(int id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const GogNode& n, int key) { return n.id < key; });
    return it != nodes_.end() && it->id == id;
}

const GogNode& GraphOfGroups::node(int id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const GogNode& n, int key) { return n.id < key; });
    if (it == nodes_.end() || it->id != id)
        throw InputError("unknown node id " + std::to_string(id));
    return *it;
}

std::vector<int> GraphOfGroups::neighbors_of(int id) const {
    std::vector<int> out;
    for (const auto& edge : edges_) {
        if (edge.a == id) out.push_back(edge.b);
        if (edge.b == id) out.push_back(edge.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GraphOfGroups::is_tree() const {
    if (nodes_.empty()) return false;
    if (edges_.size() != nodes_.size() - 1) return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& edge : edges_) {
        if (edge.a == edge.b) return false;
        if (!seen.emplace(edge.a, edge.b).second) return false;
    }
    std::map<int, std::vector<int>> adjacency;
    for (const auto& edge : edges_) {
        adjacency[edge.a].push_back(edge.b);
        adjacency[edge.b].push_back(edge.a);
    }
    std::set<int> reached;
    std::queue<int> queue;
    queue.push(nodes_.front().id);
    reached.insert(nodes_.front().id);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int w : adjacency[v])
            if (reached.insert(w).second) queue.push(w);
    }
    return reached.size() == nodes_.size();
}

std::map<int, int> GraphOfGroups::canonical_ids() const {
    std::map<int, int> out;
    if (nodes_.empty()) return out;

    if (!is_tree()) {
        // Deterministic fallback for structures the verifier will reject.
        std::vector<const GogNode*> order;
        for (const auto& node : nodes_) order.push_back(&node);
        std::sort(order.begin(), order.end(), [](const GogNode* x, const GogNode* y) {
            return std::tie(x->bag, x->id) < std::tie(y->bag, y->id);
        });
        int next = 0;
        for (const GogNode* node : order) out[node->id] = next++;
        return out;
    }

    std::map<int, std::vector<std::pair<int, const VertexSet*>>> adjacency;
    for (const auto& edge : edges_) {
        adjacency[edge.a].emplace_back(edge.b, &edge.adhesion);
        adjacency[edge.b].emplace_back(edge.a, &edge.adhesion);
    }

    // Canonical subtree encoding: bag, incoming adhesion, then the sorted
    // encodings of the children. Equal encodings mean isomorphic subtrees,
    // so any remaining tie cannot affect the serialized bytes.
    std::function<std::string(int, int, const VertexSet*)> encode =
        [&](int v, int parent, const VertexSet* via) -> std::string {
        std::vector<std::string> child_encodings;
        for (const auto& [w, adhesion] : adjacency[v])
            if (w != parent) child_encodings.push_back(encode(w, v, adhesion));
        std::sort(child_encodings.begin(), child_encodings.end());
        std::string enc = "(" + node(v).bag.to_string() + "|" + (via ? via->to_string() : "-");
        for (const auto& child : child_encodings) enc += child;
        enc += ")";
        return enc;
    };

    const VertexSet& least_bag =
        std::min_element(nodes_.begin(), nodes_.end(), [](const GogNode& x, const GogNode& y) {
            return x.bag < y.bag;
        })->bag;
    int root = -1;
    std::string root_encoding;
    for (const auto& node : nodes_) {
        if (!(node.bag == least_bag)) continue;
        std::string enc = encode(node.id, -1, nullptr);
        if (root == -1 || enc < root_encoding) {
            root = node.id;
            root_encoding = std::move(enc);
        }
    }

    int next = 0;
    std::function<void(int, int)> assign = [&](int v, int parent) {
        out[v] = next++;
        std::vector<std::pair<std::string, int>> children;
        for (const auto& [w, adhesion] : adjacency[v])
            if (w != parent) children.emplace_back(encode(w, v, adhesion), w);
        std::sort(children.begin(), children.end());
        for (const auto& [enc, w] : children) assign(w, v);
    };
    assign(root, -1);
    return out;
}

GraphOfGroups GraphOfGroups::renumbered(const std::map<int, int>& id_map) const {
    std::vector<GogNode> nodes;
    nodes.reserve(nodes_.size());
    for (const auto& node : nodes_) nodes.push_back({id_map.at(node.id), node.bag});
    std::vector<GogEdge> edges;
    edges.reserve(edges_.size());
    for (const auto& edge : edges_)
        edges.push_back({id_map.at(edge.a), id_map.at(edge.b), edge.adhesion});
    return GraphOfGroups(host_, std::move(nodes), std::move(edges));
}

ReassemblyVerdict verify_reassembly(const SimplicialGraph& g, const GraphOfGroups& gog) {
    if (gog.host() != g)
        throw PreconditionError("decomposition host differs from the graph under verification");

    ReassemblyVerdict verdict;
    auto report = [&verdict](std::string message) {
        verdict.violations.push_back(std::move(message));
    };

    const auto& nodes = gog.nodes();
    const auto& edges = gog.edges();

    if (nodes.empty()) {
        report("decomposition has no nodes");
        verdict.ok = false;
        return verdict;
    }

    if (!gog.is_tree()) {
        report("not a tree: " + std::to_string(nodes.size()) + " nodes, " +
               std::to_string(edges.size()) + " edges");
    }

    for (const auto& edge : edges) {
        const std::string name = std::to_string(edge.a) + "-" + std::to_string(edge.b);
        bool labels_known = true;
        for (const auto& label : edge.adhesion)
            if (!g.has_vertex(label)) labels_known = false;
        if (labels_known && !g.is_clique(edge.adhesion))
            report("adhesion " + edge.adhesion.to_string() + " of edge " + name +
                   " is not a clique of the host");
        const VertexSet& bag_a = gog.node(edge.a).bag;
        const VertexSet& bag_b = gog.node(edge.b).bag;
        if (!edge.adhesion.subset_of(bag_a))
            report("adhesion " + edge.adhesion.to_string() + " of edge " + name +
                   " not contained in bag of node " + std::to_string(edge.a));
        if (!edge.adhesion.subset_of(bag_b))
            report("adhesion " + edge.adhesion.to_string() + " of edge " + name +
                   " not contained in bag of node " + std::to_string(edge.b));
        const VertexSet intersection = bag_a.set_intersection(bag_b);
        if (intersection != edge.adhesion)
            report("adhesion " + edge.adhesion.to_string() + " of edge " + name +
                   " differs from bag intersection " + intersection.to_string());
    }

    for (const auto& label : g.vertex_labels()) {
        bool covered = false;
        for (const auto& node : nodes)
            if (node.bag.contains(label)) {
                covered = true;
                break;
            }
        if (!covered) report("vertex " + label + " uncovered");
    }
    for (const auto& [u, v] : g.edge_list()) {
        bool covered = false;
        for (const auto& node : nodes)
            if (node.bag.contains(u) && node.bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) report("edge " + u + "-" + v + " uncovered");
    }

    // Running intersection: for each vertex the nodes containing it must be
    // connected through edges whose endpoints both contain it.
    for (const auto& label : g.vertex_labels()) {
        std::set<int> holding;
        for (const auto& node : nodes)
            if (node.bag.contains(label)) holding.insert(node.id);
        if (holding.size() <= 1) continue;
        std::map<int, std::vector<int>> adjacency;
        for (const auto& edge : edges)
            if (holding.count(edge.a) && holding.count(edge.b)) {
                adjacency[edge.a].push_back(edge.b);
                adjacency[edge.b].push_back(edge.a);
            }
        std::set<int> reached;
        std::queue<int> queue;
        queue.push(*holding.begin());
        reached.insert(*holding.begin());
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int w : adjacency[v])
                if (reached.insert(w).second) queue.push(w);
        }
        if (reached.size() != holding.size())
            report("running intersection violated for vertex " + label);
    }

    verdict.ok = verdict.violations.empty();
    return verdict;
}

GraphOfGroups contract_reducible(const GraphOfGroups& gog) {
    std::map<int, VertexSet> bags;
    for (const auto& node : gog.nodes()) bags.emplace(node.id, node.bag);
    std::vector<GogEdge> edges = gog.edges();

    for (;;) {
        int reducible = -1;
        std::vector<std::size_t> incident;
        for (const auto& [id, bag] : bags) {
            incident.clear();
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (edges[i].a == id || edges[i].b == id) incident.push_back(i);
            if (incident.size() != 2) continue;
            if (edges[incident[0]].adhesion != bag || edges[incident[1]].adhesion != bag)
                continue;
            const auto other = [&](std::size_t i) {
                return edges[i].a == id ? edges[i].b : edges[i].a;
            };
            if (other(incident[0]) == other(incident[1])) continue; // not a tree locally
            reducible = id;
            break;
        }
        if (reducible == -1) break;

        const auto other = [&](std::size_t i) {
            return edges[i].a == reducible ? edges[i].b : edges[i].a;
        };
        const int n0 = other(incident[0]);
        const int n1 = other(incident[1]);
        // Contract the edge toward the smaller neighbor id: the node melts
        // into that neighbor and its other edge is re-attached there.
        const std::size_t kept = n0 < n1 ? incident[1] : incident[0];
        const int target = std::min(n0, n1);
        GogEdge moved = edges[kept];
        if (moved.a == reducible) moved.a = target;
        if (moved.b == reducible) moved.b = target;
        std::vector<GogEdge> next;
        next.reserve(edges.size() - 1);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (i != incident[0] && i != incident[1]) next.push_back(edges[i]);
        next.push_back(moved);
        edges = std::move(next);
        bags.erase(reducible);
    }

    std::vector<GogNode> nodes;
    nodes.reserve(bags.size());
    for (const auto& [id, bag] : bags) nodes.push_back({id, bag});
    return GraphOfGroups(gog.host(), std::move(nodes), std::move(edges));
}

} // namespace raag

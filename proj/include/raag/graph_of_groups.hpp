#pragma once

#include <map>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/vertex_set.hpp"

namespace raag {

struct GogNode {
    int id;
    VertexSet bag;
};

struct GogEdge {
    int a;
    int b;
    VertexSet adhesion;
};

/// A decomposition of a host graph: nodes carry vertex subsets ("bags"),
/// edges carry the shared subset ("adhesion"). Semantically this presents
/// the host's group as a tree of subgroup amalgams once verify_reassembly
/// accepts it; the type itself only enforces representability (distinct
/// node ids, known endpoints, labels drawn from the host), so that invalid
/// decompositions can be built and then diagnosed.
class GraphOfGroups {
public:
    GraphOfGroups(SimplicialGraph host, std::vector<GogNode> nodes, std::vector<GogEdge> edges);

    const SimplicialGraph& host() const { return host_; }
    /// Ascending id.
    const std::vector<GogNode>& nodes() const { return nodes_; }
    const std::vector<GogEdge>& edges() const { return edges_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    bool has_node(int id) const;
    const GogNode& node(int id) const;
    /// Ids of nodes sharing an edge with id, ascending.
    std::vector<int> neighbors_of(int id) const;

    /// True iff the underlying node/edge structure is a tree (connected,
    /// |E| = |V|-1, no self-edges or repeated edges).
    bool is_tree() const;

    /// Renumbering that makes semantically equal decompositions identical:
    /// ids follow a depth-first order from the lexicographically least bag,
    /// children ordered by a canonical subtree encoding. Returns the
    /// old-id -> new-id map. Falls back to (bag, id) order for non-trees.
    std::map<int, int> canonical_ids() const;
    /// Applies an id map (must be a bijection onto 0..n-1).
    GraphOfGroups renumbered(const std::map<int, int>& id_map) const;
    GraphOfGroups canonical() const { return renumbered(canonical_ids()); }

private:
    SimplicialGraph host_;
    std::vector<GogNode> nodes_;
    std::vector<GogEdge> edges_;
};

struct ReassemblyVerdict {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks every decomposition invariant against the host g and reports all
/// violations: tree shape; each adhesion a clique of g contained in both
/// endpoint bags and equal to their intersection; every vertex and edge of
/// g covered by some bag; and the running intersection property (the nodes
/// containing any fixed vertex form a connected subtree).
ReassemblyVerdict verify_reassembly(const SimplicialGraph& g, const GraphOfGroups& gog);

/// Removes every valence-two node whose bag equals both incident adhesions
/// by contracting the edge toward the smaller neighbor id. Surviving nodes
/// keep their ids. Idempotent.
GraphOfGroups contract_reducible(const GraphOfGroups& gog);

} // namespace raag

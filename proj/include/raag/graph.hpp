#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raag/vertex_set.hpp"

namespace raag {

/// A finite simplicial graph: ordered distinct vertex labels plus a set of
/// unordered edges with no loops and no multi-edges. Immutable after
/// construction; all queries are pure and safe to run concurrently.
///
/// The declaration order of the vertices is the canonical vertex order and
/// is preserved by induced_subgraph and serialization.
class SimplicialGraph {
public:
    /// The empty graph (no vertices, no edges).
    SimplicialGraph() = default;

    /// Throws InputError on duplicate labels, empty labels, unknown edge
    /// endpoints, loop edges, or duplicate edges.
    SimplicialGraph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }

    /// Declaration order.
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    VertexSet vertex_set() const { return VertexSet(labels_); }

    bool has_vertex(const std::string& label) const;
    /// Throws InputError for unknown labels.
    int index_of(const std::string& label) const;
    const std::string& label_of(int index) const { return labels_.at(static_cast<std::size_t>(index)); }

    bool adjacent(const std::string& u, const std::string& v) const;
    bool adjacent_by_index(int u, int v) const;
    /// Neighbor indices, sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    /// Edges in canonical order: endpoints ordered by declaration index,
    /// list sorted by (first index, second index).
    std::vector<std::pair<std::string, std::string>> edge_list() const;

    /// Subgraph induced on s (which must be a subset of the vertices);
    /// keeps the host declaration order. induced_subgraph(vertex_set()) == *this.
    SimplicialGraph induced_subgraph(const VertexSet& s) const;

    /// Connected components; the empty graph has zero components and is not
    /// connected. Components are ordered by their first vertex in
    /// declaration order.
    std::vector<VertexSet> components() const;
    bool is_connected() const;

    /// Every pair of distinct vertices adjacent; vacuously true for zero or
    /// one vertices.
    bool is_complete() const;
    /// s must be a subset of the vertices; the empty set is a clique.
    bool is_clique(const VertexSet& s) const;

    /// Neighbors of v / neighbors of v together with v itself.
    VertexSet link(const std::string& v) const;
    VertexSet star(const std::string& v) const;

    /// Structural equality: same vertex sequence and same edge set.
    bool operator==(const SimplicialGraph& other) const;
    bool operator!=(const SimplicialGraph& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

} // namespace raag

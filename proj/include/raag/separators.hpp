#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/vertex_set.hpp"

namespace raag {

/// Inventory of the separating cliques of a graph.
///
/// Invariants: by_size keys are exactly the sizes with a nonempty list;
/// within each size the sets are in lexicographic order of sorted labels;
/// minimal_size is the smallest key (absent when by_size is empty);
/// cut_vertices lists exactly the members of by_size[1] as labels.
struct SeparatorReport {
    std::optional<int> minimal_size;
    std::map<int, std::vector<VertexSet>> by_size;
    std::vector<std::string> cut_vertices;
};

/// True iff removing s increases the number of connected components and
/// leaves at least one vertex. For connected g this is the usual notion
/// (the remainder has at least two components). s must consist of vertices
/// of g; it need not be a clique.
bool is_separating(const SimplicialGraph& g, const VertexSet& s);

/// Enumerates every separating clique of size 1..max_size in nondecreasing
/// size. max_size defaults to |V(g)|-2 (no larger set can separate) and is
/// clamped to that bound. With min_only, stops after the smallest size that
/// yields separators (the report then carries only that size).
/// Defined for disconnected hosts via the extended is_separating notion.
SeparatorReport enumerate_separating_cliques(const SimplicialGraph& g,
                                             std::optional<int> max_size = std::nullopt,
                                             bool min_only = false);

/// Minimal-size separating cliques of a connected, non-complete graph.
/// Returns (nullopt, {}) when no separating clique exists. Throws
/// PreconditionError naming the violated condition otherwise.
std::pair<std::optional<int>, std::vector<VertexSet>>
min_separating_cliques(const SimplicialGraph& g);

/// Exactly the vertices whose removal increases the number of components
/// (articulation points, computed in linear time). Sorted lexicographically.
std::vector<std::string> cut_vertices(const SimplicialGraph& g);

} // namespace raag

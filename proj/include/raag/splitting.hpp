#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph_of_groups.hpp"
#include "raag/vertex_set.hpp"

namespace raag {

/// Trichotomy for "does the group of g split nontrivially over an abelian
/// subgroup": it does iff g is disconnected, complete (free-abelian case),
/// or has a separating clique. Exactly one kind applies, checked in the
/// precedence Disconnected > Complete > SeparatingClique.
enum class SplittingKind { Disconnected, Complete, SeparatingClique, NoAbelianSplitting };

struct SplittingClass {
    SplittingKind kind = SplittingKind::NoAbelianSplitting;
    /// Disconnected: the components (free factors).
    std::vector<VertexSet> components;
    /// Complete: the number of vertices (rank of the free-abelian group).
    int rank = 0;
    /// SeparatingClique: the lexicographically least minimum-size witness
    /// and the components it cuts the graph into.
    VertexSet separating_clique;
    std::vector<VertexSet> remainder_components;
};

/// Classifies a nonempty graph. Throws InputError for the empty graph
/// (trivial group; splitting undefined). The single-vertex graph classifies
/// as Complete with rank 1 (the degenerate infinite-cyclic case).
SplittingClass classify(const SimplicialGraph& g);

/// Splits a connected graph along a separating clique k: with components
/// C1..Cm of g minus k, the result is the star of amalgams over k. For
/// m == 2 the reduced one-edge form (bags C1 union k, C2 union k) is
/// returned; for m >= 3 a central node with bag k carries one leaf per
/// component. Throws PreconditionError when g is disconnected, k is not a
/// clique, or k does not separate.
GraphOfGroups clique_amalgam(const SimplicialGraph& g, const VertexSet& k);

/// One-edge splitting that eliminates v: with star_e = star(v) minus
/// star_h, the result has bags g minus star_h and star(v) with adhesion
/// star_e. Preconditions (PreconditionError otherwise): star(v) is a
/// clique; v in star_h, star_h contained in star(v); g minus star_h is
/// nonempty; and every x in star_h satisfies star(x) = star(v), which is
/// what makes the two bags cover every edge of g.
GraphOfGroups star_elimination(const SimplicialGraph& g, const std::string& v,
                               const VertexSet& star_h);

} // namespace raag

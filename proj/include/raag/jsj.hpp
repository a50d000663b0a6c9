#pragma once

#include <map>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph_of_groups.hpp"
#include "raag/vertex_set.hpp"

namespace raag {

/// Why recursion stopped at a leaf bag: the bag is a clique, or it is
/// connected with no separating clique at all.
enum class LeafCertificate { Clique, NoSeparatingClique };

/// One recursion level: the subgraph that was split, the minimal separating
/// clique size k found there, and the clique(s) used. parent indexes the
/// level whose refinement produced this subgraph (-1 at the root).
struct TraceEntry {
    int parent = -1;
    VertexSet subgraph;
    int min_clique_size = 0;
    std::vector<VertexSet> cliques;
};

struct JSJDecomposition {
    GraphOfGroups gog;
    /// Per node id: every node of a finished decomposition is a leaf.
    std::map<int, LeafCertificate> leaf_certificates;
    std::vector<TraceEntry> trace;
};

/// Common refinement of star splittings of g over pairwise distinct
/// minimal-size separating cliques K^1..K^t. A single splitting is returned
/// unchanged. Otherwise the bags are the maximal sets of vertices that no
/// chosen clique-removal places in different components (equivalently: the
/// closures component-of-g-minus-all-cliques plus the related clique
/// vertices, together with the maximal such sets inside the union of the
/// cliques), with one center node per clique K^i attached to every bag
/// containing it. Throws PreconditionError when hosts differ, an input is
/// not a star splitting over a separating clique, cliques repeat or have
/// different sizes; the result is re-verified and any internal violation
/// raises std::logic_error.
GraphOfGroups refine(const SimplicialGraph& g, const std::vector<GraphOfGroups>& splittings);

/// The vertex-elliptic abelian JSJ decomposition of a connected nonempty
/// graph's group: repeatedly split along all minimal-size separating
/// cliques at once, refine into a single tree, and recurse on the bags
/// (where the minimal size strictly increases) until every bag is a clique
/// or has no separating clique. Node ids are canonical; the result passes
/// verify_reassembly. A graph with no separating clique yields the trivial
/// single-node decomposition.
JSJDecomposition build_jsj(const SimplicialGraph& g);

/// contract_reducible lifted to a decomposition: certificates of removed
/// nodes are dropped, surviving ids renumbered canonically.
JSJDecomposition contract_reducible(const JSJDecomposition& jsj);

} // namespace raag

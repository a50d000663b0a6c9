#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/separators.hpp"
#include "raag/splitting.hpp"

namespace raag {

/// Brute-force reference implementations used to certify the production
/// modules. They work straight from the definitions — every vertex subset
/// is enumerated, cliqueness is an all-pairs adjacency scan, components are
/// counted with a union-find over the raw edge list — and intentionally
/// share no algorithm code with the separator/splitting modules. Guarded to
/// graphs with at most 12 vertices (PreconditionError beyond).
SeparatorReport oracle_separating_cliques(const SimplicialGraph& g);
SplittingClass oracle_classify(const SimplicialGraph& g);

struct GeneratorParams {
    int n = 0;               ///< vertex count (path, cycle, complete, star, tree, gnp)
    int max_n = 7;           ///< size bound for all_connected
    double p = 0.5;          ///< edge probability for gnp
    int count = 1;           ///< graphs to emit (tree, gnp); sample i uses seed + i
    std::vector<int> sizes;  ///< shared_clique: {left, right, shared}
};

/// Deterministic corpus generator. Families: path, cycle, complete, star
/// (n = leaf count), tree (random, Pruefer-decoded), gnp (Erdos-Renyi,
/// n <= 12), shared_clique (two complete graphs glued along a common
/// clique), all_connected (every connected graph on <= max_n <= 7 vertices
/// up to label permutation, canonical representatives). Throws InputError
/// on unknown family or invalid parameters.
std::vector<SimplicialGraph> generate(const std::string& family, const GeneratorParams& params,
                                      std::uint64_t seed);

/// The all_connected family by itself (handy for tests).
std::vector<SimplicialGraph> all_connected_graphs_up_to(int max_n);

} // namespace raag

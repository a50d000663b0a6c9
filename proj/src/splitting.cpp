#include "raag/splitting.hpp"

#include "raag/errors.hpp"
#include "raag/separators.hpp"

namespace raag {

SplittingClass classify(const SimplicialGraph& g) {
    if (g.vertex_count() == 0)
        throw InputError("empty graph: trivial group; splitting undefined");

    SplittingClass result;
    auto components = g.components();
    if (components.size() > 1) {
        result.kind = SplittingKind::Disconnected;
        result.components = std::move(components);
        return result;
    }
    if (g.is_complete()) {
        result.kind = SplittingKind::Complete;
        result.rank = g.vertex_count();
        return result;
    }
    auto [size, cliques] = min_separating_cliques(g);
    if (size) {
        result.kind = SplittingKind::SeparatingClique;
        result.separating_clique = cliques.front(); // least witness: buckets are sorted
        result.remainder_components =
            g.induced_subgraph(g.vertex_set().set_difference(result.separating_clique))
                .components();
        return result;
    }
    result.kind = SplittingKind::NoAbelianSplitting;
    return result;
}

GraphOfGroups clique_amalgam(const SimplicialGraph& g, const VertexSet& k) {
    if (!g.is_connected())
        throw PreconditionError("graph is disconnected; clique amalgams require a connected graph");
    if (!g.is_clique(k))
        throw PreconditionError(k.to_string() + " is not a clique");
    if (!is_separating(g, k))
        throw PreconditionError(k.to_string() + " is not separating");

    const auto components = g.induced_subgraph(g.vertex_set().set_difference(k)).components();
    std::vector<GogNode> nodes;
    std::vector<GogEdge> edges;
    if (components.size() == 2) {
        nodes.push_back({0, components[0].set_union(k)});
        nodes.push_back({1, components[1].set_union(k)});
        edges.push_back({0, 1, k});
    } else {
        nodes.push_back({0, k});
        for (std::size_t i = 0; i < components.size(); ++i) {
            const int id = static_cast<int>(i) + 1;
            nodes.push_back({id, components[i].set_union(k)});
            edges.push_back({0, id, k});
        }
    }
    return GraphOfGroups(g, std::move(nodes), std::move(edges));
}

GraphOfGroups star_elimination(const SimplicialGraph& g, const std::string& v,
                               const VertexSet& star_h) {
    const VertexSet star_v = g.star(v);
    if (!g.is_clique(star_v))
        throw PreconditionError("star(" + v + ") = " + star_v.to_string() + " is not a clique");
    if (!star_h.contains(v))
        throw PreconditionError("star_h " + star_h.to_string() + " does not contain " + v);
    if (!star_h.subset_of(star_v))
        throw PreconditionError("star_h " + star_h.to_string() + " is not contained in star(" +
                                v + ") = " + star_v.to_string());
    const VertexSet remainder = g.vertex_set().set_difference(star_h);
    if (remainder.empty())
        throw PreconditionError("removing star_h " + star_h.to_string() +
                                " leaves an empty graph");
    for (const auto& x : star_h)
        if (g.star(x) != star_v)
            throw PreconditionError("vertex " + x + " in star_h has star(" + x + ") = " +
                                    g.star(x).to_string() + " different from star(" + v +
                                    ") = " + star_v.to_string() +
                                    "; the splitting would not cover every edge");

    std::vector<GogNode> nodes;
    nodes.push_back({0, remainder});
    nodes.push_back({1, star_v});
    std::vector<GogEdge> edges;
    edges.push_back({0, 1, star_v.set_difference(star_h)});
    return GraphOfGroups(g, std::move(nodes), std::move(edges));
}

} // namespace raag

#include "raag/jsj.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "raag/errors.hpp"
#include "raag/separators.hpp"
#include "raag/splitting.hpp"

namespace raag {
namespace {

/// The clique a star splitting is taken over: the common adhesion of its
/// edges. One-edge splittings carry no center node; larger ones must have a
/// center whose bag is the adhesion, incident to every edge.
VertexSet splitting_clique(const GraphOfGroups& splitting) {
    if (splitting.edges().empty())
        throw PreconditionError("input splitting has no edges");
    const VertexSet clique = splitting.edges().front().adhesion;
    for (const auto& edge : splitting.edges())
        if (edge.adhesion != clique)
            throw PreconditionError("input is not a star splitting: adhesions differ");
    if (splitting.edges().size() > 1) {
        int center = -1;
        for (const auto& node : splitting.nodes())
            if (node.bag == clique) {
                center = node.id;
                break;
            }
        if (center == -1)
            throw PreconditionError(
                "input is not a star splitting: no center node with bag equal to the adhesion");
        for (const auto& edge : splitting.edges())
            if (edge.a != center && edge.b != center)
                throw PreconditionError(
                    "input is not a star splitting: an edge avoids the center node");
    }
    return clique;
}

std::vector<std::vector<int>> index_components(const SimplicialGraph& g,
                                               const std::vector<bool>& removed) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<bool> seen = removed;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> members;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push(w);
                }
        }
        out.push_back(std::move(members));
    }
    return out;
}

VertexSet labels_of(const SimplicialGraph& g, const std::vector<int>& indices) {
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (int v : indices) labels.push_back(g.label_of(v));
    return VertexSet(std::move(labels));
}

/// Maximal cliques of the relation graph restricted to `candidates`
/// (Bron-Kerbosch). Deterministic: candidates are processed ascending.
void maximal_relation_cliques(const std::vector<int>& candidates,
                              const std::function<bool(int, int)>& related,
                              std::vector<int>& current, std::vector<int> prospective,
                              std::vector<int> excluded, std::vector<std::vector<int>>& out) {
    if (prospective.empty() && excluded.empty()) {
        out.push_back(current);
        return;
    }
    while (!prospective.empty()) {
        const int v = prospective.front();
        prospective.erase(prospective.begin());
        std::vector<int> next_prospective;
        for (int w : prospective)
            if (related(v, w)) next_prospective.push_back(w);
        std::vector<int> next_excluded;
        for (int w : excluded)
            if (related(v, w)) next_excluded.push_back(w);
        current.push_back(v);
        maximal_relation_cliques(candidates, related, current, std::move(next_prospective),
                                 std::move(next_excluded), out);
        current.pop_back();
        excluded.push_back(v);
    }
}

struct BuildResult {
    std::vector<GogNode> nodes; // canonical local ids 0..n-1
    std::vector<GogEdge> edges;
    std::map<int, LeafCertificate> certificates;
    std::vector<TraceEntry> trace;
};

void canonicalize(const SimplicialGraph& host, BuildResult& result) {
    GraphOfGroups gog(host, result.nodes, result.edges);
    const auto ids = gog.canonical_ids();
    GraphOfGroups renumbered = gog.renumbered(ids);
    result.nodes = renumbered.nodes();
    result.edges = renumbered.edges();
    std::map<int, LeafCertificate> certificates;
    for (const auto& [id, certificate] : result.certificates)
        certificates.emplace(ids.at(id), certificate);
    result.certificates = std::move(certificates);
}

BuildResult build_recursive(const SimplicialGraph& h) {
    if (!h.is_connected())
        throw std::logic_error("internal error: recursion reached a disconnected subgraph");

    const auto report = enumerate_separating_cliques(h, std::nullopt, /*min_only=*/true);
    if (!report.minimal_size) {
        BuildResult leaf;
        leaf.nodes.push_back({0, h.vertex_set()});
        leaf.certificates.emplace(0, h.is_complete() ? LeafCertificate::Clique
                                                     : LeafCertificate::NoSeparatingClique);
        return leaf;
    }

    const int k = *report.minimal_size;
    const auto& cliques = report.by_size.at(k);
    std::vector<GraphOfGroups> splittings;
    splittings.reserve(cliques.size());
    for (const auto& clique : cliques) splittings.push_back(clique_amalgam(h, clique));
    const GraphOfGroups lambda = refine(h, splittings).canonical();

    BuildResult result;
    result.trace.push_back({-1, h.vertex_set(), k, cliques});

    // Recurse on every bag; strict growth of the minimal separator size is
    // asserted per level.
    std::vector<BuildResult> subs;
    subs.reserve(static_cast<std::size_t>(lambda.node_count()));
    for (const auto& node : lambda.nodes()) {
        BuildResult sub = build_recursive(h.induced_subgraph(node.bag));
        if (!sub.trace.empty() && sub.trace.front().min_clique_size <= k)
            throw std::logic_error(
                "internal error: minimal separator size did not increase in bag " +
                node.bag.to_string());
        subs.push_back(std::move(sub));
    }

    std::vector<int> base(subs.size() + 1, 0);
    for (std::size_t i = 0; i < subs.size(); ++i)
        base[i + 1] = base[i] + static_cast<int>(subs[i].nodes.size());

    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (const auto& node : subs[i].nodes)
            result.nodes.push_back({base[i] + node.id, node.bag});
        for (const auto& edge : subs[i].edges)
            result.edges.push_back({base[i] + edge.a, base[i] + edge.b, edge.adhesion});
        for (const auto& [id, certificate] : subs[i].certificates)
            result.certificates.emplace(base[i] + id, certificate);
        const int trace_base = static_cast<int>(result.trace.size());
        for (const auto& entry : subs[i].trace) {
            TraceEntry shifted = entry;
            shifted.parent = entry.parent == -1 ? 0 : trace_base + entry.parent;
            result.trace.push_back(std::move(shifted));
        }
    }

    // Graft: re-attach each refinement edge to the least-id node of the
    // sub-decomposition whose bag contains the adhesion (the candidates form
    // a subtree by running intersection).
    const auto attach = [&](int lambda_id, const VertexSet& adhesion) {
        for (const auto& node : subs[static_cast<std::size_t>(lambda_id)].nodes)
            if (adhesion.subset_of(node.bag)) return base[static_cast<std::size_t>(lambda_id)] + node.id;
        throw std::logic_error("internal error: no bag contains adhesion " + adhesion.to_string());
    };
    for (const auto& edge : lambda.edges())
        result.edges.push_back(
            {attach(edge.a, edge.adhesion), attach(edge.b, edge.adhesion), edge.adhesion});

    canonicalize(h, result);
    return result;
}

} // namespace

GraphOfGroups refine(const SimplicialGraph& g, const std::vector<GraphOfGroups>& splittings) {
    if (splittings.empty())
        throw PreconditionError("refine requires at least one splitting");
    for (const auto& splitting : splittings) {
        if (splitting.host() != g)
            throw PreconditionError("input splittings are not all over the same host graph");
        const ReassemblyVerdict verdict = verify_reassembly(g, splitting);
        if (!verdict.ok)
            throw PreconditionError("input splitting does not reassemble the host: " +
                                    verdict.violations.front());
    }

    std::vector<VertexSet> cliques;
    cliques.reserve(splittings.size());
    for (const auto& splitting : splittings) {
        VertexSet clique = splitting_clique(splitting);
        if (!g.is_clique(clique))
            throw PreconditionError("adhesion " + clique.to_string() +
                                    " is not a clique of the host");
        if (!is_separating(g, clique))
            throw PreconditionError("adhesion " + clique.to_string() + " is not separating");
        cliques.push_back(std::move(clique));
    }
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (cliques[i] == cliques[j])
                throw PreconditionError("splitting cliques are not pairwise distinct: " +
                                        cliques[i].to_string());
            if (cliques[i].size() != cliques[j].size())
                throw PreconditionError("splitting cliques differ in size: " +
                                        cliques[i].to_string() + " vs " + cliques[j].to_string());
        }

    if (splittings.size() == 1) return splittings.front();

    const int n = g.vertex_count();
    const int t = static_cast<int>(cliques.size());

    // Per splitting: component id of each vertex in g minus the clique
    // (-1 for clique members themselves).
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(t),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < t; ++i) {
        std::vector<bool> removed(static_cast<std::size_t>(n), false);
        for (const auto& label : cliques[static_cast<std::size_t>(i)])
            removed[static_cast<std::size_t>(g.index_of(label))] = true;
        const auto components = index_components(g, removed);
        for (std::size_t c = 0; c < components.size(); ++c)
            for (int v : components[c])
                comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                    static_cast<int>(c);
    }

    // u,w are unrelated iff some chosen clique-removal leaves them in
    // different components (removed vertices are never separated).
    const std::function<bool(int, int)> related = [&](int u, int w) {
        for (int i = 0; i < t; ++i) {
            const int cu = comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)];
            const int cw = comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)];
            if (cu != -1 && cw != -1 && cu != cw) return false;
        }
        return true;
    };

    // Bags: the maximal sets of pairwise related vertices. Adjacent vertices
    // are always related (separating one from the other would have to delete
    // an endpoint of their edge, and deleted vertices are never separated),
    // so every edge of g lands inside some bag.
    std::vector<int> all_vertices(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all_vertices[static_cast<std::size_t>(v)] = v;
    std::vector<std::vector<int>> cell_indices;
    std::vector<int> current;
    maximal_relation_cliques(all_vertices, related, current, all_vertices, {}, cell_indices);

    std::vector<VertexSet> bags;
    bags.reserve(cell_indices.size());
    for (const auto& cell : cell_indices) bags.push_back(labels_of(g, cell));
    std::sort(bags.begin(), bags.end());

    std::vector<VertexSet> centers = cliques;
    std::sort(centers.begin(), centers.end());

    std::vector<GogNode> nodes;
    std::vector<GogEdge> edges;
    const int cell_count = static_cast<int>(bags.size());
    for (int i = 0; i < cell_count; ++i) nodes.push_back({i, bags[static_cast<std::size_t>(i)]});
    for (int i = 0; i < t; ++i) {
        const int center_id = cell_count + i;
        nodes.push_back({center_id, centers[static_cast<std::size_t>(i)]});
        for (int j = 0; j < cell_count; ++j)
            if (centers[static_cast<std::size_t>(i)].subset_of(bags[static_cast<std::size_t>(j)]))
                edges.push_back({j, center_id, centers[static_cast<std::size_t>(i)]});
    }

    GraphOfGroups result(g, std::move(nodes), std::move(edges));
    const ReassemblyVerdict verdict = verify_reassembly(g, result);
    if (!verdict.ok)
        throw std::logic_error("internal error: refinement failed verification: " +
                               verdict.violations.front());
    return result;
}

JSJDecomposition build_jsj(const SimplicialGraph& g) {
    if (g.vertex_count() == 0)
        throw InputError("empty graph: trivial group; no decomposition");
    if (!g.is_connected())
        throw PreconditionError(
            "graph is disconnected: split into connected components (free factors) first");

    BuildResult built = build_recursive(g);
    JSJDecomposition result{GraphOfGroups(g, std::move(built.nodes), std::move(built.edges)),
                            std::move(built.certificates), std::move(built.trace)};

    const ReassemblyVerdict verdict = verify_reassembly(g, result.gog);
    if (!verdict.ok)
        throw std::logic_error("internal error: decomposition failed verification: " +
                               verdict.violations.front());
    return result;
}

JSJDecomposition contract_reducible(const JSJDecomposition& jsj) {
    const GraphOfGroups contracted = contract_reducible(jsj.gog);
    const auto ids = contracted.canonical_ids();
    JSJDecomposition result{contracted.renumbered(ids), {}, jsj.trace};
    for (const auto& [id, certificate] : jsj.leaf_certificates) {
        const auto it = ids.find(id);
        if (it != ids.end()) result.leaf_certificates.emplace(it->second, certificate);
    }
    return result;
}

} // namespace raag

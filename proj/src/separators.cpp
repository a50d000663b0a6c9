#include "raag/separators.hpp"

#include <algorithm>
#include <queue>

#include "raag/errors.hpp"

namespace raag {
namespace {

int component_count(const SimplicialGraph& g, const std::vector<bool>& removed) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (removed[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
            continue;
        ++count;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (!removed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push(w);
                }
            }
        }
    }
    return count;
}

VertexSet to_vertex_set(const SimplicialGraph& g, const std::vector<int>& indices) {
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (int v : indices) labels.push_back(g.label_of(v));
    return VertexSet(std::move(labels));
}

} // namespace

bool is_separating(const SimplicialGraph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (const auto& label : s) removed[static_cast<std::size_t>(g.index_of(label))] = true;
    if (s.size() == static_cast<std::size_t>(n)) return false; // empty remainder
    const int base = component_count(g, std::vector<bool>(static_cast<std::size_t>(n), false));
    return component_count(g, removed) > base;
}

SeparatorReport enumerate_separating_cliques(const SimplicialGraph& g,
                                             std::optional<int> max_size,
                                             bool min_only) {
    const int n = g.vertex_count();
    int cap = n - 2;
    if (max_size) cap = std::min(cap, *max_size);

    SeparatorReport report;
    if (cap < 1) return report;

    const int base = component_count(g, std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);

    // Grow cliques one vertex at a time (candidates keep ascending index
    // order, so each clique is generated exactly once) and test separation
    // at every size. Separation: strictly more components, nonempty rest.
    std::vector<std::vector<int>> level;
    for (int v = 0; v < n; ++v) level.push_back({v});

    for (int size = 1; size <= cap && !level.empty(); ++size) {
        std::vector<VertexSet> bucket;
        for (const auto& clique : level) {
            for (int v : clique) removed[static_cast<std::size_t>(v)] = true;
            if (component_count(g, removed) > base) bucket.push_back(to_vertex_set(g, clique));
            for (int v : clique) removed[static_cast<std::size_t>(v)] = false;
        }
        if (!bucket.empty()) {
            std::sort(bucket.begin(), bucket.end());
            if (!report.minimal_size) report.minimal_size = size;
            report.by_size.emplace(size, std::move(bucket));
            if (min_only) break;
        }
        if (size == cap) break;
        std::vector<std::vector<int>> next;
        for (const auto& clique : level) {
            for (int w = clique.back() + 1; w < n; ++w) {
                bool extends = true;
                for (int v : clique) {
                    if (!g.adjacent_by_index(v, w)) {
                        extends = false;
                        break;
                    }
                }
                if (extends) {
                    auto grown = clique;
                    grown.push_back(w);
                    next.push_back(std::move(grown));
                }
            }
        }
        level = std::move(next);
    }

    if (auto it = report.by_size.find(1); it != report.by_size.end())
        for (const auto& singleton : it->second)
            report.cut_vertices.push_back(singleton.labels().front());
    return report;
}

std::pair<std::optional<int>, std::vector<VertexSet>>
min_separating_cliques(const SimplicialGraph& g) {
    if (!g.is_connected())
        throw PreconditionError(
            "graph is disconnected; minimal separating cliques require a connected graph");
    if (g.is_complete())
        throw PreconditionError("graph is complete; it has no separating cliques");
    SeparatorReport report = enumerate_separating_cliques(g, std::nullopt, /*min_only=*/true);
    if (!report.minimal_size) return {std::nullopt, {}};
    return {report.minimal_size, report.by_size.at(*report.minimal_size)};
}

std::vector<std::string> cut_vertices(const SimplicialGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> children(static_cast<std::size_t>(n), 0);
    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<std::pair<int, std::size_t>> stack; // (vertex, next neighbor slot)
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            const int v = stack.back().first;
            const auto& nbrs = g.neighbors(v);
            if (stack.back().second < nbrs.size()) {
                const int w = nbrs[stack.back().second++];
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = v;
                    ++children[static_cast<std::size_t>(v)];
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[static_cast<std::size_t>(v)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                stack.pop_back();
                const int p = parent[static_cast<std::size_t>(v)];
                if (p != -1) {
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (p != root &&
                        low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
                        cut[static_cast<std::size_t>(p)] = true;
                }
            }
        }
        if (children[static_cast<std::size_t>(root)] >= 2) cut[static_cast<std::size_t>(root)] = true;
    }

    std::vector<std::string> out;
    for (int v = 0; v < n; ++v)
        if (cut[static_cast<std::size_t>(v)]) out.push_back(g.label_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace raag

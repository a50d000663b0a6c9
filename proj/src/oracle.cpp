#include "raag/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "raag/errors.hpp"

namespace raag {
namespace {

constexpr int kOracleLimit = 12;

void check_guard(const SimplicialGraph& g) {
    if (g.vertex_count() > kOracleLimit)
        throw PreconditionError("oracle size guard: graph has " +
                                std::to_string(g.vertex_count()) + " vertices, limit is " +
                                std::to_string(kOracleLimit));
}

// Literal component count over an arbitrary vertex subset: union-find over
// the raw edge list, nothing shared with the production traversals.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

int literal_component_count(const SimplicialGraph& g, std::uint32_t kept_mask) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& [a, b] : g.edge_list()) {
        const int u = g.index_of(a);
        const int v = g.index_of(b);
        if ((kept_mask >> u & 1u) && (kept_mask >> v & 1u)) uf.unite(u, v);
    }
    std::set<int> roots;
    for (int v = 0; v < n; ++v)
        if (kept_mask >> v & 1u) roots.insert(uf.find(v));
    return static_cast<int>(roots.size());
}

bool literal_clique(const SimplicialGraph& g, std::uint32_t mask) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (!(mask >> u & 1u)) continue;
        for (int v = u + 1; v < n; ++v)
            if ((mask >> v & 1u) && !g.adjacent(g.label_of(u), g.label_of(v))) return false;
    }
    return true;
}

VertexSet mask_to_set(const SimplicialGraph& g, std::uint32_t mask) {
    std::vector<std::string> labels;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask >> v & 1u) labels.push_back(g.label_of(v));
    return VertexSet(std::move(labels));
}

std::string label_for(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    std::string out = "v";
    std::string digits = std::to_string(i);
    while (digits.size() < 3) digits.insert(digits.begin(), '0');
    return out + digits;
}

std::vector<std::string> letter_labels(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(label_for(i));
    return out;
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SimplicialGraph make_path(int n) {
    if (n < 1) throw InputError("path family requires n >= 1");
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(label_for(i), label_for(i + 1));
    return SimplicialGraph(letter_labels(n), edges);
}

SimplicialGraph make_cycle(int n) {
    if (n < 3) throw InputError("cycle family requires n >= 3");
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(label_for(i), label_for(i + 1));
    edges.emplace_back(label_for(n - 1), label_for(0));
    return SimplicialGraph(letter_labels(n), edges);
}

SimplicialGraph make_complete(int n) {
    if (n < 1) throw InputError("complete family requires n >= 1");
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(label_for(i), label_for(j));
    return SimplicialGraph(letter_labels(n), edges);
}

SimplicialGraph make_star(int leaves) {
    if (leaves < 1) throw InputError("star family requires n >= 1 leaves");
    std::vector<std::string> vertices = letter_labels(leaves + 1);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(vertices[0], vertices[static_cast<std::size_t>(i)]);
    return SimplicialGraph(std::move(vertices), edges);
}

SimplicialGraph make_tree(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("tree family requires n >= 1");
    std::vector<std::pair<std::string, std::string>> edges;
    if (n >= 2) {
        std::mt19937_64 rng(seed);
        std::vector<int> pruefer(static_cast<std::size_t>(std::max(0, n - 2)));
        for (auto& entry : pruefer) entry = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int v : pruefer) ++degree[static_cast<std::size_t>(v)];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        for (int v : pruefer) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(label_for(leaf), label_for(v));
            if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        }
        const int a = *leaves.begin();
        const int b = *std::next(leaves.begin());
        edges.emplace_back(label_for(a), label_for(b));
    }
    return SimplicialGraph(letter_labels(n), edges);
}

SimplicialGraph make_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1 || n > kOracleLimit)
        throw InputError("gnp family requires 1 <= n <= " + std::to_string(kOracleLimit));
    if (p < 0.0 || p > 1.0) throw InputError("gnp family requires 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit_draw(rng) < p) edges.emplace_back(label_for(i), label_for(j));
    return SimplicialGraph(letter_labels(n), edges);
}

SimplicialGraph make_shared_clique(const std::vector<int>& sizes) {
    if (sizes.size() != 3)
        throw InputError("shared_clique family requires sizes {left, right, shared}");
    const int left = sizes[0];
    const int right = sizes[1];
    const int shared = sizes[2];
    if (shared < 1 || shared > std::min(left, right) || left < 1 || right < 1)
        throw InputError("shared_clique family requires 1 <= shared <= min(left, right)");
    std::vector<std::string> vertices;
    for (int i = 0; i < shared; ++i) vertices.push_back("s" + std::to_string(i));
    for (int i = 0; i < left - shared; ++i) vertices.push_back("x" + std::to_string(i));
    for (int i = 0; i < right - shared; ++i) vertices.push_back("y" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    const auto add_complete = [&](const std::vector<std::string>& side) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j) edges.emplace_back(side[i], side[j]);
    };
    std::vector<std::string> left_side(vertices.begin(), vertices.begin() + shared);
    for (int i = 0; i < left - shared; ++i)
        left_side.push_back(vertices[static_cast<std::size_t>(shared + i)]);
    std::vector<std::string> right_side(vertices.begin(), vertices.begin() + shared);
    for (int i = 0; i < right - shared; ++i)
        right_side.push_back(vertices[static_cast<std::size_t>(shared + (left - shared) + i)]);
    add_complete(left_side);
    add_complete(right_side);
    // Glued along the shared clique: drop the doubled shared-shared edges.
    std::set<std::pair<std::string, std::string>> unique_edges;
    std::vector<std::pair<std::string, std::string>> final_edges;
    for (auto& [a, b] : edges) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (unique_edges.insert(key).second) final_edges.push_back(key);
    }
    return SimplicialGraph(std::move(vertices), final_edges);
}

// --- exhaustive connected graphs up to isomorphism, n <= 7 ----------------

int pair_slot(int i, int j) { // i < j, colexicographic
    return j * (j - 1) / 2 + i;
}

bool mask_connected(int n, std::uint32_t mask) {
    std::array<std::uint32_t, 7> rows{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_slot(i, j) & 1u) {
                rows[static_cast<std::size_t>(i)] |= 1u << j;
                rows[static_cast<std::size_t>(j)] |= 1u << i;
            }
    std::uint32_t reached = 1u;
    for (;;) {
        std::uint32_t next = reached;
        for (int v = 0; v < n; ++v)
            if (reached >> v & 1u) next |= rows[static_cast<std::size_t>(v)];
        if (next == reached) break;
        reached = next;
    }
    return reached == (n >= 32 ? ~0u : (1u << n) - 1u);
}

/// Minimum adjacency mask over all degree-sorted relabelings: a canonical
/// form for graphs up to isomorphism.
std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    std::array<int, 7> degree{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_slot(i, j) & 1u) {
                ++degree[static_cast<std::size_t>(i)];
                ++degree[static_cast<std::size_t>(j)];
            }
    std::map<int, std::vector<int>> classes; // degree -> original vertices, ascending
    for (int v = 0; v < n; ++v) classes[degree[static_cast<std::size_t>(v)]].push_back(v);

    std::uint32_t best = ~0u;
    std::array<int, 7> slot_to_vertex{};
    std::vector<std::vector<int>> perms;
    for (auto& entry : classes) perms.push_back(entry.second);

    const std::function<void(std::size_t, int)> assign = [&](std::size_t class_index, int slot) {
        if (class_index == perms.size()) {
            std::uint32_t candidate = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    const int u = slot_to_vertex[static_cast<std::size_t>(i)];
                    const int v = slot_to_vertex[static_cast<std::size_t>(j)];
                    const int slot_uv = pair_slot(std::min(u, v), std::max(u, v));
                    if (mask >> slot_uv & 1u) candidate |= 1u << pair_slot(i, j);
                }
            best = std::min(best, candidate);
            return;
        }
        std::vector<int>& members = perms[class_index];
        std::sort(members.begin(), members.end());
        do {
            for (std::size_t i = 0; i < members.size(); ++i)
                slot_to_vertex[static_cast<std::size_t>(slot) + i] = members[i];
            assign(class_index + 1, slot + static_cast<int>(members.size()));
        } while (std::next_permutation(members.begin(), members.end()));
    };
    assign(0, 0);
    return best;
}

} // namespace

SeparatorReport oracle_separating_cliques(const SimplicialGraph& g) {
    check_guard(g);
    const int n = g.vertex_count();
    const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1u;
    const int base = n == 0 ? 0 : literal_component_count(g, full);

    SeparatorReport report;
    std::map<int, std::vector<VertexSet>> buckets;
    for (std::uint32_t mask = 1; n > 0 && mask < (1u << n); ++mask) {
        if (mask == full) continue; // removal must leave something behind
        if (!literal_clique(g, mask)) continue;
        if (literal_component_count(g, full & ~mask) > base) {
            const int size = std::popcount(mask);
            buckets[size].push_back(mask_to_set(g, mask));
        }
    }
    for (auto& [size, sets] : buckets) {
        std::sort(sets.begin(), sets.end());
        report.by_size.emplace(size, std::move(sets));
    }
    if (!report.by_size.empty()) report.minimal_size = report.by_size.begin()->first;
    if (auto it = report.by_size.find(1); it != report.by_size.end())
        for (const auto& singleton : it->second)
            report.cut_vertices.push_back(singleton.labels().front());
    return report;
}

SplittingClass oracle_classify(const SimplicialGraph& g) {
    check_guard(g);
    if (g.vertex_count() == 0)
        throw InputError("empty graph: trivial group; splitting undefined");

    const int n = g.vertex_count();
    const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1u;

    SplittingClass result;
    if (literal_component_count(g, full) > 1) {
        result.kind = SplittingKind::Disconnected;
        // Components, literally: group vertices by union-find root, ordered
        // by first vertex.
        std::map<int, std::vector<std::string>> groups;
        UnionFind uf(n);
        for (const auto& [a, b] : g.edge_list()) uf.unite(g.index_of(a), g.index_of(b));
        std::map<int, int> first_seen;
        for (int v = 0; v < n; ++v) {
            const int root = uf.find(v);
            if (!first_seen.count(root)) first_seen[root] = v;
            groups[root].push_back(g.label_of(v));
        }
        std::vector<std::pair<int, VertexSet>> ordered;
        for (auto& [root, members] : groups)
            ordered.emplace_back(first_seen[root], VertexSet(std::move(members)));
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& entry : ordered) result.components.push_back(std::move(entry.second));
        return result;
    }
    if (literal_clique(g, full)) {
        result.kind = SplittingKind::Complete;
        result.rank = n;
        return result;
    }
    const SeparatorReport report = oracle_separating_cliques(g);
    if (report.minimal_size) {
        result.kind = SplittingKind::SeparatingClique;
        result.separating_clique = report.by_size.at(*report.minimal_size).front();
        std::uint32_t kept = full;
        for (const auto& label : result.separating_clique)
            kept &= ~(1u << g.index_of(label));
        std::map<int, std::vector<std::string>> groups;
        UnionFind uf(n);
        for (const auto& [a, b] : g.edge_list()) {
            const int u = g.index_of(a);
            const int v = g.index_of(b);
            if ((kept >> u & 1u) && (kept >> v & 1u)) uf.unite(u, v);
        }
        std::map<int, int> first_seen;
        for (int v = 0; v < n; ++v) {
            if (!(kept >> v & 1u)) continue;
            const int root = uf.find(v);
            if (!first_seen.count(root)) first_seen[root] = v;
            groups[root].push_back(g.label_of(v));
        }
        std::vector<std::pair<int, VertexSet>> ordered;
        for (auto& [root, members] : groups)
            ordered.emplace_back(first_seen[root], VertexSet(std::move(members)));
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& entry : ordered)
            result.remainder_components.push_back(std::move(entry.second));
        return result;
    }
    result.kind = SplittingKind::NoAbelianSplitting;
    return result;
}

std::vector<SimplicialGraph> all_connected_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw InputError("all_connected family requires 1 <= max_n <= 7");
    std::vector<SimplicialGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::set<std::uint32_t> canonical;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            if (!mask_connected(n, mask)) continue;
            canonical.insert(canonical_mask(n, mask));
        }
        for (std::uint32_t mask : canonical) {
            std::vector<std::pair<std::string, std::string>> edges;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (mask >> pair_slot(i, j) & 1u)
                        edges.emplace_back(label_for(i), label_for(j));
            out.emplace_back(letter_labels(n), edges);
        }
    }
    return out;
}

std::vector<SimplicialGraph> generate(const std::string& family, const GeneratorParams& params,
                                      std::uint64_t seed) {
    std::vector<SimplicialGraph> out;
    if (family == "path") {
        out.push_back(make_path(params.n));
    } else if (family == "cycle") {
        out.push_back(make_cycle(params.n));
    } else if (family == "complete") {
        out.push_back(make_complete(params.n));
    } else if (family == "star") {
        out.push_back(make_star(params.n));
    } else if (family == "tree") {
        for (int i = 0; i < params.count; ++i)
            out.push_back(make_tree(params.n, seed + static_cast<std::uint64_t>(i)));
    } else if (family == "gnp") {
        for (int i = 0; i < params.count; ++i)
            out.push_back(make_gnp(params.n, params.p, seed + static_cast<std::uint64_t>(i)));
    } else if (family == "shared_clique") {
        out.push_back(make_shared_clique(params.sizes));
    } else if (family == "all_connected") {
        out = all_connected_graphs_up_to(params.max_n);
    } else {
        throw InputError("unknown corpus family '" + family + "'");
    }
    return out;
}

} // namespace raag

#include "raag/graph.hpp"

#include <algorithm>
#include <queue>

#include "raag/errors.hpp"

namespace raag {

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw InputError("empty vertex label");
        if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
            throw InputError("duplicate vertex label '" + labels_[i] + "'");
    }
    adj_.resize(labels_.size());
    for (const auto& [a, b] : edges) {
        const int u = index_of(a);
        const int v = index_of(b);
        if (u == v) throw InputError("loop edge at vertex '" + a + "'");
        auto& row = adj_[static_cast<std::size_t>(u)];
        if (std::find(row.begin(), row.end(), v) != row.end())
            throw InputError("duplicate edge '" + a + "'-'" + b + "'");
        row.push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++edge_count_;
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool SimplicialGraph::has_vertex(const std::string& label) const {
    return index_.find(label) != index_.end();
}

int SimplicialGraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown vertex label '" + label + "'");
    return it->second;
}

bool SimplicialGraph::adjacent(const std::string& u, const std::string& v) const {
    return adjacent_by_index(index_of(u), index_of(v));
}

bool SimplicialGraph::adjacent_by_index(int u, int v) const {
    const auto& row = adj_.at(static_cast<std::size_t>(u));
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<std::string, std::string>> SimplicialGraph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(labels_[static_cast<std::size_t>(u)],
                                        labels_[static_cast<std::size_t>(v)]);
    return out;
}

SimplicialGraph SimplicialGraph::induced_subgraph(const VertexSet& s) const {
    std::vector<std::string> vertices;
    vertices.reserve(s.size());
    for (const auto& label : labels_)
        if (s.contains(label)) vertices.push_back(label);
    if (vertices.size() != s.size()) {
        for (const auto& label : s)
            if (!has_vertex(label)) throw InputError("unknown vertex label '" + label + "'");
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) edges.emplace_back(vertices[i], vertices[j]);
    return SimplicialGraph(std::move(vertices), edges);
}

std::vector<VertexSet> SimplicialGraph::components() const {
    std::vector<VertexSet> out;
    std::vector<bool> seen(labels_.size(), false);
    for (int start = 0; start < vertex_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<std::string> members;
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            members.push_back(labels_[static_cast<std::size_t>(v)]);
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push(w);
                }
            }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool SimplicialGraph::is_connected() const {
    return components().size() == 1;
}

bool SimplicialGraph::is_complete() const {
    const auto n = static_cast<long long>(vertex_count());
    return static_cast<long long>(edge_count_) == n * (n - 1) / 2;
}

bool SimplicialGraph::is_clique(const VertexSet& s) const {
    std::vector<int> indices;
    indices.reserve(s.size());
    for (const auto& label : s) indices.push_back(index_of(label));
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            if (!adjacent_by_index(indices[i], indices[j])) return false;
    return true;
}

VertexSet SimplicialGraph::link(const std::string& v) const {
    std::vector<std::string> out;
    for (int w : adj_.at(static_cast<std::size_t>(index_of(v))))
        out.push_back(labels_[static_cast<std::size_t>(w)]);
    return VertexSet(std::move(out));
}

VertexSet SimplicialGraph::star(const std::string& v) const {
    return link(v).set_union(VertexSet{v});
}

bool SimplicialGraph::operator==(const SimplicialGraph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
}

} // namespace raag

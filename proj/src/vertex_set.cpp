#include "raag/vertex_set.hpp"

#include <algorithm>

namespace raag {

VertexSet::VertexSet(std::initializer_list<std::string> labels)
    : VertexSet(std::vector<std::string>(labels)) {}

VertexSet::VertexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

bool VertexSet::contains(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool VertexSet::subset_of(const VertexSet& other) const {
    return std::includes(other.labels_.begin(), other.labels_.end(),
                         labels_.begin(), labels_.end());
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    std::vector<std::string> out;
    out.reserve(labels_.size() + other.labels_.size());
    std::set_union(labels_.begin(), labels_.end(),
                   other.labels_.begin(), other.labels_.end(), std::back_inserter(out));
    VertexSet result;
    result.labels_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    std::vector<std::string> out;
    std::set_intersection(labels_.begin(), labels_.end(),
                          other.labels_.begin(), other.labels_.end(),
                          std::back_inserter(out));
    VertexSet result;
    result.labels_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    std::vector<std::string> out;
    std::set_difference(labels_.begin(), labels_.end(),
                        other.labels_.begin(), other.labels_.end(),
                        std::back_inserter(out));
    VertexSet result;
    result.labels_ = std::move(out);
    return result;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i > 0) out += ',';
        out += labels_[i];
    }
    out += '}';
    return out;
}

} // namespace raag

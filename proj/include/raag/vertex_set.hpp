#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace raag {

/// An immutable set of vertex labels, stored sorted (byte-wise lexicographic)
/// and duplicate-free. Always interpreted relative to some host graph; the
/// operations that take a host validate membership there.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<std::string> labels);
    explicit VertexSet(std::vector<std::string> labels);

    bool empty() const { return labels_.empty(); }
    std::size_t size() const { return labels_.size(); }
    bool contains(const std::string& label) const;
    bool subset_of(const VertexSet& other) const;

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;

    /// Sorted ascending.
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::string>::const_iterator begin() const { return labels_.begin(); }
    std::vector<std::string>::const_iterator end() const { return labels_.end(); }

    /// Renders as "{a,b,c}"; the empty set renders as "{}".
    std::string to_string() const;

    bool operator==(const VertexSet& other) const { return labels_ == other.labels_; }
    bool operator!=(const VertexSet& other) const { return labels_ != other.labels_; }
    /// Lexicographic order on the sorted label sequence.
    bool operator<(const VertexSet& other) const { return labels_ < other.labels_; }

private:
    std::vector<std::string> labels_;
};

} // namespace raag

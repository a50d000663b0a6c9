#pragma once

#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

// Named graphs used across the test suite. Vertex declaration order is part
// of each fixture (it fixes the canonical edge order and serialization).
namespace fixtures {

using raag::SimplicialGraph;

using Edges = std::vector<std::pair<std::string, std::string>>;

inline SimplicialGraph p3() {
    return SimplicialGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

inline SimplicialGraph p4() {
    return SimplicialGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

inline SimplicialGraph p5() {
    return SimplicialGraph({"a", "b", "c", "d", "e"},
                           {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
}

inline SimplicialGraph c4() {
    return SimplicialGraph({"v1", "v2", "v3", "v4"},
                           {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"}});
}

inline SimplicialGraph c5() {
    return SimplicialGraph({"a", "b", "c", "d", "e"},
                           {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
}

inline SimplicialGraph complete(int n) {
    std::vector<std::string> vertices;
    Edges edges;
    for (int i = 0; i < n; ++i) vertices.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(vertices[static_cast<std::size_t>(i)],
                               vertices[static_cast<std::size_t>(j)]);
    return SimplicialGraph(std::move(vertices), edges);
}

/// Star with center c and leaves x, y, z.
inline SimplicialGraph k13() {
    return SimplicialGraph({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
}

/// Triangle a,b,c with pendant d attached to a.
inline SimplicialGraph triangle_pendant() {
    return SimplicialGraph({"a", "b", "c", "d"},
                           {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}});
}

/// Two triangles a,b,c and a,b,d sharing the edge a-b.
inline SimplicialGraph two_triangles() {
    return SimplicialGraph({"a", "b", "c", "d"},
                           {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
}

/// Two isolated vertices u and v.
inline SimplicialGraph two_points() {
    return SimplicialGraph({"u", "v"}, {});
}

/// Triangles b,c,d and c,d,e sharing the edge c-d, plus pendant p on b:
/// JSJ recursion needs two levels (cut vertex b, then separator {c,d}).
inline SimplicialGraph two_level() {
    return SimplicialGraph(
        {"p", "b", "c", "d", "e"},
        {{"p", "b"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
}

} // namespace fixtures

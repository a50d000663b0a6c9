#include "doctest.h"

#include <optional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/oracle.hpp"
#include "raag/separators.hpp"
#include "raag/vertex_set.hpp"

using raag::PreconditionError;
using raag::SimplicialGraph;
using raag::VertexSet;

TEST_CASE("is_separating on the canonical examples") {
    CHECK(raag::is_separating(fixtures::p3(), VertexSet{"b"}));
    CHECK_FALSE(raag::is_separating(fixtures::p3(), VertexSet{"a"}));

    const SimplicialGraph k4 = fixtures::complete(4);
    CHECK_FALSE(raag::is_separating(k4, VertexSet{}));
    CHECK_FALSE(raag::is_separating(k4, VertexSet{"a"}));
    CHECK_FALSE(raag::is_separating(k4, VertexSet{"a", "b"}));
    CHECK_FALSE(raag::is_separating(k4, VertexSet{"a", "b", "c"}));

    // Separation does not require a clique.
    CHECK(raag::is_separating(fixtures::c4(), VertexSet{"v1", "v3"}));
    CHECK_FALSE(raag::is_separating(fixtures::c4(), VertexSet{"v1", "v2"}));

    // Removing everything leaves nothing to disconnect.
    CHECK_FALSE(raag::is_separating(fixtures::p3(), VertexSet{"a", "b", "c"}));
}

TEST_CASE("is_separating extends to disconnected hosts") {
    // p3 plus an isolated vertex: removing b still increases the component
    // count (2 -> 3), removing the isolated vertex does not.
    const SimplicialGraph g({"a", "b", "c", "z"}, {{"a", "b"}, {"b", "c"}});
    CHECK(raag::is_separating(g, VertexSet{"b"}));
    CHECK_FALSE(raag::is_separating(g, VertexSet{"z"}));
    CHECK_FALSE(raag::is_separating(g, VertexSet{"a"}));
}

TEST_CASE("enumeration on p4 finds both sizes") {
    const auto report = raag::enumerate_separating_cliques(fixtures::p4());
    REQUIRE(report.minimal_size.has_value());
    CHECK(*report.minimal_size == 1);
    REQUIRE(report.by_size.count(1) == 1);
    CHECK(report.by_size.at(1) == std::vector<VertexSet>{VertexSet{"b"}, VertexSet{"c"}});
    REQUIRE(report.by_size.count(2) == 1);
    CHECK(report.by_size.at(2) == std::vector<VertexSet>{VertexSet{"b", "c"}});
    CHECK(report.by_size.size() == 2);
    CHECK(report.cut_vertices == std::vector<std::string>{"b", "c"});
}

TEST_CASE("enumeration is empty for c4 and complete graphs") {
    for (const auto& g : {fixtures::c4(), fixtures::complete(5), fixtures::complete(1)}) {
        const auto report = raag::enumerate_separating_cliques(g);
        CHECK_FALSE(report.minimal_size.has_value());
        CHECK(report.by_size.empty());
        CHECK(report.cut_vertices.empty());
    }
}

TEST_CASE("max_size caps and min_only stops early") {
    const auto capped = raag::enumerate_separating_cliques(fixtures::p4(), 1);
    CHECK(capped.by_size.size() == 1);
    CHECK(capped.by_size.count(1) == 1);

    const auto min_only =
        raag::enumerate_separating_cliques(fixtures::p4(), std::nullopt, /*min_only=*/true);
    CHECK(min_only.by_size.size() == 1);
    REQUIRE(min_only.minimal_size.has_value());
    CHECK(*min_only.minimal_size == 1);

    // A graph whose smallest separating clique has size 2: min_only skips
    // size 1 and reports exactly size 2.
    const auto two = raag::enumerate_separating_cliques(fixtures::two_triangles(), std::nullopt,
                                                        /*min_only=*/true);
    REQUIRE(two.minimal_size.has_value());
    CHECK(*two.minimal_size == 2);
    CHECK(two.by_size.at(2) == std::vector<VertexSet>{VertexSet{"a", "b"}});
    CHECK(two.cut_vertices.empty());

    // max_size below the minimal size yields an empty report.
    const auto blocked = raag::enumerate_separating_cliques(fixtures::two_triangles(), 1);
    CHECK_FALSE(blocked.minimal_size.has_value());
}

TEST_CASE("min_separating_cliques guards its preconditions") {
    CHECK_THROWS_WITH_AS(
        raag::min_separating_cliques(fixtures::two_points()),
        "graph is disconnected; minimal separating cliques require a connected graph",
        PreconditionError);
    CHECK_THROWS_WITH_AS(raag::min_separating_cliques(fixtures::complete(3)),
                         "graph is complete; it has no separating cliques", PreconditionError);

    const auto [none_size, none_sets] = raag::min_separating_cliques(fixtures::c5());
    CHECK_FALSE(none_size.has_value());
    CHECK(none_sets.empty());

    const auto [size, sets] = raag::min_separating_cliques(fixtures::p4());
    REQUIRE(size.has_value());
    CHECK(*size == 1);
    CHECK(sets == std::vector<VertexSet>{VertexSet{"b"}, VertexSet{"c"}});
}

TEST_CASE("cut vertices on the canonical examples") {
    CHECK(raag::cut_vertices(fixtures::p4()) == std::vector<std::string>{"b", "c"});
    CHECK(raag::cut_vertices(fixtures::c4()).empty());
    CHECK(raag::cut_vertices(fixtures::k13()) == std::vector<std::string>{"c"});
    CHECK(raag::cut_vertices(fixtures::complete(4)).empty());
    CHECK(raag::cut_vertices(fixtures::triangle_pendant()) == std::vector<std::string>{"a"});
    CHECK(raag::cut_vertices(SimplicialGraph()).empty());
    CHECK(raag::cut_vertices(fixtures::two_points()).empty());

    // Two paths: articulation points are found per component.
    const SimplicialGraph forest({"a", "b", "c", "x", "y", "z"},
                                 {{"a", "b"}, {"b", "c"}, {"x", "y"}, {"y", "z"}});
    CHECK(raag::cut_vertices(forest) == std::vector<std::string>{"b", "y"});
}

TEST_CASE("fast paths agree with the exhaustive oracle on small graphs") {
    for (const auto& g : raag::all_connected_graphs_up_to(6)) {
        const auto expected = raag::oracle_separating_cliques(g);
        const auto actual = raag::enumerate_separating_cliques(g);
        CHECK(actual.minimal_size == expected.minimal_size);
        CHECK(actual.by_size == expected.by_size);
        CHECK(actual.cut_vertices == expected.cut_vertices);
        CHECK(raag::cut_vertices(g) == expected.cut_vertices);
    }
}

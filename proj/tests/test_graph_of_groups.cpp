#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/graph_of_groups.hpp"
#include "raag/splitting.hpp"
#include "raag/vertex_set.hpp"

using raag::GogEdge;
using raag::GogNode;
using raag::GraphOfGroups;
using raag::InputError;
using raag::PreconditionError;
using raag::SimplicialGraph;
using raag::VertexSet;

namespace {

/// The 5-node decomposition of p4 produced by refining the splittings at b
/// and c: path {a,b} - {b} - {b,c} - {c} - {c,d}.
GraphOfGroups p4_chain() {
    return GraphOfGroups(fixtures::p4(),
                         {{0, VertexSet{"a", "b"}},
                          {1, VertexSet{"b"}},
                          {2, VertexSet{"b", "c"}},
                          {3, VertexSet{"c"}},
                          {4, VertexSet{"c", "d"}}},
                         {{0, 1, VertexSet{"b"}},
                          {1, 2, VertexSet{"b"}},
                          {2, 3, VertexSet{"c"}},
                          {3, 4, VertexSet{"c"}}});
}

} // namespace

TEST_CASE("construction validates and normalizes") {
    const SimplicialGraph g = fixtures::p3();
    CHECK_THROWS_WITH_AS(
        GraphOfGroups(g, {{0, VertexSet{"a"}}, {0, VertexSet{"b"}}}, {}),
        "duplicate node id 0", InputError);
    CHECK_THROWS_WITH_AS(GraphOfGroups(g, {{0, VertexSet{"z"}}}, {}),
                         "bag of node 0 contains unknown vertex 'z'", InputError);
    CHECK_THROWS_WITH_AS(
        GraphOfGroups(g, {{0, VertexSet{"a"}}}, {{0, 1, VertexSet{}}}),
        "edge 0-1 references an unknown node", InputError);
    CHECK_THROWS_WITH_AS(
        GraphOfGroups(g, {{0, VertexSet{"a"}}, {1, VertexSet{"b"}}},
                      {{1, 0, VertexSet{"z"}}}),
        "adhesion of edge 1-0 contains unknown vertex 'z'", InputError);

    // Nodes sort by id, edges normalize to a < b and sort.
    const GraphOfGroups gog(g, {{2, VertexSet{"c"}}, {0, VertexSet{"a"}}, {1, VertexSet{"b"}}},
                            {{2, 1, VertexSet{}}, {1, 0, VertexSet{}}});
    CHECK(gog.nodes()[0].id == 0);
    CHECK(gog.nodes()[2].id == 2);
    CHECK(gog.edges()[0].a == 0);
    CHECK(gog.edges()[0].b == 1);
    CHECK(gog.edges()[1].a == 1);
    CHECK(gog.edges()[1].b == 2);
    CHECK(gog.has_node(2));
    CHECK_FALSE(gog.has_node(3));
    CHECK(gog.node(1).bag == VertexSet{"b"});
    CHECK_THROWS_AS(gog.node(9), InputError);
    CHECK(gog.neighbors_of(1) == std::vector<int>{0, 2});
}

TEST_CASE("is_tree") {
    const SimplicialGraph g = fixtures::p3();
    CHECK(p4_chain().is_tree());
    CHECK(GraphOfGroups(g, {{0, g.vertex_set()}}, {}).is_tree());
    CHECK_FALSE(GraphOfGroups(g, {}, {}).is_tree());
    // Two nodes, no edge: disconnected.
    CHECK_FALSE(GraphOfGroups(g, {{0, VertexSet{"a"}}, {1, VertexSet{"b"}}}, {}).is_tree());
    // Self edge.
    CHECK_FALSE(GraphOfGroups(g, {{0, g.vertex_set()}}, {{0, 0, VertexSet{}}}).is_tree());
    // Parallel edges.
    CHECK_FALSE(GraphOfGroups(g, {{0, VertexSet{"a", "b"}}, {1, VertexSet{"b", "c"}}},
                              {{0, 1, VertexSet{"b"}}, {1, 0, VertexSet{"b"}}})
                    .is_tree());
}

TEST_CASE("canonical ids erase the original numbering") {
    const GraphOfGroups original = p4_chain();
    // Renumber arbitrarily, then canonicalize both: identical node/edge data.
    const std::map<int, int> shuffle{{0, 4}, {1, 2}, {2, 0}, {3, 3}, {4, 1}};
    const GraphOfGroups shuffled = original.renumbered(shuffle);
    const GraphOfGroups a = original.canonical();
    const GraphOfGroups b = shuffled.canonical();
    REQUIRE(a.node_count() == b.node_count());
    for (int i = 0; i < a.node_count(); ++i) CHECK(a.node(i).bag == b.node(i).bag);
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        CHECK(a.edges()[i].a == b.edges()[i].a);
        CHECK(a.edges()[i].b == b.edges()[i].b);
        CHECK(a.edges()[i].adhesion == b.edges()[i].adhesion);
    }
    // Root is the lexicographically least bag.
    CHECK(a.node(0).bag == VertexSet{"a", "b"});
    // Canonicalizing twice changes nothing.
    const auto identity = a.canonical_ids();
    for (const auto& [old_id, new_id] : identity) CHECK(old_id == new_id);
}

TEST_CASE("verify_reassembly accepts valid decompositions") {
    CHECK(raag::verify_reassembly(fixtures::p4(), p4_chain()).ok);
    const SimplicialGraph k3 = fixtures::complete(3);
    CHECK(raag::verify_reassembly(k3, GraphOfGroups(k3, {{0, k3.vertex_set()}}, {})).ok);
    const SimplicialGraph p3 = fixtures::p3();
    CHECK(raag::verify_reassembly(p3, raag::clique_amalgam(p3, VertexSet{"b"})).ok);
}

TEST_CASE("verify_reassembly reports each violation") {
    const SimplicialGraph p3 = fixtures::p3();

    SUBCASE("host mismatch is a precondition error") {
        CHECK_THROWS_WITH_AS(
            raag::verify_reassembly(fixtures::p4(), raag::clique_amalgam(p3, VertexSet{"b"})),
            "decomposition host differs from the graph under verification", PreconditionError);
    }

    SUBCASE("no nodes") {
        const auto verdict = raag::verify_reassembly(p3, GraphOfGroups(p3, {}, {}));
        CHECK_FALSE(verdict.ok);
        CHECK(verdict.violations == std::vector<std::string>{"decomposition has no nodes"});
    }

    SUBCASE("uncovered edge with vacuous adhesion") {
        const GraphOfGroups gog(p3, {{0, VertexSet{"a", "b"}}, {1, VertexSet{"c"}}},
                                {{0, 1, VertexSet{}}});
        const auto verdict = raag::verify_reassembly(p3, gog);
        CHECK_FALSE(verdict.ok);
        CHECK(verdict.violations == std::vector<std::string>{"edge b-c uncovered"});
    }

    SUBCASE("uncovered vertex") {
        const SimplicialGraph c4 = fixtures::c4();
        const GraphOfGroups gog(c4, {{0, VertexSet{"v1", "v2", "v3"}}}, {});
        const auto verdict = raag::verify_reassembly(c4, gog);
        CHECK_FALSE(verdict.ok);
        REQUIRE(verdict.violations.size() == 3);
        CHECK(verdict.violations[0] == "vertex v4 uncovered");
        CHECK(verdict.violations[1] == "edge v1-v4 uncovered");
        CHECK(verdict.violations[2] == "edge v3-v4 uncovered");
    }

    SUBCASE("non-tree shape") {
        const auto verdict = raag::verify_reassembly(
            p3, GraphOfGroups(p3, {{0, p3.vertex_set()}, {1, p3.vertex_set()}}, {}));
        CHECK_FALSE(verdict.ok);
        REQUIRE(!verdict.violations.empty());
        CHECK(verdict.violations[0] == "not a tree: 2 nodes, 0 edges");
    }

    SUBCASE("adhesion must be a clique of the host") {
        const GraphOfGroups gog(p3,
                                {{0, VertexSet{"a", "b", "c"}}, {1, VertexSet{"a", "c"}}},
                                {{0, 1, VertexSet{"a", "c"}}});
        const auto verdict = raag::verify_reassembly(p3, gog);
        CHECK_FALSE(verdict.ok);
        CHECK(std::count(verdict.violations.begin(), verdict.violations.end(),
                         "adhesion {a,c} of edge 0-1 is not a clique of the host") == 1);
    }

    SUBCASE("adhesion not contained in a bag") {
        const GraphOfGroups gog(p3, {{0, VertexSet{"a", "b"}}, {1, VertexSet{"c"}}},
                                {{0, 1, VertexSet{"b"}}});
        const auto verdict = raag::verify_reassembly(p3, gog);
        CHECK_FALSE(verdict.ok);
        CHECK(std::count(verdict.violations.begin(), verdict.violations.end(),
                         "adhesion {b} of edge 0-1 not contained in bag of node 1") == 1);
    }

    SUBCASE("adhesion must equal the bag intersection") {
        const GraphOfGroups gog(p3, {{0, VertexSet{"a", "b"}}, {1, VertexSet{"b", "c"}}},
                                {{0, 1, VertexSet{}}});
        const auto verdict = raag::verify_reassembly(p3, gog);
        CHECK_FALSE(verdict.ok);
        CHECK(verdict.violations ==
              std::vector<std::string>{"adhesion {} of edge 0-1 differs from bag intersection {b}"});
    }

    SUBCASE("running intersection") {
        const SimplicialGraph p4 = fixtures::p4();
        // b appears in the two end bags but not the middle one.
        const GraphOfGroups gog(p4,
                                {{0, VertexSet{"a", "b"}},
                                 {1, VertexSet{"c", "d"}},
                                 {2, VertexSet{"b", "c"}}},
                                {{0, 1, VertexSet{}}, {1, 2, VertexSet{"c"}}});
        const auto verdict = raag::verify_reassembly(p4, gog);
        CHECK_FALSE(verdict.ok);
        CHECK(std::count(verdict.violations.begin(), verdict.violations.end(),
                         "running intersection violated for vertex b") == 1);
    }
}

TEST_CASE("contract_reducible merges reducible valence-two nodes") {
    const GraphOfGroups contracted = raag::contract_reducible(p4_chain());
    REQUIRE(contracted.node_count() == 3);
    CHECK(contracted.node(0).bag == VertexSet{"a", "b"});
    CHECK(contracted.node(2).bag == VertexSet{"b", "c"});
    CHECK(contracted.node(4).bag == VertexSet{"c", "d"});
    REQUIRE(contracted.edges().size() == 2);
    CHECK(contracted.edges()[0].adhesion == VertexSet{"b"});
    CHECK(contracted.edges()[1].adhesion == VertexSet{"c"});
    CHECK(raag::verify_reassembly(fixtures::p4(), contracted).ok);
}

TEST_CASE("contract_reducible is idempotent and keeps fixpoints") {
    const GraphOfGroups once = raag::contract_reducible(p4_chain());
    const GraphOfGroups twice = raag::contract_reducible(once);
    REQUIRE(once.node_count() == twice.node_count());
    for (const auto& node : once.nodes()) CHECK(twice.node(node.id).bag == node.bag);
    REQUIRE(once.edges().size() == twice.edges().size());

    // A single node and a plain amalgam have nothing reducible.
    const SimplicialGraph p3 = fixtures::p3();
    const GraphOfGroups single(p3, {{0, p3.vertex_set()}}, {});
    CHECK(raag::contract_reducible(single).node_count() == 1);
    const GraphOfGroups amalgam = raag::clique_amalgam(p3, VertexSet{"b"});
    CHECK(raag::contract_reducible(amalgam).node_count() == 2);

    // A valence-two node whose bag exceeds an adhesion stays.
    const SimplicialGraph p5 = fixtures::p5();
    const GraphOfGroups chain(p5,
                              {{0, VertexSet{"a", "b"}},
                               {1, VertexSet{"b", "c", "d"}},
                               {2, VertexSet{"d", "e"}}},
                              {{0, 1, VertexSet{"b"}}, {1, 2, VertexSet{"d"}}});
    CHECK(raag::verify_reassembly(p5, chain).ok);
    CHECK(raag::contract_reducible(chain).node_count() == 3);
}

TEST_CASE("contract_reducible keeps surviving ids") {
    const GraphOfGroups contracted = raag::contract_reducible(p4_chain());
    std::vector<int> ids;
    for (const auto& node : contracted.nodes()) ids.push_back(node.id);
    CHECK(ids == std::vector<int>{0, 2, 4});
}

#pragma once

#include <map>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/graph_of_groups.hpp"
#include "raag/jsj.hpp"

namespace raag {

/// Parses the graph text format: one directive per line, either
/// "vertex <label>" or "edge <a> <b>", labels matching [A-Za-z0-9_]+,
/// comments from '#' to end of line, blank lines ignored. Endpoints must be
/// declared before use. Throws ParseError carrying the 1-based line number.
SimplicialGraph parse_graph(const std::string& text);

/// Canonical text form: vertex lines in declaration order, then edge lines
/// in canonical edge order. parse_graph(emit_graph(g)) == g.
std::string emit_graph(const SimplicialGraph& g);

/// One-line rendering of a graph for corpus dumps: the directives of
/// emit_graph joined with "; ".
std::string emit_graph_line(const SimplicialGraph& g);

/// A decomposition together with optional leaf certificates and recursion
/// trace, as carried by the canonical document form.
struct DecompositionDocument {
    GraphOfGroups gog;
    std::map<int, LeafCertificate> leaf_certificates;
    std::vector<TraceEntry> trace;
};

/// Canonical single-text serialization. Node ids are renumbered to the
/// canonical depth-first order, so two semantically equal decompositions
/// serialize byte-identically. Layout:
///
///   raagsplit decomposition v1
///   vertices a b c
///   edges a-b b-c
///   node 0 {a,b}
///   edge 0 1 {b}
///   certificate 0 clique
///   trace 0 parent - subgraph {a,b,c} k 1 cliques {b}
///   end
std::string serialize_decomposition(const GraphOfGroups& gog);
std::string serialize_decomposition(const JSJDecomposition& jsj);
std::string serialize_decomposition(const DecompositionDocument& document);

/// Inverse of serialize_decomposition; ParseError (with line number) on
/// malformed documents.
DecompositionDocument parse_decomposition(const std::string& text);

/// Graphviz output, plain "graph { ... }" with label attributes only.
std::string emit_dot(const SimplicialGraph& g);
std::string emit_dot(const GraphOfGroups& gog);

} // namespace raag

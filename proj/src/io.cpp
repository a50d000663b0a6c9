#include "raag/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {
namespace {

bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    for (char c : label)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tokens = tokenize(raw);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

int parse_int(const std::string& token, const std::string& what, int line) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("invalid " + what + " '" + token + "'", line);
    }
}

VertexSet parse_set(const std::string& token, int line) {
    if (token.size() < 2 || token.front() != '{' || token.back() != '}')
        throw ParseError("invalid vertex set '" + token + "'", line);
    const std::string inner = token.substr(1, token.size() - 2);
    std::vector<std::string> labels;
    if (!inner.empty()) {
        std::size_t start = 0;
        while (start <= inner.size()) {
            const std::size_t comma = inner.find(',', start);
            const std::string label =
                inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!valid_label(label))
                throw ParseError("invalid vertex label '" + label + "'", line);
            labels.push_back(label);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return VertexSet(std::move(labels));
}

std::string render_certificate(LeafCertificate certificate) {
    return certificate == LeafCertificate::Clique ? "clique" : "no-separating-clique";
}

std::optional<LeafCertificate> certificate_from(const std::string& word) {
    if (word == "clique") return LeafCertificate::Clique;
    if (word == "no-separating-clique") return LeafCertificate::NoSeparatingClique;
    return std::nullopt;
}

std::string quote(const std::string& name) {
    return "\"" + name + "\"";
}

std::string serialize(const GraphOfGroups& raw, const std::map<int, LeafCertificate>* certificates,
                      const std::vector<TraceEntry>* trace) {
    const auto ids = raw.canonical_ids();
    const GraphOfGroups gog = raw.renumbered(ids);

    std::ostringstream out;
    out << "raagsplit decomposition v1\n";
    out << "vertices";
    for (const auto& label : gog.host().vertex_labels()) out << ' ' << label;
    out << "\nedges";
    for (const auto& [a, b] : gog.host().edge_list()) out << ' ' << a << '-' << b;
    out << '\n';
    for (const auto& node : gog.nodes())
        out << "node " << node.id << ' ' << node.bag.to_string() << '\n';
    for (const auto& edge : gog.edges())
        out << "edge " << edge.a << ' ' << edge.b << ' ' << edge.adhesion.to_string() << '\n';
    if (certificates) {
        std::map<int, LeafCertificate> renumbered;
        for (const auto& [id, certificate] : *certificates)
            renumbered.emplace(ids.at(id), certificate);
        for (const auto& [id, certificate] : renumbered)
            out << "certificate " << id << ' ' << render_certificate(certificate) << '\n';
    }
    if (trace) {
        for (std::size_t i = 0; i < trace->size(); ++i) {
            const TraceEntry& entry = (*trace)[i];
            out << "trace " << i << " parent ";
            if (entry.parent < 0)
                out << '-';
            else
                out << entry.parent;
            out << " subgraph " << entry.subgraph.to_string() << " k " << entry.min_clique_size
                << " cliques";
            for (const auto& clique : entry.cliques) out << ' ' << clique.to_string();
            out << '\n';
        }
    }
    out << "end\n";
    return out.str();
}

} // namespace

SimplicialGraph parse_graph(const std::string& text) {
    std::vector<std::string> vertices;
    std::set<std::string> declared;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> edge_keys;

    for (const auto& line : logical_lines(text)) {
        const auto& tokens = line.tokens;
        if (tokens[0] == "vertex") {
            if (tokens.size() != 2)
                throw ParseError("vertex directive expects one label", line.number);
            if (!valid_label(tokens[1]))
                throw ParseError("invalid vertex label '" + tokens[1] + "'", line.number);
            if (!declared.insert(tokens[1]).second)
                throw ParseError("duplicate vertex " + tokens[1], line.number);
            vertices.push_back(tokens[1]);
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3)
                throw ParseError("edge directive expects two labels", line.number);
            for (int i = 1; i <= 2; ++i)
                if (!declared.count(tokens[static_cast<std::size_t>(i)]))
                    throw ParseError("unknown vertex " + tokens[static_cast<std::size_t>(i)],
                                     line.number);
            if (tokens[1] == tokens[2]) throw ParseError("loop edge", line.number);
            auto key = tokens[1] < tokens[2] ? std::make_pair(tokens[1], tokens[2])
                                             : std::make_pair(tokens[2], tokens[1]);
            if (!edge_keys.insert(key).second)
                throw ParseError("duplicate edge " + tokens[1] + " " + tokens[2], line.number);
            edges.emplace_back(tokens[1], tokens[2]);
        } else {
            throw ParseError("expected 'vertex' or 'edge' directive, got '" + tokens[0] + "'",
                             line.number);
        }
    }
    return SimplicialGraph(std::move(vertices), edges);
}

std::string emit_graph(const SimplicialGraph& g) {
    std::ostringstream out;
    for (const auto& label : g.vertex_labels()) out << "vertex " << label << '\n';
    for (const auto& [a, b] : g.edge_list()) out << "edge " << a << ' ' << b << '\n';
    return out.str();
}

std::string emit_graph_line(const SimplicialGraph& g) {
    std::string multi = emit_graph(g);
    if (!multi.empty() && multi.back() == '\n') multi.pop_back();
    std::string out;
    for (char c : multi) {
        if (c == '\n')
            out += "; ";
        else
            out += c;
    }
    return out;
}

std::string serialize_decomposition(const GraphOfGroups& gog) {
    return serialize(gog, nullptr, nullptr);
}

std::string serialize_decomposition(const JSJDecomposition& jsj) {
    return serialize(jsj.gog, &jsj.leaf_certificates, &jsj.trace);
}

std::string serialize_decomposition(const DecompositionDocument& document) {
    return serialize(document.gog, &document.leaf_certificates, &document.trace);
}

DecompositionDocument parse_decomposition(const std::string& text) {
    const auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty document", 1);

    std::size_t at = 0;
    const auto& header = lines[at];
    if (header.tokens != std::vector<std::string>{"raagsplit", "decomposition", "v1"})
        throw ParseError("expected header 'raagsplit decomposition v1'", header.number);
    ++at;

    std::vector<std::string> host_vertices;
    std::vector<std::pair<std::string, std::string>> host_edges;
    bool saw_vertices = false;
    bool saw_edges = false;
    bool saw_end = false;

    struct PendingNode {
        int line;
        GogNode node;
    };
    struct PendingEdge {
        int line;
        GogEdge edge;
    };
    std::vector<PendingNode> nodes;
    std::vector<PendingEdge> edges;
    std::map<int, LeafCertificate> certificates;
    std::vector<std::pair<int, TraceEntry>> trace_lines; // (index, entry)

    for (; at < lines.size(); ++at) {
        const auto& [number, tokens] = lines[at];
        const std::string& directive = tokens[0];
        if (directive == "vertices") {
            if (saw_vertices) throw ParseError("repeated vertices line", number);
            saw_vertices = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (!valid_label(tokens[i]))
                    throw ParseError("invalid vertex label '" + tokens[i] + "'", number);
                host_vertices.push_back(tokens[i]);
            }
        } else if (directive == "edges") {
            if (saw_edges) throw ParseError("repeated edges line", number);
            saw_edges = true;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto dash = tokens[i].find('-');
                if (dash == std::string::npos)
                    throw ParseError("invalid edge '" + tokens[i] + "'", number);
                host_edges.emplace_back(tokens[i].substr(0, dash), tokens[i].substr(dash + 1));
            }
        } else if (directive == "node") {
            if (tokens.size() != 3) throw ParseError("node line expects id and bag", number);
            nodes.push_back(
                {number, {parse_int(tokens[1], "node id", number), parse_set(tokens[2], number)}});
        } else if (directive == "edge") {
            if (tokens.size() != 4)
                throw ParseError("edge line expects two ids and an adhesion", number);
            edges.push_back({number,
                             {parse_int(tokens[1], "node id", number),
                              parse_int(tokens[2], "node id", number),
                              parse_set(tokens[3], number)}});
        } else if (directive == "certificate") {
            if (tokens.size() != 3)
                throw ParseError("certificate line expects id and kind", number);
            const int id = parse_int(tokens[1], "node id", number);
            const auto certificate = certificate_from(tokens[2]);
            if (!certificate)
                throw ParseError("unknown certificate kind '" + tokens[2] + "'", number);
            if (!certificates.emplace(id, *certificate).second)
                throw ParseError("repeated certificate for node " + tokens[1], number);
        } else if (directive == "trace") {
            if (tokens.size() < 9 || tokens[2] != "parent" || tokens[4] != "subgraph" ||
                tokens[6] != "k" || tokens[8] != "cliques")
                throw ParseError("malformed trace line", number);
            TraceEntry entry;
            entry.parent = tokens[3] == "-" ? -1 : parse_int(tokens[3], "trace parent", number);
            entry.subgraph = parse_set(tokens[5], number);
            entry.min_clique_size = parse_int(tokens[7], "trace k", number);
            for (std::size_t i = 9; i < tokens.size(); ++i)
                entry.cliques.push_back(parse_set(tokens[i], number));
            trace_lines.emplace_back(parse_int(tokens[1], "trace index", number),
                                     std::move(entry));
        } else if (directive == "end") {
            if (tokens.size() != 1) throw ParseError("malformed end line", number);
            saw_end = true;
            if (at + 1 != lines.size())
                throw ParseError("content after end", lines[at + 1].number);
        } else {
            throw ParseError("unknown directive '" + directive + "'", number);
        }
    }
    if (!saw_vertices) throw ParseError("missing vertices line", lines.back().number);
    if (!saw_end) throw ParseError("missing end line", lines.back().number);

    SimplicialGraph host;
    try {
        host = SimplicialGraph(std::move(host_vertices), host_edges);
    } catch (const InputError& error) {
        throw ParseError(std::string("invalid host graph: ") + error.what(), header.number);
    }

    std::vector<GogNode> gog_nodes;
    for (auto& pending : nodes) {
        for (const auto& label : pending.node.bag)
            if (!host.has_vertex(label))
                throw ParseError("bag contains unknown vertex '" + label + "'", pending.line);
        gog_nodes.push_back(std::move(pending.node));
    }
    std::vector<GogEdge> gog_edges;
    for (auto& pending : edges) {
        for (const auto& label : pending.edge.adhesion)
            if (!host.has_vertex(label))
                throw ParseError("adhesion contains unknown vertex '" + label + "'",
                                 pending.line);
        gog_edges.push_back(std::move(pending.edge));
    }

    DecompositionDocument document{GraphOfGroups(host, {}, {}), std::move(certificates), {}};
    try {
        document.gog = GraphOfGroups(host, std::move(gog_nodes), std::move(gog_edges));
    } catch (const InputError& error) {
        throw ParseError(std::string("invalid decomposition: ") + error.what(), header.number);
    }
    for (const auto& [id, certificate] : document.leaf_certificates)
        if (!document.gog.has_node(id))
            throw ParseError("certificate references unknown node " + std::to_string(id),
                             header.number);

    std::sort(trace_lines.begin(), trace_lines.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [index, entry] : trace_lines) document.trace.push_back(std::move(entry));
    return document;
}

std::string emit_dot(const SimplicialGraph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (const auto& label : g.vertex_labels()) out << "  " << quote(label) << ";\n";
    for (const auto& [a, b] : g.edge_list())
        out << "  " << quote(a) << " -- " << quote(b) << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_dot(const GraphOfGroups& raw) {
    const GraphOfGroups gog = raw.canonical();
    std::ostringstream out;
    out << "graph {\n";
    for (const auto& node : gog.nodes())
        out << "  " << quote(std::to_string(node.id)) << " [label=" << quote(node.bag.to_string())
            << "];\n";
    for (const auto& edge : gog.edges())
        out << "  " << quote(std::to_string(edge.a)) << " -- " << quote(std::to_string(edge.b))
            << " [label=" << quote(edge.adhesion.to_string()) << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace raag

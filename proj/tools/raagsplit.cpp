// raagsplit: decide and construct abelian splittings of right-angled Artin
// groups from their defining graphs.
//
// Subcommands:
//   classify <graph>                  trichotomy with witness
//   separators <graph> [--max-size N] [--min-only]
//   jsj <graph> [--no-contract] [--dot]
//   verify <graph> <decomposition>
//   corpus <family> [--n N] [--max-n N] [--p P] [--seed S] [--count C]
//                   [--sizes L R S]
//
// Exit codes: 0 success, 1 violated precondition or invalid input value,
// 2 unparsable input (including command-line usage errors). Diagnostics go
// to stderr; results go to stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/io.hpp"
#include "raag/jsj.hpp"
#include "raag/oracle.hpp"
#include "raag/separators.hpp"
#include "raag/splitting.hpp"

namespace {

class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_classify(const std::string& path) {
    const raag::SimplicialGraph g = raag::parse_graph(read_file(path));
    const raag::SplittingClass result = raag::classify(g);
    switch (result.kind) {
    case raag::SplittingKind::Disconnected:
        std::cout << "Disconnected\n";
        for (const auto& component : result.components)
            std::cout << "component " << component.to_string() << '\n';
        break;
    case raag::SplittingKind::Complete:
        std::cout << "Complete n=" << result.rank;
        if (result.rank == 1) std::cout << " (degenerate single-vertex case)";
        std::cout << '\n';
        break;
    case raag::SplittingKind::SeparatingClique:
        std::cout << "SeparatingClique " << result.separating_clique.to_string() << '\n';
        for (const auto& component : result.remainder_components)
            std::cout << "component " << component.to_string() << '\n';
        break;
    case raag::SplittingKind::NoAbelianSplitting:
        std::cout << "NoAbelianSplitting\n";
        break;
    }
    return 0;
}

int run_separators(const std::string& path, int max_size, bool min_only) {
    const raag::SimplicialGraph g = raag::parse_graph(read_file(path));
    if (!g.is_connected())
        std::cerr << "warning: graph is disconnected; reporting separators under the extended"
                     " definition (removal must still increase the component count)\n";
    const std::optional<int> bound =
        max_size < 0 ? std::nullopt : std::optional<int>(max_size);
    const raag::SeparatorReport report = raag::enumerate_separating_cliques(g, bound, min_only);
    if (report.minimal_size)
        std::cout << "minimal size: " << *report.minimal_size << '\n';
    else
        std::cout << "minimal size: none\n";
    for (const auto& [size, cliques] : report.by_size) {
        std::cout << "size " << size << ':';
        for (const auto& clique : cliques) std::cout << ' ' << clique.to_string();
        std::cout << '\n';
    }
    std::cout << "cut vertices:";
    if (report.cut_vertices.empty())
        std::cout << " none";
    else
        for (const auto& label : report.cut_vertices) std::cout << ' ' << label;
    std::cout << '\n';
    return 0;
}

int run_jsj(const std::string& path, bool no_contract, bool dot) {
    const raag::SimplicialGraph g = raag::parse_graph(read_file(path));
    raag::JSJDecomposition jsj = raag::build_jsj(g);
    if (jsj.gog.node_count() == 1)
        std::cerr << "note: no separating clique; the decomposition is trivial\n";
    if (!no_contract) jsj = raag::contract_reducible(jsj);
    if (dot)
        std::cout << raag::emit_dot(jsj.gog);
    else
        std::cout << raag::serialize_decomposition(jsj);
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& decomposition_path) {
    const raag::SimplicialGraph g = raag::parse_graph(read_file(graph_path));
    const raag::DecompositionDocument document =
        raag::parse_decomposition(read_file(decomposition_path));
    const raag::ReassemblyVerdict verdict = raag::verify_reassembly(g, document.gog);
    if (verdict.ok) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& violation : verdict.violations) std::cout << violation << '\n';
    return 1;
}

int run_corpus(const std::string& family, const raag::GeneratorParams& params,
               std::uint64_t seed) {
    for (const auto& g : raag::generate(family, params, seed))
        std::cout << raag::emit_graph_line(g) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian splittings and JSJ decompositions of right-angled Artin groups"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string decomposition_path;
    std::string family;
    int max_size = -1;
    bool min_only = false;
    bool no_contract = false;
    bool dot = false;
    raag::GeneratorParams params;
    std::uint64_t seed = 0;
    std::vector<int> sizes;

    CLI::App* classify = app.add_subcommand("classify", "Classify the abelian-splitting kind");
    classify->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();

    CLI::App* separators = app.add_subcommand("separators", "Enumerate separating cliques");
    separators->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
    separators->add_option("--max-size", max_size, "Largest clique size to enumerate");
    separators->add_flag("--min-only", min_only, "Stop at the smallest size that separates");

    CLI::App* jsj = app.add_subcommand("jsj", "Build the JSJ decomposition");
    jsj->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
    jsj->add_flag("--no-contract", no_contract, "Keep reducible valence-two nodes");
    jsj->add_flag("--dot", dot, "Emit Graphviz DOT instead of the document form");

    CLI::App* verify = app.add_subcommand("verify", "Check a decomposition against a graph");
    verify->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
    verify->add_option("decomposition", decomposition_path, "Decomposition document file")
        ->required();

    CLI::App* corpus = app.add_subcommand("corpus", "Emit generated graphs, one per line");
    corpus
        ->add_option("family", family,
                     "path | cycle | complete | star | tree | gnp | shared_clique |"
                     " all_connected")
        ->required();
    corpus->add_option("--n", params.n, "Vertex count (star: leaf count)");
    corpus->add_option("--max-n", params.max_n, "Size bound for all_connected");
    corpus->add_option("--p", params.p, "Edge probability for gnp");
    corpus->add_option("--seed", seed, "Random seed (sample i uses seed+i)");
    corpus->add_option("--count", params.count, "Number of graphs (tree, gnp)");
    corpus->add_option("--sizes", sizes, "shared_clique sizes: left right shared")->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(graph_path);
        if (separators->parsed()) return run_separators(graph_path, max_size, min_only);
        if (jsj->parsed()) return run_jsj(graph_path, no_contract, dot);
        if (verify->parsed()) return run_verify(graph_path, decomposition_path);
        if (corpus->parsed()) {
            params.sizes = sizes;
            return run_corpus(family, params, seed);
        }
    } catch (const raag::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const raag::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const raag::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

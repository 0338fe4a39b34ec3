#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matspl/algebra.hpp"
#include "matspl/constructions.hpp"
#include "matspl/factor.hpp"
#include "matspl/json_io.hpp"
#include "matspl/orders.hpp"
#include "matspl/splice.hpp"
#include "matspl/verify.hpp"

namespace {

using matspl::Mask;
using matspl::Matroid;
using Json = matspl::io::Json;

Json read_document(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return Json::parse(buffer.str());
    }
    std::ifstream in(path);
    if (!in) throw matspl::Error("cannot open " + path);
    Json doc;
    in >> doc;
    return doc;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw matspl::Error("cannot write " + path);
    out << text << "\n";
}

// Hasse diagram of the weak order on the enumerated splices.
std::string splice_poset_dot(const std::vector<Matroid>& splices) {
    const size_t n = splices.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) below[i][j] = matspl::orders::weak_leq(splices[i], splices[j]);
    std::string out = "digraph splice_poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < n; ++i) {
        out += "  s" + std::to_string(i) + " [label=\"splice " + std::to_string(i) + "\"];\n";
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (size_t k = 0; k < n && cover; ++k)
                if (k != i && k != j && below[i][k] && below[k][j]) cover = false;
            if (cover)
                out += "  s" + std::to_string(i) + " -> s" + std::to_string(j) + ";\n";
        }
    out += "}\n";
    return out;
}

int cmd_build(const std::string& input, const std::string& output) {
    Matroid m = matspl::io::matroid_from_json(read_document(input));
    write_output(output, matspl::io::matroid_to_json(m, true).dump(2));
    return 0;
}

int cmd_splice(const std::string& left_path, const std::string& right_path, bool enumerate,
               const std::string& dot_path, const std::string& output) {
    Matroid m = matspl::io::matroid_from_json(read_document(left_path));
    Matroid n = matspl::io::matroid_from_json(read_document(right_path));
    auto pair = matspl::splice::matched_or_throw(m, n);

    Json result;
    result["schema"] = matspl::io::kSchemaTag;
    result["free_splice"] = matspl::io::matroid_to_json(matspl::splice::free_splice(pair), true);
    if (enumerate) {
        auto splices = matspl::splice::enumerate_splices(pair);
        Json list = Json::array();
        for (const auto& l : splices) list.push_back(matspl::io::matroid_to_json(l, false));
        result["splices"] = std::move(list);
        result["splice_count"] = splices.size();
        if (!dot_path.empty()) write_output(dot_path, splice_poset_dot(splices));
    }
    write_output(output, result.dump(2));
    return 0;
}

int cmd_analyze(const std::string& input, bool separators, bool minimal, bool irreducible,
                bool clones, bool classify, const std::string& output) {
    Matroid l = matspl::io::matroid_from_json(read_document(input));
    Json result;
    result["schema"] = matspl::io::kSchemaTag;
    result["ground"] = l.ground().labels();
    result["rank"] = l.rank();
    if (separators || minimal) {
        auto all = matspl::factor::free_separators(l);
        Json list = Json::array();
        for (const auto& s : all)
            if (!minimal || s.minimal)
                list.push_back(matspl::io::separator_to_json(l.ground(), s));
        result[minimal ? "minimal_free_separators" : "free_separators"] = std::move(list);
    }
    if (irreducible || classify) result["irreducible"] = matspl::factor::is_irreducible(l);
    if (clones || classify) {
        Json list = Json::array();
        for (Mask cls : matspl::factor::clone_classes(l)) {
            Json entry = Json::array();
            for (const auto& label : l.ground().labels_of(cls)) entry.push_back(label);
            list.push_back(std::move(entry));
        }
        result["clone_classes"] = std::move(list);
    }
    if (classify) {
        result["nested"] = matspl::factor::is_nested(l);
        auto tree = matspl::factor::splice_decomposition(l);
        result["splice_decomposable"] = tree.has_value();
        if (tree) result["factor_tree"] = matspl::io::factor_tree_to_json(*tree);
        result["base_orderable"] = matspl::constructions::is_base_orderable(l);
    }
    write_output(output, result.dump(2));
    return 0;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, int count,
               const std::string& output) {
    matspl::verify::Options options;
    options.n = n;
    options.seed = seed;
    options.count = count;
    auto report = matspl::verify::run_suite(suite, options);

    Json result;
    result["schema"] = matspl::io::kSchemaTag;
    result["suite"] = report.suite;
    result["n"] = n;
    result["seed"] = seed;
    result["count"] = count;
    Json props = Json::array();
    for (const auto& p : report.properties) {
        Json entry;
        entry["name"] = p.name;
        entry["instances"] = p.instances;
        entry["failures"] = p.failures;
        if (p.skipped) entry["skipped"] = true;
        if (!p.note.empty()) entry["note"] = p.note;
        props.push_back(std::move(entry));
    }
    result["properties"] = std::move(props);
    result["passed"] = report.passed;
    write_output(output, result.dump(2));
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matspl: exact splice calculus for matroids"};
    app.require_subcommand(1);

    std::string input, left_path, right_path, output, dot_path;
    bool enumerate = false;
    bool separators = false, minimal = false, irreducible = false, clones = false,
         classify = false;
    std::string suite;
    int n = 6, count = 100;
    std::uint64_t seed = 1;

    auto* build = app.add_subcommand("build", "validate a matroid document and canonicalize it");
    build->add_option("input", input, "matroid JSON document (- for stdin)")->required();
    build->add_option("-o,--output", output, "output path (default stdout)");

    auto* splice_cmd = app.add_subcommand("splice", "free splice of two matched matroids");
    splice_cmd->add_option("left", left_path, "document for the left factor")->required();
    splice_cmd->add_option("right", right_path, "document for the right factor")->required();
    splice_cmd->add_flag("--enumerate", enumerate, "enumerate all splices");
    splice_cmd->add_option("--dot", dot_path, "write the weak-order Hasse diagram as DOT");
    splice_cmd->add_option("-o,--output", output, "output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "separators, irreducibility, classification");
    analyze->add_option("input", input, "matroid JSON document (- for stdin)")->required();
    analyze->add_flag("--separators", separators, "list all free separators");
    analyze->add_flag("--minimal", minimal, "list only minimal free separators");
    analyze->add_flag("--irreducible", irreducible, "report irreducibility");
    analyze->add_flag("--clones", clones, "report clone classes");
    analyze->add_flag("--classify", classify, "nested / decomposable / base-orderable flags");
    analyze->add_option("-o,--output", output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite, "axioms|higgs|splice|factor|algebra|constructions|all")
        ->required();
    verify->add_option("--n", n, "largest ground-set size (default 6)");
    verify->add_option("--seed", seed, "random seed (default 1)");
    verify->add_option("--count", count, "instances per property (default 100)");
    verify->add_option("-o,--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(input, output);
        if (splice_cmd->parsed())
            return cmd_splice(left_path, right_path, enumerate, dot_path, output);
        if (analyze->parsed())
            return cmd_analyze(input, separators, minimal, irreducible, clones, classify, output);
        if (verify->parsed()) {
            auto names = matspl::verify::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return cmd_verify(suite, n, seed, count, output);
        }
    } catch (const matspl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

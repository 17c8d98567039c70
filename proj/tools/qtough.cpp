// Command-line entry point: invariant computation, extremal-family
// construction, verification suites, and format conversion.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtough/extremal.hpp"
#include "qtough/graph_io.hpp"
#include "qtough/spectral.hpp"
#include "qtough/toughness.hpp"
#include "qtough/verify.hpp"

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::ostream& open_output(std::optional<std::string>& path, std::ofstream& file) {
    if (!path) return std::cout;
    file.open(*path);
    if (!file) throw std::runtime_error("cannot open output file: " + *path);
    return file;
}

qtough::Graph load_graph(const std::string& path, const std::string& input_format) {
    if (input_format.empty()) return qtough::load_graph_file(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (input_format == "g6")
        return qtough::parse_graph(buf.str(), qtough::GraphFormat::Graph6);
    if (input_format == "edges")
        return qtough::parse_graph(buf.str(), qtough::GraphFormat::EdgeList);
    throw std::invalid_argument("unknown input format \"" + input_format + "\" (g6|edges)");
}

int cmd_invariants(const std::string& path, const std::string& input_format,
                   std::optional<int> l) {
    const qtough::Graph g = load_graph(path, input_format);
    std::cout << "n " << g.order() << "\n";
    std::cout << "edges " << g.edge_count() << "\n";
    std::cout << "connected " << (qtough::is_connected(g) ? "true" : "false") << "\n";
    std::cout << "alpha " << qtough::independence_number(g) << "\n";
    if (g.order() >= 1) {
        std::cout << "q_index " << fmt(qtough::q_index(g)) << "\n";
        std::cout << "rho " << fmt(qtough::adjacency_spectral_radius(g)) << "\n";
    } else {
        std::cout << "q_index n/a\nrho n/a\n";
    }
    if (g.order() >= 2)
        std::cout << "das_feng_yu_bound " << fmt(qtough::das_feng_yu_bound(g)) << "\n";
    else
        std::cout << "das_feng_yu_bound n/a\n";
    if (g.order() <= qtough::kToughnessBudget) {
        std::cout << "toughness " << qtough::toughness(g).value.str() << "\n";
        if (l) std::cout << "t_l[" << *l << "] " << qtough::l_toughness(g, *l).value.str()
                         << "\n";
    } else {
        std::cout << "toughness n/a (n > " << qtough::kToughnessBudget << ")\n";
    }
    return 0;
}

struct ExtremalArgs {
    std::string family;
    int b = 1, l = 2, n = 0, s = 1, omega = 2;
    std::string format = "g6";
    bool describe = false;
    std::optional<std::string> output;
};

int cmd_extremal(const ExtremalArgs& args) {
    qtough::Graph g;
    qtough::FamilyParts parts;
    std::optional<qtough::ExtendedRational> predicted;
    std::optional<int> n_min;

    if (args.family == "thm11") {
        parts = qtough::thm11_parts(args.b, args.l, args.n);
        predicted = qtough::thm11_predicted_tl(args.b, args.l);
        n_min = qtough::n_min_thm11(args.b, args.l);
    } else if (args.family == "thm12") {
        parts = qtough::thm12_parts(args.b, args.l, args.n);
        predicted = qtough::thm12_predicted_tl(args.b, args.l);
        if (args.b >= 2) n_min = qtough::n_min_thm12(args.b, args.l);
    } else if (args.family == "g2-case1") {
        parts = qtough::proof_g2_case1_parts(args.b, args.omega, args.n);
    } else if (args.family == "g3-case2") {
        parts = qtough::proof_g3_case2_parts(args.b, args.n);
    } else if (args.family == "thm12-g2") {
        parts = qtough::proof_thm12_g2_parts(args.s, args.omega, args.n);
    } else if (args.family == "thm12-g3") {
        parts = qtough::proof_thm12_g3_parts(args.b, args.l, args.n);
    } else if (args.family == "thm12-g3prime") {
        parts = qtough::proof_thm12_g3prime_parts(args.b, args.l, args.n);
    } else {
        std::cerr << "error: unknown family \"" << args.family << "\"\n";
        return 2;
    }
    g = qtough::split_join_family(parts);

    if (!parts.connected())
        std::cerr << "warning: join part size " << parts.join
                  << ", graph disconnected\n";
    if (n_min && args.n < *n_min)
        std::cerr << "warning: n = " << args.n << " is below the order threshold "
                  << *n_min << "\n";

    std::ofstream file;
    std::ostream& out = open_output(const_cast<std::optional<std::string>&>(args.output), file);
    if (args.describe) {
        out << "family " << args.family << "\n";
        out << "n " << parts.order() << "\n";
        out << "join_clique " << parts.join << "\n";
        out << "big_clique " << parts.clique << "\n";
        out << "isolated " << parts.isolated << "\n";
        out << "connected " << (parts.connected() ? "true" : "false") << "\n";
        if (predicted) out << "predicted_t_l " << predicted->str() << "\n";
        if (n_min) out << "n_min " << *n_min << "\n";
        return 0;
    }
    if (args.format == "g6")
        out << qtough::to_graph6(g) << "\n";
    else if (args.format == "edges")
        out << qtough::to_edge_list(g);
    else {
        std::cerr << "error: unknown format \"" << args.format << "\" (g6|edges)\n";
        return 2;
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    qtough::SuiteOptions options;
    std::optional<std::string> output;
    std::optional<std::string> csv;
};

int cmd_verify(const VerifyArgs& args) {
    std::vector<qtough::VerificationReport> reports =
        qtough::run_suite(args.suite, args.options);

    std::ofstream file;
    std::ostream& out = open_output(const_cast<std::optional<std::string>&>(args.output), file);
    for (const auto& report : reports) out << report.to_json().dump() << "\n";

    if (args.csv) {
        std::ofstream csv(*args.csv);
        if (!csv) throw std::runtime_error("cannot open CSV file: " + *args.csv);
        csv << qtough::VerificationReport::csv_header() << "\n";
        for (const auto& report : reports) csv << report.csv_row() << "\n";
    }

    for (const auto& report : reports)
        if (!report.passed) return 1;
    return 0;
}

int cmd_convert(const std::string& path, const std::string& input_format,
                const std::string& format, std::optional<std::string> output) {
    const qtough::Graph g = load_graph(path, input_format);
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    if (format == "g6")
        out << qtough::to_graph6(g) << "\n";
    else if (format == "edges")
        out << qtough::to_edge_list(g);
    else {
        std::cerr << "error: unknown format \"" << format << "\" (g6|edges)\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signless Laplacian spectral radius and generalized toughness lab"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string inv_format;
    std::optional<int> inv_l;
    CLI::App* invariants = app.add_subcommand("invariants", "graph invariants of a file");
    invariants->add_option("path", graph_path, "graph file (graph6 or edge list)")->required();
    invariants->add_option("--l", inv_l, "also report l-toughness for this l");
    invariants->add_option("--input-format", inv_format,
                           "g6|edges (default: auto-detect by leading byte)");

    ExtremalArgs ext;
    CLI::App* extremal = app.add_subcommand("extremal", "construct an extremal family graph");
    extremal->add_option("family", ext.family,
                         "thm11|thm12|g2-case1|g3-case2|thm12-g2|thm12-g3|thm12-g3prime")
        ->required();
    extremal->add_option("--b", ext.b, "toughness parameter b");
    extremal->add_option("--l", ext.l, "component parameter l");
    extremal->add_option("--n", ext.n, "graph order")->required();
    extremal->add_option("--s", ext.s, "cut size s");
    extremal->add_option("--omega", ext.omega, "component count omega");
    extremal->add_option("--format", ext.format, "g6|edges (default g6)");
    extremal->add_flag("--describe", ext.describe, "print part sizes and predicted t_l");
    extremal->add_option("--output", ext.output, "write to file instead of stdout");

    VerifyArgs ver;
    std::string model_text;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", ver.suite,
                       "lemma21|lemma22|lemma23|lemma24|identities|chains|sharpness|"
                       "thm11|thm12|exhaustive")
        ->required();
    verify->add_option("--trials", ver.options.trials, "number of randomized trials");
    verify->add_option("--seed", ver.options.seed, "RNG seed (echoed in reports)");
    verify->add_option("--tol", ver.options.tol, "comparison tolerance");
    verify->add_option("--samples", ver.options.samples, "Monte Carlo sample count");
    verify->add_option("--model", model_text,
                       "sample model: near-complete:M | extremal-plus:M | gnp:P");
    verify->add_option("--theorem", ver.options.theorem, "thm11|thm12 (sharpness/exhaustive)");
    verify->add_option("--b", ver.options.b, "restrict grid to this b");
    verify->add_option("--l", ver.options.l, "restrict grid to this l");
    verify->add_option("--n", ver.options.n, "restrict grid to this n");
    verify->add_option("--n-lo", ver.options.n_lo, "exhaustive: smallest order");
    verify->add_option("--n-hi", ver.options.n_hi, "exhaustive: largest order");
    verify->add_option("--edge-budget", ver.options.edge_budget,
                       "exhaustive: max edges missing from the complete graph");
    verify->add_option("--grid-span", ver.options.grid_span, "grid width above n_min");
    verify->add_option("--x-points", ver.options.x_points, "points per x grid");
    verify->add_option("--output", ver.output, "JSON-lines output file (default stdout)");
    verify->add_option("--csv", ver.csv, "also write an aggregate CSV");

    std::string convert_path;
    std::string convert_format = "g6";
    std::string convert_input_format;
    std::optional<std::string> convert_output;
    CLI::App* convert = app.add_subcommand("convert", "convert between graph formats");
    convert->add_option("path", convert_path, "graph file (format auto-detected)")->required();
    convert->add_option("--format", convert_format, "g6|edges (default g6)");
    convert->add_option("--input-format", convert_input_format,
                        "g6|edges (default: auto-detect by leading byte)");
    convert->add_option("--output", convert_output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (invariants->parsed()) return cmd_invariants(graph_path, inv_format, inv_l);
        if (extremal->parsed()) return cmd_extremal(ext);
        if (verify->parsed()) {
            if (!model_text.empty())
                ver.options.model = qtough::SampleModel::parse(model_text);
            return cmd_verify(ver);
        }
        if (convert->parsed())
            return cmd_convert(convert_path, convert_input_format, convert_format,
                               convert_output);
    } catch (const qtough::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

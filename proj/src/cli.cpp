#include "hcolor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "hcolor/bounds.hpp"
#include "hcolor/exact_solver.hpp"
#include "hcolor/graph_io.hpp"
#include "hcolor/nestedness.hpp"
#include "hcolor/poly.hpp"
#include "hcolor/random_experiments.hpp"
#include "hcolor/reductions.hpp"

namespace hcolor::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string graph;
    std::string format;
    std::string h = "2K2";
    int k = 3;
    std::string family;
    int n = 0;
    double p = 0.5;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string out;
    unsigned threads = 1;
    bool json = false;
    std::string target;
    std::string hypergraph;
};

Graph load_input_graph(const Options& o) {
    if (o.graph.empty()) throw std::invalid_argument("--graph is required");
    const GraphFormat f = o.format.empty() ? format_from_path(o.graph) : parse_format(o.format);
    return load_graph(o.graph, f);
}

PatternGraph load_pattern(const std::string& token) {
    const std::string prefix = "custom:";
    if (token.rfind(prefix, 0) == 0) {
        const std::string path = token.substr(prefix.size());
        return PatternGraph(load_graph(path, format_from_path(path)));
    }
    return PatternGraph::named(token);
}

json classes_json(const Coloring& c) {
    json arr = json::array();
    for (const auto& cls : c.class_lists()) arr.push_back(cls);
    return arr;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
    f << text;
    if (!f) throw std::runtime_error("failed writing '" + o.out + "'");
}

int cmd_chi(const Options& o, std::ostream& out) {
    const Graph g = load_input_graph(o);
    const PatternGraph h = load_pattern(o.h);
    const SolveResult r = chi_H(g, h, SolverOptions{o.threads});
    if (!is_avoiding_coloring(g, h, r.witness)) throw std::logic_error("witness failed re-validation");
    json j;
    j["chi_h"] = r.value;
    j["h"] = h.name();
    j["classes"] = classes_json(r.witness);
    j["nodes"] = r.nodes_explored;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.k < 1) throw std::invalid_argument("--k must be >= 1");
    const Graph g = load_input_graph(o);
    const PatternGraph h = load_pattern(o.h);
    std::optional<Coloring> c;
    std::string method = "exact-search";
    if (h.tag() == PatternTag::TwoK2 && o.k == 3) {
        c = decide_2k2_at_most_3(g);
        method = "2k2-three-classes";
    } else if (h.tag() == PatternTag::P3 && o.k == 3) {
        c = decide_p3_at_most_3(g);
        method = "p3-max-degree-two";
    } else {
        if (h.tag() == PatternTag::TwoK2 || h.tag() == PatternTag::P3)
            err << "notice: no polynomial procedure for k = " << o.k << "; using the exact solver\n";
        c = decide_chi_H(g, h, o.k, SolverOptions{o.threads});
    }
    if (c && !is_avoiding_coloring(g, h, *c)) throw std::logic_error("witness failed re-validation");
    json j;
    j["decision"] = c.has_value();
    j["k"] = o.k;
    j["h"] = h.name();
    j["method"] = method;
    j["classes"] = c ? classes_json(*c) : json(nullptr);
    out << j.dump(2) << '\n';
    return c ? 0 : 1;
}

int cmd_nested(const Options& o, std::ostream& out) {
    if (o.graph.empty()) throw std::invalid_argument("--graph is required (a 0/1 matrix, rows are Y)");
    const auto b = BipartiteInstance::parse_matrix(read_file(o.graph));
    const auto r = nestedness_number(b);
    json j;
    j["k"] = r.k;
    j["parts"] = r.parts;
    j["orders"] = r.column_orders;
    j["row_orders"] = r.row_orders;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const Graph g = load_input_graph(o);
    const PatternGraph h = load_pattern(o.h);
    json arr = json::array();
    for (const auto& r : bound_reports(g, h)) {
        json item;
        item["name"] = r.name;
        item["kind"] = std::string(bound_kind_name(r.kind));
        item["value"] = r.value;
        item["inputs"] = json::object();
        for (const auto& [key, value] : r.inputs) item["inputs"][key] = value;
        arr.push_back(item);
    }
    out << arr.dump(2) << '\n';
    return 0;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
    long long value = 0;
    if (o.family == "path")
        value = chi_2k2_path(o.n);
    else if (o.family == "matching")
        value = chi_2k2_matching(o.n);
    else if (o.family == "star")
        value = chi_2k2_subdivided_star(o.n);
    else if (o.family == "cube")
        value = cube_lower_bound(o.n);
    else if (o.family == "projective")
        value = projective_lower_bound(o.n);
    else
        throw std::invalid_argument("unknown family '" + o.family + "' (path|matching|star|cube|projective)");
    if (!o.json) {
        out << value << '\n';
        return 0;
    }
    const bool exact = o.family == "path" || o.family == "matching" || o.family == "star" ||
                       (o.family == "cube" && o.n <= 3);
    json j;
    j["family"] = o.family;
    j["n"] = o.n;
    j["value"] = value;
    j["kind"] = exact ? "exact" : "lower";
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    if (o.hypergraph.empty()) throw std::invalid_argument("--hypergraph is required");
    const auto t = Hypergraph3::parse(read_file(o.hypergraph));
    Graph g;
    if (o.target == "p3")
        g = reduce_to_p3(t);
    else if (o.target == "p4")
        g = reduce_to_p4(t);
    else
        throw std::invalid_argument("unknown target '" + o.target + "' (p3|p4)");
    write_output(o, write_edgelist(g), out);
    if (!o.out.empty()) {
        json j;
        j["target"] = o.target;
        j["vertices"] = g.n();
        j["edges"] = g.edge_count();
        j["out"] = o.out;
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_random(const Options& o, std::ostream& out) {
    if (o.n < 0) throw std::invalid_argument("--n must be >= 0");
    const auto rows = random_report(static_cast<std::size_t>(o.n), o.p, o.trials, o.seed);
    write_output(o, report_csv(rows), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"H-avoiding colourings: exact values, special cases, bounds and reductions", "hcolor"};
    // "--h" names the pattern, so help is only reachable as --help.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto graph_opts = [&](CLI::App* s) {
        s->add_option("--graph", o.graph, "Graph file")->required();
        s->add_option("--format", o.format, "edgelist|dimacs|matrix (default: from the extension)");
    };
    auto pattern_opt = [&](CLI::App* s) {
        s->add_option("--h", o.h, "Pattern: K1+K1, K2, K2+K1, P3, P4, 2K2 or custom:<file>")->capture_default_str();
    };
    auto threads_opt = [&](CLI::App* s) {
        s->add_option("--threads", o.threads, "Solver threads")->capture_default_str()->check(CLI::Range(1U, 256U));
    };

    auto* chi = app.add_subcommand("chi", "Exact H-avoiding chromatic number with a witness");
    graph_opts(chi);
    pattern_opt(chi);
    threads_opt(chi);

    auto* decide = app.add_subcommand("decide", "Is there an H-avoiding colouring with at most k classes?");
    graph_opts(decide);
    pattern_opt(decide);
    threads_opt(decide);
    decide->add_option("--k", o.k, "Class budget")->capture_default_str();

    auto* nested = app.add_subcommand("nested", "Nestedness number of a 0/1 matrix (rows Y, columns X)");
    nested->add_option("--graph", o.graph, "Matrix file")->required();

    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for a graph and pattern");
    graph_opts(bounds);
    pattern_opt(bounds);

    auto* closed = app.add_subcommand("closed-form", "Closed-form 2K2 values for graph families");
    closed->add_option("--family", o.family, "path|matching|star|cube|projective")->required();
    closed->add_option("--n", o.n, "Order (cube: dimension, projective: prime)")->required();
    closed->add_flag("--json", o.json, "Emit JSON");

    auto* reduce = app.add_subcommand("reduce", "Build a reduction graph from a 3-uniform hypergraph");
    reduce->add_option("--target", o.target, "p3|p4")->required();
    reduce->add_option("--hypergraph", o.hypergraph, "Hypergraph file")->required();
    reduce->add_option("--out", o.out, "Output edge list (default: standard output)");

    auto* random = app.add_subcommand("random", "G(n,p) experiment report as CSV");
    random->add_option("--n", o.n, "Vertices")->required();
    random->add_option("--p", o.p, "Edge probability")->capture_default_str();
    random->add_option("--trials", o.trials, "Trials")->capture_default_str();
    random->add_option("--seed", o.seed, "Seed of trial 0")->capture_default_str();
    random->add_option("--out", o.out, "CSV file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (chi->parsed()) return cmd_chi(o, out);
        if (decide->parsed()) return cmd_decide(o, out, err);
        if (nested->parsed()) return cmd_nested(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (closed->parsed()) return cmd_closed_form(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out);
        if (random->parsed()) return cmd_random(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace hcolor::cli

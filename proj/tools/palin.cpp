// palin — exact palindromic-characteristic-polynomial toolkit, CLI surface.
//
// One subcommand per library entry point; graph6 on stdin/stdout so the
// commands compose in pipes. Output format defaults to text on a terminal
// and json when piped; override with --format.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "palin/canonical.hpp"
#include "palin/charpoly.hpp"
#include "palin/enumerate.hpp"
#include "palin/graph.hpp"
#include "palin/hairing.hpp"
#include "palin/matchings.hpp"
#include "palin/poly.hpp"
#include "palin/survey.hpp"
#include "palin/tensor.hpp"

using json = nlohmann::json;
using namespace palin;

namespace {

enum class Format { Text, Json, Csv };

Format default_format() { return isatty(STDOUT_FILENO) ? Format::Text : Format::Json; }

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

int default_workers() {
    if (const char* env = std::getenv("PALIN_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Non-empty lines from a file, or stdin when path is "-" or empty.
std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> out;
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw domain_error("cannot open input file " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

json poly_json(const Poly& p) {
    return {{"degree", p.degree()}, {"coefficients", to_decimal_strings(p)},
            {"display", to_display(p)}};
}

json class_json(const PalindromeClass& c) {
    return {{"kind", to_string(c.kind)}, {"absolutely_palindromic", c.absolute}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

// --- subcommands --------------------------------------------------------

int cmd_charpoly(const std::string& input, Format fmt) {
    json rows = json::array();
    if (fmt == Format::Csv) std::cout << "graph,degree,coefficients\n";
    for (const auto& line : read_lines(input)) {
        Graph g = parse_graph6(line);
        Poly chi = char_poly(g);
        switch (fmt) {
        case Format::Text:
            std::cout << line << ": " << to_display(chi) << "\n";
            break;
        case Format::Csv:
            std::cout << line << "," << chi.degree() << ","
                      << join(to_decimal_strings(chi), " ") << "\n";
            break;
        case Format::Json: {
            json r = poly_json(chi);
            r["graph"] = line;
            rows.push_back(std::move(r));
            break;
        }
        }
    }
    if (fmt == Format::Json) print_json(rows);
    return 0;
}

int cmd_classify(const std::string& input, Format fmt) {
    json rows = json::array();
    if (fmt == Format::Csv) std::cout << "graph,kind,absolutely_palindromic\n";
    for (const auto& line : read_lines(input)) {
        Graph g = parse_graph6(line);
        PalindromeClass c = classify(char_poly(g));
        switch (fmt) {
        case Format::Text:
            std::cout << to_string(c.kind) << "\n";
            break;
        case Format::Csv:
            std::cout << line << "," << to_string(c.kind) << "," << (c.absolute ? 1 : 0) << "\n";
            break;
        case Format::Json: {
            json r = class_json(c);
            r["graph"] = line;
            rows.push_back(std::move(r));
            break;
        }
        }
    }
    if (fmt == Format::Json) print_json(rows);
    return 0;
}

int cmd_hair(const std::string& input, int k, Format fmt) {
    json rows = json::array();
    for (const auto& line : read_lines(input)) {
        Graph h = hair_k(parse_graph6(line), k);
        if (fmt == Format::Json)
            rows.push_back({{"graph", line}, {"k", k}, {"hairing", write_graph6(h)}});
        else
            std::cout << write_graph6(h) << "\n";
    }
    if (fmt == Format::Json) print_json(rows);
    return 0;
}

int cmd_dehair(const std::string& input, Format fmt) {
    json rows = json::array();
    for (const auto& line : read_lines(input)) {
        DehairResult r = dehair(parse_graph6(line));
        if (fmt == Format::Json) {
            json row = {{"graph", line}, {"is_hairing", r.ok()}};
            if (r.ok()) {
                row["core"] = write_graph6(r.cert->core_graph);
                row["core_vertices"] = r.cert->core;
            } else {
                row["obstruction"] = r.obstruction;
            }
            rows.push_back(std::move(row));
        } else if (r.ok()) {
            std::cout << write_graph6(r.cert->core_graph) << "\n";
        } else {
            std::cout << "not a hairing: " << r.obstruction << "\n";
        }
    }
    if (fmt == Format::Json) print_json(rows);
    return 0;
}

int cmd_tensor(std::vector<std::string> args, const std::string& input, Format fmt) {
    if (args.empty()) args = read_lines(input);
    if (args.size() != 2) throw domain_error("tensor needs exactly two graph6 inputs");
    Graph g1 = parse_graph6(args[0]), g2 = parse_graph6(args[1]);
    Graph prod = tensor_product(g1, g2);
    Poly chi = char_poly(prod);
    json j = {{"factors", {args[0], args[1]}},
              {"product", write_graph6(prod)},
              {"charpoly", poly_json(chi)},
              {"classification", class_json(classify(chi))}};
    bool split_ok = is_connected(g1) && is_connected(g2) && bipartition(g1).bipartite &&
                    bipartition(g2).bipartite && g1.order() >= 2 && g2.order() >= 2;
    if (split_ok) {
        TensorSplit s = bipartite_split(g1, g2);
        j["split"] = {{"even_component", write_graph6(s.even_component)},
                      {"odd_component", write_graph6(s.odd_component)},
                      {"even_vertices", s.even_vertices},
                      {"odd_vertices", s.odd_vertices}};
    }
    if (fmt == Format::Json) {
        print_json(j);
    } else {
        std::cout << "product: " << write_graph6(prod) << "\n";
        std::cout << "charpoly: " << to_display(chi) << "\n";
        std::cout << "class: " << to_string(classify(chi).kind) << "\n";
        if (split_ok) {
            TensorSplit s = bipartite_split(g1, g2);
            std::cout << "even component: " << write_graph6(s.even_component) << "\n";
            std::cout << "odd component: " << write_graph6(s.odd_component) << "\n";
        }
    }
    return 0;
}

int cmd_enumerate(int n, bool connected, bool tf, bool trees, int workers) {
    if (trees) {
        for (const Graph& t : enumerate_trees(n)) std::cout << write_graph6(t) << "\n";
        return 0;
    }
    for (const auto& b : all_graphs_level(n, tf, workers)) {
        if (connected && !bitgraph_connected(b)) continue;
        std::cout << write_graph6(to_graph(b)) << "\n";
    }
    return 0;
}

int cmd_survey(int n, bool connected, bool tf, bool from_stdin, const std::string& input,
               const std::string& checkpoint, bool resume, int workers, Format fmt) {
    SurveyFilter filter;
    filter.order = n;
    filter.connected_only = connected;
    filter.triangle_free = tf;
    SurveyReport rep;
    if (from_stdin) {
        filter.source = SurveyFilter::Source::Stream;
        std::ifstream file;
        std::istream* in = &std::cin;
        if (!input.empty() && input != "-") {
            file.open(input);
            if (!file) throw domain_error("cannot open input file " + input);
            in = &file;
        }
        IngestResult ing = ingest_stream(*in, filter, true);
        for (const auto& [lineno, msg] : ing.errors)
            std::cerr << "line " << lineno << ": " << msg << "\n";
        rep = classify_survey(ing.graphs, filter, workers);
    } else {
        rep = run_survey(filter, workers, checkpoint, resume);
    }
    switch (fmt) {
    case Format::Text: std::cout << report_text(rep); break;
    case Format::Csv: std::cout << report_csv(rep); break;
    case Format::Json: print_json(report_json(rep)); break;
    }
    return rep.violations.empty() ? 0 : 1;
}

/// Re-derive every invariant the library promises, per input graph.
int cmd_verify(const std::string& input, int n, Format fmt) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (n > 0) {
        for (const Graph& g : enumerate_connected(n)) graphs.emplace_back(write_graph6(g), g);
    } else {
        for (const auto& line : read_lines(input)) graphs.emplace_back(line, parse_graph6(line));
    }
    std::vector<std::string> violations;
    std::mt19937 rng(12345);
    for (const auto& [code, g] : graphs) {
        auto fail = [&](const std::string& what) { violations.push_back(code + ": " + what); };
        const int order = g.order();
        if (parse_graph6(write_graph6(g)) != g) fail("codec round-trip");
        Poly chi = char_poly(g);
        PalindromeClass cls = classify(chi);
        auto [pal, anti] = reverse_check(chi);
        if (pal != (cls.kind == PalKind::Palindromic) ||
            anti != (cls.kind == PalKind::Antipalindromic))
            fail("classify vs reverse_check");
        if (order <= 32) {
            // canonical code must survive a random relabeling
            std::vector<int> perm(static_cast<std::size_t>(order));
            for (int i = 0; i < order; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph relabeled(order);
            for (int u = 0; u < order; ++u)
                for (int v : g.neighbors(u))
                    if (u < v)
                        relabeled.add_edge(perm[static_cast<std::size_t>(u)],
                                           perm[static_cast<std::size_t>(v)]);
            if (canonical_code(g) != canonical_code(relabeled)) fail("canonical relabeling");
        }
        if (order <= 10 && char_poly_sachs(g) != chi) fail("Berkowitz vs Sachs");
        if (is_forest(g) && !forest_coefficient_identity(g)) fail("forest coefficient identity");
        if (cls.kind != PalKind::Neither) {
            if (order % 2 != 0) fail("(anti)palindromic with odd order");
            if (order <= 24 && count_perfect_matchings(g) == 0)
                fail("(anti)palindromic without perfect matching");
        }
        if (order >= 1 && order <= 16) {
            Graph h = hair_k(g, 1);
            if (char_poly(h) != substitute_hairing(chi, order, 1)) fail("hairing identity k=1");
            DehairResult d = dehair(h);
            if (!d.ok()) fail("dehair missed a hairing");
            else if (!isomorphic(d.cert->core_graph, g)) fail("dehair core not isomorphic");
            PalindromeClass predicted = predict_class_of_hairing(g);
            PalindromeClass actual = classify(char_poly(h));
            if (predicted.kind != actual.kind || predicted.absolute != actual.absolute)
                fail("hairing class prediction");
        }
    }
    if (fmt == Format::Json) {
        print_json({{"graphs", graphs.size()}, {"violations", violations}});
    } else {
        std::cout << "verified " << graphs.size() << " graphs, " << violations.size()
                  << " violations\n";
        for (const auto& v : violations) std::cout << "VIOLATION: " << v << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_reconcile(int workers, Format fmt) {
    std::vector<SurveyReport> reports;
    for (int n : {2, 4, 6, 8}) {
        SurveyFilter f;
        f.order = n;
        f.connected_only = true;
        reports.push_back(run_survey(f, workers));
    }
    Reconciliation rec = reconcile_table2(reports);
    if (fmt == Format::Json) print_json(reconcile_json(rec));
    else std::cout << reconcile_text(rec);
    return rec.consistency_violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact palindromic characteristic polynomial toolkit"};
    app.require_subcommand(1);

    std::string format_str, input = "-", checkpoint;
    int n = 0, k = 1, workers = default_workers();
    bool connected = false, tf = false, trees = false, resume = false, from_stdin = false;
    std::vector<std::string> tensor_args;

    auto* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of graph6 input");
    c_charpoly->add_option("input", input, "graph6 file, - for stdin");
    auto* c_classify = app.add_subcommand("classify", "palindromicity class of graph6 input");
    c_classify->add_option("input", input, "graph6 file, - for stdin");
    auto* c_hair = app.add_subcommand("hair", "attach k pendant vertices to every vertex");
    c_hair->add_option("--k", k, "pendants per vertex")->check(CLI::PositiveNumber);
    c_hair->add_option("input", input, "graph6 file, - for stdin");
    auto* c_dehair = app.add_subcommand("dehair", "recognize 1-hairings, emit core or obstruction");
    c_dehair->add_option("input", input, "graph6 file, - for stdin");
    auto* c_tensor = app.add_subcommand("tensor", "Kronecker product of two graphs");
    c_tensor->add_option("graphs", tensor_args, "two graph6 strings (or two stdin lines)");
    auto* c_enum = app.add_subcommand("enumerate", "graphs of order n up to isomorphism");
    c_enum->add_option("--n", n, "order")->required();
    c_enum->add_flag("--connected-only", connected, "connected graphs only");
    c_enum->add_flag("--triangle-free", tf, "triangle-free graphs only");
    c_enum->add_flag("--trees", trees, "free trees only");
    c_enum->add_option("--workers", workers, "worker threads");
    auto* c_survey = app.add_subcommand("survey", "palindromicity survey over order-n graphs");
    c_survey->add_option("--n", n, "order")->required();
    c_survey->add_flag("--connected-only", connected, "connected graphs only");
    c_survey->add_flag("--triangle-free", tf, "triangle-free graphs only");
    c_survey->add_flag("--from-stdin", from_stdin, "classify a graph6 stream instead");
    c_survey->add_option("input", input, "graph6 file for --from-stdin");
    c_survey->add_option("--checkpoint", checkpoint, "checkpoint file path");
    c_survey->add_flag("--resume", resume, "resume from the checkpoint file");
    c_survey->add_option("--workers", workers, "worker threads");
    auto* c_verify = app.add_subcommand("verify", "full invariant suite over input graphs");
    c_verify->add_option("input", input, "graph6 file, - for stdin");
    c_verify->add_option("--n", n, "verify builtin connected graphs of this order instead");
    auto* c_reconcile = app.add_subcommand("reconcile", "published-table reconciliation document");
    c_reconcile->add_option("--workers", workers, "worker threads");

    for (auto* sub : {c_charpoly, c_classify, c_hair, c_dehair, c_tensor, c_survey, c_verify,
                      c_reconcile})
        sub->add_option("--format", format_str, "output format: text, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        Format fmt = format_str.empty() ? default_format() : parse_format(format_str);
        if (c_charpoly->parsed()) return cmd_charpoly(input, fmt);
        if (c_classify->parsed()) return cmd_classify(input, fmt);
        if (c_hair->parsed()) return cmd_hair(input, k, fmt);
        if (c_dehair->parsed()) return cmd_dehair(input, fmt);
        if (c_tensor->parsed()) return cmd_tensor(tensor_args, input, fmt);
        if (c_enum->parsed()) return cmd_enumerate(n, connected, tf, trees, workers);
        if (c_survey->parsed())
            return cmd_survey(n, connected, tf, from_stdin, input, checkpoint, resume, workers, fmt);
        if (c_verify->parsed()) return cmd_verify(input, n, fmt);
        if (c_reconcile->parsed()) return cmd_reconcile(workers, fmt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

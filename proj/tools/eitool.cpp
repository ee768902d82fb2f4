#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ei/constructor.hpp"
#include "ei/io.hpp"
#include "ei/oracle.hpp"

namespace {

using namespace ei;

Vmask parse_vertex_set(const std::string& text) {
    std::vector<int> members;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        members.push_back(std::stoi(item));
    }
    return vmask_of(members);
}

std::pair<int, int> parse_edge(const std::string& text) {
    std::vector<int> members;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) members.push_back(std::stoi(item));
    if (members.size() != 2) throw ParseError("--edge expects \"i,j\"");
    return {members[0], members[1]};
}

std::string h_list(const IntegerPolynomial& p) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (long long c : p.to_ints()) {
        if (!first) out << ",";
        out << c;
        first = false;
    }
    out << "]";
    return out.str();
}

void print_report(const InvariantReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(rep);
        return;
    }
    std::cout << "n=" << rep.n << " connected=" << (rep.connected ? "true" : "false")
              << " im=" << rep.im << " m=" << rep.m << " reg=" << rep.reg << " dim=" << rep.dim
              << " h=" << h_list(rep.hcoeffs) << " s=" << rep.s << "\n";
}

struct Options {
    std::string path;
    std::string field = "q";
    bool as_json = false;
    int a = 0, r = 0, s = 0;
    std::string base_dir;
    std::uint64_t seed = 0;
    long long budget = 0;
    std::string out;
    std::string cert;
    std::string set_text;
    std::string edge_text;
    bool edge_given = false;
    long long trials = 200;
    int max_n = 8;
    int degree = 6;
};

int cmd_invariants(const Options& opt) {
    Graph g = read_graph_file(opt.path);
    print_report(invariant_report(g, FieldSpec::parse(opt.field)), opt.as_json);
    return 0;
}

int cmd_construct(const Options& opt) {
    BaseGraphProvider provider;
    if (!opt.base_dir.empty()) provider.set_directory(opt.base_dir);
    provider.set_seed(opt.seed);
    provider.set_search_budget(opt.budget);
    Certificate cert = build(opt.a, opt.r, opt.s, provider, FieldSpec::parse(opt.field));
    if (!opt.out.empty())
        write_graph_file(cert.result, opt.out);
    else
        std::cout << graph_to_json(cert.result);
    if (!opt.cert.empty()) write_certificate_file(cert, opt.cert);
    print_report(cert.report, false);
    return 0;
}

int cmd_suspend(const Options& opt) {
    Graph g = read_graph_file(opt.path);
    HilbertSeries before = hilbert_series_of_ideal(edge_ideal(g));
    Vmask s = parse_vertex_set(opt.set_text);
    HilbertSeries predicted;
    Graph out;
    if (opt.edge_given) {
        auto e = parse_edge(opt.edge_text);
        predicted = predict_edge_s_suspension(before, vcount(s));
        out = edge_s_suspension(g, e, s);
    } else {
        predicted = predict_s_suspension(before, vcount(s));
        out = s_suspension(g, s);
    }
    HilbertSeries after = hilbert_series_of_ideal(edge_ideal(out));
    std::cout << "h before:    " << before.numerator.to_string() << " over (1-λ)^" << before.dpow
              << "\n";
    std::cout << "h predicted: " << predicted.numerator.to_string() << " over (1-λ)^"
              << predicted.dpow << "\n";
    std::cout << "h after:     " << after.numerator.to_string() << " over (1-λ)^" << after.dpow
              << "\n";
    if (!opt.out.empty())
        write_graph_file(out, opt.out);
    else
        std::cout << graph_to_json(out);
    return after == predicted ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    VerifyReport rep = verify_lemma_suite(opt.seed, opt.trials, opt.max_n,
                                          FieldSpec::parse(opt.field));
    if (opt.as_json)
        std::cout << verify_report_to_json(rep);
    else
        std::cout << "trials=" << rep.trials << " checks=" << rep.checks
                  << " failures=" << rep.failures.size() << "\n";
    if (!rep.ok()) {
        for (const VerifyFailure& f : rep.failures)
            std::cerr << "FAIL " << f.check << " on " << f.input << ": expected " << f.expected
                      << ", got " << f.got << "\n";
        return 1;
    }
    return 0;
}

int cmd_expand(const Options& opt) {
    Graph g = read_graph_file(opt.path);
    HilbertSeries h = hilbert_series_of_ideal(edge_ideal(g));
    std::vector<mpz_class> values = series_expansion(h, opt.degree);
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << (i ? " " : "") << values[i].get_str();
    std::cout << "\n";
    return 0;
}

int cmd_export_dot(const Options& opt) {
    Graph g = read_graph_file(opt.path);
    std::string dot = to_dot(g);
    if (!opt.out.empty()) {
        std::ofstream file(opt.out);
        if (!file) throw ParseError("cannot write " + opt.out);
        file << dot;
    } else {
        std::cout << dot;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and constructions for edge ideals of finite simple graphs"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* inv = app.add_subcommand("invariants", "Report im, m, reg, dim and the h-polynomial");
    inv->add_option("path", opt.path, "graph JSON file")->required();
    inv->add_option("--field", opt.field, "q, f2 or fp:<p>");
    inv->add_flag("--json", opt.as_json, "emit JSON");

    CLI::App* con = app.add_subcommand(
        "construct", "Build a connected graph with prescribed im, regularity and deg h");
    con->add_option("a", opt.a, "induced matching number")->required();
    con->add_option("r", opt.r, "regularity")->required();
    con->add_option("s", opt.s, "degree of the h-polynomial")->required();
    con->add_option("--base-dir", opt.base_dir, "directory of candidate base graphs (L_<r>.json)");
    con->add_option("--seed", opt.seed, "seed for the base-graph search");
    con->add_option("--search-budget", opt.budget, "trial budget for the base-graph search");
    con->add_option("--out", opt.out, "output graph file");
    con->add_option("--cert", opt.cert, "output certificate file");
    con->add_option("--field", opt.field, "q, f2 or fp:<p>");

    CLI::App* sus = app.add_subcommand("suspend", "Apply a suspension and report the series");
    sus->add_option("path", opt.path, "graph JSON file")->required();
    sus->add_option("--s", opt.set_text, "independent set, e.g. \"1,3\" (empty for none)");
    CLI::Option* edge_opt = sus->add_option("--edge", opt.edge_text, "suspension edge \"i,j\"");
    sus->add_option("--out", opt.out, "output graph file");

    CLI::App* ver = app.add_subcommand("verify", "Randomized property suite with oracle checks");
    ver->add_option("--trials", opt.trials, "number of trials");
    ver->add_option("--seed", opt.seed, "RNG seed");
    ver->add_option("--max-n", opt.max_n, "largest sampled vertex count (<= 10)");
    ver->add_option("--field", opt.field, "q, f2 or fp:<p>");
    ver->add_flag("--json", opt.as_json, "emit JSON");

    CLI::App* exp = app.add_subcommand("expand", "Print Hilbert function values 0..D");
    exp->add_option("path", opt.path, "graph JSON file")->required();
    exp->add_option("--degree", opt.degree, "highest degree");

    CLI::App* dot = app.add_subcommand("export-dot", "Write the graph in DOT format");
    dot->add_option("path", opt.path, "graph JSON file")->required();
    dot->add_option("--out", opt.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.edge_given = edge_opt->count() > 0;
    try {
        if (inv->parsed()) return cmd_invariants(opt);
        if (con->parsed()) return cmd_construct(opt);
        if (sus->parsed()) return cmd_suspend(opt);
        if (ver->parsed()) return cmd_verify(opt);
        if (exp->parsed()) return cmd_expand(opt);
        if (dot->parsed()) return cmd_export_dot(opt);
    } catch (const BaseUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

// Command-line front end: every subcommand is a thin adapter over the library.
//
// Exit status: 0 success (or identity holds), 1 identity fails (`check`),
// 2 usage or input error, 3 scale or overflow error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cliquepoly/cliques.hpp"
#include "cliquepoly/errors.hpp"
#include "cliquepoly/expansion.hpp"
#include "cliquepoly/graph.hpp"
#include "cliquepoly/search.hpp"

namespace {

using namespace cliquepoly;

enum ExitStatus : int { kOk = 0, kIdentityFails = 1, kUsage = 2, kScale = 3 };

struct GraphInput {
    std::string path;
    std::string graph6;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", path, "edge-list file ('-' for stdin)");
        cmd->add_option("--graph6", graph6, "graph6 string given inline");
    }

    Graph load() const {
        if (!graph6.empty() && !path.empty()) throw DomainError("give either a graph file or --graph6, not both");
        if (!graph6.empty()) return parse_graph6(graph6);
        if (path.empty()) throw DomainError("no graph given (file path or --graph6)");
        std::string text;
        if (path == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(path);
            if (!in) throw DomainError("cannot open " + path);
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return parse_edge_list(text);
    }
};

std::string vertex_list(VertexSet w) {
    std::string out;
    for (int v : w.to_vector()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out.empty() ? "{}" : out;
}

std::string signed_int(std::int64_t v) { return (v > 0 ? "+" : "") + std::to_string(v); }

int run_poly(const Graph& g, bool bruteforce) {
    std::cout << (bruteforce ? count_cliques_bruteforce(g) : clique_polynomial(g)) << '\n';
    return kOk;
}

int run_check(const Graph& g, const EdgeSet& m) {
    const IdentityCheck check = identity_check(g, m);
    std::cout << "graph: " << encode_graph6(g) << '\n'
              << "M: " << m.to_string() << '\n'
              << "C(G) = " << check.clique_poly << '\n'
              << "C(G-M) = " << clique_polynomial(delete_edges(g, m)) << '\n'
              << "theorem_rhs = " << check.theorem << '\n';
    if (m.size() <= kMaxSubsetEdges)
        std::cout << "inclusion_exclusion_rhs = " << inclusion_exclusion_rhs(g, m) << '\n';
    else
        std::cout << "inclusion_exclusion_rhs = (skipped, |M| > " << kMaxSubsetEdges << ")\n";
    std::cout << "diff = " << check.diff << '\n'
              << "m_edge_complete: " << std::boolalpha << check.m_edge_complete << '\n'
              << "support_clique: " << check.support_clique << '\n'
              << "verdict: " << (check.holds ? "holds" : "fails") << '\n';
    return check.holds ? kOk : kIdentityFails;
}

int run_explain(const Graph& g, const EdgeSet& m) {
    const TermLedger ledger = explain_diff(g, m);
    auto row = [](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                  const std::string& e) {
        std::cout << std::left << std::setw(10) << a << std::right << std::setw(5) << b << "  " << std::left
                  << std::setw(20) << c << std::setw(14) << d << e << '\n';
    };
    row("source", "sign", "subset", "support", "contribution");
    for (const auto& e : ledger.entries) {
        row(e.source == TermSource::Theorem ? "theorem" : "incl-excl", signed_int(e.sign),
            e.subset.empty() ? "{}" : e.subset.to_string(), vertex_list(e.support), e.contribution.to_string());
    }
    std::cout << "\nC(G-M) = " << ledger.theorem_base << '\n'
              << "total incl-excl = " << ledger.total(TermSource::InclusionExclusion) << '\n'
              << "total theorem = " << ledger.total(TermSource::Theorem) << '\n'
              << "\nresiduals by support (incl-excl + theorem; nonzero rows are the discrepancy)\n";
    std::cout << std::left << std::setw(14) << "support" << std::setw(20) << "incl-excl" << std::setw(20)
              << "theorem"
              << "residual\n";
    for (const auto& r : ledger.residuals()) {
        std::cout << std::left << std::setw(14) << vertex_list(r.support) << std::setw(20)
                  << r.inclusion_exclusion.to_string() << std::setw(20) << r.theorem.to_string()
                  << r.residual.to_string() << '\n';
    }
    return kOk;
}

int run_cstar(const Graph& g, const EdgeSet& s) {
    std::cout << cstar(g, s) << '\n';
    return kOk;
}

int run_fpq(int p, std::optional<int> q) {
    if (p < 2) throw DomainError("p must be at least 2");
    if (q) {
        std::cout << "f(" << p << "," << *q << ") = " << spanning_subgraph_count(p, *q) << '\n';
        return kOk;
    }
    const int pairs = p * (p - 1) / 2;
    std::cout << "f:";
    for (int k = (p + 1) / 2; k <= pairs; ++k) std::cout << ' ' << spanning_subgraph_count(p, k);
    std::cout << " | alt-sum: " << alternating_spanning_sum(p) << '\n';
    return kOk;
}

int run_sweep(const SweepConfig& config, const std::string& out_path, const std::string& format) {
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) throw DomainError("cannot write " + out_path);
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

    if (format == "csv") {
        out << csv_header();
        sweep(config, [&](const ClassificationRecord& r) { out << to_csv_row(r); });
    } else {
        out << to_json(sweep(config));
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact clique polynomials and edge-subgraph expansion checks"};
    app.require_subcommand(1);

    GraphInput poly_in;
    bool bruteforce = false;
    auto* poly = app.add_subcommand("poly", "print the clique polynomial");
    poly_in.attach(poly);
    poly->add_flag("--bruteforce", bruteforce, "use subset enumeration (n <= 20)");

    GraphInput check_in;
    std::string check_edges;
    auto* check = app.add_subcommand("check", "compare C(G) with the edge-subgraph expansion for M");
    check_in.attach(check);
    check->add_option("--edges", check_edges, "M as i-j,i-j,...")->required();

    GraphInput explain_in;
    std::string explain_edges;
    auto* explain = app.add_subcommand("explain", "term ledger of both expansions");
    explain_in.attach(explain);
    explain->add_option("--edges", explain_edges, "M as i-j,i-j,...")->required();

    GraphInput cstar_in;
    std::string cstar_edges;
    auto* cstar_cmd = app.add_subcommand("cstar", "guarded common-neighborhood clique polynomial C*(G_S)");
    cstar_in.attach(cstar_cmd);
    cstar_cmd->add_option("--edges", cstar_edges, "S as i-j,i-j,...")->required();

    int p = 0;
    std::optional<int> q;
    auto* fpq = app.add_subcommand("fpq", "spanning edge-subset counts of K_p and their alternating sum");
    fpq->add_option("p", p, "order of the complete graph")->required();
    fpq->add_option("q", q, "single edge count");

    GraphInput g6_in;
    auto* g6 = app.add_subcommand("graph6", "encode an edge-list graph as graph6");
    g6_in.attach(g6);

    SweepConfig config;
    std::optional<int> n_single;
    std::string mode = "exhaustive";
    std::string m_mode = "all-subsets";
    std::string out_path;
    std::string format = "json";
    auto* sw = app.add_subcommand("sweep", "classify many (G, M) pairs and write a report");
    sw->add_option("--n", n_single, "single order (sets --n-min and --n-max)");
    sw->add_option("--n-min", config.n_min, "smallest order");
    sw->add_option("--n-max", config.n_max, "largest order");
    sw->add_option("--mode", mode, "graph source")->check(CLI::IsMember({"exhaustive", "random"}));
    sw->add_option("--m-mode", m_mode, "edge subsets per graph")->check(CLI::IsMember({"all-subsets", "sampled"}));
    sw->add_option("--samples", config.graph_samples, "random graphs per order");
    sw->add_option("--m-samples", config.m_samples, "sampled subsets per graph");
    sw->add_option("--p", config.edge_probability, "edge probability for random graphs");
    sw->add_option("--seed", config.seed, "mt19937_64 seed");
    sw->add_flag("--dedup", config.dedup, "one labeled representative per isomorphism class");
    sw->add_option("--witness-cap", config.witness_cap, "witnesses kept per cell");
    sw->add_option("--threads", config.threads, "worker threads");
    sw->add_option("--out", out_path, "output file (default stdout)");
    sw->add_option("--format", format, "json report or csv rows")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*poly) return run_poly(poly_in.load(), bruteforce);
        if (*check) return run_check(check_in.load(), EdgeSet::parse(check_edges));
        if (*explain) return run_explain(explain_in.load(), EdgeSet::parse(explain_edges));
        if (*cstar_cmd) return run_cstar(cstar_in.load(), EdgeSet::parse(cstar_edges));
        if (*fpq) return run_fpq(p, q);
        if (*g6) {
            std::cout << encode_graph6(g6_in.load()) << '\n';
            return kOk;
        }
        if (*sw) {
            if (n_single) config.n_min = config.n_max = *n_single;
            config.mode = mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
            config.m_mode = m_mode == "sampled" ? SubsetMode::Sampled : SubsetMode::AllSubsets;
            return run_sweep(config, out_path, format);
        }
    } catch (const ScaleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kScale;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kScale;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

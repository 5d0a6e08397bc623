#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coverpeb/conjecture.hpp"
#include "coverpeb/enumerate.hpp"
#include "coverpeb/errors.hpp"
#include "coverpeb/graph.hpp"
#include "coverpeb/oracle.hpp"
#include "coverpeb/pebbling.hpp"
#include "coverpeb/solver.hpp"

namespace {

using namespace coverpeb;

// Exit codes: 0 affirmative, 1 negative, 2 unknown / limit exceeded,
// 3 input or format error, 4 precondition violation.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;
constexpr int kExitPrecondition = 4;

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return read_graph(in);
}

// A distribution argument is "uniform:k", "-" (stdin), a file path, or an
// inline whitespace-separated vector.
Distribution load_distribution(const std::string& spec, int vertex_count) {
    Distribution d;
    if (spec.rfind("uniform:", 0) == 0) {
        std::string k = spec.substr(8);
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
            throw FormatError("bad uniform shorthand: " + spec);
        try {
            d = Distribution::uniform(vertex_count, std::stoull(k));
        } catch (const std::out_of_range&) {
            throw OverflowError("uniform count exceeds 64 bits: " + spec);
        }
    } else if (spec == "-") {
        d = read_distribution(std::cin);
    } else if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        if (!in) throw FormatError("cannot open distribution file: " + spec);
        d = read_distribution(in);
    } else {
        d = parse_distribution(spec);
    }
    if (d.size() != vertex_count)
        throw FormatError("distribution has " + std::to_string(d.size()) +
                          " entries, graph has " + std::to_string(vertex_count) +
                          " vertices");
    return d;
}

std::string format_vertex_set(const std::vector<Vertex>& set) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(set[i]);
    }
    return s + "}";
}

struct CoverOptions {
    std::string graph_path;
    std::string weights;
    std::string dist;
    std::string method = "auto";
    std::string cert_path;
    std::uint64_t max_states = 0; // 0 = unlimited
    double max_seconds = 0;       // 0 = unlimited
    bool stats = false;
};

SearchLimits make_limits(std::uint64_t max_states, double max_seconds) {
    SearchLimits limits;
    if (max_states > 0) limits.max_states = max_states;
    if (max_seconds > 0) limits.max_seconds = max_seconds;
    return limits;
}

void maybe_write_certificate(const std::string& path, const MoveSequence& seq) {
    if (path.empty()) return;
    if (path == "-") {
        write_certificate(std::cout, seq);
        return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open certificate file for writing: " + path);
    write_certificate(out, seq);
}

int run_cover(const CoverOptions& opt) {
    Graph g = load_graph(opt.graph_path);
    Distribution w = load_distribution(opt.weights, g.vertex_count());
    Distribution d = load_distribution(opt.dist, g.vertex_count());
    SearchLimits limits = make_limits(opt.max_states, opt.max_seconds);

    CoverDecision decision;
    std::optional<SearchStats> stats;
    if (opt.method == "auto") {
        decision = decide_cover(g, w, d, limits);
    } else if (opt.method == "sufficient") {
        decision = decide_cover(g, w, d, std::nullopt);
    } else if (opt.method == "oracle") {
        ExactResult exact = covers_exact(g, w, d, limits);
        if (opt.stats) stats = exact.stats;
        switch (exact.outcome) {
            case ExactOutcome::Covers:
                decision = CoverDecision{Verdict::Covers, Method::Oracle,
                                         std::move(exact.moves), {}, false};
                break;
            case ExactOutcome::NotCovers:
                decision = CoverDecision{Verdict::NotCovers, Method::Oracle, {}, {}, true};
                break;
            case ExactOutcome::LimitExceeded:
                decision = CoverDecision{Verdict::Unknown, Method::Oracle, {}, {}, false};
                break;
        }
    } else {
        throw FormatError("unknown method: " + opt.method);
    }

    int code = kExitInput;
    switch (decision.verdict) {
        case Verdict::Covers:
            std::cout << "COVERS\n";
            code = kExitYes;
            break;
        case Verdict::NotCovers:
            std::cout << "NOTCOVERS witness="
                      << (decision.oracle_exhausted ? std::string("oracle-exhausted-state-space")
                                                    : format_vertex_set(decision.witness))
                      << "\n";
            code = kExitNo;
            break;
        case Verdict::Unknown:
            std::cout << "UNKNOWN\n";
            code = kExitUnknown;
            break;
    }
    std::cout << "METHOD " << method_name(decision.method) << "\n";
    if (stats) write_stats(std::cout, *stats);
    if (decision.verdict == Verdict::Covers)
        maybe_write_certificate(opt.cert_path, decision.certificate);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted cover pebbling: values, certificates, exact search"};
    app.require_subcommand(1);
    int exit_code = kExitYes;

    // phi
    std::string phi_graph, phi_weights;
    auto* phi_cmd = app.add_subcommand("phi", "cover pebbling number via the stacking formula");
    phi_cmd->add_option("graph", phi_graph, "graph file or -")->required();
    phi_cmd->add_option("--weights", phi_weights, "weight distribution")->required();
    phi_cmd->callback([&] {
        Graph g = load_graph(phi_graph);
        Distribution w = load_distribution(phi_weights, g.vertex_count());
        CoverPebblingNumber phi = cover_pebbling_number(g, w);
        std::cout << "PHI " << phi.value << " VERTEX " << phi.critical_vertex << "\n";
    });

    // stacking
    std::string st_graph, st_weights;
    bool st_all = false;
    auto* st_cmd = app.add_subcommand("stacking", "stacking number SN_W(G)");
    st_cmd->add_option("graph", st_graph, "graph file or -")->required();
    st_cmd->add_option("--weights", st_weights, "weight distribution")->required();
    st_cmd->add_flag("--all", st_all, "print V_{v}(W) for every vertex");
    st_cmd->callback([&] {
        Graph g = load_graph(st_graph);
        Distribution w = load_distribution(st_weights, g.vertex_count());
        if (st_all) {
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                std::cout << "VERTEX " << v << " VALUE "
                          << standard_value(g.distances(), w, {v}) << "\n";
        }
        StackingNumber sn = stacking_number(g.distances(), w);
        std::cout << "SN " << sn.value << " VERTEX " << sn.argmax << "\n";
    });

    // cover
    CoverOptions cover_opt;
    auto* cover_cmd = app.add_subcommand("cover", "decide whether a distribution covers weights");
    cover_cmd->add_option("graph", cover_opt.graph_path, "graph file or -")->required();
    cover_cmd->add_option("--weights", cover_opt.weights, "weight distribution")->required();
    cover_cmd->add_option("--dist", cover_opt.dist, "pebble distribution")->required();
    cover_cmd->add_option("--method", cover_opt.method, "auto|sufficient|oracle")
        ->check(CLI::IsMember({"auto", "sufficient", "oracle"}));
    cover_cmd->add_option("--cert", cover_opt.cert_path, "write certificate here on COVERS");
    cover_cmd->add_option("--max-states", cover_opt.max_states, "oracle state cap");
    cover_cmd->add_option("--max-seconds", cover_opt.max_seconds, "oracle time cap");
    cover_cmd->add_flag("--stats", cover_opt.stats, "emit search stats (oracle method)");
    cover_cmd->callback([&] { exit_code = run_cover(cover_opt); });

    // verify
    std::string vf_graph, vf_weights, vf_dist, vf_cert;
    auto* vf_cmd = app.add_subcommand("verify", "replay a certificate and check coverage");
    vf_cmd->add_option("graph", vf_graph, "graph file or -")->required();
    vf_cmd->add_option("--dist", vf_dist, "starting distribution")->required();
    vf_cmd->add_option("--weights", vf_weights, "weight distribution")->required();
    vf_cmd->add_option("--cert", vf_cert, "certificate file or -")->required();
    vf_cmd->callback([&] {
        Graph g = load_graph(vf_graph);
        Distribution d = load_distribution(vf_dist, g.vertex_count());
        Distribution w = load_distribution(vf_weights, g.vertex_count());
        MoveSequence seq;
        if (vf_cert == "-") {
            seq = read_certificate(std::cin);
        } else {
            std::ifstream in(vf_cert);
            if (!in) throw FormatError("cannot open certificate file: " + vf_cert);
            seq = read_certificate(in);
        }
        VerifyResult r = verify_certificate(g, d, seq, w);
        if (r.valid) {
            std::cout << "VALID\n";
        } else if (r.failed_index) {
            std::cout << "INVALID at " << *r.failed_index << "\n";
            exit_code = kExitNo;
        } else {
            std::cout << "INVALID at end\n"; // replay fine, coverage missing
            exit_code = kExitNo;
        }
    });

    // oracle-phi
    std::string op_graph, op_weights;
    std::uint64_t op_max_states = 0;
    double op_max_seconds = 0;
    auto* op_cmd = app.add_subcommand("oracle-phi", "exact Phi by exhaustive enumeration");
    op_cmd->add_option("graph", op_graph, "graph file or -")->required();
    op_cmd->add_option("--weights", op_weights, "weight distribution")->required();
    op_cmd->add_option("--max-states", op_max_states, "cumulative state cap");
    op_cmd->add_option("--max-seconds", op_max_seconds, "time cap");
    op_cmd->callback([&] {
        Graph g = load_graph(op_graph);
        Distribution w = load_distribution(op_weights, g.vertex_count());
        BigUint phi = phi_exact(g, w, make_limits(op_max_states, op_max_seconds));
        std::cout << "PHI " << phi << "\n";
    });

    // product
    std::string pr_g, pr_h, pr_out;
    auto* pr_cmd = app.add_subcommand("product", "Cartesian product of two graphs");
    pr_cmd->add_option("graph1", pr_g, "first factor file or -")->required();
    pr_cmd->add_option("graph2", pr_h, "second factor file")->required();
    pr_cmd->add_option("-o,--output", pr_out, "output graph file or -")->required();
    pr_cmd->callback([&] {
        Graph g = load_graph(pr_g);
        Graph h = load_graph(pr_h);
        ProductGraph product = cartesian_product(g, h);
        if (pr_out == "-") {
            write_graph(std::cout, product.graph);
        } else {
            std::ofstream out(pr_out);
            if (!out) throw FormatError("cannot open output file: " + pr_out);
            write_graph(out, product.graph);
        }
        std::cout << "PRODUCT vertices=" << product.graph.vertex_count()
                  << " edges=" << product.graph.edge_count() << "\n";
    });

    // conjecture
    int cj_max_n = 3;
    std::uint64_t cj_max_weight = 1;
    std::uint64_t cj_budget = 0;
    std::uint64_t cj_max_states = 0;
    double cj_max_seconds = 0;
    auto* cj_cmd = app.add_subcommand("conjecture",
                                      "search for counterexamples to the value-condition converse");
    cj_cmd->add_option("--max-n", cj_max_n, "largest vertex count")->required();
    cj_cmd->add_option("--max-weight", cj_max_weight, "largest weight entry")->required();
    cj_cmd->add_option("--budget", cj_budget, "cap on |d| (default: the stacking number)");
    cj_cmd->add_option("--max-states", cj_max_states, "cumulative oracle state cap");
    cj_cmd->add_option("--max-seconds", cj_max_seconds, "time cap");
    cj_cmd->callback([&] {
        std::optional<std::uint64_t> budget;
        if (cj_budget > 0) budget = cj_budget;
        ConjectureReport report = search_conjecture(cj_max_n, cj_max_weight, budget,
                                                    make_limits(cj_max_states, cj_max_seconds));
        write_report(std::cout, report);
        if (!report.complete)
            exit_code = kExitUnknown;
        else if (!report.counterexamples.empty() || !report.necessity_violations.empty())
            exit_code = kExitNo;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const LimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return exit_code;
}

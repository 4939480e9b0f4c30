#include "mkcover/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "mkcover/connectivity.hpp"
#include "mkcover/constructible.hpp"
#include "mkcover/generators.hpp"
#include "mkcover/mk_cover.hpp"
#include "mkcover/mst.hpp"
#include "mkcover/verify.hpp"

namespace mkcover::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitInvariantViolation = 2;

template <typename Parse>
auto load(const std::string& path, std::istream& fallback, Parse&& parse) {
    if (path.empty() || path == "-") {
        return parse(fallback);
    }
    std::ifstream file(path);
    if (!file) throw GraphError("cannot open file: " + path);
    return parse(file);
}

WeightedGraph load_graph(const std::string& path, std::istream& fallback, ParseMode mode) {
    return load(path, fallback, [mode](std::istream& in) { return parse_graph(in, mode); });
}

void print_edges(const EdgeSet& edges, std::ostream& out) {
    for (const Edge& e : edges) {
        out << e.u << ' ' << e.v << '\n';
    }
}

void print_summary(const CoverReport& report, const char* method, std::ostream& out) {
    out << "k=" << report.k << " size=" << report.cover_size << " bound=" << report.bound
        << " tight=" << (report.tight ? "yes" : "no") << " method=" << method << '\n';
}

struct Options {
    std::string file;
    int k = 1;
    std::string method = "fast";
    std::uint64_t work_limit = kDefaultWorkLimit;
    int threads = 0;  // 0 = hardware concurrency for brute-force legs
    bool permissive = false;
    int s = 0;
    int t = 0;
    int cap = 0;  // 0 = unbounded (n)
    bool want_separator = false;
    int n = 0;
    std::uint64_t seed = 0;
    int order_k = 0;  // 0 = take k from the order file
    SuiteParams suite;
};

int run_compute_mk(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const ParseMode mode = opt.permissive ? ParseMode::permissive : ParseMode::strict;
    const WeightedGraph g = load_graph(opt.file, in, mode);

    auto note_ties = [&](const CoverReport& r) {
        if (r.tie_broken) {
            err << "note: duplicate weights present; ties broken by (weight, u, v)\n";
        }
    };

    if (opt.method == "fast" || opt.method == "brute") {
        const CoverReport report = opt.method == "fast"
                                       ? mk_fast(g, opt.k)
                                       : mk_brute(g, opt.k, opt.work_limit, opt.threads);
        note_ties(report);
        print_edges(report.cover, out);
        print_summary(report, opt.method.c_str(), out);
        return kExitOk;
    }

    const CoverReport fast = mk_fast(g, opt.k);
    const CoverReport brute = mk_brute(g, opt.k, opt.work_limit, opt.threads);
    if (fast.cover != brute.cover) {
        err << "invariant violation: mk_fast and mk_brute disagree (fast " << fast.cover_size
            << " edges, brute " << brute.cover_size << " edges)\n";
        return kExitInvariantViolation;
    }
    note_ties(fast);
    print_edges(fast.cover, out);
    print_summary(fast, "both", out);
    return kExitOk;
}

int run_connectivity(const Options& opt, std::istream& in, std::ostream& out) {
    const WeightedGraph g = load_graph(opt.file, in,
                                       opt.permissive ? ParseMode::permissive : ParseMode::strict);
    const SimpleGraph shape(g);
    const int cap = opt.cap > 0 ? opt.cap : std::max(g.vertex_count(), 1);
    out << "connectivity=" << local_connectivity(shape, opt.s, opt.t, cap) << '\n';
    if (opt.want_separator) {
        const auto cert = min_separator(shape, opt.s, opt.t);
        out << "separator=";
        bool first = true;
        for (int v : cert.separator) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << '\n' << "paths=" << cert.paths_found << '\n';
    }
    return kExitOk;
}

ConstructionOrder load_order(const Options& opt, std::istream& in) {
    ConstructionOrder o =
        load(opt.file, in, [](std::istream& stream) { return parse_order(stream); });
    if (opt.order_k > 0) o.k = opt.order_k;
    return o;
}

int run_check_order(const Options& opt, std::istream& in, std::ostream& out) {
    const auto verdict = check_order(load_order(opt, in));
    if (verdict.valid) {
        out << "valid=yes\n";
        return kExitOk;
    }
    out << "valid=no index=" << verdict.violation->index
        << " connectivity=" << verdict.violation->connectivity << '\n';
    return kExitDomainError;
}

int run_extend_maximal(const Options& opt, std::istream& in, std::ostream& out) {
    const ConstructionOrder base = load_order(opt, in);
    SimpleGraph g(base.host_n);
    for (const Edge& e : base.sequence) g.add_edge(e);
    const auto extension = extend_maximal(g, base.k, base);
    serialize_order(extension.order, out);
    return kExitOk;
}

int run_embed_weights(const Options& opt, std::istream& in, std::ostream& out) {
    serialize_graph(embed_weights(load_order(opt, in)), out);
    return kExitOk;
}

int run_check_kminimal(const Options& opt, std::istream& in, std::ostream& out) {
    const SimpleGraph g =
        load(opt.file, in, [](std::istream& stream) { return parse_simple_graph(stream); });
    const bool minimal = is_k_minimal(g, opt.k);
    out << "kminimal=" << (minimal ? "yes" : "no") << '\n';
    return minimal ? kExitOk : kExitDomainError;
}

int run_verify_suite(const Options& opt, std::ostream& out) {
    const SuiteReport report = verify_suite(opt.suite);
    for (const SuiteCell& cell : report.cells) {
        out << "cell n=" << cell.n << " k=" << cell.k << " seed=" << cell.seed
            << " check=" << cell.check << " result=";
        switch (cell.result) {
            case CellResult::pass: out << "pass"; break;
            case CellResult::fail: out << "fail"; break;
            case CellResult::skip: out << "skip"; break;
        }
        if (!cell.note.empty()) out << " note=\"" << cell.note << "\"";
        out << '\n';
    }
    out << "verify-suite checks=" << report.cells.size() << " passed=" << report.passed
        << " failed=" << report.failed << " skipped=" << report.skipped << '\n';
    return report.failed > 0 ? kExitInvariantViolation : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"robust MST covers: M_k computation and verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "input file ('-' or omitted reads stdin)");
    };
    auto add_permissive = [&](CLI::App* cmd) {
        cmd->add_flag("--permissive", opt.permissive,
                      "accept duplicate weights, breaking ties by (weight, u, v)");
    };

    auto* mst_cmd = app.add_subcommand("mst", "minimum spanning tree of a weighted graph");
    add_file(mst_cmd);
    add_permissive(mst_cmd);

    auto* mk_cmd = app.add_subcommand("compute-mk", "compute the robust MST cover M_k");
    mk_cmd->add_option("--k", opt.k, "cover parameter k (1 <= k <= n-1)")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    mk_cmd->add_option("--method", opt.method, "fast, brute, or both")
        ->check(CLI::IsMember({"fast", "brute", "both"}));
    mk_cmd->add_option("--work-limit", opt.work_limit, "brute-force work limit");
    mk_cmd->add_option("--threads", opt.threads, "brute-force worker threads (0 = auto)");
    add_permissive(mk_cmd);
    add_file(mk_cmd);

    auto* conn_cmd = app.add_subcommand("connectivity", "local vertex connectivity of a pair");
    conn_cmd->add_option("--s", opt.s, "first endpoint")->required();
    conn_cmd->add_option("--t", opt.t, "second endpoint")->required();
    conn_cmd->add_option("--cap", opt.cap, "stop after this many paths (0 = unbounded)");
    conn_cmd->add_flag("--separator", opt.want_separator,
                       "also print a minimum separator (non-adjacent pairs only)");
    add_permissive(conn_cmd);
    add_file(conn_cmd);

    auto* order_cmd = app.add_subcommand("check-order", "verify a k-construction order");
    order_cmd->add_option("--k", opt.order_k, "override the k from the order file header");
    add_file(order_cmd);

    auto* extend_cmd =
        app.add_subcommand("extend-maximal", "append every anti-edge that keeps the order valid");
    extend_cmd->add_option("--k", opt.order_k, "override the k from the order file header");
    add_file(extend_cmd);

    auto* embed_cmd = app.add_subcommand(
        "embed-weights", "weight a construction order so its edges all land in M_k");
    add_file(embed_cmd);

    auto* minimal_cmd = app.add_subcommand("check-kminimal", "test edge-minimal k-connectivity");
    minimal_cmd->add_option("--k", opt.k, "connectivity parameter")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    add_file(minimal_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "instance generators");
    gen_cmd->require_subcommand(1);
    auto* gen_tight_cmd = gen_cmd->add_subcommand("tight", "extremal instance with |M_k| = bound");
    gen_tight_cmd->add_option("--n", opt.n, "vertex count")->required();
    gen_tight_cmd->add_option("--k", opt.k, "cover parameter")->required();
    gen_tight_cmd->add_option("--seed", opt.seed, "in-class weight shuffle seed");
    auto* gen_random_cmd = gen_cmd->add_subcommand("random", "random complete graph");
    gen_random_cmd->add_option("--n", opt.n, "vertex count")->required();
    gen_random_cmd->add_option("--seed", opt.seed, "weight permutation seed");
    auto* gen_c4_cmd = gen_cmd->add_subcommand("c4", "the weighted K4 whose M_2 is a 4-cycle");

    auto* suite_cmd = app.add_subcommand("verify-suite", "batch checks over seeded instances");
    suite_cmd->add_option("--n-min", opt.suite.n_min, "smallest vertex count");
    suite_cmd->add_option("--n-max", opt.suite.n_max, "largest vertex count");
    suite_cmd->add_option("--seeds", opt.suite.seeds, "seeds per (n, k) cell");
    suite_cmd->add_option("--brute-max", opt.suite.brute_max,
                          "largest n for brute-force legs (larger n skip them)");
    suite_cmd->add_option("--k-max", opt.suite.k_max, "largest k (0 = all k up to n-1)");
    suite_cmd->add_option("--work-limit", opt.suite.work_limit, "brute-force work limit");
    suite_cmd->add_option("--threads", opt.suite.threads, "brute-force worker threads");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitDomainError;
    }

    try {
        if (mst_cmd->parsed()) {
            const WeightedGraph g = load_graph(
                opt.file, in, opt.permissive ? ParseMode::permissive : ParseMode::strict);
            print_edges(mst(g), out);
            return kExitOk;
        }
        if (mk_cmd->parsed()) return run_compute_mk(opt, in, out, err);
        if (conn_cmd->parsed()) return run_connectivity(opt, in, out);
        if (order_cmd->parsed()) return run_check_order(opt, in, out);
        if (extend_cmd->parsed()) return run_extend_maximal(opt, in, out);
        if (embed_cmd->parsed()) return run_embed_weights(opt, in, out);
        if (minimal_cmd->parsed()) return run_check_kminimal(opt, in, out);
        if (gen_cmd->parsed()) {
            if (gen_tight_cmd->parsed()) {
                serialize_graph(gen_tight(opt.n, opt.k, Seed{opt.seed}), out);
            } else if (gen_random_cmd->parsed()) {
                serialize_graph(gen_random_complete(opt.n, Seed{opt.seed}), out);
            } else if (gen_c4_cmd->parsed()) {
                serialize_graph(fixture_c4(), out);
            }
            return kExitOk;
        }
        if (suite_cmd->parsed()) return run_verify_suite(opt, out);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInvariantViolation;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitDomainError;
}

}  // namespace mkcover::cli

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "fillkern/bench.hpp"
#include "fillkern/generate.hpp"
#include "fillkern/metis_io.hpp"
#include "fillkern/version.hpp"

namespace {

// Exit codes: 0 ok, 1 internal error, 2 I/O, 3 graph/permutation parse,
// 4 configuration, 5 verification failure.
enum exit_code {
    kOk = 0,
    kInternalError = 1,
    kIoError = 2,
    kParseError = 3,
    kConfigError = 4,
    kVerifyError = 5,
};

template <typename Fn> int guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const fillkern::config_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const fillkern::metis_parse_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const fillkern::io_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternalError;
    }
}

unsigned thread_budget(std::size_t cells) {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0)
        threads = 1;
    if (const char *env = std::getenv("FILLKERN_THREADS")) {
        char *end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1)
            threads = static_cast<unsigned>(parsed);
    }
    return std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells, 1)));
}

struct order_args {
    std::string graph_path;
    std::string config = "";
    std::string perm_path;
    std::string stats_path;
    fillkern::bench_options opts;
};

int cmd_order(const order_args &args) {
    const fillkern::dynamic_graph g = fillkern::load_metis_file(args.graph_path);
    const fillkern::run_output out = fillkern::run_one(args.graph_path, g, args.config, args.opts);

    const std::string perm_path = args.perm_path.empty() ? args.graph_path + ".perm" : args.perm_path;
    fillkern::write_permutation_file(out.order, perm_path);

    const std::string stats_path = args.stats_path.empty() ? args.graph_path + ".stats.csv" : args.stats_path;
    std::ofstream stats(stats_path);
    if (!stats)
        throw fillkern::io_error("cannot open '" + stats_path + "' for writing");
    stats << fillkern::kRunRecordHeader << '\n';
    fillkern::write_record_csv(stats, out.record);
    stats << '\n';

    std::cout << "ordered " << args.graph_path << " [" << out.record.config << "]: n=" << out.record.n
              << " m=" << out.record.m << " kernel_fraction=" << out.record.kernel_fraction
              << " fill_in=" << out.record.fill_in << " nnz_factor=" << out.record.nnz_factor << '\n'
              << "permutation: " << perm_path << "\nstats: " << stats_path << '\n';
    return kOk;
}

struct compare_args {
    std::vector<std::string> instances;
    std::vector<std::string> configs;
    int reps = 10;
    std::string out_path;
    fillkern::bench_options opts;
};

int cmd_compare(const compare_args &args) {
    const unsigned threads = thread_budget(args.instances.size() * std::max<std::size_t>(args.configs.size(), 1));
    const std::vector<fillkern::compare_row> rows =
        fillkern::run_compare(args.instances, args.configs, args.reps, args.opts, threads);

    if (args.out_path.empty() || args.out_path == "-") {
        fillkern::write_compare_csv(std::cout, rows);
    } else {
        std::ofstream out(args.out_path);
        if (!out)
            throw fillkern::io_error("cannot open '" + args.out_path + "' for writing");
        fillkern::write_compare_csv(out, rows);
    }

    std::size_t failed = 0;
    for (const fillkern::compare_row &row : rows)
        failed += row.failed ? 1 : 0;
    if (failed > 0)
        std::cerr << failed << " of " << rows.size() << " cells failed\n";
    return kOk;
}

struct gen_args {
    std::string kind;
    std::string out_path;
    int rows = 4;
    int cols = 4;
    int min_len = 1;
    int max_len = 4;
    int cliques = 4;
    int clique_size = 4;
    int nodes = 16;
    double edge_prob = 0.25;
    std::uint64_t seed = 1;
};

int cmd_gen(const gen_args &args) {
    fillkern::dynamic_graph g;
    try {
        if (args.kind == "grid")
            g = fillkern::gen_grid(args.rows, args.cols);
        else if (args.kind == "road")
            g = fillkern::gen_road(args.rows, args.cols, args.min_len, args.max_len, args.seed);
        else if (args.kind == "clique-chain")
            g = fillkern::gen_clique_chain(args.cliques, args.clique_size);
        else if (args.kind == "random")
            g = fillkern::gen_random(args.nodes, args.edge_prob, args.seed);
        else
            throw fillkern::config_error("unknown generator kind '" + args.kind + "'");
    } catch (const std::invalid_argument &e) {
        throw fillkern::config_error(e.what());
    }
    fillkern::save_metis_file(g, args.out_path);
    std::cout << "wrote " << args.kind << " graph: n=" << g.n_original() << " m=" << g.edge_count() << " to "
              << args.out_path << '\n';
    return kOk;
}

int cmd_verify(const std::string &graph_path, const std::string &perm_path) {
    const fillkern::dynamic_graph g = fillkern::load_metis_file(graph_path);
    const fillkern::ordering ord = fillkern::read_permutation_file(perm_path);

    const fillkern::NodeID n = g.n_original();
    if (ord.seq.size() != static_cast<std::size_t>(n)) {
        std::cerr << "not a permutation: " << ord.seq.size() << " entries for " << n << " nodes\n";
        return kVerifyError;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (fillkern::NodeID v : ord.seq) {
        if (v < 0 || v >= n) {
            std::cerr << "not a permutation: node id " << v + 1 << " out of range\n";
            return kVerifyError;
        }
        if (seen[v]) {
            std::cerr << "not a permutation: node id " << v + 1 << " appears twice\n";
            return kVerifyError;
        }
        seen[v] = true;
    }

    const fillkern::elimination_stats stats = fillkern::simulate(g, ord);
    std::cout << "valid permutation: n=" << n << " m=" << g.edge_count() << " fill_in=" << stats.fill_in
              << " nnz_factor=" << stats.nnz_factor << " op_count=" << stats.op_count << '\n';
    return kOk;
}

void add_common_options(CLI::App *cmd, fillkern::bench_options &opts) {
    cmd->add_option("--seed", opts.seed, "random seed for the separator");
    cmd->add_option("--recursion-limit", opts.recursion_limit, "nested dissection switches to minimum degree below this size");
    cmd->add_option("--epsilon", opts.epsilon, "separator balance slack")->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--single-pass", opts.single_pass, "apply each reduction rule once instead of to a fixpoint");
    cmd->add_flag("--strict-triangle", opts.strict_triangle,
                  "triangle contraction requires exactly one shared neighbor");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"fill-reducing node orderings via graph reductions and nested dissection"};
    app.set_version_flag("--version", fillkern::kVersion);
    app.require_subcommand(1);

    order_args order;
    CLI::App *order_cmd = app.add_subcommand("order", "reduce, order and write a permutation for one graph");
    order_cmd->add_option("graph", order.graph_path, "input graph in Metis format")->required();
    order_cmd->add_option("--config", order.config, "pipeline string, e.g. SD18 or SITP (empty = no reductions)");
    order_cmd->add_option("--perm", order.perm_path, "output permutation file (default: <graph>.perm)");
    order_cmd->add_option("--stats", order.stats_path, "output stats CSV (default: <graph>.stats.csv)");
    add_common_options(order_cmd, order.opts);

    compare_args compare;
    CLI::App *compare_cmd = app.add_subcommand("compare", "benchmark configurations over an instance set");
    compare_cmd->add_option("instances", compare.instances, "input graphs in Metis format")->required();
    compare_cmd->add_option("--config", compare.configs, "pipeline string, repeatable (baseline \"\" is always included)");
    compare_cmd->add_option("--reps", compare.reps, "repetitions per cell")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--out", compare.out_path, "output CSV path (default: stdout)");
    add_common_options(compare_cmd, compare.opts);

    gen_args gen;
    CLI::App *gen_cmd = app.add_subcommand("gen", "write a synthetic instance");
    gen_cmd->add_option("kind", gen.kind, "grid | road | clique-chain | random")->required();
    gen_cmd->add_option("output", gen.out_path, "output graph path")->required();
    gen_cmd->add_option("--rows", gen.rows, "grid/road rows");
    gen_cmd->add_option("--cols", gen.cols, "grid/road columns");
    gen_cmd->add_option("--min-len", gen.min_len, "road: minimum chain length per edge");
    gen_cmd->add_option("--max-len", gen.max_len, "road: maximum chain length per edge");
    gen_cmd->add_option("--cliques", gen.cliques, "clique-chain: number of cliques");
    gen_cmd->add_option("--size", gen.clique_size, "clique-chain: clique size");
    gen_cmd->add_option("--nodes", gen.nodes, "random: node count");
    gen_cmd->add_option("--edge-prob", gen.edge_prob, "random: edge probability");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");

    std::string verify_graph, verify_perm;
    CLI::App *verify_cmd = app.add_subcommand("verify", "validate a permutation file and print its statistics");
    verify_cmd->add_option("graph", verify_graph, "input graph in Metis format")->required();
    verify_cmd->add_option("perm", verify_perm, "permutation file")->required();

    CLI11_PARSE(app, argc, argv);

    if (order_cmd->parsed())
        return guarded([&] { return cmd_order(order); });
    if (compare_cmd->parsed())
        return guarded([&] { return cmd_compare(compare); });
    if (gen_cmd->parsed())
        return guarded([&] { return cmd_gen(gen); });
    if (verify_cmd->parsed())
        return guarded([&] { return cmd_verify(verify_graph, verify_perm); });
    return kInternalError;
}

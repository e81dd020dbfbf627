#include "fillkern/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fillkern/metis_io.hpp"

namespace fillkern {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

bool same_quality(const run_record &a, const run_record &b) {
    return a.kernel_fraction == b.kernel_fraction && a.fill_in == b.fill_in && a.nnz_factor == b.nnz_factor &&
           a.op_count == b.op_count;
}

std::string format_double(double value) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << value;
    return out.str();
}

} // namespace

const char *const kRunRecordHeader =
    "instance,config,n,m,kernel_fraction,reduce_time,order_time,total_time,fill_in,nnz_factor,op_count,seed";
const char *const kCompareHeader =
    "instance,config,n,m,kernel_fraction,reduce_time,order_time,total_time,fill_in,nnz_factor,op_count,seed,"
    "speedup,nnz_improvement,time_profile,nnz_profile,status";

run_output run_one(const std::string &instance, const dynamic_graph &g, const std::string &config_text,
                   const bench_options &opts) {
    pipeline_config pipeline = parse_config(config_text);
    pipeline.single_pass = opts.single_pass;
    pipeline.triangle_strict = opts.strict_triangle;

    run_output out;
    out.record.instance = instance;
    out.record.config = normalized_config(pipeline);
    out.record.n = g.alive_count();
    out.record.m = g.edge_count();
    out.record.seed = opts.seed;

    const auto total_start = clock_type::now();

    const auto reduce_start = clock_type::now();
    pipeline_result reduced = run_pipeline(g, pipeline);
    out.record.reduce_time = seconds_since(reduce_start);

    const auto order_start = clock_type::now();
    const ordering kernel_order = nested_dissection(reduced.kernel, opts.nd());
    out.record.order_time = seconds_since(order_start);

    out.order = reconstruct_ordering(reduced.ledger, kernel_order);
    out.record.total_time = seconds_since(total_start);

    out.record.kernel_fraction =
        g.alive_count() == 0 ? 0.0
                             : static_cast<double>(reduced.kernel.alive_count()) / static_cast<double>(g.alive_count());

    const elimination_stats stats = simulate(g, out.order);
    out.record.fill_in = stats.fill_in;
    out.record.nnz_factor = stats.nnz_factor;
    out.record.op_count = stats.op_count;
    return out;
}

std::vector<compare_row> run_compare(const std::vector<std::string> &instance_paths,
                                     std::vector<std::string> configs, int reps, const bench_options &opts,
                                     unsigned threads) {
    if (instance_paths.empty())
        throw std::invalid_argument("run_compare: no instances given");
    if (reps < 1)
        throw std::invalid_argument("run_compare: reps must be at least 1");

    // Validate configs once, up front; the empty pipeline is the baseline
    // all ratios refer to.
    bool has_baseline = false;
    for (const std::string &config : configs)
        has_baseline |= normalized_config(parse_config(config)).empty();
    if (!has_baseline)
        configs.insert(configs.begin(), "");

    struct cell {
        std::size_t instance_index;
        std::size_t config_index;
    };
    std::vector<cell> cells;
    for (std::size_t i = 0; i < instance_paths.size(); ++i)
        for (std::size_t c = 0; c < configs.size(); ++c)
            cells.push_back({i, c});

    // Load each instance once; failures poison all of its cells.
    std::vector<dynamic_graph> graphs(instance_paths.size());
    std::vector<bool> loaded(instance_paths.size(), false);
    for (std::size_t i = 0; i < instance_paths.size(); ++i) {
        try {
            graphs[i] = load_metis_file(instance_paths[i]);
            loaded[i] = true;
        } catch (const std::exception &) {
            loaded[i] = false;
        }
    }

    std::vector<compare_row> rows(cells.size());
    std::atomic<std::size_t> next_cell{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t at = next_cell.fetch_add(1);
            if (at >= cells.size() || aborted.load())
                return;
            const auto [i, c] = cells[at];
            compare_row &row = rows[at];
            row.record.instance = instance_paths[i];
            row.record.config = normalized_config(parse_config(configs[c]));
            row.record.seed = opts.seed;
            if (!loaded[i]) {
                row.failed = true;
                continue;
            }
            try {
                run_record averaged;
                for (int rep = 0; rep < reps; ++rep) {
                    run_output one = run_one(instance_paths[i], graphs[i], configs[c], opts);
                    if (rep == 0) {
                        averaged = one.record;
                    } else {
                        if (!same_quality(averaged, one.record))
                            throw std::logic_error("run_compare: quality fields differ across repetitions");
                        averaged.reduce_time += one.record.reduce_time;
                        averaged.order_time += one.record.order_time;
                        averaged.total_time += one.record.total_time;
                    }
                }
                averaged.reduce_time /= reps;
                averaged.order_time /= reps;
                averaged.total_time /= reps;
                row.record = averaged;
            } catch (...) {
                std::lock_guard<std::mutex> guard(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                aborted.store(true);
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back(worker);
        for (std::thread &t : pool)
            t.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    // Derived ratios, per instance.
    for (std::size_t i = 0; i < instance_paths.size(); ++i) {
        const compare_row *baseline = nullptr;
        double best_time = 0.0;
        std::uint64_t best_nnz = 0;
        bool any = false;
        for (const compare_row &row : rows) {
            if (row.record.instance != instance_paths[i] || row.failed)
                continue;
            if (row.record.config.empty())
                baseline = &row;
            if (!any || row.record.total_time < best_time)
                best_time = row.record.total_time;
            if (!any || row.record.nnz_factor < best_nnz)
                best_nnz = row.record.nnz_factor;
            any = true;
        }
        for (compare_row &row : rows) {
            if (row.record.instance != instance_paths[i] || row.failed)
                continue;
            if (baseline != nullptr) {
                row.speedup = row.record.total_time > 0.0 ? baseline->record.total_time / row.record.total_time : 0.0;
                row.nnz_improvement = row.record.nnz_factor > 0
                                          ? static_cast<double>(baseline->record.nnz_factor) /
                                                static_cast<double>(row.record.nnz_factor)
                                          : 0.0;
                if (&row == baseline) {
                    row.speedup = 1.0;
                    row.nnz_improvement = 1.0;
                }
            }
            row.time_profile = row.record.total_time > 0.0 ? best_time / row.record.total_time : 1.0;
            row.nnz_profile =
                row.record.nnz_factor > 0 ? static_cast<double>(best_nnz) / static_cast<double>(row.record.nnz_factor)
                                          : 1.0;
        }
    }

    bool all_failed = true;
    for (const compare_row &row : rows)
        all_failed &= row.failed;
    if (all_failed)
        throw std::runtime_error("run_compare: every instance failed to load");
    return rows;
}

void write_record_csv(std::ostream &out, const run_record &r) {
    out << r.instance << ',' << r.config << ',' << r.n << ',' << r.m << ',' << format_double(r.kernel_fraction) << ','
        << format_double(r.reduce_time) << ',' << format_double(r.order_time) << ',' << format_double(r.total_time)
        << ',' << r.fill_in << ',' << r.nnz_factor << ',' << r.op_count << ',' << r.seed;
}

void write_compare_csv(std::ostream &out, const std::vector<compare_row> &rows) {
    out << kCompareHeader << '\n';
    for (const compare_row &row : rows) {
        write_record_csv(out, row.record);
        out << ',' << format_double(row.speedup) << ',' << format_double(row.nnz_improvement) << ','
            << format_double(row.time_profile) << ',' << format_double(row.nnz_profile) << ','
            << (row.failed ? "failed" : "ok") << '\n';
    }
}

std::vector<compare_row> parse_compare_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kCompareHeader)
        throw std::runtime_error("parse_compare_csv: bad header");
    std::vector<compare_row> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() != 17)
            throw std::runtime_error("parse_compare_csv: bad row '" + line + "'");
        compare_row row;
        row.record.instance = fields[0];
        row.record.config = fields[1];
        row.record.n = std::stoull(fields[2]);
        row.record.m = std::stoull(fields[3]);
        row.record.kernel_fraction = std::stod(fields[4]);
        row.record.reduce_time = std::stod(fields[5]);
        row.record.order_time = std::stod(fields[6]);
        row.record.total_time = std::stod(fields[7]);
        row.record.fill_in = std::stoull(fields[8]);
        row.record.nnz_factor = std::stoull(fields[9]);
        row.record.op_count = std::stoull(fields[10]);
        row.record.seed = std::stoull(fields[11]);
        row.speedup = std::stod(fields[12]);
        row.nnz_improvement = std::stod(fields[13]);
        row.time_profile = std::stod(fields[14]);
        row.nnz_profile = std::stod(fields[15]);
        row.failed = fields[16] == "failed";
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace fillkern

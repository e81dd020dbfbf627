#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fillkern/order.hpp"

namespace fillkern {

struct bench_options {
    std::uint64_t seed = 1;
    std::size_t recursion_limit = 120;
    double epsilon = 0.2;
    bool single_pass = false;
    bool strict_triangle = false;

    nd_config nd() const { return {recursion_limit, epsilon, seed}; }
};

// One measured pipeline run on one instance.
struct run_record {
    std::string instance;
    std::string config; // normalized pipeline string, "" = no reductions
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double kernel_fraction = 0.0;
    double reduce_time = 0.0;
    double order_time = 0.0;
    double total_time = 0.0;
    std::uint64_t fill_in = 0;
    std::uint64_t nnz_factor = 0;
    std::uint64_t op_count = 0;
    std::uint64_t seed = 0;
};

struct compare_row {
    run_record record;
    double speedup = 0.0;         // baseline total_time / this total_time
    double nnz_improvement = 0.0; // baseline nnz_factor / this nnz_factor
    double time_profile = 0.0;    // fastest total_time on this instance / this
    double nnz_profile = 0.0;     // best nnz_factor on this instance / this
    bool failed = false;
};

struct run_output {
    run_record record;
    ordering order;
};

// Reduces, orders and reconstructs; timings cover exactly those steps,
// fill statistics are computed afterwards on a pristine copy.
run_output run_one(const std::string &instance, const dynamic_graph &g, const std::string &config_text,
                   const bench_options &opts);

// Runs every (instance, config) cell `reps` times, averaging the timing
// fields; quality fields must be identical across repetitions. The empty
// baseline config is added if missing. Cells run on `threads` workers.
std::vector<compare_row> run_compare(const std::vector<std::string> &instance_paths,
                                     std::vector<std::string> configs, int reps, const bench_options &opts,
                                     unsigned threads);

extern const char *const kRunRecordHeader;
extern const char *const kCompareHeader;

void write_record_csv(std::ostream &out, const run_record &record);
void write_compare_csv(std::ostream &out, const std::vector<compare_row> &rows);
std::vector<compare_row> parse_compare_csv(std::istream &in);

} // namespace fillkern

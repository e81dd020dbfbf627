#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fillkern/bench.hpp"
#include "fillkern/generate.hpp"
#include "fillkern/metis_io.hpp"
#include "test_util.hpp"

using namespace fillkern;

namespace {

std::string temp_graph_file(const dynamic_graph &g, const std::string &name) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    save_metis_file(g, path.string());
    return path.string();
}

} // namespace

TEST_CASE("run_one on a chordal instance with S") {
    const dynamic_graph g = gen_clique_chain(3, 3);
    const run_output out = run_one("chain", g, "S", {});
    CHECK(out.record.fill_in == 0);
    CHECK(out.record.kernel_fraction == 0.0);
    CHECK(out.record.n == 9);
    CHECK(out.order.is_permutation_of(g.alive_nodes()));
    CHECK(out.record.total_time + 1e-9 >= out.record.reduce_time + out.record.order_time);
}

TEST_CASE("run_one on the 4-cycle with SD") {
    const run_output out = run_one("c4", testutil::cycle(4), "SD", {});
    CHECK(out.record.fill_in == 1);
    CHECK(out.record.config == "SD");
}

TEST_CASE("run_compare basics") {
    const std::string path = temp_graph_file(gen_road(4, 4, 1, 3, 5), "fillkern_test_road.graph");
    SUBCASE("baseline is added and self-ratios are 1") {
        const std::vector<compare_row> rows = run_compare({path}, {"", "SD"}, 3, {}, 1);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].record.config == "");
        CHECK(rows[0].speedup == 1.0);
        CHECK(rows[0].nnz_improvement == 1.0);
        CHECK(rows[1].record.config == "SD");
        CHECK(!rows[1].failed);
        CHECK(rows[1].record.kernel_fraction < 1.0);
    }
    SUBCASE("missing baseline is inserted") {
        const std::vector<compare_row> rows = run_compare({path}, {"SD"}, 1, {}, 2);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].record.config == "");
    }
    SUBCASE("empty instance list is an error") {
        CHECK_THROWS_AS(run_compare({}, {"SD"}, 1, {}, 1), std::invalid_argument);
    }
    SUBCASE("missing instances become failed rows") {
        const std::vector<compare_row> rows = run_compare({path, "/nonexistent/graph"}, {""}, 1, {}, 2);
        REQUIRE(rows.size() == 2);
        CHECK(!rows[0].failed);
        CHECK(rows[1].failed);
    }
    SUBCASE("all instances missing is an error") {
        CHECK_THROWS_AS(run_compare({"/nonexistent/graph"}, {""}, 1, {}, 1), std::runtime_error);
    }
}

TEST_CASE("compare CSV round-trips") {
    const std::string path = temp_graph_file(gen_grid(4, 4), "fillkern_test_grid.graph");
    const std::vector<compare_row> rows = run_compare({path}, {"", "SD", "SITP"}, 1, {}, 2);
    std::ostringstream out;
    write_compare_csv(out, rows);
    std::istringstream in(out.str());
    const std::vector<compare_row> parsed = parse_compare_csv(in);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].record.instance == rows[i].record.instance);
        CHECK(parsed[i].record.config == rows[i].record.config);
        CHECK(parsed[i].record.fill_in == rows[i].record.fill_in);
        CHECK(parsed[i].record.nnz_factor == rows[i].record.nnz_factor);
        CHECK(parsed[i].record.op_count == rows[i].record.op_count);
        CHECK(parsed[i].failed == rows[i].failed);
    }
}

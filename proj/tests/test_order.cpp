#include "doctest.h"

#include <algorithm>
#include <random>

#include "fillkern/generate.hpp"
#include "fillkern/order.hpp"
#include "test_util.hpp"

using namespace fillkern;

namespace {

void check_separator_invariants(const dynamic_graph &g, const separator_result &sep, double epsilon) {
    node_set all;
    all.insert(all.end(), sep.v1.begin(), sep.v1.end());
    all.insert(all.end(), sep.v2.begin(), sep.v2.end());
    all.insert(all.end(), sep.s.begin(), sep.s.end());
    std::sort(all.begin(), all.end());
    CHECK(all == g.alive_nodes());

    for (NodeID v : sep.v1)
        for (NodeID u : g.neighbors(v))
            CHECK(!std::binary_search(sep.v2.begin(), sep.v2.end(), u));

    const std::size_t l_max =
        static_cast<std::size_t>((1.0 + epsilon) * static_cast<double>((g.alive_count() + 1) / 2));
    CHECK(sep.v1.size() <= l_max);
    CHECK(sep.v2.size() <= l_max);
}

} // namespace

TEST_CASE("minimum degree ordering") {
    CHECK(simulate(testutil::path(5), min_degree_order(testutil::path(5))).fill_in == 0);
    CHECK(simulate(testutil::cycle(4), min_degree_order(testutil::cycle(4))).fill_in == 1);
    CHECK(simulate(testutil::complete(4), min_degree_order(testutil::complete(4))).fill_in == 0);
}

TEST_CASE("separator of a path is its middle node") {
    const dynamic_graph g = testutil::path(5);
    const separator_result sep = find_separator(g, {});
    CHECK(sep.s == node_set{2});
    CHECK(sep.v1.size() == 2);
    CHECK(sep.v2.size() == 2);
    check_separator_invariants(g, sep, 0.2);
}

TEST_CASE("separator of two triangles sharing a node is the joint") {
    const dynamic_graph g = testutil::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    const separator_result sep = find_separator(g, {});
    CHECK(sep.s == node_set{2});
    check_separator_invariants(g, sep, 0.2);
}

TEST_CASE("disconnected graphs split without a separator") {
    dynamic_graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    const separator_result sep = find_separator(g, {});
    CHECK(sep.s.empty());
    CHECK(sep.v1.size() == 3);
    CHECK(sep.v2.size() == 3);
    check_separator_invariants(g, sep, 0.2);
}

TEST_CASE("separator requires at least two nodes") {
    CHECK_THROWS_AS(find_separator(dynamic_graph(1), {}), std::invalid_argument);
}

TEST_CASE("dissection parameters are validated") {
    nd_config bad_eps;
    bad_eps.epsilon = 1.5;
    CHECK_THROWS_AS(nested_dissection(testutil::path(4), bad_eps), std::invalid_argument);
    nd_config bad_limit;
    bad_limit.recursion_limit = 0;
    CHECK_THROWS_AS(nested_dissection(testutil::path(4), bad_limit), std::invalid_argument);
}

TEST_CASE("separator invariants on random graphs and seeds") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 30; ++round) {
        const dynamic_graph g = testutil::random_connected(20, 0.15, rng);
        nd_config cfg;
        cfg.seed = round;
        const separator_result sep = find_separator(g, cfg);
        check_separator_invariants(g, sep, cfg.epsilon);
    }
}

TEST_CASE("nested dissection equals minimum degree below the recursion limit") {
    const dynamic_graph g = gen_grid(3, 3);
    nd_config cfg;
    cfg.recursion_limit = 100;
    CHECK(nested_dissection(g, cfg).seq == min_degree_order(g).seq);
}

TEST_CASE("nested dissection orders the path separator last") {
    const dynamic_graph g = testutil::path(9);
    nd_config cfg;
    cfg.recursion_limit = 3;
    const ordering ord = nested_dissection(g, cfg);
    CHECK(ord.is_permutation_of(g.alive_nodes()));
    CHECK(ord.seq.back() == 4);
}

TEST_CASE("nested dissection fill on the 8x8 grid stays near minimum degree") {
    const dynamic_graph g = gen_grid(8, 8);
    nd_config cfg;
    cfg.recursion_limit = 16;
    const std::uint64_t nd_fill = simulate(g, nested_dissection(g, cfg)).fill_in;
    const std::uint64_t md_fill = simulate(g, min_degree_order(g)).fill_in;
    CHECK(nd_fill * 10 <= md_fill * 15);
}

TEST_CASE("nested dissection is deterministic for a fixed seed") {
    const dynamic_graph g = gen_road(5, 5, 1, 3, 11);
    nd_config cfg;
    cfg.recursion_limit = 8;
    cfg.seed = 5;
    CHECK(nested_dissection(g, cfg).seq == nested_dissection(g, cfg).seq);
}

TEST_CASE("reduced nested dissection") {
    SUBCASE("chordal input with S reaches zero fill") {
        std::mt19937_64 rng(73);
        const dynamic_graph g = testutil::random_ktree(2, 60, rng);
        const reduced_nd_result result = reduced_nested_dissection(g, parse_config("S"), {});
        CHECK(result.stats.fill_in == 0);
        CHECK(result.order.is_permutation_of(g.alive_nodes()));
    }
    SUBCASE("4-cycle with SD is optimal") {
        const reduced_nd_result result = reduced_nested_dissection(testutil::cycle(4), parse_config("SD"), {});
        CHECK(result.stats.fill_in == 1);
    }
    SUBCASE("ordering covers the input also when the kernel is nontrivial") {
        const dynamic_graph g = gen_road(4, 5, 1, 3, 3);
        nd_config cfg;
        cfg.recursion_limit = 6;
        const reduced_nd_result result = reduced_nested_dissection(g, parse_config("SD"), cfg);
        CHECK(result.order.is_permutation_of(g.alive_nodes()));
        CHECK(result.stats.nnz_factor == g.alive_count() + g.edge_count() + result.stats.fill_in);
    }
}

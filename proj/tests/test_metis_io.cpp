#include "doctest.h"

#include <random>
#include <sstream>

#include "fillkern/metis_io.hpp"
#include "test_util.hpp"

using namespace fillkern;

TEST_CASE("load_metis parses small graphs") {
    SUBCASE("path") {
        std::istringstream in("3 2\n2 3\n1\n1\n");
        dynamic_graph g = load_metis(in);
        CHECK(g.n_original() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 2));
        CHECK(!g.has_edge(1, 2));
    }
    SUBCASE("single edge") {
        std::istringstream in("2 1\n2\n1\n");
        dynamic_graph g = load_metis(in);
        CHECK(g.n_original() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("comments and blank neighbor lines") {
        std::istringstream in("% header comment\n3 1\n% mid comment\n2\n1\n\n");
        dynamic_graph g = load_metis(in);
        CHECK(g.edge_count() == 1);
        CHECK(g.degree(2) == 0);
    }
    SUBCASE("carriage returns are tolerated") {
        std::istringstream in("2 1\r\n2\r\n1\r\n");
        dynamic_graph g = load_metis(in);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("edge weights are parsed and ignored") {
        std::istringstream in("3 2 001\n2 10 3 20\n1 10\n1 20\n");
        dynamic_graph g = load_metis(in);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 2));
    }
    SUBCASE("node weights are parsed and ignored") {
        std::istringstream in("2 1 011 2\n7 8 2 5\n9 9 1 5\n");
        dynamic_graph g = load_metis(in);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(0, 1));
    }
}

TEST_CASE("load_metis rejects malformed input") {
    auto expect_error = [](const std::string &text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(load_metis(in), metis_parse_error);
    };
    // asymmetric adjacency: 2-3 listed only at node 3
    expect_error("3 2\n2 3\n1\n2\n");
    // edge listed only at the lower endpoint
    expect_error("3 3\n2 3\n1 3\n\n");
    expect_error("not a header\n");
    expect_error("3\n");
    expect_error("2 1\n2 2\n1 1\n"); // duplicate neighbor
    expect_error("2 1\n1\n2\n");     // self-loop
    expect_error("2 1\n3\n1\n");     // neighbor out of range
    expect_error("2 5\n2\n1\n");     // edge count mismatch
    expect_error("3 2\n2 3\n1\n");   // missing node line
}

TEST_CASE("metis round-trip is idempotent") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        dynamic_graph g = testutil::random_connected(9, 0.3, rng);
        std::ostringstream out;
        save_metis(g, out);
        std::istringstream in(out.str());
        dynamic_graph back = load_metis(in);
        CHECK(back == g);
    }
}

TEST_CASE("permutation files") {
    SUBCASE("identity on three nodes") {
        ordering ord{{0, 1, 2}};
        std::ostringstream out;
        write_permutation(ord, out);
        CHECK(out.str() == "1\n2\n3\n");
    }
    SUBCASE("reversed pair") {
        ordering ord{{1, 0}};
        std::ostringstream out;
        write_permutation(ord, out);
        CHECK(out.str() == "2\n1\n");
    }
    SUBCASE("write then read gives the same ordering") {
        ordering ord{{4, 2, 0, 1, 3}};
        std::ostringstream out;
        write_permutation(ord, out);
        std::istringstream in(out.str());
        CHECK(read_permutation(in).seq == ord.seq);
    }
}

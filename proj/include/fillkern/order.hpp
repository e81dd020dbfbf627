#pragma once

#include <cstdint>
#include <limits>

#include "fillkern/eliminate.hpp"
#include "fillkern/graph.hpp"
#include "fillkern/reduce.hpp"

namespace fillkern {

struct separator_result {
    node_set v1;
    node_set v2;
    node_set s;
};

struct nd_config {
    std::size_t recursion_limit = 120;
    double epsilon = 0.2;
    std::uint64_t seed = 1;
};

// Repeatedly eliminates a minimum-degree alive node, lowest id on ties.
ordering min_degree_order(const dynamic_graph &g);

// Balanced node separator: seeded BFS region growing, FM refinement of
// the edge cut, then a vertex cover of the cut's bipartite boundary via
// maximum matching. Requires at least 2 alive nodes.
separator_result find_separator(const dynamic_graph &g, const nd_config &cfg);

// Recursive dissection ordering: blocks first, separator last, with a
// minimum-degree base case below the recursion limit.
ordering nested_dissection(const dynamic_graph &g, const nd_config &cfg);

// Full pipeline: reduce, order the kernel by nested dissection, splice
// the reductions back, and simulate the result on the input graph.
struct reduced_nd_result {
    ordering order;
    elimination_stats stats;
    reduction_ledger ledger;
};
reduced_nd_result reduced_nested_dissection(const dynamic_graph &g, const pipeline_config &pipeline,
                                            const nd_config &nd);

} // namespace fillkern

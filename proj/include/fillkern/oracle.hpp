#pragma once

#include <cstdint>
#include <functional>

#include "fillkern/graph.hpp"

namespace fillkern {

struct oracle_result {
    std::uint64_t phi = 0; // minimum fill-in
    ordering witness;      // one ordering attaining it
};

// Exact minimum fill-in by depth-first search over elimination sequences
// with simplicial-first pruning, branch-and-bound and memoization on the
// alive-subgraph edge set. Enforced limit: at most 12 alive nodes.
oracle_result brute_force_phi(const dynamic_graph &g);

// Calls fn with every connected labeled graph on n nodes (n <= 7), in
// increasing edge-bitmask order.
void enumerate_connected_graphs(NodeID n, const std::function<void(const dynamic_graph &)> &fn);

} // namespace fillkern

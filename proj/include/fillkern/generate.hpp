#pragma once

#include <cstdint>

#include "fillkern/graph.hpp"

namespace fillkern {

// rows x cols grid graph, row-major node ids.
dynamic_graph gen_grid(NodeID rows, NodeID cols);

// Grid whose edges are subdivided into degree-2 chains; each edge gets a
// seeded random chain length in [min_len, max_len] (number of inserted
// nodes). Grid nodes keep their ids, chain nodes are appended.
dynamic_graph gen_road(NodeID rows, NodeID cols, NodeID min_len, NodeID max_len, std::uint64_t seed);

// `count` cliques of `size` nodes each; consecutive cliques are joined by
// a single edge between their first nodes.
dynamic_graph gen_clique_chain(NodeID count, NodeID size);

// Erdos-Renyi G(n, p).
dynamic_graph gen_random(NodeID n, double p, std::uint64_t seed);

} // namespace fillkern

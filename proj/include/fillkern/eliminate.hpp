#pragma once

#include <cstdint>
#include <vector>

#include "fillkern/graph.hpp"

namespace fillkern {

// Statistics of one elimination sequence.
struct elimination_stats {
    std::uint64_t fill_in = 0;    // edges added over all steps
    std::uint64_t nnz_factor = 0; // nonzeros of the symbolic factor, diagonal included
    std::uint64_t op_count = 0;   // sum over steps of (c+1)(c+2)/2, c = degree at elimination
    std::vector<std::uint64_t> per_step_deficiency;
};

// Number of non-adjacent pairs in the neighborhood of v. No mutation.
std::uint64_t deficiency(const dynamic_graph &g, NodeID v);

// Eliminates the alive nodes of g in the given order (on a copy) and
// returns the full statistics. ord must be a permutation of the alive
// nodes; for reduced kernels this is a partial ordering of the original
// id range and the stats cover exactly those steps.
elimination_stats simulate(const dynamic_graph &g, const ordering &ord);

// Alias of simulate kept for symbolic-factorization call sites.
inline elimination_stats symbolic_factor(const dynamic_graph &g, const ordering &ord) {
    return simulate(g, ord);
}

bool is_perfect_elimination(const dynamic_graph &g, const ordering &ord);

// Lexicographic BFS over the alive nodes, lowest id first on ties.
// Returns the visit order.
ordering lex_bfs(const dynamic_graph &g);

// True iff the alive subgraph admits a perfect elimination ordering.
bool is_chordal(const dynamic_graph &g);

} // namespace fillkern

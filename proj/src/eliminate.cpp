#include "fillkern/eliminate.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace fillkern {

std::uint64_t deficiency(const dynamic_graph &g, NodeID v) {
    if (!g.is_alive(v))
        throw std::invalid_argument("deficiency: node not alive");
    const auto &nbrs = g.neighbors(v);
    std::uint64_t missing = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j]))
                ++missing;
    return missing;
}

elimination_stats simulate(const dynamic_graph &g, const ordering &ord) {
    if (!ord.is_permutation_of(g.alive_nodes()))
        throw std::invalid_argument("simulate: ordering is not a permutation of the alive nodes");

    dynamic_graph work = g;
    elimination_stats stats;
    stats.per_step_deficiency.reserve(ord.seq.size());
    for (NodeID v : ord.seq) {
        const std::uint64_t at_elim_degree = work.degree(v);
        const std::uint64_t inserted = work.eliminate_node(v);
        stats.per_step_deficiency.push_back(inserted);
        stats.fill_in += inserted;
        stats.nnz_factor += at_elim_degree + 1;
        stats.op_count += (at_elim_degree + 1) * (at_elim_degree + 2) / 2;
    }
    return stats;
}

bool is_perfect_elimination(const dynamic_graph &g, const ordering &ord) {
    return simulate(g, ord).fill_in == 0;
}

ordering lex_bfs(const dynamic_graph &g) {
    // Partition refinement: an ordered list of buckets, each holding the
    // unvisited nodes with equal label so far, ascending ids inside each
    // bucket. Visiting a node pulls its unvisited neighbors out of their
    // buckets into a fresh bucket placed directly in front, one fresh
    // bucket per origin bucket per step.
    struct bucket {
        std::vector<NodeID> nodes;
        std::size_t split_stamp = 0;
        std::list<bucket>::iterator split;
    };
    ordering out;
    std::list<bucket> buckets;
    buckets.push_back({g.alive_nodes(), 0, {}});
    if (buckets.front().nodes.empty())
        return out;

    std::vector<std::list<bucket>::iterator> where(static_cast<std::size_t>(g.n_original()));
    std::vector<bool> visited(static_cast<std::size_t>(g.n_original()), true);
    for (NodeID v : buckets.front().nodes) {
        where[v] = buckets.begin();
        visited[v] = false;
    }

    out.seq.reserve(g.alive_count());
    std::size_t step = 0;

    while (!buckets.empty()) {
        ++step;
        NodeID v = buckets.front().nodes.front();
        buckets.front().nodes.erase(buckets.front().nodes.begin());
        if (buckets.front().nodes.empty())
            buckets.pop_front();
        visited[v] = true;
        out.seq.push_back(v);

        for (NodeID u : g.neighbors(v)) {
            if (visited[u])
                continue;
            auto origin = where[u];
            if (origin->split_stamp != step) {
                origin->split = buckets.insert(origin, bucket{});
                origin->split_stamp = step;
            }
            // Neighbors are scanned in ascending order, so each split
            // bucket stays sorted.
            origin->split->nodes.push_back(u);
            auto &rest = origin->nodes;
            rest.erase(std::find(rest.begin(), rest.end(), u));
            where[u] = origin->split;
            if (rest.empty())
                buckets.erase(origin);
        }
    }
    return out;
}

namespace {

// PEO check: in elimination order pi, the later neighbors of each node,
// minus the earliest of them, must be adjacent to that earliest one.
bool verify_peo(const dynamic_graph &g, const ordering &pi) {
    const NodeID n = g.n_original();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < pi.seq.size(); ++i)
        position[pi.seq[i]] = static_cast<int>(i);

    std::vector<std::vector<NodeID>> deferred(static_cast<std::size_t>(n));
    for (NodeID v : pi.seq) {
        NodeID parent = -1;
        int best = -1;
        for (NodeID u : g.neighbors(v))
            if (position[u] > position[v] && (best == -1 || position[u] < best)) {
                best = position[u];
                parent = u;
            }
        if (parent == -1)
            continue;
        for (NodeID u : g.neighbors(v))
            if (position[u] > position[v] && u != parent)
                deferred[parent].push_back(u);
    }
    for (NodeID v = 0; v < n; ++v)
        for (NodeID u : deferred[v])
            if (!g.has_edge(v, u))
                return false;
    return true;
}

} // namespace

bool is_chordal(const dynamic_graph &g) {
    ordering visit = lex_bfs(g);
    std::reverse(visit.seq.begin(), visit.seq.end());
    return verify_peo(g, visit);
}

} // namespace fillkern

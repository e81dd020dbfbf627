#include "fillkern/generate.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace fillkern {

dynamic_graph gen_grid(NodeID rows, NodeID cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("gen_grid: dimensions must be positive");
    dynamic_graph g(rows * cols);
    for (NodeID r = 0; r < rows; ++r)
        for (NodeID c = 0; c < cols; ++c) {
            const NodeID v = r * cols + c;
            if (c + 1 < cols)
                g.add_edge(v, v + 1);
            if (r + 1 < rows)
                g.add_edge(v, v + cols);
        }
    return g;
}

dynamic_graph gen_road(NodeID rows, NodeID cols, NodeID min_len, NodeID max_len, std::uint64_t seed) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("gen_road: dimensions must be positive");
    if (min_len < 0 || max_len < min_len)
        throw std::invalid_argument("gen_road: need 0 <= min_len <= max_len");

    std::vector<std::pair<NodeID, NodeID>> grid_edges;
    for (NodeID r = 0; r < rows; ++r)
        for (NodeID c = 0; c < cols; ++c) {
            const NodeID v = r * cols + c;
            if (c + 1 < cols)
                grid_edges.emplace_back(v, v + 1);
            if (r + 1 < rows)
                grid_edges.emplace_back(v, v + cols);
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeID> length(min_len, max_len);
    std::vector<NodeID> lengths(grid_edges.size());
    NodeID extra = 0;
    for (std::size_t e = 0; e < grid_edges.size(); ++e) {
        lengths[e] = length(rng);
        extra += lengths[e];
    }

    dynamic_graph g(rows * cols + extra);
    NodeID next = rows * cols;
    for (std::size_t e = 0; e < grid_edges.size(); ++e) {
        auto [u, v] = grid_edges[e];
        NodeID prev = u;
        for (NodeID i = 0; i < lengths[e]; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, v);
    }
    return g;
}

dynamic_graph gen_clique_chain(NodeID count, NodeID size) {
    if (count < 1 || size < 1)
        throw std::invalid_argument("gen_clique_chain: parameters must be positive");
    dynamic_graph g(count * size);
    for (NodeID k = 0; k < count; ++k) {
        const NodeID base = k * size;
        for (NodeID i = 0; i < size; ++i)
            for (NodeID j = i + 1; j < size; ++j)
                g.add_edge(base + i, base + j);
        if (k > 0)
            g.add_edge(base - size, base);
    }
    return g;
}

dynamic_graph gen_random(NodeID n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_random: need n >= 0 and p in [0, 1]");
    dynamic_graph g(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (NodeID i = 0; i < n; ++i)
        for (NodeID j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                g.add_edge(i, j);
    return g;
}

} // namespace fillkern

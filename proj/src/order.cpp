#include "fillkern/order.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace fillkern {

ordering min_degree_order(const dynamic_graph &g) {
    dynamic_graph work = g;
    const std::size_t n = static_cast<std::size_t>(work.n_original());

    // Exact-degree buckets over the evolving elimination graph.
    std::vector<std::set<NodeID>> buckets(n + 1);
    std::vector<std::size_t> bucket_of(n, 0);
    std::size_t min_degree = n;
    for (NodeID v : work.alive_nodes()) {
        const std::size_t d = work.degree(v);
        buckets[d].insert(v);
        bucket_of[v] = d;
        min_degree = std::min(min_degree, d);
    }

    ordering out;
    out.seq.reserve(work.alive_count());
    while (work.alive_count() > 0) {
        while (buckets[min_degree].empty())
            ++min_degree;
        const NodeID v = *buckets[min_degree].begin();
        buckets[min_degree].erase(buckets[min_degree].begin());
        const std::vector<NodeID> nbrs = work.neighbors(v);
        work.eliminate_node(v);
        out.seq.push_back(v);
        for (NodeID u : nbrs) {
            const std::size_t d = work.degree(u);
            if (d != bucket_of[u]) {
                buckets[bucket_of[u]].erase(u);
                buckets[d].insert(u);
                bucket_of[u] = d;
            }
        }
        // Eliminating a minimum-degree node can lower a neighbor's degree
        // by at most one.
        if (min_degree > 0)
            --min_degree;
    }
    return out;
}

namespace {

struct bisection {
    // side[v] is 0 or 1 for alive nodes.
    std::vector<signed char> side;
    std::size_t size[2] = {0, 0};
};

std::size_t cut_size(const dynamic_graph &g, const node_set &alive, const bisection &bi) {
    std::size_t cut = 0;
    for (NodeID v : alive)
        for (NodeID u : g.neighbors(v))
            if (u > v && bi.side[u] != bi.side[v])
                ++cut;
    return cut;
}

bisection grow_region(const dynamic_graph &g, const node_set &alive, NodeID start, std::size_t target) {
    bisection bi;
    bi.side.assign(static_cast<std::size_t>(g.n_original()), 1);
    std::vector<bool> visited(static_cast<std::size_t>(g.n_original()), false);
    std::queue<NodeID> frontier;
    frontier.push(start);
    visited[start] = true;
    std::size_t taken = 0;
    std::size_t next_seed = 0;
    while (taken < target) {
        if (frontier.empty()) {
            // Component exhausted; restart from the lowest unvisited node.
            while (next_seed < alive.size() && visited[alive[next_seed]])
                ++next_seed;
            frontier.push(alive[next_seed]);
            visited[alive[next_seed]] = true;
        }
        NodeID v = frontier.front();
        frontier.pop();
        bi.side[v] = 0;
        ++taken;
        for (NodeID u : g.neighbors(v))
            if (!visited[u]) {
                visited[u] = true;
                frontier.push(u);
            }
    }
    bi.size[0] = taken;
    bi.size[1] = alive.size() - taken;
    return bi;
}

// Fiduccia-Mattheyses style passes on the edge cut: repeatedly move the
// best unlocked node (negative gains allowed), keep the best prefix.
void fm_refine(const dynamic_graph &g, const node_set &alive, bisection &bi, std::size_t l_max) {
    constexpr int kMaxPasses = 8;
    std::vector<long long> gain(static_cast<std::size_t>(g.n_original()), 0);

    for (int pass = 0; pass < kMaxPasses; ++pass) {
        std::map<long long, std::set<NodeID>, std::greater<>> by_gain;
        std::vector<bool> locked(static_cast<std::size_t>(g.n_original()), false);
        for (NodeID v : alive) {
            long long ext = 0, internal = 0;
            for (NodeID u : g.neighbors(v))
                (bi.side[u] != bi.side[v] ? ext : internal) += 1;
            gain[v] = ext - internal;
            by_gain[gain[v]].insert(v);
        }

        const long long start_cut = static_cast<long long>(cut_size(g, alive, bi));
        long long cur_cut = start_cut;
        long long best_cut = start_cut;
        std::vector<NodeID> moves;
        std::size_t best_prefix = 0;

        while (true) {
            NodeID chosen = -1;
            for (auto &[value, nodes] : by_gain) {
                for (NodeID v : nodes) {
                    const int from = bi.side[v];
                    if (bi.size[1 - from] + 1 <= l_max && bi.size[from] > 1) {
                        chosen = v;
                        break;
                    }
                }
                if (chosen != -1)
                    break;
            }
            if (chosen == -1)
                break;

            by_gain[gain[chosen]].erase(chosen);
            if (by_gain[gain[chosen]].empty())
                by_gain.erase(gain[chosen]);
            locked[chosen] = true;
            const int from = bi.side[chosen];
            bi.side[chosen] = static_cast<signed char>(1 - from);
            --bi.size[from];
            ++bi.size[1 - from];
            cur_cut -= gain[chosen];
            moves.push_back(chosen);
            if (cur_cut < best_cut) {
                best_cut = cur_cut;
                best_prefix = moves.size();
            }
            for (NodeID u : g.neighbors(chosen)) {
                if (locked[u])
                    continue;
                const long long delta = bi.side[u] == bi.side[chosen] ? -2 : 2;
                by_gain[gain[u]].erase(u);
                if (by_gain[gain[u]].empty())
                    by_gain.erase(gain[u]);
                gain[u] += delta;
                by_gain[gain[u]].insert(u);
            }
        }

        // Roll back past the best prefix.
        for (std::size_t i = moves.size(); i > best_prefix; --i) {
            NodeID v = moves[i - 1];
            const int from = bi.side[v];
            bi.side[v] = static_cast<signed char>(1 - from);
            --bi.size[from];
            ++bi.size[1 - from];
        }
        if (best_cut >= start_cut)
            break;
    }
}

// Minimum vertex cover of the cut's bipartite boundary graph, by maximum
// matching and the Koenig construction.
node_set boundary_vertex_cover(const dynamic_graph &g, const node_set &alive, const bisection &bi) {
    node_set left, right;
    for (NodeID v : alive) {
        bool on_cut = false;
        for (NodeID u : g.neighbors(v))
            if (bi.side[u] != bi.side[v]) {
                on_cut = true;
                break;
            }
        if (on_cut)
            (bi.side[v] == 0 ? left : right).push_back(v);
    }

    std::vector<NodeID> match(static_cast<std::size_t>(g.n_original()), -1);
    std::vector<bool> tried(static_cast<std::size_t>(g.n_original()), false);

    std::function<bool(NodeID)> augment = [&](NodeID u) -> bool {
        for (NodeID w : g.neighbors(u)) {
            if (bi.side[w] == bi.side[u] || tried[w])
                continue;
            tried[w] = true;
            if (match[w] == -1 || augment(match[w])) {
                match[w] = u;
                match[u] = w;
                return true;
            }
        }
        return false;
    };
    for (NodeID u : left) {
        std::fill(tried.begin(), tried.end(), false);
        augment(u);
    }

    // Alternating reachability from unmatched left nodes.
    std::vector<bool> reachable(static_cast<std::size_t>(g.n_original()), false);
    std::queue<NodeID> frontier;
    for (NodeID u : left)
        if (match[u] == -1) {
            reachable[u] = true;
            frontier.push(u);
        }
    while (!frontier.empty()) {
        NodeID u = frontier.front();
        frontier.pop();
        for (NodeID w : g.neighbors(u)) {
            if (bi.side[w] == bi.side[u] || reachable[w] || match[u] == w)
                continue;
            reachable[w] = true;
            if (match[w] != -1 && !reachable[match[w]]) {
                reachable[match[w]] = true;
                frontier.push(match[w]);
            }
        }
    }

    node_set cover;
    for (NodeID u : left)
        if (!reachable[u])
            cover.push_back(u);
    for (NodeID w : right)
        if (reachable[w])
            cover.push_back(w);
    std::sort(cover.begin(), cover.end());
    return cover;
}

} // namespace

namespace {

void check_nd_config(const nd_config &cfg) {
    if (cfg.recursion_limit < 1)
        throw std::invalid_argument("nd_config: recursion limit must be at least 1");
    if (cfg.epsilon < 0.0 || cfg.epsilon > 1.0)
        throw std::invalid_argument("nd_config: epsilon must be in [0, 1]");
}

} // namespace

separator_result find_separator(const dynamic_graph &g, const nd_config &cfg) {
    check_nd_config(cfg);
    const node_set alive = g.alive_nodes();
    const std::size_t n = alive.size();
    if (n < 2)
        throw std::invalid_argument("find_separator: graph too small");

    const std::size_t target = (n + 1) / 2;
    const std::size_t l_max =
        std::max<std::size_t>(target, static_cast<std::size_t>((1.0 + cfg.epsilon) * static_cast<double>(target)));

    std::mt19937_64 rng(cfg.seed);
    std::vector<NodeID> starts = {alive.front()};
    for (int attempt = 0; attempt < 3; ++attempt)
        starts.push_back(alive[rng() % n]);

    bisection best;
    std::size_t best_cut = std::numeric_limits<std::size_t>::max();
    for (NodeID start : starts) {
        bisection bi = grow_region(g, alive, start, target);
        fm_refine(g, alive, bi, l_max);
        const std::size_t cut = cut_size(g, alive, bi);
        if (cut < best_cut) {
            best_cut = cut;
            best = std::move(bi);
        }
    }

    const node_set cover = boundary_vertex_cover(g, alive, best);
    std::vector<bool> in_cover(static_cast<std::size_t>(g.n_original()), false);
    for (NodeID v : cover)
        in_cover[v] = true;

    separator_result result;
    result.s = cover;
    for (NodeID v : alive) {
        if (in_cover[v])
            continue;
        (best.side[v] == 0 ? result.v1 : result.v2).push_back(v);
    }
    return result;
}

ordering nested_dissection(const dynamic_graph &g, const nd_config &cfg) {
    check_nd_config(cfg);
    const std::size_t n = g.alive_count();
    if (n < 2 || n < cfg.recursion_limit)
        return min_degree_order(g);

    const separator_result sep = find_separator(g, cfg);
    ordering out;
    out.seq.reserve(n);
    for (const node_set *part : {&sep.v1, &sep.v2, &sep.s}) {
        if (part->empty())
            continue;
        ordering sub = nested_dissection(g.induced(*part), cfg);
        out.seq.insert(out.seq.end(), sub.seq.begin(), sub.seq.end());
    }
    return out;
}

reduced_nd_result reduced_nested_dissection(const dynamic_graph &g, const pipeline_config &pipeline,
                                            const nd_config &nd) {
    pipeline_result reduced = run_pipeline(g, pipeline);
    const ordering kernel_order = nested_dissection(reduced.kernel, nd);
    reduced_nd_result result;
    result.order = reconstruct_ordering(reduced.ledger, kernel_order);
    result.stats = simulate(g, result.order);
    result.ledger = std::move(reduced.ledger);
    return result;
}

} // namespace fillkern

#include "fillkern/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace fillkern {

namespace {

constexpr int kMaxOracleNodes = 12;

// Elimination state over at most 12 nodes: one adjacency bitmask per node
// plus an alive mask. Node indices are positions in the compacted id map.
struct bit_state {
    std::array<std::uint16_t, kMaxOracleNodes> row{};
    std::uint16_t alive = 0;
    int n = 0;

    std::uint64_t key_lo() const {
        // Upper-triangular edge bits, packed.
        std::uint64_t lo = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (bit < 64 && (row[i] >> j & 1))
                    lo |= std::uint64_t{1} << bit;
        return lo;
    }
    std::uint64_t key_hi() const {
        std::uint64_t hi = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (bit >= 64 && (row[i] >> j & 1))
                    hi |= std::uint64_t{1} << (bit - 64);
        return hi | (std::uint64_t{alive} << 20);
    }

    int deficiency(int v) const {
        const std::uint16_t nbrs = row[v] & alive;
        int missing = 0;
        for (std::uint16_t rest = nbrs; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            missing += std::popcount(static_cast<unsigned>(rest & ~row[a]));
        }
        return missing;
    }

    bool simplicial(int v) const { return deficiency(v) == 0; }

    bit_state eliminated(int v) const {
        bit_state next = *this;
        const std::uint16_t nbrs = row[v] & alive;
        for (std::uint16_t rest = nbrs; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            next.row[a] |= nbrs;
            next.row[a] &= static_cast<std::uint16_t>(~(std::uint16_t{1} << a));
        }
        for (std::uint16_t rest = nbrs; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            next.row[a] &= static_cast<std::uint16_t>(~(std::uint16_t{1} << v));
        }
        next.row[v] = 0;
        next.alive &= static_cast<std::uint16_t>(~(std::uint16_t{1} << v));
        return next;
    }
};

struct key_hash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t> &k) const {
        return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
};

using memo_table = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t, key_hash>;

std::uint32_t solve(const bit_state &state, memo_table &memo) {
    if (state.alive == 0)
        return 0;
    const auto key = std::make_pair(state.key_lo(), state.key_hi());
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    // A simplicial node can always be eliminated first at no cost.
    for (std::uint16_t rest = state.alive; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (state.simplicial(v)) {
            std::uint32_t value = solve(state.eliminated(v), memo);
            memo.emplace(key, value);
            return value;
        }
    }

    // Branch over candidates by ascending deficiency; a branch whose own
    // step cost reaches the best known value cannot improve on it.
    std::array<std::pair<int, int>, kMaxOracleNodes> candidates;
    int count = 0;
    for (std::uint16_t rest = state.alive; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        candidates[count++] = {state.deficiency(v), v};
    }
    std::sort(candidates.begin(), candidates.begin() + count);

    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (int i = 0; i < count; ++i) {
        const auto [def, v] = candidates[i];
        if (static_cast<std::uint32_t>(def) >= best)
            break;
        std::uint32_t value = static_cast<std::uint32_t>(def) + solve(state.eliminated(v), memo);
        best = std::min(best, value);
    }
    memo.emplace(key, best);
    return best;
}

} // namespace

oracle_result brute_force_phi(const dynamic_graph &g) {
    const node_set alive = g.alive_nodes();
    if (alive.size() > kMaxOracleNodes)
        throw std::invalid_argument("brute_force_phi: graph too large (limit 12 alive nodes)");

    bit_state state;
    state.n = static_cast<int>(alive.size());
    std::array<int, kMaxOracleNodes> compact_of{};
    std::vector<int> index(static_cast<std::size_t>(g.n_original()), -1);
    for (int i = 0; i < state.n; ++i) {
        index[alive[i]] = i;
        compact_of[i] = alive[i];
    }
    for (int i = 0; i < state.n; ++i) {
        state.alive |= static_cast<std::uint16_t>(std::uint16_t{1} << i);
        for (NodeID u : g.neighbors(alive[i]))
            state.row[i] |= static_cast<std::uint16_t>(std::uint16_t{1} << index[u]);
    }

    memo_table memo;
    oracle_result result;
    result.phi = solve(state, memo);

    // Recover a witness by walking the memoized optimum. Prefer simplicial
    // nodes, then the lowest-id minimizer.
    bit_state cur = state;
    while (cur.alive != 0) {
        int chosen = -1;
        for (std::uint16_t rest = cur.alive; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (cur.simplicial(v)) {
                chosen = v;
                break;
            }
        }
        if (chosen == -1) {
            const std::uint32_t need = solve(cur, memo);
            for (std::uint16_t rest = cur.alive; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                const std::uint32_t def = static_cast<std::uint32_t>(cur.deficiency(v));
                if (def <= need && def + solve(cur.eliminated(v), memo) == need) {
                    chosen = v;
                    break;
                }
            }
        }
        result.witness.seq.push_back(compact_of[chosen]);
        cur = cur.eliminated(chosen);
    }
    return result;
}

void enumerate_connected_graphs(NodeID n, const std::function<void(const dynamic_graph &)> &fn) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate_connected_graphs: n must be in [1, 7]");
    std::vector<std::pair<NodeID, NodeID>> pairs;
    for (NodeID i = 0; i < n; ++i)
        for (NodeID j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);

    const std::uint32_t limit = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::array<std::uint8_t, 7> row{};
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) {
                row[pairs[e].first] |= static_cast<std::uint8_t>(1u << pairs[e].second);
                row[pairs[e].second] |= static_cast<std::uint8_t>(1u << pairs[e].first);
            }
        // Bitmask BFS from node 0.
        std::uint8_t seen = 1;
        for (;;) {
            std::uint8_t grown = seen;
            for (NodeID v = 0; v < n; ++v)
                if (seen >> v & 1)
                    grown |= row[v];
            if (grown == seen)
                break;
            seen = grown;
        }
        if (std::popcount(static_cast<unsigned>(seen)) != n)
            continue;

        dynamic_graph g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1)
                g.add_edge(pairs[e].first, pairs[e].second);
        fn(g);
    }
}

} // namespace fillkern

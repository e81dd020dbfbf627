#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fillkern {

using NodeID = int;

// Sorted, duplicate-free list of node ids.
using node_set = std::vector<NodeID>;

// An elimination order: seq[i] is the node eliminated at step i.
struct ordering {
    std::vector<NodeID> seq;

    bool is_permutation_of(const node_set &nodes) const;
};

// Mutable simple undirected graph over a fixed id range [0, n_original).
// Node ids are stable; removal and contraction shrink the alive set but
// never reuse ids. Adjacency lists are kept sorted and contain alive
// nodes only.
class dynamic_graph {
public:
    dynamic_graph() = default;
    explicit dynamic_graph(NodeID n);

    NodeID n_original() const { return static_cast<NodeID>(adjacency_.size()); }
    std::size_t alive_count() const { return alive_count_; }
    std::size_t edge_count() const { return edge_count_; }

    bool is_alive(NodeID v) const { return alive_[check_id(v)]; }
    std::size_t degree(NodeID v) const { return adjacency_[check_id(v)].size(); }
    const std::vector<NodeID> &neighbors(NodeID v) const { return adjacency_[check_id(v)]; }
    bool has_edge(NodeID u, NodeID v) const;

    node_set alive_nodes() const;

    // Inserts an edge between two alive nodes. Throws on self-loops and
    // parallel edges; use insert_edge for set semantics.
    void add_edge(NodeID u, NodeID v);

    // Inserts the edge if absent; returns true if it was inserted.
    bool insert_edge(NodeID u, NodeID v);

    // Removes v and its incident edges.
    void remove_node(NodeID v);

    // Removes v and connects its former neighborhood into a clique.
    // Returns the number of inserted edges, i.e. the deficiency of v.
    std::uint64_t eliminate_node(NodeID v);

    // Merges drop into keep: keep's neighborhood becomes the union of
    // both neighborhoods (minus the pair itself); drop dies.
    void contract(NodeID keep, NodeID drop);

    // Copy of this graph restricted to the given alive subset.
    dynamic_graph induced(const node_set &keep) const;

    // Full-graph invariant check (symmetry, simplicity, degree cache,
    // alive-only adjacency). Throws std::logic_error on violation.
    void audit() const;

    bool operator==(const dynamic_graph &other) const = default;

private:
    NodeID check_id(NodeID v) const;
    NodeID check_alive(NodeID v) const;

    std::vector<std::vector<NodeID>> adjacency_;
    std::vector<bool> alive_;
    std::size_t alive_count_ = 0;
    std::size_t edge_count_ = 0;
};

} // namespace fillkern

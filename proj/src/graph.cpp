#include "fillkern/graph.hpp"

#include <algorithm>
#include <string>

namespace fillkern {

namespace {

bool sorted_contains(const std::vector<NodeID> &list, NodeID v) {
    return std::binary_search(list.begin(), list.end(), v);
}

// Insert into a sorted vector; returns false if already present.
bool sorted_insert(std::vector<NodeID> &list, NodeID v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v)
        return false;
    list.insert(it, v);
    return true;
}

bool sorted_erase(std::vector<NodeID> &list, NodeID v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v)
        return false;
    list.erase(it);
    return true;
}

} // namespace

bool ordering::is_permutation_of(const node_set &nodes) const {
    if (seq.size() != nodes.size())
        return false;
    std::vector<NodeID> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    return sorted == nodes;
}

dynamic_graph::dynamic_graph(NodeID n)
    : adjacency_(static_cast<std::size_t>(n)), alive_(static_cast<std::size_t>(n), true),
      alive_count_(static_cast<std::size_t>(n)) {
    if (n < 0)
        throw std::invalid_argument("dynamic_graph: negative node count");
}

NodeID dynamic_graph::check_id(NodeID v) const {
    if (v < 0 || v >= n_original())
        throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    return v;
}

NodeID dynamic_graph::check_alive(NodeID v) const {
    check_id(v);
    if (!alive_[v])
        throw std::invalid_argument("node " + std::to_string(v) + " is not alive");
    return v;
}

bool dynamic_graph::has_edge(NodeID u, NodeID v) const {
    check_id(u);
    check_id(v);
    return sorted_contains(adjacency_[u], v);
}

node_set dynamic_graph::alive_nodes() const {
    node_set out;
    out.reserve(alive_count_);
    for (NodeID v = 0; v < n_original(); ++v)
        if (alive_[v])
            out.push_back(v);
    return out;
}

void dynamic_graph::add_edge(NodeID u, NodeID v) {
    check_alive(u);
    check_alive(v);
    if (u == v)
        throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (!insert_edge(u, v))
        throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
}

bool dynamic_graph::insert_edge(NodeID u, NodeID v) {
    check_alive(u);
    check_alive(v);
    if (u == v)
        return false;
    if (!sorted_insert(adjacency_[u], v))
        return false;
    sorted_insert(adjacency_[v], u);
    ++edge_count_;
    return true;
}

void dynamic_graph::remove_node(NodeID v) {
    check_alive(v);
    for (NodeID u : adjacency_[v])
        sorted_erase(adjacency_[u], v);
    edge_count_ -= adjacency_[v].size();
    adjacency_[v].clear();
    adjacency_[v].shrink_to_fit();
    alive_[v] = false;
    --alive_count_;
}

std::uint64_t dynamic_graph::eliminate_node(NodeID v) {
    check_alive(v);
    const std::vector<NodeID> nbrs = adjacency_[v];
    std::uint64_t inserted = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (insert_edge(nbrs[i], nbrs[j]))
                ++inserted;
    remove_node(v);
    return inserted;
}

void dynamic_graph::contract(NodeID keep, NodeID drop) {
    check_alive(keep);
    check_alive(drop);
    if (keep == drop)
        throw std::invalid_argument("contract: keep == drop");
    const std::vector<NodeID> gained = adjacency_[drop];
    remove_node(drop);
    for (NodeID u : gained)
        if (u != keep)
            insert_edge(keep, u);
}

dynamic_graph dynamic_graph::induced(const node_set &keep) const {
    dynamic_graph sub(n_original());
    std::vector<bool> in(static_cast<std::size_t>(n_original()), false);
    for (NodeID v : keep) {
        check_alive(v);
        in[v] = true;
    }
    std::size_t edges = 0;
    for (NodeID v = 0; v < n_original(); ++v) {
        if (!in[v]) {
            sub.alive_[v] = false;
            continue;
        }
        auto &row = sub.adjacency_[v];
        for (NodeID u : adjacency_[v])
            if (in[u])
                row.push_back(u);
        edges += row.size();
    }
    sub.alive_count_ = keep.size();
    sub.edge_count_ = edges / 2;
    return sub;
}

void dynamic_graph::audit() const {
    std::size_t alive_seen = 0;
    std::size_t degree_sum = 0;
    for (NodeID v = 0; v < n_original(); ++v) {
        const auto &row = adjacency_[v];
        if (!alive_[v]) {
            if (!row.empty())
                throw std::logic_error("dead node " + std::to_string(v) + " has neighbors");
            continue;
        }
        ++alive_seen;
        degree_sum += row.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            NodeID u = row[i];
            if (u == v)
                throw std::logic_error("self-loop on node " + std::to_string(v));
            if (i > 0 && row[i - 1] >= u)
                throw std::logic_error("adjacency of node " + std::to_string(v) + " not strictly sorted");
            if (u < 0 || u >= n_original() || !alive_[u])
                throw std::logic_error("node " + std::to_string(v) + " adjacent to dead node");
            if (!sorted_contains(adjacency_[u], v))
                throw std::logic_error("asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
        }
    }
    if (alive_seen != alive_count_)
        throw std::logic_error("alive count cache mismatch");
    if (degree_sum != 2 * edge_count_)
        throw std::logic_error("edge count cache mismatch");
}

} // namespace fillkern

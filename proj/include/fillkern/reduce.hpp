#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fillkern/graph.hpp"

namespace fillkern {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class reduction_kind {
    simplicial,
    indistinguishable,
    twin,
    path_compression,
    degree2_elimination,
    triangle_contraction,
};

char rule_letter(reduction_kind kind);

// One applied reduction, with enough data to splice the removed nodes
// back into an ordering of the kernel.
struct reduction_event {
    reduction_kind kind;
    node_set removed;                  // nodes removed or merged away
    std::optional<NodeID> anchor;      // surviving representative, contractions only
    std::vector<NodeID> order_hint;    // internal order of `removed`
    // Outer neighbors of a compressed chain at event time; the chain is
    // oriented at reconstruction toward whichever is eliminated first.
    std::optional<std::pair<NodeID, NodeID>> chain_ends;
    // Set when the compressed run was a whole cycle of degree-2 nodes.
    // Any ordering of a cycle has minimum fill, so the removed arc is not
    // tied to the anchor the way an open chain is.
    bool cyclic = false;

    bool operator==(const reduction_event &other) const = default;
};

struct reduction_ledger {
    std::vector<reduction_event> events;
    node_set kernel_alive;

    // Each node appears in at most one event's `removed`, and
    // kernel_alive plus all removed nodes partition the reduced id set.
    void check_partition(const node_set &original_alive) const;

    bool operator==(const reduction_ledger &other) const = default;
};

struct pipeline_config {
    std::vector<reduction_kind> rules;
    std::uint32_t delta = 0;    // simplicial degree limit, 0 = unlimited
    std::uint32_t passes = 64;  // cap on exhaustive sweeps
    bool single_pass = false;   // one sweep, one invocation per rule
    bool triangle_strict = false; // require exactly one shared neighbor

    void validate() const;
};

// Parses a configuration string such as "SD18" or "SITP": rule letters
// from {S,I,T,P,D,C} followed by an optional degree limit. Whitespace is
// stripped and letters uppercased. C stands for triangle contraction.
pipeline_config parse_config(const std::string &text);
std::string normalized_config(const pipeline_config &cfg);

// Single passes of the individual rules. Each returns the number of
// nodes removed from the graph and appends its events to the ledger.
std::size_t reduce_simplicial(dynamic_graph &g, std::uint32_t delta, reduction_ledger &ledger);
std::size_t reduce_indistinguishable(dynamic_graph &g, reduction_ledger &ledger);
std::size_t reduce_twin(dynamic_graph &g, reduction_ledger &ledger);
std::size_t reduce_path_compression(dynamic_graph &g, reduction_ledger &ledger);
std::size_t reduce_degree2(dynamic_graph &g, reduction_ledger &ledger);
std::size_t reduce_triangle_contraction(dynamic_graph &g, reduction_ledger &ledger, bool strict = false);

// Applies the configured rules exhaustively: within a sweep each rule is
// invoked until it removes nothing, and sweeping stops when a whole sweep
// removes nothing (or cfg.passes is reached). In single-pass mode every
// rule is invoked exactly once.
struct pipeline_result {
    dynamic_graph kernel;
    reduction_ledger ledger;
};
pipeline_result run_pipeline(const dynamic_graph &g, const pipeline_config &cfg);

// Expands an ordering of the kernel into an ordering of the graph the
// pipeline started from, undoing the recorded events in reverse.
ordering reconstruct_ordering(const reduction_ledger &ledger, const ordering &kernel_order);

} // namespace fillkern

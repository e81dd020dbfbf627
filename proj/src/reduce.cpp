#include "fillkern/reduce.hpp"

#include <algorithm>
#include <cctype>
#include <list>
#include <queue>
#include <unordered_map>

namespace fillkern {

namespace {

std::uint64_t open_hash(const dynamic_graph &g, NodeID v) {
    std::uint64_t h = 0;
    for (NodeID u : g.neighbors(v))
        h += static_cast<std::uint64_t>(u);
    return h;
}

// Sorted-list intersection size.
std::size_t common_neighbors(const std::vector<NodeID> &a, const std::vector<NodeID> &b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else
            ++count, ++i, ++j;
    }
    return count;
}

bool equal_closed_neighborhoods(const dynamic_graph &g, NodeID u, NodeID v) {
    // Gamma[u] == Gamma[v] for adjacent u, v means the open neighborhoods
    // agree outside the pair itself.
    const auto &nu = g.neighbors(u);
    const auto &nv = g.neighbors(v);
    if (nu.size() != nv.size())
        return false;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        NodeID a = nu[i], b = nv[j];
        if (a == v) {
            ++i;
            continue;
        }
        if (b == u) {
            ++j;
            continue;
        }
        if (a != b)
            return false;
        ++i, ++j;
    }
    while (i < nu.size() && nu[i] == v)
        ++i;
    while (j < nv.size() && nv[j] == u)
        ++j;
    return i == nu.size() && j == nv.size();
}

bool is_simplicial(const dynamic_graph &g, NodeID v) {
    const auto &nbrs = g.neighbors(v);
    if (nbrs.size() <= 1)
        return true;
    for (NodeID y : nbrs)
        if (common_neighbors(g.neighbors(y), nbrs) != nbrs.size() - 1)
            return false;
    return true;
}

} // namespace

char rule_letter(reduction_kind kind) {
    switch (kind) {
    case reduction_kind::simplicial: return 'S';
    case reduction_kind::indistinguishable: return 'I';
    case reduction_kind::twin: return 'T';
    case reduction_kind::path_compression: return 'P';
    case reduction_kind::degree2_elimination: return 'D';
    case reduction_kind::triangle_contraction: return 'C';
    }
    return '?';
}

void pipeline_config::validate() const {
    bool has_path = false, has_degree2 = false;
    for (reduction_kind rule : rules) {
        has_path |= rule == reduction_kind::path_compression;
        has_degree2 |= rule == reduction_kind::degree2_elimination;
    }
    if (has_path && has_degree2)
        throw config_error("invalid configuration: path compression (P) and degree-2 elimination (D) "
                           "cannot be combined");
    if (passes == 0)
        throw config_error("invalid configuration: passes must be at least 1");
}

pipeline_config parse_config(const std::string &text) {
    pipeline_config cfg;
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

    std::size_t pos = 0;
    for (; pos < cleaned.size() && !std::isdigit(static_cast<unsigned char>(cleaned[pos])); ++pos) {
        switch (cleaned[pos]) {
        case 'S': cfg.rules.push_back(reduction_kind::simplicial); break;
        case 'I': cfg.rules.push_back(reduction_kind::indistinguishable); break;
        case 'T': cfg.rules.push_back(reduction_kind::twin); break;
        case 'P': cfg.rules.push_back(reduction_kind::path_compression); break;
        case 'D': cfg.rules.push_back(reduction_kind::degree2_elimination); break;
        case 'C': cfg.rules.push_back(reduction_kind::triangle_contraction); break;
        default:
            throw config_error(std::string("invalid configuration: unknown rule letter '") + cleaned[pos] + "'");
        }
    }
    if (pos < cleaned.size()) {
        try {
            std::size_t used = 0;
            unsigned long value = std::stoul(cleaned.substr(pos), &used);
            if (used != cleaned.size() - pos)
                throw std::invalid_argument(cleaned);
            cfg.delta = static_cast<std::uint32_t>(value);
        } catch (const config_error &) {
            throw;
        } catch (const std::exception &) {
            throw config_error("invalid configuration: bad degree limit in '" + text + "'");
        }
    }
    cfg.validate();
    return cfg;
}

std::string normalized_config(const pipeline_config &cfg) {
    std::string out;
    for (reduction_kind rule : cfg.rules)
        out.push_back(rule_letter(rule));
    if (cfg.delta != 0)
        out += std::to_string(cfg.delta);
    return out;
}

void reduction_ledger::check_partition(const node_set &original_alive) const {
    std::vector<NodeID> all(kernel_alive);
    for (const reduction_event &event : events) {
        if (event.removed.empty())
            throw std::logic_error("ledger: event with empty removed set");
        if (event.anchor && std::binary_search(event.removed.begin(), event.removed.end(), *event.anchor))
            throw std::logic_error("ledger: anchor contained in removed set");
        std::vector<NodeID> hint(event.order_hint);
        std::sort(hint.begin(), hint.end());
        if (hint != event.removed)
            throw std::logic_error("ledger: order_hint is not a permutation of removed");
        all.insert(all.end(), event.removed.begin(), event.removed.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("ledger: node appears in more than one event");
    if (all != original_alive)
        throw std::logic_error("ledger: kernel and removed nodes do not partition the input nodes");
}

std::size_t reduce_simplicial(dynamic_graph &g, std::uint32_t delta, reduction_ledger &ledger) {
    node_set order = g.alive_nodes();
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeID a, NodeID b) { return g.degree(a) < g.degree(b); });

    std::vector<NodeID> discovered;
    for (NodeID v : order) {
        if (!g.is_alive(v))
            continue;
        if (delta != 0 && g.degree(v) > delta)
            continue;
        if (is_simplicial(g, v)) {
            g.remove_node(v);
            discovered.push_back(v);
        }
    }
    if (!discovered.empty()) {
        reduction_event event;
        event.kind = reduction_kind::simplicial;
        event.order_hint = discovered;
        event.removed = discovered;
        std::sort(event.removed.begin(), event.removed.end());
        ledger.events.push_back(std::move(event));
    }
    return discovered.size();
}

std::size_t reduce_indistinguishable(dynamic_graph &g, reduction_ledger &ledger) {
    const node_set alive = g.alive_nodes();
    std::unordered_map<NodeID, std::uint64_t> hash;
    hash.reserve(alive.size());
    for (NodeID v : alive)
        hash[v] = open_hash(g, v) + static_cast<std::uint64_t>(v);

    std::vector<bool> grouped(static_cast<std::size_t>(g.n_original()), false);
    std::vector<std::pair<NodeID, std::vector<NodeID>>> classes;
    for (NodeID u : alive) {
        if (grouped[u])
            continue;
        std::vector<NodeID> partners;
        for (NodeID v : g.neighbors(u)) {
            if (v < u || grouped[v] || hash[u] != hash[v])
                continue;
            if (equal_closed_neighborhoods(g, u, v))
                partners.push_back(v);
        }
        if (partners.empty())
            continue;
        grouped[u] = true;
        for (NodeID v : partners)
            grouped[v] = true;
        classes.emplace_back(u, std::move(partners));
    }

    std::size_t removed_total = 0;
    for (auto &[anchor, partners] : classes) {
        for (NodeID v : partners)
            g.contract(anchor, v);
        reduction_event event;
        event.kind = reduction_kind::indistinguishable;
        event.anchor = anchor;
        event.order_hint = partners;
        event.removed = partners;
        std::sort(event.removed.begin(), event.removed.end());
        removed_total += partners.size();
        ledger.events.push_back(std::move(event));
    }
    return removed_total;
}

std::size_t reduce_twin(dynamic_graph &g, reduction_ledger &ledger) {
    const node_set alive = g.alive_nodes();
    struct candidate {
        std::uint64_t hash;
        std::size_t degree;
        NodeID node;
        bool operator<(const candidate &other) const {
            return std::tie(hash, degree, node) < std::tie(other.hash, other.degree, other.node);
        }
    };
    std::vector<candidate> list;
    list.reserve(alive.size());
    for (NodeID v : alive)
        list.push_back({open_hash(g, v), g.degree(v), v});
    std::sort(list.begin(), list.end());

    std::vector<bool> grouped(static_cast<std::size_t>(g.n_original()), false);
    std::vector<std::pair<NodeID, std::vector<NodeID>>> classes;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (grouped[list[i].node])
            continue;
        std::vector<NodeID> partners;
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            if (list[j].hash != list[i].hash || list[j].degree != list[i].degree)
                break;
            if (grouped[list[j].node])
                continue;
            if (g.neighbors(list[i].node) == g.neighbors(list[j].node))
                partners.push_back(list[j].node);
        }
        if (partners.empty())
            continue;
        grouped[list[i].node] = true;
        for (NodeID v : partners)
            grouped[v] = true;
        classes.emplace_back(list[i].node, std::move(partners));
    }

    std::size_t removed_total = 0;
    for (auto &[anchor, partners] : classes) {
        for (NodeID v : partners)
            g.contract(anchor, v);
        reduction_event event;
        event.kind = reduction_kind::twin;
        event.anchor = anchor;
        event.order_hint = partners;
        event.removed = partners;
        std::sort(event.removed.begin(), event.removed.end());
        removed_total += partners.size();
        ledger.events.push_back(std::move(event));
    }
    return removed_total;
}

namespace {

struct chain_walk {
    std::vector<NodeID> nodes; // in path (or cyclic) order
    bool is_cycle = false;
    NodeID stop_front = -1; // non-degree-2 neighbor of nodes.front()
    NodeID stop_back = -1;  // non-degree-2 neighbor of nodes.back()
};

// Expands the maximal run of degree-2 nodes through v. If the run closes
// on itself the whole component is a cycle and `nodes` lists it starting
// at v, second node = v's smaller neighbor.
chain_walk expand_chain(const dynamic_graph &g, NodeID v) {
    chain_walk walk;
    auto extend = [&](NodeID from, NodeID start, std::vector<NodeID> &out) -> NodeID {
        NodeID prev = from;
        NodeID cur = start;
        while (true) {
            if (cur == v) { // wrapped around: cycle
                walk.is_cycle = true;
                return -1;
            }
            if (g.degree(cur) != 2)
                return cur;
            out.push_back(cur);
            const auto &nb = g.neighbors(cur);
            NodeID next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
    };

    const auto nb = g.neighbors(v);
    std::vector<NodeID> forward, backward;
    NodeID stop_f = g.degree(nb[0]) == 2 ? extend(v, nb[0], forward) : nb[0];
    if (walk.is_cycle) {
        walk.nodes.push_back(v);
        walk.nodes.insert(walk.nodes.end(), forward.begin(), forward.end());
        return walk;
    }
    NodeID stop_b = g.degree(nb[1]) == 2 ? extend(v, nb[1], backward) : nb[1];

    walk.nodes.assign(forward.rbegin(), forward.rend());
    walk.nodes.push_back(v);
    walk.nodes.insert(walk.nodes.end(), backward.begin(), backward.end());
    walk.stop_front = stop_f;
    walk.stop_back = stop_b;
    return walk;
}

} // namespace

std::size_t reduce_path_compression(dynamic_graph &g, reduction_ledger &ledger) {
    std::vector<bool> processed(static_cast<std::size_t>(g.n_original()), false);
    std::size_t removed_total = 0;

    // Detect all maximal runs first, then rewire; compressions of disjoint
    // runs do not interact.
    std::vector<chain_walk> walks;
    for (NodeID v : g.alive_nodes()) {
        if (processed[v] || g.degree(v) != 2)
            continue;
        chain_walk walk = expand_chain(g, v);
        for (NodeID u : walk.nodes)
            processed[u] = true;
        walks.push_back(std::move(walk));
    }

    for (chain_walk &walk : walks) {
        if (walk.is_cycle) {
            // A component that is one big cycle of degree-2 nodes: keep the
            // lowest node and its two neighbors, compress the far arc, and
            // close the kept nodes into a triangle.
            const std::size_t len = walk.nodes.size();
            if (len <= 3)
                continue;
            NodeID kept_a = walk.nodes[1];
            NodeID kept_b = walk.nodes[len - 1];
            std::vector<NodeID> arc(walk.nodes.begin() + 2, walk.nodes.end() - 1);
            for (NodeID u : arc)
                g.remove_node(u);
            g.insert_edge(kept_a, kept_b);

            reduction_event event;
            event.kind = reduction_kind::path_compression;
            event.anchor = kept_a;
            event.order_hint = arc;
            event.removed = arc;
            std::sort(event.removed.begin(), event.removed.end());
            event.chain_ends = std::make_pair(walk.nodes[0], kept_b);
            event.cyclic = true;
            removed_total += arc.size();
            ledger.events.push_back(std::move(event));
            continue;
        }

        // Runs shorter than two nodes compress to nothing; runs whose two
        // outer neighbors coincide (a pendant cycle) stay untouched, the
        // rule needs two distinct endpoints.
        if (walk.nodes.size() < 2 || walk.stop_front == walk.stop_back)
            continue;
        // Keep the chain end with the lower id as the surviving node.
        if (walk.nodes.back() < walk.nodes.front()) {
            std::reverse(walk.nodes.begin(), walk.nodes.end());
            std::swap(walk.stop_front, walk.stop_back);
        }
        const NodeID anchor = walk.nodes.front();
        std::vector<NodeID> tail(walk.nodes.begin() + 1, walk.nodes.end());
        for (NodeID u : tail)
            g.remove_node(u);
        g.insert_edge(anchor, walk.stop_back);

        reduction_event event;
        event.kind = reduction_kind::path_compression;
        event.anchor = anchor;
        event.order_hint = tail;
        event.removed = tail;
        std::sort(event.removed.begin(), event.removed.end());
        event.chain_ends = std::make_pair(walk.stop_front, walk.stop_back);
        removed_total += tail.size();
        ledger.events.push_back(std::move(event));
    }
    return removed_total;
}

std::size_t reduce_degree2(dynamic_graph &g, reduction_ledger &ledger) {
    std::priority_queue<NodeID, std::vector<NodeID>, std::greater<>> pending;
    for (NodeID v : g.alive_nodes())
        if (g.degree(v) == 2)
            pending.push(v);

    std::size_t removed_total = 0;
    while (!pending.empty()) {
        NodeID v = pending.top();
        pending.pop();
        if (!g.is_alive(v) || g.degree(v) != 2)
            continue;
        const std::vector<NodeID> nbrs = g.neighbors(v);
        g.eliminate_node(v);
        for (NodeID u : nbrs)
            if (g.is_alive(u) && g.degree(u) == 2)
                pending.push(u);

        reduction_event event;
        event.kind = reduction_kind::degree2_elimination;
        event.removed = {v};
        event.order_hint = {v};
        ledger.events.push_back(std::move(event));
        ++removed_total;
    }
    return removed_total;
}

std::size_t reduce_triangle_contraction(dynamic_graph &g, reduction_ledger &ledger, bool strict) {
    std::vector<bool> processed(static_cast<std::size_t>(g.n_original()), false);
    std::size_t removed_total = 0;

    for (NodeID x : g.alive_nodes()) {
        if (!g.is_alive(x) || processed[x] || g.degree(x) != 3)
            continue;

        // Find a degree-3 neighbor sharing a neighbor with x.
        NodeID mate = -1;
        NodeID common = -1;
        for (NodeID y : g.neighbors(x)) {
            if (processed[y] || g.degree(y) != 3)
                continue;
            std::vector<NodeID> shared;
            for (NodeID w : g.neighbors(x))
                if (w != y && g.has_edge(y, w))
                    shared.push_back(w);
            if (shared.empty())
                continue;
            if (strict && shared.size() != 1)
                continue;
            mate = y;
            common = shared.front();
            break;
        }
        if (mate == -1)
            continue;

        // Gather the chain of degree-3 nodes around the shared neighbor.
        std::vector<NodeID> gathered = {x, mate};
        processed[x] = processed[mate] = true;
        NodeID cur = mate;
        while (true) {
            NodeID next = -1;
            for (NodeID z : g.neighbors(cur)) {
                if (processed[z] || g.degree(z) != 3)
                    continue;
                if (std::find(gathered.begin(), gathered.end(), z) != gathered.end())
                    continue;
                if (g.has_edge(z, common)) {
                    next = z;
                    break;
                }
            }
            if (next == -1)
                break;
            gathered.push_back(next);
            processed[next] = true;
            cur = next;
        }

        const NodeID anchor = *std::min_element(gathered.begin(), gathered.end());
        std::vector<NodeID> tail;
        for (NodeID u : gathered)
            if (u != anchor)
                tail.push_back(u);
        for (NodeID u : tail)
            g.contract(anchor, u);

        reduction_event event;
        event.kind = reduction_kind::triangle_contraction;
        event.anchor = anchor;
        event.order_hint = tail;
        event.removed = tail;
        std::sort(event.removed.begin(), event.removed.end());
        removed_total += tail.size();
        ledger.events.push_back(std::move(event));
    }
    return removed_total;
}

pipeline_result run_pipeline(const dynamic_graph &g, const pipeline_config &cfg) {
    cfg.validate();
    pipeline_result result{g, {}};
    dynamic_graph &work = result.kernel;
    reduction_ledger &ledger = result.ledger;

    const std::uint32_t sweeps = cfg.single_pass ? 1 : cfg.passes;
    for (std::uint32_t sweep = 0; sweep < sweeps; ++sweep) {
        std::size_t removed_in_sweep = 0;
        for (reduction_kind rule : cfg.rules) {
            std::size_t removed = 0;
            do {
                switch (rule) {
                case reduction_kind::simplicial:
                    removed = reduce_simplicial(work, cfg.delta, ledger);
                    break;
                case reduction_kind::indistinguishable:
                    removed = reduce_indistinguishable(work, ledger);
                    break;
                case reduction_kind::twin:
                    removed = reduce_twin(work, ledger);
                    break;
                case reduction_kind::path_compression:
                    removed = reduce_path_compression(work, ledger);
                    break;
                case reduction_kind::degree2_elimination:
                    removed = reduce_degree2(work, ledger);
                    break;
                case reduction_kind::triangle_contraction:
                    removed = reduce_triangle_contraction(work, ledger, cfg.triangle_strict);
                    break;
                }
                removed_in_sweep += removed;
            } while (removed > 0 && !cfg.single_pass);
        }
        if (removed_in_sweep == 0)
            break;
    }
    ledger.kernel_alive = work.alive_nodes();
    return result;
}

ordering reconstruct_ordering(const reduction_ledger &ledger, const ordering &kernel_order) {
    if (!kernel_order.is_permutation_of(ledger.kernel_alive))
        throw std::invalid_argument("reconstruct_ordering: kernel ordering does not match the ledger");

    std::list<NodeID> seq;
    std::unordered_map<NodeID, std::list<NodeID>::iterator> where;
    auto append = [&](NodeID v) { where[v] = seq.insert(seq.end(), v); };

    // Eliminated nodes come first, in removal order; the kernel follows.
    for (const reduction_event &event : ledger.events)
        if (event.kind == reduction_kind::simplicial || event.kind == reduction_kind::degree2_elimination)
            for (NodeID v : event.order_hint)
                append(v);
    for (NodeID v : kernel_order.seq)
        append(v);

    // Undo contractions newest-first so that every anchor (and every chain
    // endpoint) is already back in the sequence when its event is undone.
    for (auto it = ledger.events.rbegin(); it != ledger.events.rend(); ++it) {
        const reduction_event &event = *it;
        if (event.kind == reduction_kind::simplicial || event.kind == reduction_kind::degree2_elimination)
            continue;
        auto anchor_it = where.find(event.anchor.value());
        if (anchor_it == where.end())
            throw std::invalid_argument("reconstruct_ordering: anchor missing from sequence");

        bool forward = true;
        if (event.kind == reduction_kind::path_compression) {
            const auto [end_a, end_b] = event.chain_ends.value();
            std::size_t pos_a = 0, pos_b = 0, pos = 0;
            for (NodeID v : seq) {
                if (v == end_a)
                    pos_a = pos;
                if (v == end_b)
                    pos_b = pos;
                ++pos;
            }
            // The chain starts at the end whose outer neighbor comes first.
            forward = pos_a <= pos_b;
        }

        if (forward) {
            auto insert_after = std::next(anchor_it->second);
            for (NodeID v : event.order_hint)
                where[v] = seq.insert(insert_after, v);
        } else {
            auto insert_before = anchor_it->second;
            for (auto rit = event.order_hint.rbegin(); rit != event.order_hint.rend(); ++rit)
                where[*rit] = seq.insert(insert_before, *rit);
            // keep insert_before pointing at the anchor: reversed chain
            // ends with the anchor itself.
        }
    }

    ordering out;
    out.seq.assign(seq.begin(), seq.end());
    return out;
}

} // namespace fillkern

#include "fillkern/metis_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace fillkern {

namespace {

// Next non-comment line; returns false on EOF.
bool next_data_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos != std::string::npos && line[pos] == '%')
            continue;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return true;
    }
    return false;
}

long long parse_count(const std::string &tok, const char *what) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size() || value < 0)
            throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception &) {
        throw metis_parse_error(std::string("malformed ") + what + ": '" + tok + "'");
    }
}

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    return out;
}

} // namespace

dynamic_graph load_metis(std::istream &in) {
    std::string line;
    if (!next_data_line(in, line))
        throw metis_parse_error("missing header line");

    std::istringstream header(line);
    std::vector<std::string> fields;
    for (std::string tok; header >> tok;)
        fields.push_back(tok);
    if (fields.size() < 2 || fields.size() > 4)
        throw metis_parse_error("malformed header: '" + line + "'");

    const long long n = parse_count(fields[0], "node count");
    const long long m = parse_count(fields[1], "edge count");

    bool has_edge_weights = false;
    bool has_node_weights = false;
    bool has_node_sizes = false;
    long long ncon = 0;
    if (fields.size() >= 3) {
        const std::string &fmt = fields[2];
        if (fmt.empty() || fmt.size() > 3 || fmt.find_first_not_of("01") != std::string::npos)
            throw metis_parse_error("malformed fmt field: '" + fmt + "'");
        // fmt digits, right to left: edge weights, node weights, node sizes
        has_edge_weights = fmt.back() == '1';
        has_node_weights = fmt.size() >= 2 && fmt[fmt.size() - 2] == '1';
        has_node_sizes = fmt.size() >= 3 && fmt[fmt.size() - 3] == '1';
        ncon = has_node_weights ? 1 : 0;
    }
    if (fields.size() == 4)
        ncon = parse_count(fields[3], "ncon field");

    dynamic_graph g(static_cast<NodeID>(n));
    // Edges inserted from their lower endpoint that still await the
    // matching entry at the higher endpoint.
    std::unordered_set<long long> unconfirmed;
    for (long long v = 0; v < n; ++v) {
        if (!next_data_line(in, line))
            throw metis_parse_error("unexpected end of file: expected " + std::to_string(n) +
                                    " node lines, got " + std::to_string(v));
        std::istringstream tokens(line);
        std::string tok;
        if (has_node_sizes && !(tokens >> tok))
            throw metis_parse_error("node " + std::to_string(v + 1) + ": missing size field");
        for (long long c = 0; c < ncon; ++c)
            if (!(tokens >> tok))
                throw metis_parse_error("node " + std::to_string(v + 1) + ": missing weight field");

        while (tokens >> tok) {
            long long u = parse_count(tok, "neighbor id");
            if (u < 1 || u > n)
                throw metis_parse_error("node " + std::to_string(v + 1) + ": neighbor id " +
                                        std::to_string(u) + " out of range");
            if (u == v + 1)
                throw metis_parse_error("node " + std::to_string(v + 1) + ": self-loop");
            if (has_edge_weights && !(tokens >> tok))
                throw metis_parse_error("node " + std::to_string(v + 1) + ": missing edge weight");
            if (u > v + 1) {
                if (!g.insert_edge(static_cast<NodeID>(v), static_cast<NodeID>(u - 1)))
                    throw metis_parse_error("node " + std::to_string(v + 1) + ": duplicate edge to " +
                                            std::to_string(u));
                unconfirmed.insert(v * n + (u - 1));
            } else {
                // Higher endpoint: the edge must have been inserted already
                // and not yet confirmed (a second mention is a duplicate).
                if (unconfirmed.erase((u - 1) * n + v) == 0)
                    throw metis_parse_error("node " + std::to_string(v + 1) + ": edge to " + std::to_string(u) +
                                            " duplicated or not listed at node " + std::to_string(u));
            }
        }
    }
    if (!unconfirmed.empty()) {
        const long long key = *unconfirmed.begin();
        throw metis_parse_error("asymmetric adjacency: edge " + std::to_string(key / n + 1) + "-" +
                                std::to_string(key % n + 1) + " listed only once");
    }
    if (static_cast<long long>(g.edge_count()) != m)
        throw metis_parse_error("header declares " + std::to_string(m) + " edges, adjacency lists contain " +
                                std::to_string(g.edge_count()));
    return g;
}

dynamic_graph load_metis_file(const std::string &path) {
    auto in = open_input(path);
    return load_metis(in);
}

void save_metis(const dynamic_graph &g, std::ostream &out) {
    if (g.alive_count() != static_cast<std::size_t>(g.n_original()))
        throw std::invalid_argument("save_metis: graph has removed nodes");
    out << g.n_original() << ' ' << g.edge_count() << '\n';
    for (NodeID v = 0; v < g.n_original(); ++v) {
        const auto &row = g.neighbors(v);
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i] + 1;
        out << '\n';
    }
}

void save_metis_file(const dynamic_graph &g, const std::string &path) {
    auto out = open_output(path);
    save_metis(g, out);
}

void write_permutation(const ordering &ord, std::ostream &out) {
    for (NodeID v : ord.seq)
        out << v + 1 << '\n';
}

void write_permutation_file(const ordering &ord, const std::string &path) {
    auto out = open_output(path);
    write_permutation(ord, out);
}

ordering read_permutation(std::istream &in) {
    ordering ord;
    std::string line;
    while (next_data_line(in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        long long v = parse_count(line, "permutation entry");
        if (v < 1)
            throw metis_parse_error("permutation entry " + std::to_string(v) + " is not 1-indexed");
        ord.seq.push_back(static_cast<NodeID>(v - 1));
    }
    return ord;
}

ordering read_permutation_file(const std::string &path) {
    auto in = open_input(path);
    return read_permutation(in);
}

} // namespace fillkern

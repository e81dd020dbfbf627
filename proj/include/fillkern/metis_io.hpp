#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fillkern/graph.hpp"

namespace fillkern {

struct metis_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads a graph in Metis/Chaco format: header "n m [fmt [ncon]]", then one
// 1-indexed neighbor list per node. '%' lines are comments. Vertex and edge
// weights are parsed and discarded. Self-loops, duplicate neighbors and
// asymmetric adjacency are rejected.
dynamic_graph load_metis(std::istream &in);
dynamic_graph load_metis_file(const std::string &path);

// Writes the graph back in Metis format. All nodes must be alive.
void save_metis(const dynamic_graph &g, std::ostream &out);
void save_metis_file(const dynamic_graph &g, const std::string &path);

// Permutation file: one 1-indexed node id per line, elimination order.
void write_permutation(const ordering &ord, std::ostream &out);
void write_permutation_file(const ordering &ord, const std::string &path);
ordering read_permutation(std::istream &in);
ordering read_permutation_file(const std::string &path);

} // namespace fillkern

#pragma once

#include <iosfwd>
#include <string>

#include "ehf/graph.hpp"

namespace ehf::io {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list graph: comment lines start with 'c', a header line
/// `p <n> <m>` (the DIMACS `p edge <n> <m>` spelling is also accepted),
/// then `e <u> <v>` lines with 1-based ids.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// One line per part: space-separated 1-based vertex ids. Blank lines and
/// 'c' comments are skipped. Ids are range- and duplicate-checked; clique
/// and cover validation is the caller's.
CliquePartition read_partition(std::istream& in, const Graph& g);
CliquePartition read_partition_file(const std::string& path, const Graph& g);
void write_partition(std::ostream& out, const CliquePartition& parts);
void write_partition_file(const std::string& path, const CliquePartition& parts);

/// Whitespace-separated 1-based vertex ids; 'c' comment lines are skipped.
VertexSet read_vertex_set(std::istream& in, const Graph& g);
VertexSet read_vertex_set_file(const std::string& path, const Graph& g);
void write_vertex_set(std::ostream& out, const VertexSet& s);
void write_vertex_set_file(const std::string& path, const VertexSet& s);

/// FNV-1a 64-bit digest, as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

} // namespace ehf::io

#include "ehf/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ehf::io {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    return out;
}

Vertex to_internal(long id, int n, const std::string& where) {
    if (id < 1 || id > n)
        throw parse_error(where + ": vertex id " + std::to_string(id) + " out of range 1.." +
                          std::to_string(n));
    return static_cast<Vertex>(id - 1);
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        const std::string where = "line " + std::to_string(lineno);
        if (tag == "p") {
            if (n >= 0) throw parse_error(where + ": duplicate header");
            std::string first;
            if (!(ss >> first)) throw parse_error(where + ": malformed header");
            if (!first.empty() && !std::isdigit(static_cast<unsigned char>(first[0]))) {
                // `p edge n m` spelling; skip the format token.
                if (!(ss >> n >> m)) throw parse_error(where + ": malformed header");
            } else {
                n = std::stol(first);
                if (!(ss >> m)) throw parse_error(where + ": malformed header");
            }
            if (n < 0 || m < 0) throw parse_error(where + ": negative header counts");
        } else if (tag == "e") {
            if (n < 0) throw parse_error(where + ": edge before header");
            long u, v;
            if (!(ss >> u >> v)) throw parse_error(where + ": malformed edge");
            if (u == v) throw parse_error(where + ": self-loop");
            edges.emplace_back(to_internal(u, static_cast<int>(n), where),
                               to_internal(v, static_cast<int>(n), where));
        } else {
            throw parse_error(where + ": unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error("missing 'p' header line");
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
    auto out = open_output(path);
    write_graph(out, g);
}

CliquePartition read_partition(std::istream& in, const Graph& g) {
    CliquePartition parts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first == "c") continue;
        ss.clear();
        ss.seekg(0);
        VertexSet part;
        long id;
        while (ss >> id)
            part.push_back(to_internal(id, g.num_vertices(), "line " + std::to_string(lineno)));
        if (ss.fail() && !ss.eof())
            throw parse_error("line " + std::to_string(lineno) + ": malformed part");
        if (!part.empty()) parts.push_back(sorted_copy(std::move(part)));
    }
    std::vector<bool> seen(g.num_vertices(), false);
    for (const auto& part : parts)
        for (Vertex v : part) {
            if (seen[v])
                throw parse_error("vertex " + std::to_string(v + 1) + " appears in two parts");
            seen[v] = true;
        }
    return parts;
}

CliquePartition read_partition_file(const std::string& path, const Graph& g) {
    auto in = open_input(path);
    return read_partition(in, g);
}

void write_partition(std::ostream& out, const CliquePartition& parts) {
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i] + 1;
        out << "\n";
    }
}

void write_partition_file(const std::string& path, const CliquePartition& parts) {
    auto out = open_output(path);
    write_partition(out, parts);
}

VertexSet read_vertex_set(std::istream& in, const Graph& g) {
    VertexSet s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first == "c") continue;
        ss.clear();
        ss.seekg(0);
        long id;
        while (ss >> id)
            s.push_back(to_internal(id, g.num_vertices(), "line " + std::to_string(lineno)));
        if (ss.fail() && !ss.eof())
            throw parse_error("line " + std::to_string(lineno) + ": malformed vertex list");
    }
    check_vertex_set(g, s);
    return sorted_copy(std::move(s));
}

VertexSet read_vertex_set_file(const std::string& path, const Graph& g) {
    auto in = open_input(path);
    return read_vertex_set(in, g);
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i] + 1;
    out << "\n";
}

void write_vertex_set_file(const std::string& path, const VertexSet& s) {
    auto out = open_output(path);
    write_vertex_set(out, s);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_digest(const std::string& path) {
    auto in = open_input(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_hex(ss.str());
}

} // namespace ehf::io

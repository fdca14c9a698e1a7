#include "limpack/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace limpack {

namespace {

constexpr int kBias = 63;

void append_bits(std::string& out, long long value, int sextets) {
    for (int i = sextets - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kBias));
}

} // namespace

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        append_bits(out, n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_bits(out, n, 6);
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(const std::string& line) {
    auto fail = [&](std::size_t offset, const std::string& why) -> Graph {
        throw std::runtime_error("graph6 parse error at byte " + std::to_string(offset) +
                                 ": " + why + " in \"" + line + "\"");
    };
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
        if (pos + count > line.size()) fail(line.size(), "truncated input");
    };
    auto sextet = [&]() -> int {
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) fail(pos, "byte outside printable graph6 range");
        ++pos;
        return c - kBias;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(line[0]) != 126) {
        n = sextet();
    } else {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(line[pos]) != 126) {
            need(3);
            n = 0;
            for (int i = 0; i < 3; ++i) n = (n << 6) | sextet();
        } else {
            ++pos;
            need(6);
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | sextet();
        }
    }
    if (n > 100000) fail(0, "graph order too large");

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != bytes)
        fail(pos, "expected " + std::to_string(bytes) + " adjacency bytes, got " +
                      std::to_string(line.size() - pos));

    std::vector<std::pair<int, int>> edges;
    int acc = 0, avail = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                acc = sextet();
                avail = 6;
            }
            if ((acc >> (avail - 1)) & 1) edges.emplace_back(i, j);
            --avail;
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        try {
            out.push_back(from_graph6(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col") || n < 0 || m < 0)
                throw std::runtime_error("DIMACS parse error at line " + std::to_string(lineno) +
                                         ": malformed problem line");
        } else if (tag == 'e') {
            if (n < 0)
                throw std::runtime_error("DIMACS parse error at line " + std::to_string(lineno) +
                                         ": edge before problem line");
            int u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("DIMACS parse error at line " + std::to_string(lineno) +
                                         ": bad edge endpoints");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::runtime_error("DIMACS parse error at line " + std::to_string(lineno) +
                                     ": unknown line tag '" + std::string(1, tag) + "'");
        }
    }
    if (n < 0) throw std::runtime_error("DIMACS parse error: missing problem line");
    return Graph::from_edges(n, edges);
}

Graph read_edge_list(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list parse error: expected header \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw std::runtime_error("edge list parse error: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".g6")) {
        auto graphs = read_graph6_file(path);
        if (graphs.empty()) throw std::runtime_error(path + ": no graphs in file");
        return graphs.front();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (ends_with(".dimacs") || ends_with(".col")) return read_dimacs(in);
    return read_edge_list(in);
}

} // namespace limpack

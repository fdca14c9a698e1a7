#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limpack/bitset.hpp"

namespace limpack {

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Both open and closed adjacency rows are kept as packed bitsets because the
// solvers' hot loops are |candidate-set ∩ N[v]| popcounts.
class Graph {
public:
    Graph() = default;

    // Self-loops and out-of-range endpoints are rejected; duplicate edges are
    // accepted once.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return deg_[v]; }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    const Bitset& closed_neighbors(int v) const { return cadj_[v]; }
    std::vector<int> neighbor_list(int v) const { return adj_[v].to_vector(); }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Bitset> cadj_;
    std::vector<int> deg_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    long long edge_count = 0;
};

DegreeStats degree_stats(const Graph& g);

// A vertex set is a bitset whose universe must equal the order of the graph
// it is used with; the predicates check this binding.
using VertexSet = Bitset;

VertexSet make_vertex_set(const Graph& g, const std::vector<int>& vertices);

// Partition of 0..n-1 into classes 0..classes-1; class ids are dense and every
// class is non-empty.
struct VertexPartition {
    int classes = 0;
    std::vector<int> class_of;

    static VertexPartition from_class_of(std::vector<int> class_of);
    static VertexPartition from_classes(int n, const std::vector<std::vector<int>>& classes);

    int order() const { return static_cast<int>(class_of.size()); }
    // Classes in id order, each sorted ascending.
    std::vector<std::vector<int>> class_lists() const;
    std::vector<Bitset> class_sets() const;
};

// ---- operators --------------------------------------------------------------

Graph complement(const Graph& g);
// Square: join every pair at distance exactly 1 or 2.
Graph square(const Graph& g);
// Lexicographic product G∘H on |V(G)|·|V(H)| vertices; (g,h) is flattened
// row-major to g*|V(H)|+h. (g1,h1) ~ (g2,h2) iff g1~g2, or g1=g2 and h1~h2.
Graph lexicographic_product(const Graph& g, const Graph& h);
// Corona G⊙K1: one pendant per vertex; pendant of v is vertex n+v.
Graph corona_k1(const Graph& g);
// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

// ---- generators -------------------------------------------------------------

Graph path_graph(int n);                 // n >= 1
Graph cycle_graph(int n);                // n >= 3
Graph star_graph(int n);                 // n >= 1 total vertices, center 0
Graph complete_graph(int n);             // n >= 1
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph complete_minus_perfect_matching(int n);   // n even >= 2; drops {2i,2i+1}

// Uniform random labeled tree via a decoded Pruefer sequence. The random
// stream is pinned for reproducibility: entries are successive outputs of
// std::mt19937_64 seeded with `seed`, reduced modulo n.
Graph random_tree(int n, std::uint64_t seed);

} // namespace limpack

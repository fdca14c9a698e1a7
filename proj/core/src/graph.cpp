#include "limpack/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

namespace limpack {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("from_edges: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    g.cadj_.assign(n, Bitset(n));
    g.deg_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("from_edges: endpoint out of range");
        if (u == v)
            throw std::invalid_argument("from_edges: self-loop rejected");
        if (g.adj_[u].test(v)) continue;   // duplicate edge accepted once
        g.adj_[u].set(v);
        g.adj_[v].set(u);
        ++g.deg_[u];
        ++g.deg_[v];
        ++g.m_;
    }
    for (int v = 0; v < n; ++v) {
        g.cadj_[v] = g.adj_[v];
        g.cadj_[v].set(v);
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    Bitset seen(n_);
    std::vector<int> stack = {0};
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = adj_[u].find_first(); v != -1; v = adj_[u].find_next(v)) {
            if (!seen.test(v)) {
                seen.set(v);
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.edge_count = g.size();
    if (g.order() == 0) return s;
    s.min_degree = s.max_degree = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    return s;
}

VertexSet make_vertex_set(const Graph& g, const std::vector<int>& vertices) {
    VertexSet s(g.order());
    for (int v : vertices) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("make_vertex_set: vertex out of range");
        s.set(v);
    }
    return s;
}

VertexPartition VertexPartition::from_class_of(std::vector<int> class_of) {
    VertexPartition p;
    p.class_of = std::move(class_of);
    int maxc = -1;
    for (int c : p.class_of) {
        if (c < 0) throw std::invalid_argument("VertexPartition: negative class id");
        maxc = std::max(maxc, c);
    }
    p.classes = maxc + 1;
    std::vector<char> seen(p.classes, 0);
    for (int c : p.class_of) seen[c] = 1;
    for (int c = 0; c < p.classes; ++c)
        if (!seen[c]) throw std::invalid_argument("VertexPartition: class ids not dense");
    return p;
}

VertexPartition VertexPartition::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    std::vector<int> cls(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].empty())
            throw std::invalid_argument("VertexPartition: empty class");
        for (int v : classes[c]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("VertexPartition: vertex out of range");
            if (cls[v] != -1)
                throw std::invalid_argument("VertexPartition: vertex in two classes");
            cls[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v)
        if (cls[v] == -1)
            throw std::invalid_argument("VertexPartition: uncovered vertex");
    return from_class_of(std::move(cls));
}

std::vector<std::vector<int>> VertexPartition::class_lists() const {
    std::vector<std::vector<int>> out(classes);
    for (int v = 0; v < order(); ++v) out[class_of[v]].push_back(v);
    return out;
}

std::vector<Bitset> VertexPartition::class_sets() const {
    std::vector<Bitset> out(classes, Bitset(order()));
    for (int v = 0; v < order(); ++v) out[class_of[v]].set(v);
    return out;
}

// ---- operators --------------------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph square(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        // distance <= 2 from u: closed neighborhoods of u's neighbors
        Bitset reach = g.closed_neighbors(u);
        for (int w = g.neighbors(u).find_first(); w != -1; w = g.neighbors(u).find_next(w))
            reach |= g.neighbors(w);
        for (int v = reach.find_next(u); v != -1; v = reach.find_next(v))
            edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<std::pair<int, int>> edges;
    auto id = [nh](int a, int b) { return a * nh + b; };
    for (auto [u, v] : g.edge_list())
        for (int a = 0; a < nh; ++a)
            for (int b = 0; b < nh; ++b)
                edges.emplace_back(id(u, a), id(v, b));
    for (int u = 0; u < ng; ++u)
        for (auto [a, b] : h.edge_list())
            edges.emplace_back(id(u, a), id(u, b));
    return Graph::from_edges(ng * nh, edges);
}

Graph corona_k1(const Graph& g) {
    const int n = g.order();
    auto edges = g.edge_list();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    return Graph::from_edges(2 * n, edges);
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            // Any closed walk found from root r has length >= girth, and a BFS
            // started on a shortest cycle meets itself at exactly the girth, so
            // the minimum over all roots is exact.
            for (int v = g.neighbors(u).find_first(); v != -1; v = g.neighbors(u).find_next(v)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// ---- generators -------------------------------------------------------------

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite: part size >= 1 required");
        n += s;
    }
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_minus_perfect_matching(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("complete_minus_perfect_matching: need even n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    // Textbook decode: repeatedly join the smallest remaining leaf to the next
    // sequence entry. Quadratic, which is fine at the sizes used here.
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<char> removed(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && deg[v] == 1) { leaf = v; break; }
        edges.emplace_back(leaf, x);
        removed[leaf] = 1;
        --deg[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) (a == -1 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

} // namespace limpack

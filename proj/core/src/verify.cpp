#include "limpack/verify.hpp"

#include <stdexcept>

namespace limpack {

namespace {

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("predicate requires k >= 1");
}

void require_bound(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set not bound to this graph's vertex range");
}

void require_bound(const Graph& g, const VertexPartition& p) {
    if (p.order() != g.order())
        throw std::invalid_argument("partition not bound to this graph's vertex range");
}

} // namespace

CheckResult is_k_limited_packing(const Graph& g, const VertexSet& b, int k) {
    require_k(k);
    require_bound(g, b);
    for (int v = 0; v < g.order(); ++v) {
        int c = g.closed_neighbors(v).count_and(b);
        if (c > k)
            return CheckResult::fail(v, c, k, "closed neighborhood holds more than k members");
    }
    return CheckResult::pass();
}

CheckResult is_k_total_limited_packing(const Graph& g, const VertexSet& b, int k) {
    require_k(k);
    require_bound(g, b);
    for (int v = 0; v < g.order(); ++v) {
        int c = g.neighbors(v).count_and(b);
        if (c > k)
            return CheckResult::fail(v, c, k, "open neighborhood holds more than k members");
    }
    return CheckResult::pass();
}

CheckResult is_k_tuple_dominating(const Graph& g, const VertexSet& s, int k) {
    require_k(k);
    require_bound(g, s);
    if (g.order() > 0 && degree_stats(g).min_degree < k - 1)
        throw std::invalid_argument("k-tuple domination undefined: min degree below k-1");
    for (int v = 0; v < g.order(); ++v) {
        int c = g.closed_neighbors(v).count_and(s);
        if (c < k)
            return CheckResult::fail(v, c, k, "closed neighborhood holds fewer than k members");
    }
    return CheckResult::pass();
}

CheckResult is_packing(const Graph& g, const VertexSet& b) {
    require_bound(g, b);
    for (int u = b.find_first(); u != -1; u = b.find_next(u))
        for (int v = b.find_next(u); v != -1; v = b.find_next(v))
            if (g.closed_neighbors(u).intersects(g.closed_neighbors(v)))
                return CheckResult::fail(u, 2, 1, "closed neighborhood shared with vertex " +
                                                      std::to_string(v));
    return CheckResult::pass();
}

CheckResult is_open_packing(const Graph& g, const VertexSet& b) {
    require_bound(g, b);
    for (int u = b.find_first(); u != -1; u = b.find_next(u))
        for (int v = b.find_next(u); v != -1; v = b.find_next(v))
            if (g.neighbors(u).intersects(g.neighbors(v)))
                return CheckResult::fail(u, 2, 1, "open neighborhood shared with vertex " +
                                                      std::to_string(v));
    return CheckResult::pass();
}

CheckResult is_klp_partition(const Graph& g, const VertexPartition& p, int k) {
    require_k(k);
    require_bound(g, p);
    auto classes = p.class_sets();
    for (int v = 0; v < g.order(); ++v)
        for (int c = 0; c < p.classes; ++c) {
            int cnt = g.closed_neighbors(v).count_and(classes[c]);
            if (cnt > k)
                return CheckResult::fail(v, cnt, k,
                                         "class " + std::to_string(c) + " exceeds k in N[v]");
        }
    return CheckResult::pass();
}

CheckResult is_ktd_partition(const Graph& g, const VertexPartition& p, int k) {
    require_k(k);
    require_bound(g, p);
    if (g.order() > 0 && degree_stats(g).min_degree < k - 1)
        throw std::invalid_argument("k-tuple domination undefined: min degree below k-1");
    auto classes = p.class_sets();
    for (int v = 0; v < g.order(); ++v)
        for (int c = 0; c < p.classes; ++c) {
            int cnt = g.closed_neighbors(v).count_and(classes[c]);
            if (cnt < k)
                return CheckResult::fail(v, cnt, k,
                                         "class " + std::to_string(c) + " misses k in N[v]");
        }
    return CheckResult::pass();
}

CheckResult is_2distance_coloring(const Graph& g, const VertexPartition& p) {
    require_bound(g, p);
    Graph sq = square(g);
    for (int v = 0; v < g.order(); ++v)
        for (int u = sq.neighbors(v).find_next(v); u != -1; u = sq.neighbors(v).find_next(u))
            if (p.class_of[u] == p.class_of[v])
                return CheckResult::fail(v, 2, 1,
                                         "vertices " + std::to_string(v) + " and " +
                                             std::to_string(u) +
                                             " share a class at distance <= 2");
    return CheckResult::pass();
}

} // namespace limpack

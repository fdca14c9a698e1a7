#include "oracles.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

using limpack::Graph;

namespace oracle {

namespace {

// per-vertex closed/open neighborhoods as plain masks
std::vector<std::uint32_t> closed_masks(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle masks capped at 20 vertices");
    std::vector<std::uint32_t> m(n, 0);
    for (int v = 0; v < n; ++v) {
        m[v] = std::uint32_t(1) << v;
        for (int w : g.neighbor_list(v)) m[v] |= std::uint32_t(1) << w;
    }
    return m;
}

std::vector<std::uint32_t> open_masks(const Graph& g) {
    auto m = closed_masks(g);
    for (int v = 0; v < g.order(); ++v) m[v] &= ~(std::uint32_t(1) << v);
    return m;
}

int best_subset(const Graph& g, const std::vector<std::uint32_t>& nbhd, int k, bool maximize,
                bool at_least) {
    const int n = g.order();
    const std::uint32_t total = n >= 32 ? 0 : (std::uint32_t(1) << n);
    int best = maximize ? -1 : n + 1;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const int c = std::popcount(mask & nbhd[v]);
            ok = at_least ? c >= k : c <= k;
        }
        if (!ok) continue;
        const int size = std::popcount(mask);
        best = maximize ? std::max(best, size) : std::min(best, size);
    }
    return best;
}

// enumerate set partitions as restricted-growth strings; the callback gets
// the class-of vector and the class count, and returns false to keep going
void each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit) {
    std::vector<int> a(n, 0);
    const std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == n) return visit(a, used);
        for (int c = 0; c <= used && c < n; ++c) {
            a[i] = c;
            if (rec(i + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    if (n == 0) return;
    rec(0, 0);
}

bool partition_is_klp(const Graph& g, const std::vector<int>& a, int classes, int k) {
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> cnt(classes, 0);
        ++cnt[a[v]];
        for (int w : g.neighbor_list(v)) ++cnt[a[w]];
        for (int c = 0; c < classes; ++c)
            if (cnt[c] > k) return false;
    }
    return true;
}

bool partition_is_ktd(const Graph& g, const std::vector<int>& a, int classes, int k) {
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> cnt(classes, 0);
        ++cnt[a[v]];
        for (int w : g.neighbor_list(v)) ++cnt[a[w]];
        for (int c = 0; c < classes; ++c)
            if (cnt[c] < k) return false;
    }
    return true;
}

}  // namespace

int l_k(const Graph& g, int k) { return best_subset(g, closed_masks(g), k, true, false); }
int l_kt(const Graph& g, int k) { return best_subset(g, open_masks(g), k, true, false); }

int rho(const Graph& g) {
    // pairwise-disjoint closed neighborhoods, straight from the definition
    const auto cm = closed_masks(g);
    const int n = g.order();
    const std::uint32_t total = n >= 32 ? 0 : (std::uint32_t(1) << n);
    int best = 0;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(mask >> u & 1u)) continue;
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> v & 1u) && (cm[u] & cm[v])) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

int rho_o(const Graph& g) {
    const auto om = open_masks(g);
    const int n = g.order();
    const std::uint32_t total = n >= 32 ? 0 : (std::uint32_t(1) << n);
    int best = 0;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(mask >> u & 1u)) continue;
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> v & 1u) && (om[u] & om[v])) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

int gamma_xk(const Graph& g, int k) { return best_subset(g, closed_masks(g), k, false, true); }

int chi_xk(const Graph& g, int k) {
    int best = g.order() + 1;
    each_partition(g.order(), [&](const std::vector<int>& a, int classes) {
        if (classes < best && partition_is_klp(g, a, classes, k)) best = classes;
        return false;
    });
    return g.order() == 0 ? 0 : best;
}

int d_xk(const Graph& g, int k) {
    int best = 0;
    each_partition(g.order(), [&](const std::vector<int>& a, int classes) {
        if (classes > best && partition_is_ktd(g, a, classes, k)) best = classes;
        return false;
    });
    return best;
}

int chi2(const Graph& g) {
    const Graph sq = oracle::square(g);  // the oracle's own route, not the library's
    int best = g.order() + 1;
    each_partition(g.order(), [&](const std::vector<int>& a, int classes) {
        if (classes >= best) return false;
        for (auto [u, v] : sq.edge_list())
            if (a[u] == a[v]) return false;
        best = classes;
        return false;
    });
    return g.order() == 0 ? 0 : best;
}

std::optional<int> girth(const Graph& g) {
    // shortest cycle through each edge: drop the edge, BFS between its ends
    const int n = g.order();
    int best = -1;
    for (auto [u, v] : g.edge_list()) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int y : g.neighbor_list(x)) {
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

Graph square(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            if (dist[x] >= 2) continue;
            for (int y : g.neighbor_list(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
        }
        for (int t = s + 1; t < n; ++t)
            if (dist[t] == 1 || dist[t] == 2) edges.push_back({s, t});
    }
    return Graph::from_edges(n, edges);
}

long long partition_count(int n) {
    long long count = 0;
    each_partition(n, [&](const std::vector<int>&, int) {
        ++count;
        return false;
    });
    return count;
}

}  // namespace oracle

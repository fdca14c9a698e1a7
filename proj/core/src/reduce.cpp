#include "limpack/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "limpack/verify.hpp"

namespace limpack {

ReductionInstance reduce_op_to_2tlp(const Graph& g) {
    ReductionInstance inst;
    inst.source = g;
    inst.target = corona_k1(g);
    inst.threshold_offset = g.order();
    return inst;
}

ReductionCheck check_reduction_identity(const Graph& g, const SolveOptions& opts) {
    ReductionInstance inst = reduce_op_to_2tlp(g);
    ReductionCheck out;
    out.open_packing = rho_o(g, opts);
    out.total_packing = l_kt(inst.target, 2, opts);
    out.incomplete = !out.open_packing.exact() || !out.total_packing.exact();
    out.ok = !out.incomplete &&
             out.total_packing.value == out.open_packing.value + g.order();
    return out;
}

VertexSet lift_certificate(const Graph& g, const VertexSet& b) {
    CheckResult pre = is_open_packing(g, b);
    if (!pre)
        throw std::invalid_argument("set is not an open packing: " + pre.violation->detail);
    Graph target = corona_k1(g);
    int n = g.order();
    VertexSet lifted(2 * n);
    for (int v = b.find_first(); v != -1; v = b.find_next(v)) lifted.set(v);
    for (int v = n; v < 2 * n; ++v) lifted.set(v);
    if (!is_k_total_limited_packing(target, lifted, 2))
        throw std::logic_error("lifted certificate failed verification");
    return lifted;
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            const Bitset& nb = g.neighbors(u);
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    // maximum cardinality search; its reverse is a perfect elimination
    // ordering exactly for chordal graphs
    std::vector<int> weight(n, 0), order;
    std::vector<char> numbered(n, 0);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = 1;
        order.push_back(pick);
        const Bitset& nb = g.neighbors(pick);
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
            if (!numbered[w]) ++weight[w];
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // eliminate in reverse MCS order: each vertex's earlier-ordered (in MCS)
    // neighbors must form a clique around the latest of them
    for (int u = 0; u < n; ++u) {
        const Bitset& nb = g.neighbors(u);
        int anchor = -1;
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
            if (pos[w] < pos[u] && (anchor == -1 || pos[w] > pos[anchor])) anchor = w;
        if (anchor == -1) continue;
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
            if (w == anchor || pos[w] >= pos[u]) continue;
            if (!g.adjacent(anchor, w)) return false;
        }
    }
    return true;
}

} // namespace limpack

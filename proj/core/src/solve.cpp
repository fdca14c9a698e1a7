#include "limpack/solve.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace limpack {

namespace {

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("solver requires k >= 1");
}

// Fixed branching order shared by the subset solvers: descending degree,
// ties by index.  High-degree vertices constrain the most counters, so
// deciding them first tightens the bounds early.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> ord(g.order());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return ord;
}

std::vector<int> set_from_flags(const std::vector<char>& flags) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(flags.size()); ++v)
        if (flags[v]) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Maximum subset B with |nbhd(v) cap B| <= k for every v.  Handles both the
// closed-neighborhood and the open-neighborhood ("total") variants.
// ---------------------------------------------------------------------------

struct SubsetMaxSolver {
    const Graph& g;
    int k;
    bool closed;
    long long budget;
    int n;
    std::vector<int> order;
    std::vector<int> cnt;      // cnt[v] = |nbhd(v) cap chosen|
    std::vector<char> in_set;
    int chosen_size = 0;
    int best = 0;
    std::vector<char> best_set;
    long long nodes = 0;
    bool aborted = false;
    int abort_ub = 0;

    SubsetMaxSolver(const Graph& g_, int k_, bool closed_, long long budget_)
        : g(g_), k(k_), closed(closed_), budget(budget_), n(g_.order()),
          order(degree_order(g_)), cnt(n, 0), in_set(n, 0), best_set(n, 0) {}

    const Bitset& nbhd(int v) const {
        return closed ? g.closed_neighbors(v) : g.neighbors(v);
    }
    int consume(int v) const { return closed ? g.degree(v) + 1 : g.degree(v); }

    bool includable(int u) const {
        const Bitset& nb = nbhd(u);
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
            if (cnt[w] >= k) return false;
        return true;
    }

    // Two admissible bounds on what this subtree can still reach:
    //  - count the undecided vertices that are individually still placeable;
    //  - total remaining counter slack divided by the cheapest footprint a
    //    further pick must pay (its own neighborhood size).
    int node_ub(int i) const {
        int addable = 0, free_adds = 0, min_consume = INT_MAX;
        for (int j = i; j < n; ++j) {
            int u = order[j];
            if (!includable(u)) continue;
            ++addable;
            int c = consume(u);
            if (c == 0)
                ++free_adds;
            else
                min_consume = std::min(min_consume, c);
        }
        int ub1 = chosen_size + addable;
        long long slack = 0;
        for (int v = 0; v < n; ++v) slack += k - cnt[v];
        int ub2 = chosen_size + free_adds;
        if (min_consume != INT_MAX)
            ub2 += static_cast<int>(slack / min_consume);
        return std::min(ub1, ub2);
    }

    void dfs(int i) {
        ++nodes;
        if (budget > 0 && nodes > budget) {
            aborted = true;
            abort_ub = std::max(abort_ub, node_ub(i));
            return;
        }
        // The chosen set is kept feasible at all times, so it is always a
        // valid incumbent.
        if (chosen_size > best) {
            best = chosen_size;
            best_set = in_set;
        }
        if (i == n) return;
        int ub = node_ub(i);
        if (ub <= best) return;
        int u = order[i];
        if (includable(u)) {
            in_set[u] = 1;
            ++chosen_size;
            const Bitset& nb = nbhd(u);
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) ++cnt[w];
            dfs(i + 1);
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) --cnt[w];
            --chosen_size;
            in_set[u] = 0;
            if (aborted) {
                // The unexplored exclude branch cannot beat this node's bound.
                abort_ub = std::max(abort_ub, ub);
                return;
            }
            if (ub <= best) return;
        }
        dfs(i + 1);
    }

    InvariantResult run(const std::string& name) {
        dfs(0);
        InvariantResult r;
        r.invariant = name;
        r.k = k;
        r.nodes_explored = nodes;
        r.lower = best;
        r.upper = aborted ? std::max(best, abort_ub) : best;
        r.set_certificate = set_from_flags(best_set);
        if (r.lower == r.upper) {
            r.status = SolveStatus::Exact;
            r.value = best;
        } else {
            r.status = SolveStatus::Incomplete;
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// Minimum S with |N[v] cap S| >= k for every v, by staged feasibility
// search: try |S| = t for t = LB, LB+1, ... until one succeeds.  A greedy
// solution computed up front caps the stage range, so the loop always
// terminates even under a budget.
// ---------------------------------------------------------------------------

struct TupleDomStage {
    const Graph& g;
    int k, n, maxdeg, target;
    long long budget;
    long long& nodes;
    std::vector<int> cnt;   // |N[w] cap S|
    std::vector<int> und;   // undecided vertices left in N[w]
    long long deficiency;   // sum over w of max(0, k - cnt[w])
    std::vector<char> in_set;
    int chosen = 0;
    bool found = false;
    bool aborted = false;
    std::vector<int> solution;

    TupleDomStage(const Graph& g_, int k_, int target_, long long budget_, long long& nodes_)
        : g(g_), k(k_), n(g_.order()), maxdeg(degree_stats(g_).max_degree),
          target(target_), budget(budget_), nodes(nodes_), cnt(n, 0), und(n),
          deficiency(static_cast<long long>(k_) * g_.order()), in_set(n, 0) {
        for (int v = 0; v < n; ++v) und[v] = g.degree(v) + 1;
    }

    void dfs(int v) {
        ++nodes;
        if (budget > 0 && nodes > budget) {
            aborted = true;
            return;
        }
        if (deficiency == 0) {
            found = true;
            solution = set_from_flags(in_set);
            return;
        }
        if (v == n) return;
        // Each further pick can fix at most maxdeg+1 missing slots.
        long long need = (deficiency + maxdeg) / (maxdeg + 1);
        if (chosen + need > target) return;

        const Bitset& nb = g.closed_neighbors(v);
        // Include v, but only when it still repairs something: a pick whose
        // whole neighborhood is already saturated can be dropped from any
        // solution, and the smaller set is found on the exclude side.
        bool useful = false;
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
            if (cnt[w] < k) { useful = true; break; }
        if (useful && chosen < target) {
            in_set[v] = 1;
            ++chosen;
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
                if (cnt[w] < k) --deficiency;
                ++cnt[w];
                --und[w];
            }
            dfs(v + 1);
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
                ++und[w];
                --cnt[w];
                if (cnt[w] < k) ++deficiency;
            }
            --chosen;
            in_set[v] = 0;
            if (found || aborted) return;
        }
        // Exclude v: fail fast when some neighborhood can no longer reach k.
        bool dead = false;
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
            --und[w];
            if (cnt[w] + und[w] < k) dead = true;
        }
        if (!dead) dfs(v + 1);
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) ++und[w];
    }
};

// Deterministic greedy: repeatedly add the vertex repairing the most still
// unsaturated neighborhoods, ties to the lowest index.
std::vector<int> greedy_tuple_dom(const Graph& g, int k) {
    int n = g.order();
    std::vector<int> cnt(n, 0);
    std::vector<char> in_set(n, 0);
    long long deficiency = static_cast<long long>(k) * n;
    while (deficiency > 0) {
        int pick = -1, pick_gain = 0;
        for (int v = 0; v < n; ++v) {
            if (in_set[v]) continue;
            int gain = 0;
            const Bitset& nb = g.closed_neighbors(v);
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
                if (cnt[w] < k) ++gain;
            if (gain > pick_gain) {
                pick_gain = gain;
                pick = v;
            }
        }
        // min degree >= k-1 guarantees progress here
        in_set[pick] = 1;
        const Bitset& nb = g.closed_neighbors(pick);
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
            if (cnt[w] < k) --deficiency;
            ++cnt[w];
        }
    }
    return set_from_flags(in_set);
}

// ---------------------------------------------------------------------------
// Partition searches.  Classes are interchangeable, so the DFS only builds
// canonical assignments: vertex v may join an already used class or open the
// next fresh one.  First-fit over class ids keeps certificates deterministic.
// ---------------------------------------------------------------------------

// Stage for the minimum-classes problems: can V be split into at most p
// classes, each with |N[w] cap class| <= k for every w?
struct KlpPartitionStage {
    const Graph& g;
    int k, p, n;
    long long budget;
    long long& nodes;
    std::vector<int> assign;
    std::vector<std::vector<int>> cnt;  // cnt[w][c]
    bool found = false;
    bool aborted = false;
    std::vector<int> solution;

    KlpPartitionStage(const Graph& g_, int k_, int p_, long long budget_, long long& nodes_)
        : g(g_), k(k_), p(p_), n(g_.order()), budget(budget_), nodes(nodes_),
          assign(n, -1), cnt(n, std::vector<int>(p_, 0)) {}

    void dfs(int v, int used) {
        ++nodes;
        if (budget > 0 && nodes > budget) {
            aborted = true;
            return;
        }
        if (v == n) {
            found = true;
            solution = assign;
            return;
        }
        int cap = std::min(used, p - 1);
        const Bitset& nb = g.closed_neighbors(v);
        for (int c = 0; c <= cap; ++c) {
            bool ok = true;
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
                if (cnt[w][c] >= k) { ok = false; break; }
            if (!ok) continue;
            assign[v] = c;
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) ++cnt[w][c];
            dfs(v + 1, std::max(used, c + 1));
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) --cnt[w][c];
            assign[v] = -1;
            if (found || aborted) return;
        }
    }
};

// First-fit with unlimited classes; a fresh class always accepts, so this
// terminates and its class count is an upper bound.
std::vector<int> greedy_klp_partition(const Graph& g, int k, int& classes_used) {
    int n = g.order();
    std::vector<int> assign(n, -1);
    std::vector<std::vector<int>> cnt(n);
    classes_used = 0;
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.closed_neighbors(v);
        int c = 0;
        for (;; ++c) {
            if (c == classes_used) {
                ++classes_used;
                for (int w = 0; w < n; ++w) cnt[w].push_back(0);
            }
            bool ok = true;
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w))
                if (cnt[w][c] >= k) { ok = false; break; }
            if (ok) break;
        }
        assign[v] = c;
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) ++cnt[w][c];
    }
    return assign;
}

// Stage for the maximum-classes problem: can V be split into exactly t
// classes, each with |N[w] cap class| >= k for every w?
struct KtdPartitionStage {
    const Graph& g;
    int k, t, n;
    long long budget;
    long long& nodes;
    std::vector<int> assign;
    std::vector<std::vector<int>> cnt;  // cnt[w][c]
    std::vector<int> demand;            // per w: sum over c of max(0, k - cnt[w][c])
    std::vector<int> und;               // undecided vertices left in N[w]
    long long total_demand;
    bool found = false;
    bool aborted = false;
    std::vector<int> solution;

    KtdPartitionStage(const Graph& g_, int k_, int t_, long long budget_, long long& nodes_)
        : g(g_), k(k_), t(t_), n(g_.order()), budget(budget_), nodes(nodes_),
          assign(n, -1), cnt(n, std::vector<int>(t_, 0)), demand(n, k_ * t_), und(n),
          total_demand(static_cast<long long>(k_) * t_ * g_.order()) {
        for (int v = 0; v < n; ++v) und[v] = g.degree(v) + 1;
    }

    void dfs(int v, int used) {
        ++nodes;
        if (budget > 0 && nodes > budget) {
            aborted = true;
            return;
        }
        if (v == n) {
            if (used == t && total_demand == 0) {
                found = true;
                solution = assign;
            }
            return;
        }
        if (t - used > n - v) return;  // not enough vertices left to open every class
        int cap = std::min(used, t - 1);
        const Bitset& nb = g.closed_neighbors(v);
        for (int c = 0; c <= cap; ++c) {
            assign[v] = c;
            bool dead = false;
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
                --und[w];
                if (cnt[w][c] < k) {
                    --demand[w];
                    --total_demand;
                }
                ++cnt[w][c];
                if (demand[w] > und[w]) dead = true;  // w cannot be saturated any more
            }
            if (!dead) dfs(v + 1, std::max(used, c + 1));
            for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
                --cnt[w][c];
                if (cnt[w][c] < k) {
                    ++demand[w];
                    ++total_demand;
                }
                ++und[w];
            }
            assign[v] = -1;
            if (found || aborted) return;
        }
    }
};

// Generic proper-coloring machinery reused for the distance-2 chromatic
// number (as a plain coloring of the square).
struct ColoringStage {
    const Graph& g;
    int p, n;
    long long budget;
    long long& nodes;
    std::vector<int> assign;
    bool found = false;
    bool aborted = false;
    std::vector<int> solution;

    ColoringStage(const Graph& g_, int p_, long long budget_, long long& nodes_)
        : g(g_), p(p_), n(g_.order()), budget(budget_), nodes(nodes_), assign(n, -1) {}

    void dfs(int v, int used) {
        ++nodes;
        if (budget > 0 && nodes > budget) {
            aborted = true;
            return;
        }
        if (v == n) {
            found = true;
            solution = assign;
            return;
        }
        int cap = std::min(used, p - 1);
        const Bitset& nb = g.neighbors(v);
        for (int c = 0; c <= cap; ++c) {
            bool ok = true;
            for (int w = nb.find_first(); w != -1 && w < v; w = nb.find_next(w))
                if (assign[w] == c) { ok = false; break; }
            if (!ok) continue;
            assign[v] = c;
            dfs(v + 1, std::max(used, c + 1));
            assign[v] = -1;
            if (found || aborted) return;
        }
    }
};

std::vector<int> greedy_coloring(const Graph& g, int& classes_used) {
    int n = g.order();
    std::vector<int> assign(n, -1);
    classes_used = 0;
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.neighbors(v);
        std::vector<char> taken(classes_used + 1, 0);
        for (int w = nb.find_first(); w != -1 && w < v; w = nb.find_next(w))
            taken[assign[w]] = 1;
        int c = 0;
        while (c < classes_used && taken[c]) ++c;
        if (c == classes_used) ++classes_used;
        assign[v] = c;
    }
    return assign;
}

// Greedy clique, used only as an admissible lower bound for coloring.
int greedy_clique(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    std::vector<int> ord = degree_order(g);
    Bitset common(n);
    for (int v = 0; v < n; ++v) common.set(v);
    int size = 0;
    for (int v : ord) {
        if (!common.test(v)) continue;
        ++size;
        common &= g.neighbors(v);
    }
    return size;
}

InvariantResult trivial_empty(const std::string& name, int k) {
    InvariantResult r;
    r.invariant = name;
    r.k = k;
    r.status = SolveStatus::Exact;
    r.value = r.lower = r.upper = 0;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------

InvariantResult l_k(const Graph& g, int k, const SolveOptions& opts) {
    require_k(k);
    SubsetMaxSolver s(g, k, /*closed=*/true, opts.node_budget);
    return s.run("lk");
}

InvariantResult l_kt(const Graph& g, int k, const SolveOptions& opts) {
    require_k(k);
    SubsetMaxSolver s(g, k, /*closed=*/false, opts.node_budget);
    return s.run("lkt");
}

InvariantResult rho(const Graph& g, const SolveOptions& opts) {
    SubsetMaxSolver s(g, 1, /*closed=*/true, opts.node_budget);
    InvariantResult r = s.run("rho");
    r.k = 1;
    return r;
}

InvariantResult rho_o(const Graph& g, const SolveOptions& opts) {
    SubsetMaxSolver s(g, 1, /*closed=*/false, opts.node_budget);
    InvariantResult r = s.run("rho_o");
    r.k = 1;
    return r;
}

namespace {

int packing_bruteforce(const Graph& g, bool closed) {
    int n = g.order();
    if (n > 20) throw std::invalid_argument("pairwise brute force limited to 20 vertices");
    std::vector<std::uint32_t> nb(n, 0);
    for (int v = 0; v < n; ++v) {
        const Bitset& row = closed ? g.closed_neighbors(v) : g.neighbors(v);
        for (int w = row.find_first(); w != -1; w = row.find_next(w))
            nb[v] |= std::uint32_t{1} << w;
    }
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint32_t seen = 0;
        int size = 0;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            // pairwise disjoint == each neighborhood disjoint from the union
            // of the earlier ones
            if (seen & nb[v]) ok = false;
            seen |= nb[v];
            ++size;
        }
        if (ok && size > best) best = size;
    }
    return best;
}

} // namespace

int rho_pairwise_bruteforce(const Graph& g) { return packing_bruteforce(g, true); }
int rho_o_pairwise_bruteforce(const Graph& g) { return packing_bruteforce(g, false); }

InvariantResult gamma_xk(const Graph& g, int k, const SolveOptions& opts) {
    require_k(k);
    int n = g.order();
    if (n == 0) return trivial_empty("gamma_xk", k);
    InvariantResult r;
    r.invariant = "gamma_xk";
    r.k = k;
    if (degree_stats(g).min_degree < k - 1) {
        r.status = SolveStatus::Undefined;
        return r;
    }
    std::vector<int> greedy = greedy_tuple_dom(g, k);
    int ub = static_cast<int>(greedy.size());
    int maxdeg = degree_stats(g).max_degree;
    long long lb_ll = std::max<long long>(
        k, (static_cast<long long>(k) * n + maxdeg) / (maxdeg + 1));
    int lb = static_cast<int>(lb_ll);

    long long nodes = 0;
    for (int t = lb; t < ub; ++t) {
        TupleDomStage stage(g, k, t, opts.node_budget, nodes);
        stage.dfs(0);
        if (stage.found) {
            r.status = SolveStatus::Exact;
            r.value = r.lower = r.upper = t;
            r.set_certificate = stage.solution;
            r.nodes_explored = nodes;
            return r;
        }
        if (stage.aborted) {
            r.status = SolveStatus::Incomplete;
            r.lower = t;
            r.upper = ub;
            r.set_certificate = greedy;
            r.nodes_explored = nodes;
            return r;
        }
    }
    r.status = SolveStatus::Exact;
    r.value = r.lower = r.upper = ub;
    r.set_certificate = greedy;
    r.nodes_explored = nodes;
    return r;
}

InvariantResult chi_xk(const Graph& g, int k, const SolveOptions& opts) {
    require_k(k);
    int n = g.order();
    if (n == 0) {
        InvariantResult r = trivial_empty("chi_xk", k);
        r.partition_certificate = VertexPartition{};
        return r;
    }
    int greedy_classes = 0;
    std::vector<int> greedy = greedy_klp_partition(g, k, greedy_classes);
    int maxdeg = degree_stats(g).max_degree;
    int lb = (maxdeg + 1 + k - 1) / k;  // each class meets N[v] at most k times

    InvariantResult r;
    r.invariant = "chi_xk";
    r.k = k;
    long long nodes = 0;
    for (int p = lb; p < greedy_classes; ++p) {
        KlpPartitionStage stage(g, k, p, opts.node_budget, nodes);
        stage.dfs(0, 0);
        if (stage.found) {
            r.status = SolveStatus::Exact;
            r.value = r.lower = r.upper = p;
            r.partition_certificate = VertexPartition::from_class_of(stage.solution);
            r.nodes_explored = nodes;
            return r;
        }
        if (stage.aborted) {
            r.status = SolveStatus::Incomplete;
            r.lower = p;
            r.upper = greedy_classes;
            r.partition_certificate = VertexPartition::from_class_of(greedy);
            r.nodes_explored = nodes;
            return r;
        }
    }
    r.status = SolveStatus::Exact;
    r.value = r.lower = r.upper = greedy_classes;
    r.partition_certificate = VertexPartition::from_class_of(greedy);
    r.nodes_explored = nodes;
    return r;
}

InvariantResult d_xk(const Graph& g, int k, const SolveOptions& opts) {
    require_k(k);
    InvariantResult r;
    r.invariant = "d_xk";
    r.k = k;
    int n = g.order();
    if (n == 0 || degree_stats(g).min_degree < k - 1) {
        r.status = SolveStatus::Undefined;
        return r;
    }
    int mindeg = degree_stats(g).min_degree;
    int ub = (mindeg + 1) / k;  // t classes each need k slots inside N[v]
    long long nodes = 0;
    // Feasibility is monotone downward (merging two classes keeps both
    // constraints), so the first t that works, scanning downward, is the
    // maximum.  t = 1 needs no search: V itself qualifies since every
    // closed neighborhood has at least k vertices.
    for (int t = ub; t >= 2; --t) {
        KtdPartitionStage stage(g, k, t, opts.node_budget, nodes);
        stage.dfs(0, 0);
        if (stage.found) {
            r.status = SolveStatus::Exact;
            r.value = r.lower = r.upper = t;
            r.partition_certificate = VertexPartition::from_class_of(stage.solution);
            r.nodes_explored = nodes;
            return r;
        }
        if (stage.aborted) {
            r.status = SolveStatus::Incomplete;
            r.lower = 1;
            r.upper = t;
            r.partition_certificate = VertexPartition::from_class_of(std::vector<int>(n, 0));
            r.nodes_explored = nodes;
            return r;
        }
    }
    r.status = SolveStatus::Exact;
    r.value = r.lower = r.upper = 1;
    r.partition_certificate = VertexPartition::from_class_of(std::vector<int>(n, 0));
    r.nodes_explored = nodes;
    return r;
}

InvariantResult chi2_distance(const Graph& g, const SolveOptions& opts) {
    InvariantResult r;
    r.invariant = "chi2";
    r.k = 0;
    int n = g.order();
    if (n == 0) {
        r.status = SolveStatus::Exact;
        r.value = r.lower = r.upper = 0;
        r.partition_certificate = VertexPartition{};
        return r;
    }
    Graph sq = square(g);
    int greedy_classes = 0;
    std::vector<int> greedy = greedy_coloring(sq, greedy_classes);
    int lb = greedy_clique(sq);

    long long nodes = 0;
    for (int p = lb; p < greedy_classes; ++p) {
        ColoringStage stage(sq, p, opts.node_budget, nodes);
        stage.dfs(0, 0);
        if (stage.found) {
            r.status = SolveStatus::Exact;
            r.value = r.lower = r.upper = p;
            r.partition_certificate = VertexPartition::from_class_of(stage.solution);
            r.nodes_explored = nodes;
            return r;
        }
        if (stage.aborted) {
            r.status = SolveStatus::Incomplete;
            r.lower = p;
            r.upper = greedy_classes;
            r.partition_certificate = VertexPartition::from_class_of(greedy);
            r.nodes_explored = nodes;
            return r;
        }
    }
    r.status = SolveStatus::Exact;
    r.value = r.lower = r.upper = greedy_classes;
    r.partition_certificate = VertexPartition::from_class_of(greedy);
    r.nodes_explored = nodes;
    return r;
}

} // namespace limpack

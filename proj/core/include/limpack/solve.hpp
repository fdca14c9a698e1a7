#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

// ---------------------------------------------------------------------------
// Exact solvers with certificates.
//
// Every solver is deterministic: same graph, same options -> same result,
// bit for bit, including certificates.  Search explores a fixed vertex
// order with include-first (or lowest-class-first) branching, so the
// certificate reported is the first optimum that order encounters.
// ---------------------------------------------------------------------------

enum class SolveStatus {
    Exact,        // value is the invariant, certificate attached
    Incomplete,   // node budget hit; only [lower, upper] is guaranteed
    Undefined,    // invariant does not exist for this graph/k
};

struct SolveOptions {
    // Search nodes allowed before giving up.  0 means no limit.  Budgets are
    // counted in nodes, not wall time, so runs are reproducible.
    long long node_budget = 0;
};

struct InvariantResult {
    std::string invariant;  // "lk", "lkt", "rho", "rho_o", "gamma_xk", "chi_xk", "d_xk", "chi2"
    int k = 0;              // 0 when the invariant takes no k
    SolveStatus status = SolveStatus::Exact;
    int value = -1;         // meaningful only when status == Exact
    int lower = -1;         // valid bracket in every non-Undefined status
    int upper = -1;
    std::optional<std::vector<int>> set_certificate;        // sorted vertex list
    std::optional<VertexPartition> partition_certificate;
    long long nodes_explored = 0;

    bool exact() const { return status == SolveStatus::Exact; }
};

// Largest B with |N[v] cap B| <= k for all v (k-limited packing number).
InvariantResult l_k(const Graph& g, int k, const SolveOptions& opts = {});

// Open-neighborhood variant: |N(v) cap B| <= k for all v.
InvariantResult l_kt(const Graph& g, int k, const SolveOptions& opts = {});

// Packing number / open packing number.  These are the k = 1 cases of the
// two solvers above and are implemented that way; tests confirm against the
// pairwise brute forces below, which never touch the branch-and-bound code.
InvariantResult rho(const Graph& g, const SolveOptions& opts = {});
InvariantResult rho_o(const Graph& g, const SolveOptions& opts = {});

// Independent cross-check routes: enumerate all subsets and test that closed
// (resp. open) neighborhoods of members are pairwise disjoint.  Exponential;
// refuses graphs with more than 20 vertices.
int rho_pairwise_bruteforce(const Graph& g);
int rho_o_pairwise_bruteforce(const Graph& g);

// Smallest S with |N[v] cap S| >= k for all v (k-tuple domination number).
// Undefined when some vertex has degree < k - 1.
InvariantResult gamma_xk(const Graph& g, int k, const SolveOptions& opts = {});

// Fewest classes in a partition of V where every class is a k-limited
// packing.
InvariantResult chi_xk(const Graph& g, int k, const SolveOptions& opts = {});

// Most classes in a partition of V where every class is k-tuple dominating.
// Undefined when some vertex has degree < k - 1.
InvariantResult d_xk(const Graph& g, int k, const SolveOptions& opts = {});

// Chromatic number of the square: colors vertices so that any two at
// distance <= 2 differ.
InvariantResult chi2_distance(const Graph& g, const SolveOptions& opts = {});

} // namespace limpack

#pragma once
// ======================================================================
// harness.hpp -- sweep graph streams and assert the library's claims
//
// Each registered check (T1..T15) evaluates one inequality, formula or
// characterization per graph.  Streams come from the built-in labeled
// enumeration (n <= 6), the free-tree enumerator, seeded random
// generators, or external graph6 files loaded by the caller.
//
// Reporting contract:
//   * a graph failing the check's applicability filter is counted in
//     graphs_skipped and never evaluated;
//   * a graph whose solve hits the node budget lands in `incomplete`
//     (identified by graph6) and is neither a pass nor a failure;
//   * graphs_tested counts fully evaluated graphs (passes + failures).
// Reports are byte-for-byte reproducible for a fixed stream: failures
// and incomplete entries keep input order, and runtime_seconds is
// informational only -- report_to_jsonl never serializes it.
// ======================================================================

#include <string>
#include <vector>

#include "limpack/graph.hpp"
#include "limpack/solve.hpp"

namespace limpack {

struct TheoremCheck {
    std::string id;           // "T1" .. "T15"
    std::string name;         // short slug, e.g. "duality-chain"
    std::string description;  // what the predicate asserts
};

// All registered checks in id order.
const std::vector<TheoremCheck>& theorem_registry();

struct CheckFailure {
    std::string graph6;
    std::string detail;  // observed values in human-readable form
};

struct TheoremReport {
    std::string id;
    long long graphs_tested = 0;
    long long graphs_skipped = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> incomplete;  // graph6 of budget-hit graphs
    double runtime_seconds = 0.0;         // wall time; never serialized

    bool passed() const { return failures.empty(); }
};

struct HarnessOptions {
    long long node_budget = 0;  // per solver call; 0 = unlimited
    int threads = 0;            // worker threads; 0 = hardware default
};

// Evaluates one registered check over a graph stream.  Work is shared
// across threads graph-by-graph; aggregation is single-threaded and
// ordered by input index, so results do not depend on thread count.
// Throws std::invalid_argument for an unknown id.
TheoremReport run_check(const std::string& check_id,
                        const std::vector<Graph>& graphs,
                        const HarnessOptions& opts = {});

// All 2^(n(n-1)/2) labeled graphs on n vertices, n <= 6.  Graph index
// doubles as an edge mask: bit b covers the b-th pair in the order
// (0,1),(0,2),(1,2),(0,3),... -- the same column-major upper-triangle
// order graph6 uses.
std::vector<Graph> enumerate_labeled_graphs(int n);

// All free trees on n vertices up to isomorphism, n <= 16.  Rooted
// level sequences are generated in canonical order and deduplicated by
// a centroid-rooted canonical encoding; order is first appearance.
std::vector<Graph> enumerate_trees(int n);

// Seeded generators (deterministic: mt19937_64 driven).
std::vector<Graph> random_graphs(int count, int n, unsigned long long seed);
std::vector<Graph> random_trees(int count, int n, unsigned long long seed);

// Every optimum-cardinality feasible set for one of the set-valued
// invariants ("lk", "lkt", "rho", "rho_o"), by exhaustive enumeration.
// Deterministic order (ascending as bitmasks).  Guard: n <= 20.
std::vector<VertexSet> enumerate_optimal_sets(const Graph& g,
                                              const std::string& invariant,
                                              int k);

// One JSON object per failure plus a trailing summary object, each on
// its own line.  Runtime is deliberately omitted (see header comment).
std::string report_to_jsonl(const TheoremReport& report);

}  // namespace limpack

#pragma once

#include <optional>
#include <string>

#include "limpack/graph.hpp"

namespace limpack {

// First failure found by a predicate, always the lowest-index violating vertex.
struct PredicateViolation {
    int vertex = -1;
    int observed = 0;
    int bound = 0;
    std::string detail;
};

struct CheckResult {
    bool ok = true;
    std::optional<PredicateViolation> violation;
    explicit operator bool() const { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(int vertex, int observed, int bound, std::string detail) {
        CheckResult r;
        r.ok = false;
        r.violation = PredicateViolation{vertex, observed, bound, std::move(detail)};
        return r;
    }
};

// All predicates require k >= 1 and a set/partition over exactly the graph's
// vertex range; anything else throws std::invalid_argument.

// |N[v] ∩ B| <= k for every vertex v.
CheckResult is_k_limited_packing(const Graph& g, const VertexSet& b, int k);
// |N(v) ∩ B| <= k for every vertex v.
CheckResult is_k_total_limited_packing(const Graph& g, const VertexSet& b, int k);
// |N[v] ∩ S| >= k for every vertex v; requires min degree >= k-1, otherwise the
// invariant is undefined and the call throws.
CheckResult is_k_tuple_dominating(const Graph& g, const VertexSet& s, int k);

// Pairwise-disjoint closed (resp. open) neighborhoods. These are the direct
// definitional routes; they coincide with the k=1 packing predicates above and
// the test suite cross-checks the two routes against each other.
CheckResult is_packing(const Graph& g, const VertexSet& b);
CheckResult is_open_packing(const Graph& g, const VertexSet& b);

// Every class of the partition passes the corresponding predicate.
CheckResult is_klp_partition(const Graph& g, const VertexPartition& p, int k);
CheckResult is_ktd_partition(const Graph& g, const VertexPartition& p, int k);

// Proper coloring of the square: classes contain no two vertices at distance
// 1 or 2. Equivalently every class is a packing, which the tests cross-check.
CheckResult is_2distance_coloring(const Graph& g, const VertexPartition& p);

} // namespace limpack

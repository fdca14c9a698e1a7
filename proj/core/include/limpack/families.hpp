#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

// ---------------------------------------------------------------------------
// Block decompositions witnessing the maximum tuple-domatic value.
//
// A spec lists t blocks (stacked into one vertex range, block i occupying the
// ids right after block i-1) plus cross edges between distinct blocks, and
// the minimum degree q the assembled graph is supposed to have.  A spec is
// accepted when q+1 = tk+r with 0 <= r <= k-1, the assembled minimum degree
// is exactly q, every vertex sees at least k vertices of every other block,
// every block has internal minimum degree >= k-1, and some block has internal
// minimum degree <= 2k-2.  The block classes of an accepted spec form a
// partition into k-tuple dominating sets, so they witness d_xk = (q+1)/k
// rounded down.
// ---------------------------------------------------------------------------

struct OmegaSpec {
    int k = 1;
    std::vector<Graph> blocks;
    std::vector<std::pair<int, int>> cross_edges;  // global vertex ids
    int target_q = 0;
};

struct OmegaValidation {
    bool ok = false;
    std::vector<std::string> diagnostics;  // empty exactly when ok
    Graph assembled;                       // filled whenever the edges glue together
    VertexPartition block_partition;       // one class per block, same condition
    int t = 0;
    int r = 0;  // q+1 - t*k, when that lands in [0, k-1]
};

OmegaValidation validate_omega(const OmegaSpec& spec);

// Canonical member for parameters (k, t, r), 0 <= r <= k-1, tk+r >= k:
// t copies of K_{k+r}; between any two blocks, vertex a of the lower block is
// joined to vertices a, a+1, ..., a+k-1 (mod k+r) of the higher one.  Every
// vertex ends up with degree exactly q = tk+r-1, so no padding is needed.
OmegaSpec canonical_omega_spec(int k, int t, int r);
Graph build_canonical_omega(int k, int t, int r);

// ---------------------------------------------------------------------------
// Regular r-partite family attaining the 2-LP partition lower bound.
// ---------------------------------------------------------------------------

struct LambdaSpec {
    int r = 2;  // number of parts, >= 2
    int s = 2;  // common part size, even, >= 2
};

// Parts V_i = {i*s, ..., i*s+s-1}.  Between parts i < j, vertex a of V_i is
// joined to vertices a and a+1 (mod s) of V_j; inside each part the perfect
// matching {2a, 2a+1}.  The result is (2r-1)-regular on r*s vertices.
Graph build_lambda(const LambdaSpec& spec);

// Same part/matching skeleton, but each between-parts 2-regular graph is the
// union of two disjoint seeded random perfect matchings, so tests do not only
// ever see the circulant shape.
Graph build_lambda_random(const LambdaSpec& spec, std::uint64_t seed);

// True iff every 3-subset of vertices has a common neighbor; these are
// exactly the graphs whose 2-total-limited-packing number is 2.  Requires
// n >= 3.
bool is_triple_common_neighbor_family(const Graph& g);

// Graphs with packing number n - max degree: some maximum-degree u has a
// neighbor v with N[v] inside N[u] such that {v} together with everything
// outside N[u] forms a packing.  Spelled out: the outside of N[u] is
// independent, vertices of N[u] \ N[v] have at most one neighbor outside
// N[u], and vertices of N[v] have none.
bool is_in_gamma(const Graph& g);

// ---------------------------------------------------------------------------
// Named sharpness constructions.  Each carries the invariant values the
// construction is supposed to hit and the witness sets/partitions that come
// with it; the witnesses are feasible by construction and tests check them
// against the predicates before any solver runs.
// ---------------------------------------------------------------------------

struct SharpnessInstance {
    std::string family;
    Graph graph;
    std::map<std::string, int> expected;
    std::map<std::string, std::vector<int>> witness_sets;
    std::map<std::string, VertexPartition> witness_partitions;
};

// K_{2p} minus a perfect matching (p >= 3); hits the complementary 2-LP
// partition sum (n+2)/2 together with its complement.
SharpnessInstance build_ng_cocktail(int p);

// Cycle of length cycle_len with pendant vertices on the given positions;
// any two positions must be at circular distance >= 3.  The cycle itself is
// an optimal 2-total-limited packing, so the value equals the girth.
SharpnessInstance build_girth_pendant_cycle(int cycle_len,
                                            const std::vector<int>& pendant_positions);

// Path on 9t-3 vertices; the gap between the total and plain 2-limited
// packing numbers is 3t-1, exactly one third of the order, which is the
// largest any tree allows.
SharpnessInstance build_tree_diff_sharp(int t);

// Path on 3p vertices, each path vertex joined to one vertex of each of its
// own two 4-cycles (27p vertices total); the gap is 10p, a third of the
// order plus p.
SharpnessInstance build_gap_graph(int p);

} // namespace limpack

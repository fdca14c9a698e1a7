#pragma once

#include "limpack/graph.hpp"
#include "limpack/solve.hpp"

namespace limpack {

// The decision problem "is there an open packing of size >= k in G" maps to
// "is there a 2-total-limited packing of size >= n + k in G with one pendant
// hung on every vertex".  The two optima differ by exactly n, which is what
// check_reduction_identity confirms on solvable sizes.

struct ReductionInstance {
    Graph source;
    Graph target;              // pendant of vertex v is n + v
    int threshold_offset = 0;  // decision threshold k maps to threshold_offset + k
};

ReductionInstance reduce_op_to_2tlp(const Graph& g);

struct ReductionCheck {
    bool ok = false;          // identity confirmed by two finished solves
    bool incomplete = false;  // a solve hit its node budget
    InvariantResult open_packing;   // maximum open packing of the source
    InvariantResult total_packing;  // maximum 2-total-limited packing of the target
};

ReductionCheck check_reduction_identity(const Graph& g, const SolveOptions& opts = {});

// Open packing B of G, lifted to B plus all pendants: a 2-total-limited
// packing of the pendant graph of size |B| + n.  Rejects sets that are not
// open packings; the lifted set is verified before being returned.
VertexSet lift_certificate(const Graph& g, const VertexSet& b);

// Structure checks used to confirm the reduction stays inside these classes.
bool is_bipartite(const Graph& g);
bool is_chordal(const Graph& g);  // maximum-cardinality-search elimination

} // namespace limpack

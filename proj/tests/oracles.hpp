#pragma once
// Naive reference implementations, written straight from the definitions
// and frozen: every optimized solver is required to reproduce these on
// small graphs.  Nothing here shares code with the branch-and-bound path.
// All set oracles enumerate 2^n subsets (n <= 20), the partition oracles
// enumerate restricted-growth strings.

#include <optional>

#include "limpack/graph.hpp"

namespace oracle {

int l_k(const limpack::Graph& g, int k);
int l_kt(const limpack::Graph& g, int k);
int rho(const limpack::Graph& g);
int rho_o(const limpack::Graph& g);
// callers must ensure min degree >= k-1
int gamma_xk(const limpack::Graph& g, int k);
int chi_xk(const limpack::Graph& g, int k);
// callers must ensure min degree >= k-1
int d_xk(const limpack::Graph& g, int k);
int chi2(const limpack::Graph& g);

std::optional<int> girth(const limpack::Graph& g);
limpack::Graph square(const limpack::Graph& g);

// number of set partitions the restricted-growth enumerator visits
// (the Bell number), used to validate the enumeration itself
long long partition_count(int n);

}  // namespace oracle

#pragma once

#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

bool is_tree(const Graph& g);

// Tree rooted at the lowest-index vertex of maximum degree; children are
// listed in ascending vertex order and bfs_order starts at the root.  The
// tie-breaks are fixed so the labeling below is reproducible.
struct RootedTree {
    Graph graph;
    int root = -1;
    std::vector<int> parent;                  // -1 at the root
    std::vector<std::vector<int>> children;
    std::vector<int> bfs_order;
};

RootedTree root_tree(const Graph& g);  // throws on non-tree input

// ceil((max degree + 1) / 2); equals the optimum class count for trees.
int chi_x2_tree_value(const Graph& t);

// Which branch of the labeling produced a vertex's class.
enum class LabelCase {
    Root,       // the root itself
    Case1,      // parent handled with even max degree
    Subcase21,  // odd max degree, parent itself carries the top label
    Subcase22,  // odd max degree, parent carries a lower label
};

struct TreeLabeling {
    VertexPartition partition;
    std::vector<LabelCase> case_tag;  // per vertex
};

// Builds a partition of V(T) into exactly chi_x2_tree_value(T) classes in
// which every class meets every closed neighborhood at most twice.  Linear
// scan over the tree; the result is checked against the defining predicate
// before being returned.
VertexPartition tree_2lp_partition(const Graph& t);
TreeLabeling tree_2lp_partition_tagged(const Graph& t);

} // namespace limpack

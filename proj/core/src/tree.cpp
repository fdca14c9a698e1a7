#include "limpack/tree.hpp"

#include <stdexcept>

#include "limpack/verify.hpp"

namespace limpack {

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && g.connected();
}

RootedTree root_tree(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("input is not a tree");
    int n = g.order();
    int maxdeg = degree_stats(g).max_degree;
    RootedTree rt;
    rt.graph = g;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == maxdeg) {
            rt.root = v;
            break;
        }
    rt.parent.assign(n, -1);
    rt.children.assign(n, {});
    rt.bfs_order.reserve(n);
    rt.bfs_order.push_back(rt.root);
    std::vector<char> seen(n, 0);
    seen[rt.root] = 1;
    for (std::size_t head = 0; head < rt.bfs_order.size(); ++head) {
        int u = rt.bfs_order[head];
        const Bitset& nb = g.neighbors(u);
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) {
            if (seen[w]) continue;
            seen[w] = 1;
            rt.parent[w] = u;
            rt.children[u].push_back(w);  // bitset scan keeps these ascending
            rt.bfs_order.push_back(w);
        }
    }
    return rt;
}

int chi_x2_tree_value(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("input is not a tree");
    return (degree_stats(t).max_degree + 2) / 2;
}

// ---------------------------------------------------------------------------
// Constructive labeling.
//
// Top-down over the rooted tree with labels 1..p, p = ceil((Delta+1)/2).  The
// root takes p; the children of a labeled vertex v are filled against label
// capacities
//
//     cap(c) = 2 - [f(v) = c] - [f(parent(v)) = c],
//
// since N[v] already holds v and its parent and no class may meet N[v] more
// than twice.  Those capacities sum to 2p-2 >= Delta-1 for internal vertices
// (2p-1 >= Delta at the root), so the fill below always completes.  Labels go
// out in ascending order as same-label pairs on full-capacity labels, with
// two reserved tail patterns matching how the top label p is spent: a single
// p on an odd child count, and the pair (f(v), p) on the trailing two
// children when the maximum degree is odd and v carries a lower label.
// ---------------------------------------------------------------------------

TreeLabeling tree_2lp_partition_tagged(const Graph& t) {
    RootedTree rt = root_tree(t);
    int n = t.order();
    int p = chi_x2_tree_value(t);
    bool odd_delta = degree_stats(t).max_degree % 2 == 1;

    std::vector<int> label(n, 0);
    std::vector<LabelCase> tag(n, LabelCase::Root);
    label[rt.root] = p;

    for (int v : rt.bfs_order) {
        const std::vector<int>& kids = rt.children[v];
        if (kids.empty()) continue;
        int s = static_cast<int>(kids.size());
        int a = label[v];
        int b = rt.parent[v] == -1 ? 0 : label[rt.parent[v]];

        std::vector<int> cap(p + 1, 2);
        cap[a] -= 1;
        if (b != 0) cap[b] -= 1;

        LabelCase kid_tag = !odd_delta           ? LabelCase::Case1
                            : (a == p)           ? LabelCase::Subcase21
                                                 : LabelCase::Subcase22;

        std::vector<int> tail;
        if (odd_delta && a != p && s >= 2 && s % 2 == 0 && cap[a] >= 1 && cap[p] >= 1)
            tail = {a, p};
        else if (s % 2 == 1 && cap[p] >= 1)
            tail = {p};
        for (int c : tail) --cap[c];

        int q = s - static_cast<int>(tail.size());
        std::vector<int> fill;
        fill.reserve(s);
        for (int c = 1; c <= p; ++c)
            if (cap[c] == 2 && q - static_cast<int>(fill.size()) >= 2) {
                fill.push_back(c);
                fill.push_back(c);
                cap[c] = 0;
            }
        for (int c = 1; c <= p && static_cast<int>(fill.size()) < q; ++c)
            while (cap[c] > 0 && static_cast<int>(fill.size()) < q) {
                fill.push_back(c);
                --cap[c];
            }
        if (static_cast<int>(fill.size()) != q)
            throw std::logic_error("tree labeling ran out of label capacity");
        for (int c : tail) fill.push_back(c);

        for (int i = 0; i < s; ++i) {
            label[kids[i]] = fill[i];
            tag[kids[i]] = kid_tag;
        }
    }

    std::vector<int> class_of(n);
    for (int v = 0; v < n; ++v) class_of[v] = label[v] - 1;
    TreeLabeling out;
    out.partition = VertexPartition::from_class_of(std::move(class_of));
    out.case_tag = std::move(tag);
    if (out.partition.classes != p)
        throw std::logic_error("tree labeling used a wrong class count");
    if (!is_klp_partition(t, out.partition, 2))
        throw std::logic_error("tree labeling produced an invalid partition");
    return out;
}

VertexPartition tree_2lp_partition(const Graph& t) {
    return tree_2lp_partition_tagged(t).partition;
}

} // namespace limpack

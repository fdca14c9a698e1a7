#include "limpack/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace limpack {

namespace {

std::string fmt_edge(const std::pair<int, int>& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

OmegaValidation validate_omega(const OmegaSpec& spec) {
    OmegaValidation out;
    if (spec.k < 1) {
        out.diagnostics.push_back("k must be at least 1");
        return out;
    }
    out.t = static_cast<int>(spec.blocks.size());
    if (out.t == 0) {
        out.diagnostics.push_back("no blocks given");
        return out;
    }

    // Stack the blocks into one vertex range.
    std::vector<int> offset(out.t + 1, 0);
    for (int i = 0; i < out.t; ++i) {
        if (spec.blocks[i].order() == 0)
            out.diagnostics.push_back("block " + std::to_string(i) + " is empty");
        offset[i + 1] = offset[i] + spec.blocks[i].order();
    }
    int n = offset[out.t];
    std::vector<int> block_of(n);
    for (int i = 0; i < out.t; ++i)
        for (int v = offset[i]; v < offset[i + 1]; ++v) block_of[v] = i;

    bool edges_ok = out.diagnostics.empty();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < out.t; ++i)
        for (auto [a, b] : spec.blocks[i].edge_list())
            edges.emplace_back(offset[i] + a, offset[i] + b);
    for (const auto& e : spec.cross_edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
            out.diagnostics.push_back("cross edge " + fmt_edge(e) + " out of range");
            edges_ok = false;
            continue;
        }
        if (block_of[e.first] == block_of[e.second]) {
            out.diagnostics.push_back("cross edge " + fmt_edge(e) +
                                      " joins vertices of the same block");
            edges_ok = false;
            continue;
        }
        edges.push_back(e);
    }
    if (!edges_ok) return out;

    out.assembled = Graph::from_edges(n, edges);
    {
        std::vector<int> class_of(n);
        for (int v = 0; v < n; ++v) class_of[v] = block_of[v];
        out.block_partition = VertexPartition::from_class_of(std::move(class_of));
    }

    int q = spec.target_q;
    out.r = q + 1 - out.t * spec.k;
    if (out.r < 0 || out.r > spec.k - 1)
        out.diagnostics.push_back(
            "block count " + std::to_string(out.t) + " incompatible with q=" +
            std::to_string(q) + ", k=" + std::to_string(spec.k));

    if (degree_stats(out.assembled).min_degree != q)
        out.diagnostics.push_back(
            "assembled minimum degree " +
            std::to_string(degree_stats(out.assembled).min_degree) +
            " differs from target q=" + std::to_string(q));

    // Cross condition: at least k neighbours inside every other block.
    for (int v = 0; v < n && out.t > 1; ++v) {
        const Bitset& nb = out.assembled.neighbors(v);
        std::vector<int> per_block(out.t, 0);
        for (int w = nb.find_first(); w != -1; w = nb.find_next(w)) ++per_block[block_of[w]];
        for (int j = 0; j < out.t; ++j) {
            if (j == block_of[v]) continue;
            if (per_block[j] < spec.k) {
                out.diagnostics.push_back("vertex " + std::to_string(v) + " has " +
                                          std::to_string(per_block[j]) + " < k neighbors in block " +
                                          std::to_string(j));
                j = out.t;   // one diagnostic per vertex is enough
            }
        }
    }

    // Block-internal degree window.
    bool some_small = false;
    for (int i = 0; i < out.t; ++i) {
        int d = degree_stats(spec.blocks[i]).min_degree;
        if (d < spec.k - 1)
            out.diagnostics.push_back("block " + std::to_string(i) +
                                      " has internal minimum degree " + std::to_string(d) +
                                      " < k-1");
        if (d <= 2 * spec.k - 2) some_small = true;
    }
    if (!some_small)
        out.diagnostics.push_back("no block has internal minimum degree <= 2k-2");

    out.ok = out.diagnostics.empty();
    return out;
}

OmegaSpec canonical_omega_spec(int k, int t, int r) {
    if (k < 1 || t < 1 || r < 0 || r > k - 1)
        throw std::invalid_argument("canonical block spec needs k>=1, t>=1, 0<=r<=k-1");
    if (t * k + r < k) throw std::invalid_argument("parameters give q < k-1");
    int m = k + r;  // block order
    OmegaSpec spec;
    spec.k = k;
    spec.target_q = t * k + r - 1;
    spec.blocks.assign(t, complete_graph(m));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            for (int a = 0; a < m; ++a)
                for (int d = 0; d < k; ++d)
                    spec.cross_edges.emplace_back(i * m + a, j * m + (a + d) % m);
    return spec;
}

Graph build_canonical_omega(int k, int t, int r) {
    OmegaValidation v = validate_omega(canonical_omega_spec(k, t, r));
    if (!v.ok) throw std::logic_error("canonical block construction failed validation");
    return v.assembled;
}

// ---------------------------------------------------------------------------

namespace {

void check_lambda(const LambdaSpec& spec) {
    if (spec.r < 2) throw std::invalid_argument("need at least two parts");
    if (spec.s < 2 || spec.s % 2 != 0) throw std::invalid_argument("part size must be even, >= 2");
}

std::vector<std::pair<int, int>> lambda_matchings(const LambdaSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.r; ++i)
        for (int a = 0; a < spec.s; a += 2)
            edges.emplace_back(i * spec.s + a, i * spec.s + a + 1);
    return edges;
}

} // namespace

Graph build_lambda(const LambdaSpec& spec) {
    check_lambda(spec);
    std::vector<std::pair<int, int>> edges = lambda_matchings(spec);
    for (int i = 0; i < spec.r; ++i)
        for (int j = i + 1; j < spec.r; ++j)
            for (int a = 0; a < spec.s; ++a) {
                edges.emplace_back(i * spec.s + a, j * spec.s + a);
                edges.emplace_back(i * spec.s + a, j * spec.s + (a + 1) % spec.s);
            }
    return Graph::from_edges(spec.r * spec.s, edges);
}

Graph build_lambda_random(const LambdaSpec& spec, std::uint64_t seed) {
    check_lambda(spec);
    std::mt19937_64 eng(seed);
    auto shuffled = [&](int s) {
        std::vector<int> perm(s);
        std::iota(perm.begin(), perm.end(), 0);
        // explicit Fisher-Yates so the stream does not depend on the library
        for (int i = s - 1; i > 0; --i)
            std::swap(perm[i], perm[eng() % (i + 1)]);
        return perm;
    };
    std::vector<std::pair<int, int>> edges = lambda_matchings(spec);
    for (int i = 0; i < spec.r; ++i)
        for (int j = i + 1; j < spec.r; ++j) {
            std::vector<int> first = shuffled(spec.s);
            std::vector<int> second = shuffled(spec.s);
            auto clashes = [&]() {
                for (int a = 0; a < spec.s; ++a)
                    if (first[a] == second[a]) return true;
                return false;
            };
            while (clashes()) second = shuffled(spec.s);
            for (int a = 0; a < spec.s; ++a) {
                edges.emplace_back(i * spec.s + a, j * spec.s + first[a]);
                edges.emplace_back(i * spec.s + a, j * spec.s + second[a]);
            }
        }
    return Graph::from_edges(spec.r * spec.s, edges);
}

// ---------------------------------------------------------------------------

bool is_triple_common_neighbor_family(const Graph& g) {
    int n = g.order();
    if (n < 3) throw std::invalid_argument("family test needs at least 3 vertices");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Bitset uv = g.neighbors(u);
            uv &= g.neighbors(v);
            if (uv.none()) return false;
            for (int w = v + 1; w < n; ++w) {
                Bitset uvw = uv;
                uvw &= g.neighbors(w);
                if (uvw.none()) return false;
            }
        }
    return true;
}

bool is_in_gamma(const Graph& g) {
    int n = g.order();
    if (n == 0) return false;
    int maxdeg = degree_stats(g).max_degree;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != maxdeg) continue;
        const Bitset& closed_u = g.closed_neighbors(u);
        // outside of N[u] must be independent
        bool outside_independent = true;
        for (int a = 0; a < n && outside_independent; ++a) {
            if (closed_u.test(a)) continue;
            const Bitset& nb = g.neighbors(a);
            for (int b = nb.find_next(a); b != -1; b = nb.find_next(b))
                if (!closed_u.test(b)) {
                    outside_independent = false;
                    break;
                }
        }
        if (!outside_independent) continue;
        const Bitset& nu = g.neighbors(u);
        for (int v = nu.find_first(); v != -1; v = nu.find_next(v)) {
            if (!g.closed_neighbors(v).is_subset_of(closed_u)) continue;
            bool ok = true;
            const Bitset& closed_v = g.closed_neighbors(v);
            for (int w = closed_u.find_first(); w != -1 && ok; w = closed_u.find_next(w)) {
                int outside = 0;
                const Bitset& nw = g.neighbors(w);
                for (int b = nw.find_first(); b != -1; b = nw.find_next(b))
                    if (!closed_u.test(b)) ++outside;
                // the extremal packing is forced to be {v} plus everything
                // outside N[u]; a vertex of N[v] touching the outside would
                // merge v's ball with an outside ball, so the cap is 0 there
                // and 1 on the rest of N[u]
                if (outside > (closed_v.test(w) ? 0 : 1)) ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

SharpnessInstance build_ng_cocktail(int p) {
    if (p < 3) throw std::invalid_argument("need p >= 3");
    SharpnessInstance inst;
    inst.family = "ng_cocktail";
    inst.graph = complete_minus_perfect_matching(2 * p);
    inst.expected["chi_x2"] = p;
    inst.expected["chi_x2_complement"] = 1;
    std::vector<int> pairs(2 * p), ones(2 * p, 0);
    for (int v = 0; v < 2 * p; ++v) pairs[v] = v / 2;
    inst.witness_partitions["chi_x2"] = VertexPartition::from_class_of(pairs);
    inst.witness_partitions["chi_x2_complement"] = VertexPartition::from_class_of(ones);
    return inst;
}

SharpnessInstance build_girth_pendant_cycle(int cycle_len,
                                            const std::vector<int>& pendant_positions) {
    if (cycle_len < 3) throw std::invalid_argument("cycle length must be at least 3");
    std::vector<int> pos = pendant_positions;
    std::sort(pos.begin(), pos.end());
    for (int v : pos)
        if (v < 0 || v >= cycle_len) throw std::invalid_argument("pendant position out of range");
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        int gap = pos[i + 1] - pos[i];
        if (std::min(gap, cycle_len - gap) < 3)
            throw std::invalid_argument("pendant positions closer than 3 along the cycle");
    }
    if (pos.size() >= 2) {
        int wrap = pos.front() + cycle_len - pos.back();
        if (wrap < 3) throw std::invalid_argument("pendant positions closer than 3 along the cycle");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
    for (std::size_t j = 0; j < pos.size(); ++j)
        edges.emplace_back(pos[j], cycle_len + static_cast<int>(j));

    SharpnessInstance inst;
    inst.family = "girth_pendant_cycle";
    inst.graph = Graph::from_edges(cycle_len + static_cast<int>(pos.size()), edges);
    inst.expected["girth"] = cycle_len;
    inst.expected["l2t"] = cycle_len;
    std::vector<int> cyc(cycle_len);
    std::iota(cyc.begin(), cyc.end(), 0);
    inst.witness_sets["l2t"] = cyc;
    return inst;
}

SharpnessInstance build_tree_diff_sharp(int t) {
    if (t < 1) throw std::invalid_argument("need t >= 1");
    // Path on 9t-3 vertices.  Degrees are at most 2, so the entire vertex
    // set is a 2-total-limited packing of size n.  For the plain version,
    // the closed neighborhood of the middle vertex of each consecutive
    // triple is exactly that triple, capping any 2-limited packing at two
    // per triple; dropping every third vertex attains the cap.  The gap is
    // therefore exactly n/3 = 3t-1.
    //
    // (A hub joined to three paths -- the shape one might try first -- always
    // falls one short of n/3: excluding a hub neighbor costs the total side
    // one vertex while the plain side loses nothing.)
    int n = 9 * t - 3;
    SharpnessInstance inst;
    inst.family = "tree_diff_sharp";
    inst.graph = path_graph(n);
    inst.expected["l2t"] = n;
    inst.expected["l2"] = 6 * t - 2;

    std::vector<int> total(n);
    std::iota(total.begin(), total.end(), 0);
    inst.witness_sets["l2t"] = total;

    std::vector<int> plain;
    for (int v = 0; v < n; ++v)
        if (v % 3 != 2) plain.push_back(v);
    inst.witness_sets["l2"] = plain;
    return inst;
}

SharpnessInstance build_gap_graph(int p) {
    if (p < 1) throw std::invalid_argument("need p >= 1");
    int n = 27 * p;
    // path vertices 0..3p-1; the two 4-cycles of path vertex i sit at
    // 3p+8i..3p+8i+3 and 3p+8i+4..3p+8i+7, joined to i at their first vertex
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 3 * p; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < 3 * p; ++i) {
        for (int c = 0; c < 2; ++c) {
            int base = 3 * p + 8 * i + 4 * c;
            for (int d = 0; d < 4; ++d) edges.emplace_back(base + d, base + (d + 1) % 4);
            edges.emplace_back(i, base);
        }
    }

    SharpnessInstance inst;
    inst.family = "gap_graph";
    inst.graph = Graph::from_edges(n, edges);
    inst.expected["l2t"] = 24 * p;
    inst.expected["l2"] = 14 * p;

    std::vector<int> total;
    for (int v = 3 * p; v < n; ++v) total.push_back(v);
    inst.witness_sets["l2t"] = total;

    std::vector<int> plain;
    for (int j = 0; j < p; ++j) {
        plain.push_back(3 * j);
        plain.push_back(3 * j + 1);
    }
    for (int i = 0; i < 3 * p; ++i)
        for (int c = 0; c < 2; ++c) {
            int base = 3 * p + 8 * i + 4 * c;
            plain.push_back(base + 1);
            plain.push_back(base + 2);
        }
    std::sort(plain.begin(), plain.end());
    inst.witness_sets["l2"] = plain;
    return inst;
}

} // namespace limpack

#ifndef PLAB_PATH_SEARCH_HPP
#define PLAB_PATH_SEARCH_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "plab/coloring.hpp"

namespace plab::paths {

template <typename C>
concept PairColoringLike = requires(const C& c, Vertex a, Vertex b) {
    { c.size() } -> std::convertible_to<std::size_t>;
    { c.color(a, b) } -> std::convertible_to<Color>;
};

namespace detail {

// Longest path ending at each vertex in the DAG of increasing edges whose
// color lies in `allowed` (nullptr = one fixed color via `mono`).
template <typename Coloring>
PathWitness longest_ipath_dp(const Coloring& c, const std::set<Color>* allowed, Color mono) {
    const std::size_t n = c.size();
    std::vector<std::uint32_t> len(n, 1);
    std::vector<std::size_t> prev(n, SIZE_MAX);
    std::size_t best_end = 0;
    std::uint32_t best_len = n ? 1 : 0;
    for (Vertex b = 0; b < n; ++b) {
        for (Vertex a = 0; a < b; ++a) {
            const Color col = c.color(a, b);
            if (allowed ? !allowed->count(col) : col != mono) continue;
            if (len[a] + 1 > len[b]) {
                len[b] = len[a] + 1;
                prev[b] = a;
            }
        }
        if (len[b] > best_len) {
            best_len = len[b];
            best_end = b;
        }
    }
    PathWitness w;
    if (n == 0) return w;
    for (std::size_t v = best_end; v != SIZE_MAX; v = prev[v])
        w.vertices.push_back(static_cast<Vertex>(v));
    std::reverse(w.vertices.begin(), w.vertices.end());
    for (std::size_t i = 1; i < w.vertices.size(); ++i)
        w.edge_colors.push_back(c.color(w.vertices[i - 1], w.vertices[i]));
    w.lis_length = longest_increasing_subsequence(w.vertices);
    assert(revalidate_witness(c, w, /*increasing=*/true));
    return w;
}

} // namespace detail

// For each color present, a maximum-vertex-count strictly increasing path all
// of whose consecutive edges carry that color. Exact (per-color DAG DP).
template <PairColoringLike Coloring>
std::map<Color, PathWitness> longest_mono_ipath(const Coloring& c) {
    std::set<Color> present;
    const std::size_t n = c.size();
    for (Vertex b = 1; b < n; ++b)
        for (Vertex a = 0; a < b; ++a) present.insert(c.color(a, b));
    std::map<Color, PathWitness> out;
    for (Color col : present) out[col] = detail::longest_ipath_dp(c, nullptr, col);
    return out;
}

struct SimpleSearchResult {
    PathWitness witness;
    bool exact = true; // false when the expansion budget ran out first
    std::uint64_t expansions = 0;
};

namespace detail {

template <typename Coloring>
void simple_dfs(const Coloring& c, const std::vector<std::vector<Vertex>>& adj,
                std::vector<Vertex>& cur, std::vector<char>& used, SimpleSearchResult& res,
                std::uint64_t budget) {
    if (res.expansions >= budget) {
        res.exact = false;
        return;
    }
    ++res.expansions;
    if (cur.size() > res.witness.vertices.size()) {
        res.witness.vertices = cur;
        if (cur.size() == c.size()) return; // Hamiltonian, cannot improve
    }
    for (Vertex next : adj[cur.back()]) {
        if (used[next]) continue;
        used[next] = 1;
        cur.push_back(next);
        simple_dfs(c, adj, cur, used, res, budget);
        cur.pop_back();
        used[next] = 0;
        if (!res.exact && res.expansions >= budget) return;
    }
}

} // namespace detail

// Longest simple path (distinct vertices, any order) whose consecutive edges
// all have the given color. Exhaustive DFS under a node-expansion budget;
// `exact` is false when the budget was hit, and the best path found so far is
// returned. For ordered colorings the edge is traversed in path direction.
template <PairColoringLike Coloring>
SimpleSearchResult longest_mono_simple_path(const Coloring& c, Color color, std::uint64_t budget) {
    const std::size_t n = c.size();
    SimpleSearchResult res;
    if (n == 0) return res;
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b && c.color(a, b) == color) adj[a].push_back(b);
    res.witness.vertices = {0};
    std::vector<char> used(n, 0);
    std::vector<Vertex> cur;
    for (Vertex start = 0; start < n; ++start) {
        used.assign(n, 0);
        used[start] = 1;
        cur = {start};
        detail::simple_dfs(c, adj, cur, used, res, budget);
        if (res.witness.vertices.size() == n) break;
        if (!res.exact) break;
    }
    auto& w = res.witness;
    for (std::size_t i = 1; i < w.vertices.size(); ++i)
        w.edge_colors.push_back(c.color(w.vertices[i - 1], w.vertices[i]));
    w.lis_length = longest_increasing_subsequence(w.vertices);
    assert(revalidate_witness(c, w));
    return res;
}

// Maximum-length increasing path whose consecutive-edge color set has size at
// most k. Exact: DP once per palette subset of size min(k, palette). Throws
// palette_too_large when the subset count would exceed `subset_cap`.
template <PairColoringLike Coloring>
PathWitness longest_small_palette_ipath(const Coloring& c, std::uint32_t k,
                                        std::uint64_t subset_cap = 1u << 16) {
    if (k < 1) throw Error(Errc::out_of_range, "k must be >= 1");
    std::set<Color> present_set;
    const std::size_t n = c.size();
    for (Vertex b = 1; b < n; ++b)
        for (Vertex a = 0; a < b; ++a) present_set.insert(c.color(a, b));
    std::vector<Color> present(present_set.begin(), present_set.end());
    const std::uint32_t t = static_cast<std::uint32_t>(present.size());
    const std::uint32_t kk = std::min(k, t);

    PathWitness best;
    if (n > 0) {
        best.vertices = {0};
        best.lis_length = 1;
    }
    if (t == 0) return best;

    std::uint64_t count = 1; // C(t, kk)
    for (std::uint32_t i = 0; i < kk; ++i) {
        count = count * (t - i) / (i + 1);
        if (count > subset_cap) throw Error(Errc::palette_too_large, "too many palette subsets");
    }

    std::vector<std::uint32_t> pick(kk);
    for (std::uint32_t i = 0; i < kk; ++i) pick[i] = i;
    while (true) {
        std::set<Color> allowed;
        for (std::uint32_t i : pick) allowed.insert(present[i]);
        PathWitness w = detail::longest_ipath_dp(c, &allowed, 0);
        if (w.vertices.size() > best.vertices.size()) best = w;
        // next combination in lexicographic order
        std::int64_t j = static_cast<std::int64_t>(kk) - 1;
        while (j >= 0 && pick[j] == t - kk + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (std::uint32_t i = static_cast<std::uint32_t>(j) + 1; i < kk; ++i)
            pick[i] = pick[i - 1] + 1;
    }
    return best;
}

// Pivot-based greedy builder for a one-color simple path (unordered input).
PathWitness greedy_pivot_path(const UnorderedPairColoring& c);

struct TwoColorPathResult {
    PathWitness witness;
    std::set<Color> palette; // colors of both orientations of consecutive pairs
};

// Pivot-based greedy builder for a simple path whose two-directional color
// set has size at most 2 (ordered input).
TwoColorPathResult two_color_ordered_path(const OrderedPairColoring& c);

enum class ScanFlavor { increasing, simple };
enum class ScanHolds { yes, no, undetermined };

struct ScanRow {
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::uint32_t L = 0;
    ScanFlavor flavor = ScanFlavor::increasing;
    bool exhaustive = true;
    ScanHolds holds = ScanHolds::undetermined;
    std::uint64_t checked = 0;
};

struct ScanOptions {
    bool exhaustive = true;
    std::uint64_t seed = 0;      // sampled mode
    std::uint64_t trials = 1000; // sampled mode
    std::uint64_t cap = 1u << 24;
    unsigned workers = 1;
};

// For each n <= n_max: does every t-coloring of the unordered pairs of [n]
// admit a monochromatic path (of the flavor) on L vertices? Exhaustive mode
// enumerates all t^C(n,2) colorings (CapExceeded beyond opts.cap); sampled
// mode can only refute or report undetermined.
std::vector<ScanRow> ramsey_scan(std::uint32_t n_max, std::uint32_t t, std::uint32_t L,
                                 ScanFlavor flavor, const ScanOptions& opts);

// True when the coloring (triangular cells over [n]) has a monochromatic
// path of the flavor with at least L vertices. Shared by scan and tests.
bool has_mono_path(std::size_t n, std::span<const Color> cells, std::uint32_t L,
                   ScanFlavor flavor);

} // namespace plab::paths

#endif

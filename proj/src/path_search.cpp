#include "plab/path_search.hpp"

#include <atomic>
#include <map>
#include <thread>

namespace plab::paths {

namespace {

// Pivot = vertex whose below-set has the largest single color class; ties go
// to the smallest vertex, then the smallest color.
template <typename Coloring>
std::pair<Vertex, Color> pick_pivot(const Coloring& c) {
    const std::size_t n = c.size();
    Vertex delta = 1;
    Color n0 = c.color(0, 1);
    std::size_t best = 0;
    for (Vertex v = 1; v < n; ++v) {
        std::map<Color, std::size_t> counts;
        for (Vertex b = 0; b < v; ++b) ++counts[c.color(b, v)];
        std::size_t major = 0;
        Color major_color = 0;
        for (const auto& [col, cnt] : counts) {
            if (cnt > major) {
                major = cnt;
                major_color = col;
            }
        }
        if (major > best) {
            best = major;
            delta = v;
            n0 = major_color;
        }
    }
    return {delta, n0};
}

// Zigzag emission b0, b3, b2, b5, b4, ...; every consecutive pair is covered
// by the greedy clauses, and the pivot is appended at the end (the final
// vertex always lies in the pivot's color class).
std::vector<Vertex> zigzag_with_pivot(const std::vector<Vertex>& beta, Vertex delta) {
    std::vector<Vertex> path;
    if (beta.empty()) return path;
    path.push_back(beta[0]);
    for (std::size_t k = 1; 2 * k + 1 < beta.size(); ++k) {
        path.push_back(beta[2 * k + 1]);
        path.push_back(beta[2 * k]);
    }
    path.push_back(delta);
    return path;
}

template <typename Coloring>
PathWitness finish_witness(const Coloring& c, std::vector<Vertex> path) {
    PathWitness w;
    w.vertices = std::move(path);
    for (std::size_t i = 1; i < w.vertices.size(); ++i)
        w.edge_colors.push_back(c.color(w.vertices[i - 1], w.vertices[i]));
    w.lis_length = longest_increasing_subsequence(w.vertices);
    assert(revalidate_witness(c, w));
    return w;
}

} // namespace

PathWitness greedy_pivot_path(const UnorderedPairColoring& c) {
    const std::size_t n = c.size();
    if (n == 0) return {};
    if (n == 1) return finish_witness(c, {0});

    const auto [delta, n0] = pick_pivot(c);

    std::vector<Vertex> beta;
    while (true) {
        const std::size_t i = beta.size();
        const Vertex lo = beta.empty() ? 0 : beta.back() + 1;
        bool found = false;
        for (Vertex cand = lo; cand < delta && !found; ++cand) {
            if (i % 2 == 0) {
                if (c.color(cand, delta) != n0) continue;
            } else {
                bool ok = true;
                for (std::size_t j = 0; 2 * j < i && ok; ++j)
                    ok = c.color(beta[2 * j], cand) == n0;
                if (!ok) continue;
            }
            beta.push_back(cand);
            found = true;
        }
        if (!found) break;
    }
    if (beta.empty()) return finish_witness(c, {0}); // no edge of the pivot color can start
    return finish_witness(c, zigzag_with_pivot(beta, delta));
}

TwoColorPathResult two_color_ordered_path(const OrderedPairColoring& c) {
    TwoColorPathResult res;
    const std::size_t n = c.size();
    if (n == 0) return res;
    if (n == 1) {
        res.witness = finish_witness(c, {0});
        return res;
    }

    const auto [delta, n0] = pick_pivot(c); // counts use c(b, delta)

    // Refinement: among the class below the pivot, the majority color of the
    // reverse orientation c(delta, b).
    std::map<Color, std::size_t> rev_counts;
    for (Vertex b = 0; b < delta; ++b)
        if (c.color(b, delta) == n0) ++rev_counts[c.color(delta, b)];
    Color m0 = 0;
    std::size_t major = 0;
    for (const auto& [col, cnt] : rev_counts) {
        if (cnt > major) {
            major = cnt;
            m0 = col;
        }
    }

    std::vector<Vertex> beta;
    while (true) {
        const std::size_t i = beta.size();
        const Vertex lo = beta.empty() ? 0 : beta.back() + 1;
        bool found = false;
        for (Vertex cand = lo; cand < delta && !found; ++cand) {
            if (i % 2 == 0) {
                if (c.color(cand, delta) != n0 || c.color(delta, cand) != m0) continue;
            } else {
                bool ok = true;
                for (std::size_t j = 0; 2 * j < i && ok; ++j)
                    ok = c.color(beta[2 * j], cand) == n0 && c.color(cand, beta[2 * j]) == m0;
                if (!ok) continue;
            }
            beta.push_back(cand);
            found = true;
        }
        if (!found) break;
    }
    if (beta.empty()) {
        res.witness = finish_witness(c, {0});
        return res;
    }
    res.witness = finish_witness(c, zigzag_with_pivot(beta, delta));
    for (std::size_t i = 1; i < res.witness.vertices.size(); ++i) {
        const Vertex x = res.witness.vertices[i - 1], y = res.witness.vertices[i];
        res.palette.insert(c.color(x, y));
        res.palette.insert(c.color(y, x));
    }
    return res;
}

namespace {

struct FlatView {
    std::size_t n;
    std::span<const Color> cells;
    std::size_t size() const { return n; }
    Color color(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return cells[static_cast<std::size_t>(b) * (b - 1) / 2 + a];
    }
};

bool simple_reach(const FlatView& v, Color col, Vertex at, std::vector<char>& used,
                  std::uint32_t len, std::uint32_t L) {
    if (len >= L) return true;
    for (Vertex next = 0; next < v.n; ++next) {
        if (used[next] || next == at) continue;
        if (v.color(at, next) != col) continue;
        used[next] = 1;
        if (simple_reach(v, col, next, used, len + 1, L)) {
            used[next] = 0;
            return true;
        }
        used[next] = 0;
    }
    return false;
}

} // namespace

bool has_mono_path(std::size_t n, std::span<const Color> cells, std::uint32_t L,
                   ScanFlavor flavor) {
    if (L <= 1) return n >= L;
    if (n < L) return false;
    const FlatView view{n, cells};
    std::set<Color> present(cells.begin(), cells.end());
    if (flavor == ScanFlavor::increasing) {
        for (Color col : present) {
            std::vector<std::uint32_t> len(n, 1);
            for (Vertex b = 0; b < n; ++b)
                for (Vertex a = 0; a < b; ++a)
                    if (view.color(a, b) == col && len[a] + 1 > len[b]) {
                        len[b] = len[a] + 1;
                        if (len[b] >= L) return true;
                    }
        }
        return false;
    }
    std::vector<char> used(n, 0);
    for (Color col : present) {
        for (Vertex start = 0; start < n; ++start) {
            used.assign(n, 0);
            used[start] = 1;
            if (simple_reach(view, col, start, used, 1, L)) return true;
        }
    }
    return false;
}

namespace {

// checked-count bookkeeping: the first (lowest-index) counterexample decides
// the row, independent of how work is split across workers.
struct RowScan {
    std::atomic<std::uint64_t> first_fail{UINT64_MAX};
};

void scan_chunk(std::size_t n, std::uint32_t t, std::uint32_t L, ScanFlavor flavor,
                std::uint64_t lo, std::uint64_t hi, RowScan& row) {
    const std::size_t m = n * (n - (n ? 1 : 0)) / 2;
    std::vector<Color> cells(m, 0);
    std::uint64_t idx = lo;
    for (std::size_t j = 0; j < m; ++j) {
        cells[j] = static_cast<Color>(idx % t);
        idx /= t;
    }
    for (std::uint64_t i = lo; i < hi; ++i) {
        if ((i & 0xff) == 0 && row.first_fail.load(std::memory_order_relaxed) <= i) return;
        if (!has_mono_path(n, cells, L, flavor)) {
            std::uint64_t cur = row.first_fail.load(std::memory_order_relaxed);
            while (i < cur && !row.first_fail.compare_exchange_weak(cur, i)) {
            }
            return;
        }
        // odometer increment
        for (std::size_t j = 0; j < m; ++j) {
            if (++cells[j] < t) break;
            cells[j] = 0;
        }
    }
}

} // namespace

std::vector<ScanRow> ramsey_scan(std::uint32_t n_max, std::uint32_t t, std::uint32_t L,
                                 ScanFlavor flavor, const ScanOptions& opts) {
    if (t < 1 || L < 1) throw Error(Errc::out_of_range, "palette and target length must be >= 1");
    std::vector<ScanRow> rows;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        ScanRow row;
        row.n = n;
        row.t = t;
        row.L = L;
        row.flavor = flavor;
        row.exhaustive = opts.exhaustive;
        const std::size_t m = static_cast<std::size_t>(n) * (n ? n - 1 : 0) / 2;
        if (opts.exhaustive) {
            std::uint64_t total = 1;
            for (std::size_t j = 0; j < m; ++j) {
                if (total > opts.cap / t) throw Error(Errc::cap_exceeded, "t^C(n,2) beyond cap");
                total *= t;
            }
            RowScan state;
            const unsigned workers = std::max(1u, opts.workers);
            if (workers == 1 || total < 4096) {
                scan_chunk(n, t, L, flavor, 0, total, state);
            } else {
                std::vector<std::thread> pool;
                const std::uint64_t step = (total + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w) {
                    const std::uint64_t lo = std::min<std::uint64_t>(total, w * step);
                    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + step);
                    if (lo < hi)
                        pool.emplace_back(scan_chunk, n, t, L, flavor, lo, hi, std::ref(state));
                }
                for (auto& th : pool) th.join();
            }
            const std::uint64_t fail = state.first_fail.load();
            row.holds = fail == UINT64_MAX ? ScanHolds::yes : ScanHolds::no;
            row.checked = fail == UINT64_MAX ? total : fail + 1;
        } else {
            Rng rng(opts.seed);
            std::uint64_t fail = UINT64_MAX;
            for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
                auto c = UnorderedPairColoring::random(n, t, rng.split(trial).seed());
                std::vector<Color> cells(m);
                std::size_t j = 0;
                for (Vertex b = 1; b < n; ++b)
                    for (Vertex a = 0; a < b; ++a) cells[j++] = c.color(a, b);
                if (!has_mono_path(n, cells, L, flavor)) {
                    fail = trial;
                    break;
                }
            }
            row.holds = fail == UINT64_MAX ? ScanHolds::undetermined : ScanHolds::no;
            row.checked = fail == UINT64_MAX ? opts.trials : fail + 1;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace plab::paths

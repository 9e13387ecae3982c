#include "plab/coloring.hpp"

#include <algorithm>
#include <set>

namespace plab {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::missing_pair: return "MissingPair";
        case Errc::duplicate_pair: return "DuplicatePair";
        case Errc::self_pair: return "SelfPair";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::equal_branches: return "EqualBranches";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::palette_too_large: return "PaletteTooLarge";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::bad_colors: return "BadColors";
        case Errc::already_present: return "AlreadyPresent";
        case Errc::validity_lost: return "ValidityLost";
        case Errc::no_room: return "NoRoom";
        case Errc::bad_h: return "BadH";
        case Errc::not_below: return "NotBelow";
        case Errc::infeasible: return "Infeasible";
        case Errc::bad_ladder: return "BadLadder";
        case Errc::config_invalid: return "ConfigInvalid";
    }
    return "Unknown";
}

std::vector<std::uint32_t> Rng::sample_sorted(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace detail {

CellStore::CellStore(std::size_t cells, bool dense) : dense_(dense) {
    if (dense_) {
        flat_.assign(cells, 0);
        present_.assign(cells, false);
    }
}

void CellStore::set(std::size_t idx, Color c) {
    if (dense_) {
        if (!present_[idx]) ++assigned_count_;
        present_[idx] = true;
        flat_[idx] = c;
    } else {
        if (map_.emplace(idx, c).second)
            ++assigned_count_;
        else
            map_[idx] = c;
    }
}

Color CellStore::get(std::size_t idx) const {
    if (dense_) return flat_[idx];
    return map_.at(idx);
}

bool CellStore::assigned(std::size_t idx) const {
    if (dense_) return present_[idx];
    return map_.count(idx) != 0;
}

} // namespace detail

std::size_t UnorderedPairColoring::index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

Color UnorderedPairColoring::color(Vertex a, Vertex b) const {
    if (a == b) throw Error(Errc::self_pair, "color lookup on (a,a)");
    if (a >= n_ || b >= n_) throw Error(Errc::out_of_range, "vertex beyond n");
    return cells_.get(index(a, b));
}

UnorderedPairColoring UnorderedPairColoring::from_entries(std::size_t n,
                                                          std::span<const PairEntry> entries) {
    UnorderedPairColoring c;
    c.n_ = n;
    const std::size_t total = n * (n - (n ? 1 : 0)) / 2;
    c.cells_ = detail::CellStore(total, n <= kDenseLimit);
    for (const auto& e : entries) {
        if (e.a == e.b) throw Error(Errc::self_pair, "entry (a,a)");
        if (e.a >= n || e.b >= n) throw Error(Errc::out_of_range, "entry vertex beyond n");
        const std::size_t idx = c.index(e.a, e.b);
        if (c.cells_.assigned(idx)) throw Error(Errc::duplicate_pair, "pair assigned twice");
        c.cells_.set(idx, e.color);
    }
    if (c.cells_.assigned_count() != total)
        throw Error(Errc::missing_pair, std::to_string(total - c.cells_.assigned_count()) +
                                            " unassigned pairs");
    return c;
}

UnorderedPairColoring UnorderedPairColoring::random(std::size_t n, Color palette_size,
                                                    std::uint64_t seed) {
    if (palette_size < 1) throw Error(Errc::bad_colors, "palette_size must be >= 1");
    UnorderedPairColoring c;
    c.n_ = n;
    const std::size_t total = n * (n - (n ? 1 : 0)) / 2;
    c.cells_ = detail::CellStore(total, n <= kDenseLimit);
    Rng rng(seed);
    for (Vertex b = 1; b < n; ++b)
        for (Vertex a = 0; a < b; ++a)
            c.cells_.set(c.index(a, b), static_cast<Color>(rng.below(palette_size)));
    return c;
}

std::vector<Color> UnorderedPairColoring::palette() const {
    std::set<Color> seen;
    for_each_pair([&](Vertex, Vertex, Color col) { seen.insert(col); });
    return {seen.begin(), seen.end()};
}

bool operator==(const UnorderedPairColoring& x, const UnorderedPairColoring& y) {
    if (x.n_ != y.n_) return false;
    bool same = true;
    x.for_each_pair([&](Vertex a, Vertex b, Color col) {
        if (col != y.color(a, b)) same = false;
    });
    return same;
}

std::size_t OrderedPairColoring::index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * n_ + b;
}

Color OrderedPairColoring::color(Vertex a, Vertex b) const {
    if (a == b) throw Error(Errc::self_pair, "color lookup on (a,a)");
    if (a >= n_ || b >= n_) throw Error(Errc::out_of_range, "vertex beyond n");
    return cells_.get(index(a, b));
}

OrderedPairColoring OrderedPairColoring::from_entries(std::size_t n,
                                                      std::span<const PairEntry> entries) {
    OrderedPairColoring c;
    c.n_ = n;
    c.cells_ = detail::CellStore(n * n, n <= kDenseLimit);
    for (const auto& e : entries) {
        if (e.a == e.b) throw Error(Errc::self_pair, "entry (a,a)");
        if (e.a >= n || e.b >= n) throw Error(Errc::out_of_range, "entry vertex beyond n");
        const std::size_t idx = c.index(e.a, e.b);
        if (c.cells_.assigned(idx)) throw Error(Errc::duplicate_pair, "pair assigned twice");
        c.cells_.set(idx, e.color);
    }
    const std::size_t total = n * (n - (n ? 1 : 0));
    if (c.cells_.assigned_count() != total)
        throw Error(Errc::missing_pair, std::to_string(total - c.cells_.assigned_count()) +
                                            " unassigned ordered pairs");
    return c;
}

OrderedPairColoring OrderedPairColoring::random(std::size_t n, Color palette_size,
                                                std::uint64_t seed) {
    if (palette_size < 1) throw Error(Errc::bad_colors, "palette_size must be >= 1");
    OrderedPairColoring c;
    c.n_ = n;
    c.cells_ = detail::CellStore(n * n, n <= kDenseLimit);
    Rng rng(seed);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b) c.cells_.set(c.index(a, b), static_cast<Color>(rng.below(palette_size)));
    return c;
}

std::vector<Color> OrderedPairColoring::palette() const {
    std::set<Color> seen;
    for_each_pair([&](Vertex, Vertex, Color col) { seen.insert(col); });
    return {seen.begin(), seen.end()};
}

bool operator==(const OrderedPairColoring& x, const OrderedPairColoring& y) {
    if (x.n_ != y.n_) return false;
    bool same = true;
    x.for_each_pair([&](Vertex a, Vertex b, Color col) {
        if (col != y.color(a, b)) same = false;
    });
    return same;
}

std::uint32_t longest_increasing_subsequence(std::span<const Vertex> labels) {
    std::vector<Vertex> tails; // tails[k] = least tail of an increasing subsequence of length k+1
    for (Vertex x : labels) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<std::uint32_t>(tails.size());
}

std::vector<std::size_t> lis_positions(std::span<const Vertex> labels) {
    const std::size_t L = labels.size();
    std::vector<std::size_t> pile_pos; // position whose value is the current tail of each pile
    std::vector<Vertex> tails;
    std::vector<std::size_t> prev(L, SIZE_MAX);
    for (std::size_t i = 0; i < L; ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), labels[i]);
        const std::size_t k = static_cast<std::size_t>(it - tails.begin());
        if (k > 0) prev[i] = pile_pos[k - 1];
        if (it == tails.end()) {
            tails.push_back(labels[i]);
            pile_pos.push_back(i);
        } else {
            *it = labels[i];
            pile_pos[k] = i;
        }
    }
    std::vector<std::size_t> out;
    if (tails.empty()) return out;
    for (std::size_t p = pile_pos.back(); p != SIZE_MAX; p = prev[p]) out.push_back(p);
    std::reverse(out.begin(), out.end());
    return out;
}

RectangleVerdict verify_rectangle(const RectangleColoring& c, std::span<const std::size_t> row_set,
                                  std::span<const std::size_t> col_set, int i) {
    for (std::size_t r : row_set)
        if (r >= c.rows()) throw Error(Errc::out_of_range, "row beyond bounds");
    for (std::size_t col : col_set)
        if (col >= c.cols()) throw Error(Errc::out_of_range, "col beyond bounds");
    for (std::size_t r : row_set)
        for (std::size_t col : col_set)
            if (static_cast<int>(c.get(r, col)) != i) return {false, r, col};
    return {};
}

} // namespace plab

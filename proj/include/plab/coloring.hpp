#ifndef PLAB_COLORING_HPP
#define PLAB_COLORING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "plab/errors.hpp"
#include "plab/rng.hpp"

namespace plab {

// Vertices are natural-number labels; the only structure any search uses is
// their order.
using Vertex = std::uint32_t;
using Color = std::uint32_t;

enum class PairKind { unordered, ordered };

struct PairEntry {
    Vertex a;
    Vertex b;
    Color color;
};

// Dense storage below this vertex count, hash map above.
inline constexpr std::size_t kDenseLimit = 1u << 12;

namespace detail {

// Shared storage for both pair-coloring kinds. `cells` is the number of
// addressable pairs; callers map (a,b) to a flat index.
class CellStore {
public:
    CellStore() = default;
    CellStore(std::size_t cells, bool dense);

    void set(std::size_t idx, Color c);
    Color get(std::size_t idx) const;
    bool assigned(std::size_t idx) const;
    std::size_t assigned_count() const { return assigned_count_; }

private:
    bool dense_ = true;
    std::size_t assigned_count_ = 0;
    std::vector<Color> flat_;
    std::vector<bool> present_;
    std::unordered_map<std::size_t, Color> map_;
};

} // namespace detail

// Total coloring of the unordered pairs {a,b}, a != b, over [0, n).
class UnorderedPairColoring {
public:
    UnorderedPairColoring() = default;

    // Requires one entry per pair; throws missing_pair / duplicate_pair /
    // self_pair / out_of_range otherwise.
    static UnorderedPairColoring from_entries(std::size_t n, std::span<const PairEntry> entries);

    // Colors drawn uniformly from [0, palette_size); deterministic per seed.
    static UnorderedPairColoring random(std::size_t n, Color palette_size, std::uint64_t seed);

    std::size_t size() const { return n_; }
    Color color(Vertex a, Vertex b) const;

    template <typename Fn> // Fn(Vertex a, Vertex b, Color) with a < b
    void for_each_pair(Fn&& fn) const {
        for (Vertex b = 1; b < n_; ++b)
            for (Vertex a = 0; a < b; ++a) fn(a, b, color(a, b));
    }

    std::vector<Color> palette() const;

    friend bool operator==(const UnorderedPairColoring&, const UnorderedPairColoring&);

private:
    std::size_t index(Vertex a, Vertex b) const;

    std::size_t n_ = 0;
    detail::CellStore cells_;
};

// Total coloring of the ordered pairs (a,b), a != b, over [0, n).
class OrderedPairColoring {
public:
    OrderedPairColoring() = default;

    static OrderedPairColoring from_entries(std::size_t n, std::span<const PairEntry> entries);
    static OrderedPairColoring random(std::size_t n, Color palette_size, std::uint64_t seed);

    std::size_t size() const { return n_; }
    Color color(Vertex a, Vertex b) const;

    template <typename Fn> // Fn(Vertex a, Vertex b, Color) over all a != b
    void for_each_pair(Fn&& fn) const {
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = 0; b < n_; ++b)
                if (a != b) fn(a, b, color(a, b));
    }

    std::vector<Color> palette() const;

    friend bool operator==(const OrderedPairColoring&, const OrderedPairColoring&);

private:
    std::size_t index(Vertex a, Vertex b) const;

    std::size_t n_ = 0;
    detail::CellStore cells_;
};

// A path certificate: the vertex sequence, the color of every consecutive
// edge, and the length of the longest strictly increasing label subsequence.
struct PathWitness {
    std::vector<Vertex> vertices;
    std::vector<Color> edge_colors;
    std::uint32_t lis_length = 0;
};

// Exact longest strictly increasing subsequence length, O(L log L).
std::uint32_t longest_increasing_subsequence(std::span<const Vertex> labels);

// Positions (not values) of one longest strictly increasing subsequence.
std::vector<std::size_t> lis_positions(std::span<const Vertex> labels);

// Checks the witness against the coloring it claims to come from:
// consecutive vertices distinct, edge_colors match, lis recomputes, and the
// labels strictly increase when `increasing` is set.
template <typename Coloring>
bool revalidate_witness(const Coloring& c, const PathWitness& w, bool increasing = false) {
    if (w.vertices.empty()) return false;
    if (w.edge_colors.size() + 1 != w.vertices.size()) return false;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (w.vertices[i] >= c.size()) return false;
        if (i > 0) {
            if (w.vertices[i] == w.vertices[i - 1]) return false;
            if (increasing && w.vertices[i] <= w.vertices[i - 1]) return false;
            if (c.color(w.vertices[i - 1], w.vertices[i]) != w.edge_colors[i - 1]) return false;
        }
    }
    return w.lis_length == longest_increasing_subsequence(w.vertices);
}

// 0/1 coloring of a rows x cols grid.
class RectangleColoring {
public:
    RectangleColoring() = default;
    RectangleColoring(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), bits_(rows * cols, false) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool v) { bits_.at(r * cols_ + c) = v; }
    bool get(std::size_t r, std::size_t c) const { return bits_.at(r * cols_ + c); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<bool> bits_;
};

struct RectangleVerdict {
    bool valid = true;
    std::size_t row = 0; // offending cell when invalid
    std::size_t col = 0;
};

// Valid iff every cell of A x B equals i; first offending cell otherwise
// (rows scanned in the given order). Throws out_of_range on bad indices.
RectangleVerdict verify_rectangle(const RectangleColoring& c, std::span<const std::size_t> row_set,
                                  std::span<const std::size_t> col_set, int i);

} // namespace plab

#endif

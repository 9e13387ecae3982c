#ifndef PLAB_POLARIZED_HPP
#define PLAB_POLARIZED_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plab/coloring.hpp"
#include "plab/path_search.hpp"

namespace plab::polarized {

enum class EnumMode { cyclic, permuted };

// Finite model of the diagonalization setting: a universe [0, N), a family
// of N distinct M-subsets, a ladder mu_0 < ... < mu_{k-1} = M, and for every
// alpha >= 1 two enumerations of [0, alpha) of "length M": sub(alpha, eps)
// picks the family index re-enumerated below alpha, ord(alpha, eta) the
// eta-th label below alpha. Cyclic mode reduces both to residues; permuted
// mode applies per-alpha seeded permutations to the residue.
struct PolarizedInstance {
    std::uint32_t N = 0;
    std::uint32_t M = 0;
    std::vector<std::uint32_t> cof;          // strictly increasing, back() == M
    std::vector<std::vector<Vertex>> family; // N distinct sorted M-subsets of [0, N)
    EnumMode mode = EnumMode::cyclic;
    std::uint64_t perm_seed = 0;

    std::uint32_t sub(std::uint32_t alpha, std::uint32_t eps) const;
    Vertex ord(std::uint32_t alpha, std::uint32_t eta) const;
    const std::vector<std::uint32_t>& ord_perm(std::uint32_t alpha) const;

    // filled by build_instance for permuted mode
    std::vector<std::vector<std::uint32_t>> sub_perms; // index alpha, size alpha
    std::vector<std::vector<std::uint32_t>> ord_perms;
};

// Explicit family or seeded (N distinct M-subsets). Throws infeasible when
// C(N, M) < N, bad_ladder on a malformed ladder.
PolarizedInstance build_instance(std::uint32_t N, std::uint32_t M, std::vector<std::uint32_t> cof,
                                 std::optional<std::vector<std::vector<Vertex>>> explicit_family,
                                 EnumMode mode, std::uint64_t seed);

// Greedy table gamma(alpha, eps) = least element of B_{alpha eps} excluded
// neither by {gamma(ord(alpha,eta), zeta) : eta < eps, zeta <= eps} nor by
// earlier picks of the same row. Cells whose eligible set is empty are
// recorded as failures, not errors: at finite scale the exclusion set can
// exhaust an M-subset.
struct GammaTable {
    std::uint32_t N = 0, M = 0;
    std::vector<std::int64_t> cells; // row-major N x M, -1 = undefined
    std::vector<std::pair<std::uint32_t, std::uint32_t>> failures;

    bool defined(std::uint32_t alpha, std::uint32_t eps) const {
        return cells[static_cast<std::size_t>(alpha) * M + eps] >= 0;
    }
    Vertex at(std::uint32_t alpha, std::uint32_t eps) const {
        return static_cast<Vertex>(cells[static_cast<std::size_t>(alpha) * M + eps]);
    }
    // Unique row index with gamma(alpha, eps) == value (rows are injective).
    std::optional<std::uint32_t> eps_of(std::uint32_t alpha, Vertex value) const;
};

GammaTable build_gamma(const PolarizedInstance& inst);

// N x N 0/1 grid: cell (alpha, beta) = 1 iff beta appears in row alpha.
RectangleColoring coloring_from_gamma(const PolarizedInstance& inst, const GammaTable& g);

struct CrossRowVerdict {
    bool valid = true;
    std::uint32_t alpha = 0, eta = 0, eps = 0, zeta = 0; // witness when invalid
    Vertex value = 0;
};

// The cross-row observation: eta < eps and gamma(ord(alpha,eta), zeta) ==
// gamma(alpha, eps) force eps < zeta (over defined cells).
CrossRowVerdict check_cross_row_order(const PolarizedInstance& inst, const GammaTable& g);

struct RefuteResult {
    bool found = false;
    Vertex alpha = 0; // row inside A
    Vertex beta = 0;  // = gamma(alpha, eps), a member of B
    std::uint32_t eps = 0;
};

// A 1-cell inside A x family[beta_B] witnessing that the rectangle is not
// 0-monochromatic: the smallest alpha in A above beta_B with a defined eps
// such that sub(alpha, eps) == beta_B.
RefuteResult refute_zero_rectangle(const PolarizedInstance& inst, const GammaTable& g,
                                   std::span<const Vertex> A, std::uint32_t beta_B);

std::vector<Vertex> row_ones(const RectangleColoring& c, Vertex alpha);

// Columns colored 1 against every row of S.
std::vector<Vertex> compute_T(const RectangleColoring& c, std::span<const Vertex> S);

// Minimal eta with ord(delta, eta) == gamma. Throws not_below when
// gamma >= delta.
std::uint32_t link_eta(const PolarizedInstance& inst, Vertex gamma, Vertex delta);

struct DescentVerdict {
    bool valid = true;
    std::string clause; // "descent" | "rho-floor" | "subset" | "cardinality" | "eps-undefined"
    Vertex gamma = 0;
    Vertex alpha = 0, alpha_next = 0;
    std::uint32_t eps_alpha = 0, eps_next = 0, eta = 0;
    std::uint32_t link_max = 0; // L(S)
    std::uint32_t rho = 0;      // L(S) + 1
    std::size_t t_size = 0;
    std::size_t bound = 0; // rho * |S|
};

// The finite descent property over a strictly increasing S in [1, N):
// (i) for consecutive alpha < alpha' with link_eta(alpha, alpha') < eps(alpha'),
//     the row indices strictly descend: eps(alpha') < eps(alpha);
// (ii) when |S| >= M+1, every gamma in T(S) has some alpha in S with
//     eps(alpha) < rho, so T(S) is covered by {gamma(alpha,eps) : eps < rho}
//     and |T(S)| <= rho * |S|.
DescentVerdict descent_bound_check(const PolarizedInstance& inst, const GammaTable& g,
                                   const RectangleColoring& c, std::span<const Vertex> S);

// Pair coloring on S (relabelled 0..|S|-1): d(i,j) = least n with
// link_eta(S[i], S[j]) < cof[n], overflow color |cof| when the ladder is
// exhausted.
UnorderedPairColoring ladder_level_coloring(const PolarizedInstance& inst, std::span<const Vertex> S);

struct GlueReport {
    std::vector<Vertex> s0; // vertices of the best one-color increasing path in d
    Color mono_color = 0;
    bool mono_overflow = false;
    std::uint32_t link_max_s0 = 0;
    bool t_subset_ok = false;     // T(S) ⊆ T(S0)
    bool ladder_bound_ok = false; // link_max_s0 <= cof[mono_color] (skipped on overflow)
    DescentVerdict descent;       // over S0
    std::size_t t_size = 0, t0_size = 0;

    std::vector<Vertex> s0_small_palette; // best increasing path with <= 2 colors of d
    bool palette_bound_ok = true;

    bool ok() const {
        return t_subset_ok && ladder_bound_ok && descent.valid && palette_bound_ok;
    }
};

// Composition: derive d on S, find the longest one-color increasing path
// (and the <= 2 color variant), restrict to its vertex set S0 and verify the
// inclusion, ladder and descent bounds.
GlueReport glue_ipath(const PolarizedInstance& inst, const GammaTable& g,
                      const RectangleColoring& c, std::span<const Vertex> S);

} // namespace plab::polarized

#endif

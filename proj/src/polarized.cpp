#include "plab/polarized.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace plab::polarized {

// both enumerations exist only for alpha >= 1 (nothing lies below 0)

std::uint32_t PolarizedInstance::sub(std::uint32_t alpha, std::uint32_t eps) const {
    assert(alpha >= 1);
    const std::uint32_t r = eps % alpha;
    return mode == EnumMode::cyclic ? r : sub_perms[alpha][r];
}

Vertex PolarizedInstance::ord(std::uint32_t alpha, std::uint32_t eta) const {
    assert(alpha >= 1);
    const std::uint32_t r = eta % alpha;
    return mode == EnumMode::cyclic ? r : ord_perms[alpha][r];
}

const std::vector<std::uint32_t>& PolarizedInstance::ord_perm(std::uint32_t alpha) const {
    return ord_perms[alpha];
}

namespace {

// C(n, k) >= need, computed without overflow.
bool binomial_at_least(std::uint64_t n, std::uint64_t k, std::uint64_t need) {
    if (k > n) return need == 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (result >= need) return true;
        result = result * (n - i) / (i + 1);
    }
    return result >= need;
}

} // namespace

PolarizedInstance build_instance(std::uint32_t N, std::uint32_t M, std::vector<std::uint32_t> cof,
                                 std::optional<std::vector<std::vector<Vertex>>> explicit_family,
                                 EnumMode mode, std::uint64_t seed) {
    if (M > N || M == 0 || N == 0) throw Error(Errc::infeasible, "need 0 < M <= N");
    if (cof.empty() || cof.back() != M) throw Error(Errc::bad_ladder, "ladder must end at M");
    for (std::size_t i = 0; i < cof.size(); ++i) {
        if (cof[i] == 0) throw Error(Errc::bad_ladder, "ladder entries must be positive");
        if (i > 0 && cof[i] <= cof[i - 1])
            throw Error(Errc::bad_ladder, "ladder must strictly increase");
    }
    if (!binomial_at_least(N, M, N))
        throw Error(Errc::infeasible, "fewer than N distinct M-subsets of [0,N)");

    PolarizedInstance inst;
    inst.N = N;
    inst.M = M;
    inst.cof = std::move(cof);
    inst.mode = mode;
    inst.perm_seed = seed;

    if (explicit_family) {
        inst.family = std::move(*explicit_family);
        if (inst.family.size() != N) throw Error(Errc::infeasible, "family must have N members");
        std::set<std::vector<Vertex>> seen;
        for (auto& B : inst.family) {
            std::sort(B.begin(), B.end());
            if (B.size() != M) throw Error(Errc::infeasible, "family member size != M");
            for (Vertex x : B)
                if (x >= N) throw Error(Errc::out_of_range, "family member beyond N");
            if (std::adjacent_find(B.begin(), B.end()) != B.end())
                throw Error(Errc::duplicate_pair, "repeated element in a family member");
            if (!seen.insert(B).second)
                throw Error(Errc::duplicate_pair, "family members must be distinct");
        }
    } else {
        Rng rng(seed);
        std::set<std::vector<Vertex>> seen;
        while (inst.family.size() < N) {
            auto pick32 = rng.sample_sorted(N, M);
            std::vector<Vertex> B(pick32.begin(), pick32.end());
            if (seen.insert(B).second) inst.family.push_back(std::move(B));
        }
    }

    if (mode == EnumMode::permuted) {
        inst.sub_perms.resize(N);
        inst.ord_perms.resize(N);
        Rng rng(seed);
        for (std::uint32_t alpha = 1; alpha < N; ++alpha) {
            Rng rs = rng.split(2 * alpha);
            Rng ro = rng.split(2 * alpha + 1);
            inst.sub_perms[alpha] = rs.permutation(alpha);
            inst.ord_perms[alpha] = ro.permutation(alpha);
        }
    }
    return inst;
}

std::optional<std::uint32_t> GammaTable::eps_of(std::uint32_t alpha, Vertex value) const {
    for (std::uint32_t eps = 0; eps < M; ++eps)
        if (defined(alpha, eps) && at(alpha, eps) == value) return eps;
    return std::nullopt;
}

GammaTable build_gamma(const PolarizedInstance& inst) {
    GammaTable g;
    g.N = inst.N;
    g.M = inst.M;
    g.cells.assign(static_cast<std::size_t>(inst.N) * inst.M, -1);
    std::vector<char> excluded(inst.N, 0);
    for (std::uint32_t alpha = 1; alpha < inst.N; ++alpha) {
        for (std::uint32_t eps = 0; eps < inst.M; ++eps) {
            std::fill(excluded.begin(), excluded.end(), 0);
            for (std::uint32_t eta = 0; eta < eps; ++eta) {
                const Vertex row = inst.ord(alpha, eta);
                for (std::uint32_t zeta = 0; zeta <= eps; ++zeta)
                    if (g.defined(row, zeta)) excluded[g.at(row, zeta)] = 1;
            }
            for (std::uint32_t zeta = 0; zeta < eps; ++zeta) // row-injectivity
                if (g.defined(alpha, zeta)) excluded[g.at(alpha, zeta)] = 1;
            const auto& B = inst.family[inst.sub(alpha, eps)];
            std::int64_t pick = -1;
            for (Vertex candidate : B)
                if (!excluded[candidate]) {
                    pick = candidate;
                    break;
                }
            if (pick < 0)
                g.failures.emplace_back(alpha, eps);
            else
                g.cells[static_cast<std::size_t>(alpha) * inst.M + eps] = pick;
        }
    }
    return g;
}

RectangleColoring coloring_from_gamma(const PolarizedInstance& inst, const GammaTable& g) {
    RectangleColoring c(inst.N, inst.N);
    for (std::uint32_t alpha = 0; alpha < inst.N; ++alpha)
        for (std::uint32_t eps = 0; eps < inst.M; ++eps)
            if (g.defined(alpha, eps)) c.set(alpha, g.at(alpha, eps), true);
    return c;
}

CrossRowVerdict check_cross_row_order(const PolarizedInstance& inst, const GammaTable& g) {
    for (std::uint32_t alpha = 1; alpha < inst.N; ++alpha)
        for (std::uint32_t eps = 1; eps < inst.M; ++eps) {
            if (!g.defined(alpha, eps)) continue;
            const Vertex value = g.at(alpha, eps);
            for (std::uint32_t eta = 0; eta < eps; ++eta) {
                const Vertex row = inst.ord(alpha, eta);
                for (std::uint32_t zeta = 0; zeta < inst.M; ++zeta)
                    if (g.defined(row, zeta) && g.at(row, zeta) == value && !(eps < zeta))
                        return {false, alpha, eta, eps, zeta, value};
            }
        }
    return {};
}

RefuteResult refute_zero_rectangle(const PolarizedInstance& inst, const GammaTable& g,
                                   std::span<const Vertex> A, std::uint32_t beta_B) {
    if (beta_B >= inst.N) throw Error(Errc::out_of_range, "family index beyond N");
    std::vector<Vertex> rows(A.begin(), A.end());
    std::sort(rows.begin(), rows.end());
    if (!rows.empty() && rows.back() >= inst.N)
        throw Error(Errc::out_of_range, "row set beyond N");
    for (Vertex alpha : rows) {
        if (alpha <= beta_B) continue;
        for (std::uint32_t eps = 0; eps < inst.M; ++eps)
            if (inst.sub(alpha, eps) == beta_B && g.defined(alpha, eps))
                return {true, alpha, g.at(alpha, eps), eps};
    }
    return {};
}

std::vector<Vertex> row_ones(const RectangleColoring& c, Vertex alpha) {
    if (alpha >= c.rows()) throw Error(Errc::out_of_range, "row beyond N");
    std::vector<Vertex> out;
    for (std::size_t beta = 0; beta < c.cols(); ++beta)
        if (c.get(alpha, beta)) out.push_back(static_cast<Vertex>(beta));
    return out;
}

std::vector<Vertex> compute_T(const RectangleColoring& c, std::span<const Vertex> S) {
    std::vector<Vertex> out;
    if (S.empty()) return out;
    for (std::size_t beta = 0; beta < c.cols(); ++beta) {
        bool all = true;
        for (Vertex alpha : S)
            if (!c.get(alpha, beta)) {
                all = false;
                break;
            }
        if (all) out.push_back(static_cast<Vertex>(beta));
    }
    return out;
}

std::uint32_t link_eta(const PolarizedInstance& inst, Vertex gamma, Vertex delta) {
    if (gamma >= delta) throw Error(Errc::not_below, "need gamma < delta");
    if (inst.mode == EnumMode::cyclic) return gamma;
    const auto& perm = inst.ord_perms[delta];
    for (std::uint32_t eta = 0; eta < delta; ++eta)
        if (perm[eta] == gamma) return eta;
    throw Error(Errc::out_of_range, "permutation misses gamma"); // unreachable
}

DescentVerdict descent_bound_check(const PolarizedInstance& inst, const GammaTable& g,
                                   const RectangleColoring& c, std::span<const Vertex> S) {
    DescentVerdict out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1 || S[i] >= inst.N) throw Error(Errc::out_of_range, "S must lie in [1,N)");
        if (i > 0 && S[i] <= S[i - 1])
            throw Error(Errc::out_of_range, "S must be strictly increasing");
    }
    if (S.size() >= 2) {
        for (std::size_t i = 0; i + 1 < S.size(); ++i)
            out.link_max = std::max(out.link_max, link_eta(inst, S[i], S[i + 1]));
    }
    out.rho = out.link_max + 1;
    const std::vector<Vertex> T = compute_T(c, S);
    out.t_size = T.size();
    out.bound = static_cast<std::size_t>(out.rho) * S.size();

    for (Vertex gamma : T) {
        std::vector<std::uint32_t> eps(S.size());
        for (std::size_t i = 0; i < S.size(); ++i) {
            const auto e = g.eps_of(S[i], gamma);
            if (!e) {
                out.valid = false;
                out.clause = "eps-undefined";
                out.gamma = gamma;
                out.alpha = S[i];
                return out;
            }
            eps[i] = *e;
        }
        // (i) consecutive descent forced by the cross-row exclusion
        for (std::size_t i = 0; i + 1 < S.size(); ++i) {
            const std::uint32_t eta = link_eta(inst, S[i], S[i + 1]);
            if (eta < eps[i + 1] && !(eps[i + 1] < eps[i])) {
                out.valid = false;
                out.clause = "descent";
                out.gamma = gamma;
                out.alpha = S[i];
                out.alpha_next = S[i + 1];
                out.eps_alpha = eps[i];
                out.eps_next = eps[i + 1];
                out.eta = eta;
                return out;
            }
        }
        // (ii) a long S forces a row index below rho
        if (S.size() >= inst.M + 1) {
            bool below = false;
            for (std::size_t i = 0; i < S.size(); ++i)
                if (eps[i] < out.rho) {
                    below = true;
                    break;
                }
            if (!below) {
                out.valid = false;
                out.clause = "rho-floor";
                out.gamma = gamma;
                return out;
            }
        }
    }

    if (S.size() >= inst.M + 1) {
        // coverage: T(S) inside {gamma(alpha, eps) : alpha in S, eps < rho}
        std::set<Vertex> cover;
        for (Vertex alpha : S)
            for (std::uint32_t eps = 0; eps < std::min(out.rho, inst.M); ++eps)
                if (g.defined(alpha, eps)) cover.insert(g.at(alpha, eps));
        for (Vertex gamma : T)
            if (!cover.count(gamma)) {
                out.valid = false;
                out.clause = "subset";
                out.gamma = gamma;
                return out;
            }
        if (T.size() > out.bound) {
            out.valid = false;
            out.clause = "cardinality";
            return out;
        }
    }
    return out;
}

UnorderedPairColoring ladder_level_coloring(const PolarizedInstance& inst, std::span<const Vertex> S) {
    const std::size_t n = S.size();
    std::vector<PairEntry> entries;
    entries.reserve(n * (n ? n - 1 : 0) / 2);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const std::uint32_t link = link_eta(inst, S[i], S[j]);
            Color d = static_cast<Color>(inst.cof.size()); // overflow color
            for (std::size_t lvl = 0; lvl < inst.cof.size(); ++lvl)
                if (link < inst.cof[lvl]) {
                    d = static_cast<Color>(lvl);
                    break;
                }
            entries.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), d});
        }
    return UnorderedPairColoring::from_entries(n, entries);
}

GlueReport glue_ipath(const PolarizedInstance& inst, const GammaTable& g,
                      const RectangleColoring& c, std::span<const Vertex> S) {
    GlueReport rep;
    const UnorderedPairColoring d = ladder_level_coloring(inst, S);

    const auto per_color = paths::longest_mono_ipath(d);
    PathWitness best;
    Color best_color = 0;
    for (const auto& [color, witness] : per_color)
        if (witness.vertices.size() > best.vertices.size()) {
            best = witness;
            best_color = color;
        }
    rep.mono_color = best_color;
    rep.mono_overflow = best_color >= inst.cof.size();
    for (Vertex idx : best.vertices) rep.s0.push_back(S[idx]);

    const auto T_S = compute_T(c, S);
    const auto T_S0 = compute_T(c, rep.s0);
    rep.t_size = T_S.size();
    rep.t0_size = T_S0.size();
    rep.t_subset_ok = std::includes(T_S0.begin(), T_S0.end(), T_S.begin(), T_S.end());

    for (std::size_t i = 0; i + 1 < rep.s0.size(); ++i)
        rep.link_max_s0 = std::max(rep.link_max_s0, link_eta(inst, rep.s0[i], rep.s0[i + 1]));
    rep.ladder_bound_ok = rep.mono_overflow || rep.link_max_s0 <= inst.cof[rep.mono_color];

    rep.descent = descent_bound_check(inst, g, c, rep.s0);

    const PathWitness palette_path = paths::longest_small_palette_ipath(d, 2);
    std::uint32_t palette_link_max = 0;
    Color palette_top = 0;
    for (std::size_t i = 0; i + 1 < palette_path.vertices.size(); ++i) {
        const Vertex a = S[palette_path.vertices[i]];
        const Vertex b = S[palette_path.vertices[i + 1]];
        palette_link_max = std::max(palette_link_max, link_eta(inst, a, b));
        palette_top = std::max(palette_top, palette_path.edge_colors[i]);
    }
    for (Vertex idx : palette_path.vertices) rep.s0_small_palette.push_back(S[idx]);
    rep.palette_bound_ok =
        palette_top >= inst.cof.size() || palette_path.vertices.size() < 2 ||
        palette_link_max <= inst.cof[palette_top];
    return rep;
}

} // namespace plab::polarized

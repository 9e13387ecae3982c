#include "plab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace plab::harness {

Caps caps_from_env() {
    Caps caps;
    if (const char* cap = std::getenv("PARTITION_LAB_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && v > 0) caps.enumeration = v;
    }
    return caps;
}

namespace {

struct TrialResult {
    bool ok = true;
    json detail;                  // per-trial verdict row
    std::optional<json> witness;  // violation payload when !ok
};

using TrialFn = std::function<TrialResult(std::uint64_t trial, Rng rng)>;

// Index-striped fan-out; results land in their trial slot, so the merged
// report is identical for any worker count. A throwing trial aborts the run:
// the lowest-index exception is rethrown after the pool drains.
void run_trials(const RunOptions& opts, const TrialFn& fn, Report& report) {
    const std::uint64_t trials = opts.trials;
    std::vector<TrialResult> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    Rng root(opts.seed);
    auto worker = [&](unsigned w, unsigned stride) {
        for (std::uint64_t i = w; i < trials; i += stride) {
            try {
                results[i] = fn(i, root.split(i));
            } catch (...) {
                errors[i] = std::current_exception();
                return;
            }
        }
    };
    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || trials <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w, workers);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    report.trials = trials;
    json per_trial = json::array();
    for (std::uint64_t i = 0; i < trials; ++i) {
        per_trial.push_back(results[i].detail);
        if (!results[i].ok) {
            ++report.failures;
            if (results[i].witness) {
                json w = *results[i].witness;
                w["trial"] = i;
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.results["per_trial"] = std::move(per_trial);
}

std::uint64_t require_u64(const json& params, const char* key) {
    if (!params.contains(key)) throw Error(Errc::config_invalid, std::string(key) + " missing");
    return params.at(key).get<std::uint64_t>();
}

// ---- path-search ----

void run_path_search(const json& params, const RunOptions& opts, Report& report) {
    const std::string search = params.value("search", "mono-ipath");
    const bool fixed = params.contains("coloring") && !params.at("coloring").contains("random");

    auto make_unordered = [&](Rng rng) {
        if (fixed) return io::unordered_from_json(params.at("coloring"));
        const auto& r = params.at("coloring").at("random");
        return UnorderedPairColoring::random(r.at("n").get<std::size_t>(),
                                             r.at("palette").get<Color>(), rng.seed());
    };
    auto make_ordered = [&](Rng rng) {
        if (fixed) return io::ordered_from_json(params.at("coloring"));
        const auto& r = params.at("coloring").at("random");
        return OrderedPairColoring::random(r.at("n").get<std::size_t>(),
                                           r.at("palette").get<Color>(), rng.seed());
    };

    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        if (search == "mono-ipath") {
            const auto c = make_unordered(rng);
            const auto per_color = paths::longest_mono_ipath(c);
            std::size_t best = 0;
            for (const auto& [color, w] : per_color) {
                if (!revalidate_witness(c, w, /*increasing=*/true)) {
                    out.ok = false;
                    out.witness = io::to_json(w);
                }
                best = std::max(best, w.vertices.size());
            }
            out.detail = {{"ok", out.ok}, {"colors", per_color.size()}, {"best_len", best}};
        } else if (search == "mono-simple") {
            const auto c = make_unordered(rng);
            const Color color = params.value("color", 0u);
            const auto res =
                paths::longest_mono_simple_path(c, color, params.value("budget", 1000000ull));
            out.ok = revalidate_witness(c, res.witness);
            if (!out.ok) out.witness = io::to_json(res.witness);
            out.detail = {{"ok", out.ok},
                          {"exact", res.exact},
                          {"best_len", res.witness.vertices.size()}};
        } else if (search == "small-palette") {
            const auto c = make_unordered(rng);
            const auto w = paths::longest_small_palette_ipath(c, params.value("k", 2u),
                                                              opts.caps.palette_subsets);
            std::set<Color> used(w.edge_colors.begin(), w.edge_colors.end());
            out.ok = revalidate_witness(c, w, /*increasing=*/true) &&
                     used.size() <= params.value("k", 2u);
            if (!out.ok) out.witness = io::to_json(w);
            out.detail = {{"ok", out.ok}, {"best_len", w.vertices.size()},
                          {"palette", used.size()}};
        } else if (search == "greedy-pivot") {
            const auto c = make_unordered(rng);
            const auto w = paths::greedy_pivot_path(c);
            std::set<Color> used(w.edge_colors.begin(), w.edge_colors.end());
            out.ok = revalidate_witness(c, w) && used.size() <= 1;
            if (!out.ok) out.witness = io::to_json(w);
            out.detail = {{"ok", out.ok}, {"len", w.vertices.size()}};
        } else if (search == "two-color") {
            const auto c = make_ordered(rng);
            const auto res = paths::two_color_ordered_path(c);
            out.ok = revalidate_witness(c, res.witness) && res.palette.size() <= 2;
            if (!out.ok) out.witness = io::to_json(res.witness);
            out.detail = {{"ok", out.ok},
                          {"len", res.witness.vertices.size()},
                          {"palette", res.palette.size()}};
        } else {
            throw Error(Errc::config_invalid, "unknown search: " + search);
        }
        return out;
    };
    run_trials(opts, fn, report);
}

// ---- ramsey-scan ----

void run_ramsey_scan(const json& params, const RunOptions& opts, Report& report) {
    paths::ScanOptions sopts;
    sopts.cap = opts.caps.enumeration;
    sopts.workers = opts.workers;
    sopts.seed = opts.seed;
    if (params.contains("mode") && params.at("mode").is_object()) {
        sopts.exhaustive = false;
        sopts.trials = params.at("mode").at("sampled").at("trials").get<std::uint64_t>();
    }
    const auto flavor = params.value("flavor", "increasing") == std::string("simple")
                            ? paths::ScanFlavor::simple
                            : paths::ScanFlavor::increasing;
    const auto rows = paths::ramsey_scan(
        static_cast<std::uint32_t>(require_u64(params, "n_max")),
        static_cast<std::uint32_t>(require_u64(params, "t")),
        static_cast<std::uint32_t>(require_u64(params, "L")), flavor, sopts);

    json jrows = json::array();
    bool seen_yes = false;
    for (const auto& row : rows) {
        jrows.push_back(io::to_json(row));
        if (row.exhaustive) {
            if (row.holds == paths::ScanHolds::yes) seen_yes = true;
            if (seen_yes && row.holds == paths::ScanHolds::no) {
                ++report.failures; // monotonicity in n broke
                report.witnesses.push_back(io::to_json(row));
            }
        }
    }
    report.trials = rows.size();
    report.results["rows"] = std::move(jrows);
}

// ---- branch ----

void run_branch(const json& params, const RunOptions& opts, Report& report) {
    const bool fixed = params.contains("family");
    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        const auto fam = fixed ? io::branch_family_from_json(params.at("family"))
                               : branches::BranchFamily::random(
                                     static_cast<std::uint32_t>(require_u64(params, "k")),
                                     static_cast<std::uint32_t>(require_u64(params, "depth")),
                                     rng.seed());
        const auto c = branches::build_branch_coloring(fam);
        const auto verdict = branches::check_no_mono_3path(c);
        bool partner_ok = true;
        const std::size_t n = c.size();
        for (Vertex a = 0; a < n && partner_ok; ++a)
            for (Vertex b = a + 1; b < n && partner_ok; ++b) {
                const std::uint32_t m = branches::departure_level(fam.branches[a], fam.branches[b]);
                const Color x = c.color(a, b), y = c.color(b, a);
                partner_ok = std::min(x, y) == 2 * m && std::max(x, y) == 2 * m + 1;
            }
        out.ok = verdict.valid && partner_ok;
        if (!out.ok) {
            json w = io::to_json(verdict);
            w["partner_ok"] = partner_ok;
            out.witness = w;
        }
        out.detail = {{"ok", out.ok}, {"branches", fam.branches.size()}};
        return out;
    };
    run_trials(opts, fn, report);
}

// ---- forcing ----

forcing::Flavor flavor_param(const json& params) {
    return forcing::flavor_from_name(params.value("flavor", "injective"));
}

void run_forcing_validate(const json& params, const RunOptions& opts, Report& report) {
    const auto flavor = flavor_param(params);
    const auto cond = io::condition_from_json(params.at("condition"));
    TrialFn fn = [&](std::uint64_t, Rng) -> TrialResult {
        TrialResult out;
        const auto verdict = forcing::is_valid(cond, flavor);
        out.ok = verdict.valid;
        if (!out.ok) out.witness = io::to_json(verdict);
        out.detail = {{"ok", out.ok}, {"size", cond.size()}};
        return out;
    };
    run_trials(opts, fn, report);
}

void run_forcing_extend(const json& params, const RunOptions& opts, Report& report) {
    const auto flavor = flavor_param(params);
    const auto bump = params.value("bump", 2u);
    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        forcing::Condition cond;
        if (params.contains("condition")) cond = io::condition_from_json(params.at("condition"));
        try {
            if (params.contains("chain")) {
                for (const auto& a : params.at("chain"))
                    cond = forcing::extend_with_vertex(cond, a.get<Vertex>(), flavor, bump);
            } else {
                const auto& rc = params.at("random_chain");
                const auto length = rc.at("length").get<std::uint32_t>();
                const auto label_bound = rc.value("label_bound", 4 * length + 8);
                auto labels = rng.sample_sorted(label_bound, length);
                auto order = rng.permutation(length);
                for (std::uint32_t idx : order)
                    cond = forcing::extend_with_vertex(cond, labels[idx], flavor, bump);
            }
            out.detail = {{"ok", true}, {"size", cond.size()}};
        } catch (const forcing::ValidityLostError& lost) {
            out.ok = false;
            out.witness = io::to_json(lost.verdict);
            out.detail = {{"ok", false}, {"size", cond.size()}};
        }
        return out;
    };
    run_trials(opts, fn, report);
}

void run_forcing_amalgamate(const json& params, const RunOptions& opts, Report& report) {
    const auto flavor = flavor_param(params);
    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        forcing::Condition q;
        if (params.contains("condition")) {
            q = io::condition_from_json(params.at("condition"));
        } else {
            const auto& rc = params.at("random_chain");
            // random insertion order is the counterexample hunt; ascending
            // order is the regime where merges stay valid
            const bool random_order = rc.value("order", "ascending") == std::string("random");
            const auto length = rc.at("length").get<std::uint32_t>();
            const auto bound = rc.value("label_bound", 64u);
            q = random_order ? forcing::random_chain_condition(rng, length, bound, flavor)
                             : forcing::ascending_chain_condition(rng, length, bound, flavor);
        }
        std::optional<Vertex> delta;
        if (params.contains("delta") && params.at("delta").is_number())
            delta = params.at("delta").get<Vertex>();
        else
            delta = forcing::pick_amalgamation_delta(q, rng);
        if (!delta) {
            out.detail = {{"ok", true}, {"skipped", "no viable delta"}};
            return out;
        }
        const auto am = forcing::amalgamate(q, *delta, flavor);
        bool extends = true;
        for (const auto& part : {am.p_delta, q})
            part.for_each_edge([&](Vertex a, Vertex b, Color c) {
                if (am.merged.color(a, b) != c) extends = false;
            });
        out.ok = am.ok() && extends;
        if (!out.ok) {
            json w = io::to_json(am.verdict);
            w["extends_both"] = extends;
            w["delta"] = *delta;
            out.witness = w;
        }
        out.detail = {{"ok", out.ok}, {"delta", *delta}, {"merged_size", am.merged.size()}};
        return out;
    };
    run_trials(opts, fn, report);
}

void run_forcing_generic(const json& params, const RunOptions& opts, Report& report) {
    const auto flavor = flavor_param(params);
    const auto n = static_cast<std::uint32_t>(require_u64(params, "n"));
    const auto bump = params.value("bump", 2u);
    TrialFn fn = [&](std::uint64_t trial, Rng rng) -> TrialResult {
        TrialResult out;
        try {
            const auto g = forcing::build_generic_coloring(n, rng.seed(), flavor, bump);
            bool ok = forcing::is_valid(g.condition, flavor).valid &&
                      g.condition.size() == n; // every D_alpha met
            if (ok && params.contains("sequence_bound")) {
                const auto verdict = forcing::sequence_bound_check(
                    g.coloring, params.at("sequence_bound").get<Color>(),
                    params.value("sequence_trials", 1000ull), rng.split(1).seed());
                ok = verdict.valid;
                if (!ok) out.witness = io::to_json(verdict);
            }
            out.ok = ok;
            out.detail = {{"ok", ok}, {"n", n}};
            if (trial == 0) {
                json chain = json::array();
                for (const auto& step : g.chain) chain.push_back(io::to_json(step));
                out.detail["chain"] = std::move(chain);
            }
        } catch (const forcing::ValidityLostError& lost) {
            out.ok = false;
            out.witness = io::to_json(lost.verdict);
            out.detail = {{"ok", false}, {"n", n}};
        }
        return out;
    };
    run_trials(opts, fn, report);
}

void run_forcing_ccc(const json& params, const RunOptions& opts, Report& report) {
    const auto flavor = flavor_param(params);
    const auto root = params.value("root", std::vector<Vertex>{2, 5});
    const auto tail = static_cast<std::uint32_t>(params.value("tail", 3u));
    const auto count = static_cast<std::uint32_t>(params.value("count", 100u));
    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        const auto family = forcing::seeded_condition_family(root, tail, count, rng.seed());
        const auto res = forcing::ccc_experiment(family, flavor);
        out.ok = res.found && res.verdict.valid;
        if (!out.ok) {
            out.witness = json{{"diagnostics", res.diagnostics},
                               {"verdict", io::to_json(res.verdict)}};
        }
        out.detail = {{"ok", out.ok},
                      {"pair", json::array({res.first, res.second})},
                      {"extension_size", res.extension.size()}};
        return out;
    };
    run_trials(opts, fn, report);
}

// ---- polarized ----

std::vector<std::uint32_t> ladder_param(const json& params, std::uint32_t M, Rng& rng) {
    if (params.contains("cof") && params.at("cof").is_array())
        return params.at("cof").get<std::vector<std::uint32_t>>();
    // seeded ladder: a few strictly increasing steps ending at M
    std::vector<std::uint32_t> cof;
    if (M <= 1) return {M};
    const std::uint32_t steps = 1 + static_cast<std::uint32_t>(rng.below(std::min(3u, M - 1) + 1));
    auto below_m = rng.sample_sorted(M - 1, std::min(steps, M - 1));
    for (auto v : below_m) cof.push_back(v + 1);
    cof.push_back(M);
    return cof;
}

struct PolarizedSetup {
    polarized::PolarizedInstance inst;
    polarized::GammaTable gamma;
    RectangleColoring coloring;
};

PolarizedSetup polarized_setup(const json& params, Rng& rng) {
    PolarizedSetup s;
    if (params.contains("instance")) {
        s.inst = io::instance_from_json(params.at("instance"));
    } else {
        const auto N = static_cast<std::uint32_t>(require_u64(params, "N"));
        const auto M = static_cast<std::uint32_t>(require_u64(params, "M"));
        const auto mode = params.value("enum", "permuted") == std::string("cyclic")
                              ? polarized::EnumMode::cyclic
                              : polarized::EnumMode::permuted;
        s.inst = polarized::build_instance(N, M, ladder_param(params, M, rng), std::nullopt, mode,
                                           rng.split(1).seed());
    }
    s.gamma = polarized::build_gamma(s.inst);
    s.coloring = polarized::coloring_from_gamma(s.inst, s.gamma);
    return s;
}

json construction_checks(const PolarizedSetup& s, bool& ok) {
    const auto& inst = s.inst;
    const auto& g = s.gamma;
    bool membership = true, row_injective = true, row_bound = true;
    for (std::uint32_t alpha = 0; alpha < inst.N; ++alpha) {
        std::set<Vertex> row;
        for (std::uint32_t eps = 0; eps < inst.M; ++eps) {
            if (!g.defined(alpha, eps)) continue;
            const Vertex v = g.at(alpha, eps);
            const auto& B = inst.family[inst.sub(alpha, eps)];
            if (!std::binary_search(B.begin(), B.end(), v)) membership = false;
            if (!row.insert(v).second) row_injective = false;
        }
        if (polarized::row_ones(s.coloring, alpha).size() > inst.M) row_bound = false;
    }
    const auto cross_row = polarized::check_cross_row_order(inst, g);
    ok = membership && row_injective && row_bound && cross_row.valid;
    json j;
    j["membership"] = membership;
    j["row_injective"] = row_injective;
    j["row_bound"] = row_bound;
    j["cross_row"] = io::to_json(cross_row);
    j["gamma_failures"] = g.failures.size();
    return j;
}

void run_polarized_build(const json& params, const RunOptions& opts, Report& report) {
    TrialFn fn = [&](std::uint64_t trial, Rng rng) -> TrialResult {
        TrialResult out;
        auto s = polarized_setup(params, rng);
        out.detail = construction_checks(s, out.ok);
        out.detail["ok"] = out.ok;
        if (!out.ok) out.witness = out.detail;
        if (trial == 0 && params.value("include_table", false)) {
            out.detail["gamma"] = io::to_json(s.gamma);
            out.detail["coloring"] = io::to_json(s.coloring);
        }
        return out;
    };
    run_trials(opts, fn, report);
}

void run_polarized_verify(const json& params, const RunOptions& opts, Report& report) {
    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        auto s = polarized_setup(params, rng);
        out.detail = construction_checks(s, out.ok);
        // every family index with a defined cell must yield a refuting 1-cell
        std::size_t refuted = 0, refutable = 0;
        for (std::uint32_t beta_B = 0; beta_B < s.inst.N && out.ok; ++beta_B) {
            std::vector<Vertex> A;
            for (Vertex a = beta_B + 1; a < s.inst.N; ++a) A.push_back(a);
            bool expect = false;
            for (Vertex alpha : A)
                for (std::uint32_t eps = 0; eps < s.inst.M && !expect; ++eps)
                    expect = s.inst.sub(alpha, eps) == beta_B && s.gamma.defined(alpha, eps);
            const auto res = polarized::refute_zero_rectangle(s.inst, s.gamma, A, beta_B);
            if (expect) ++refutable;
            if (res.found != expect) {
                out.ok = false;
                out.witness = json{{"beta_B", beta_B}, {"expected", expect}};
                break;
            }
            if (!res.found) continue;
            const auto rect = verify_rectangle(
                s.coloring, std::vector<std::size_t>(A.begin(), A.end()),
                std::vector<std::size_t>(s.inst.family[beta_B].begin(),
                                         s.inst.family[beta_B].end()),
                0);
            if (rect.valid || !s.coloring.get(res.alpha, res.beta)) {
                out.ok = false;
                out.witness = json{{"beta_B", beta_B}, {"alpha", res.alpha}, {"beta", res.beta}};
                break;
            }
            ++refuted;
        }
        out.detail["refuted"] = refuted;
        out.detail["refutable"] = refutable;
        out.detail["ok"] = out.ok;
        return out;
    };
    run_trials(opts, fn, report);
}

std::vector<Vertex> sample_S(const polarized::PolarizedInstance& inst, std::size_t size, Rng& rng) {
    auto raw = rng.sample_sorted(inst.N - 1, static_cast<std::uint32_t>(size));
    std::vector<Vertex> S;
    for (auto v : raw) S.push_back(v + 1); // into [1, N)
    return S;
}

void run_polarized_descent(const json& params, const RunOptions& opts, Report& report) {
    const auto samples = params.value("samples", 50ull);
    TrialFn fn = [&](std::uint64_t, Rng rng) -> TrialResult {
        TrialResult out;
        auto s = polarized_setup(params, rng);
        const std::size_t s_size = params.value("S_size", s.inst.M + 1);
        for (std::uint64_t k = 0; k < samples; ++k) {
            Rng sr = rng.split(1000 + k);
            const auto S = sample_S(s.inst, std::min<std::size_t>(s_size, s.inst.N - 1), sr);
            const auto verdict = polarized::descent_bound_check(s.inst, s.gamma, s.coloring, S);
            if (!verdict.valid) {
                out.ok = false;
                json w = io::to_json(verdict);
                w["S"] = S;
                out.witness = w;
                break;
            }
        }
        out.detail = {{"ok", out.ok}, {"samples", samples}};
        return out;
    };
    run_trials(opts, fn, report);
}

void run_polarized_glue(const json& params, const RunOptions& opts, Report& report) {
    const auto samples = params.value("samples", 20ull);
    TrialFn fn = [&](std::uint64_t trial, Rng rng) -> TrialResult {
        TrialResult out;
        auto s = polarized_setup(params, rng);
        const std::size_t s_size = params.value("S_size", s.inst.M + 1);
        for (std::uint64_t k = 0; k < samples; ++k) {
            Rng sr = rng.split(1000 + k);
            const auto S = sample_S(s.inst, std::min<std::size_t>(s_size, s.inst.N - 1), sr);
            if (S.size() < 2) continue;
            const auto rep = polarized::glue_ipath(s.inst, s.gamma, s.coloring, S);
            if (trial == 0 && k == 0) out.detail["first"] = io::to_json(rep);
            if (!rep.ok()) {
                out.ok = false;
                json w = io::to_json(rep);
                w["S"] = S;
                out.witness = w;
                break;
            }
        }
        out.detail["ok"] = out.ok;
        out.detail["samples"] = samples;
        return out;
    };
    run_trials(opts, fn, report);
}

} // namespace

const std::vector<std::string>& known_kinds() {
    static const std::vector<std::string> kinds = {
        "path-search",      "ramsey-scan",       "branch",
        "forcing-validate", "forcing-extend",    "forcing-amalgamate",
        "forcing-generic",  "forcing-ccc",       "polarized-build",
        "polarized-verify", "polarized-descent", "polarized-glue",
    };
    return kinds;
}

Report run(const std::string& kind, const json& params, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.config = params;
    report.config["kind"] = kind;
    report.config["seed"] = opts.seed;
    report.config["trials"] = opts.trials;
    report.results = json::object();

    if (kind == "path-search")
        run_path_search(params, opts, report);
    else if (kind == "ramsey-scan")
        run_ramsey_scan(params, opts, report);
    else if (kind == "branch")
        run_branch(params, opts, report);
    else if (kind == "forcing-validate")
        run_forcing_validate(params, opts, report);
    else if (kind == "forcing-extend")
        run_forcing_extend(params, opts, report);
    else if (kind == "forcing-amalgamate")
        run_forcing_amalgamate(params, opts, report);
    else if (kind == "forcing-generic")
        run_forcing_generic(params, opts, report);
    else if (kind == "forcing-ccc")
        run_forcing_ccc(params, opts, report);
    else if (kind == "polarized-build")
        run_polarized_build(params, opts, report);
    else if (kind == "polarized-verify")
        run_polarized_verify(params, opts, report);
    else if (kind == "polarized-descent")
        run_polarized_descent(params, opts, report);
    else if (kind == "polarized-glue")
        run_polarized_glue(params, opts, report);
    else
        throw Error(Errc::config_invalid, "unknown kind: " + kind);

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    return report;
}

std::string emit(const Report& report, Format format) {
    if (format == Format::csv) {
        if (report.results.contains("rows")) {
            std::ostringstream os;
            os << "n,t,L,flavor,mode,holds,checked\n";
            for (const auto& row : report.results.at("rows"))
                os << row.at("n").get<std::uint64_t>() << ',' << row.at("t").get<std::uint64_t>()
                   << ',' << row.at("L").get<std::uint64_t>() << ','
                   << row.at("flavor").get<std::string>() << ','
                   << row.at("mode").get<std::string>() << ','
                   << row.at("holds").get<std::string>() << ','
                   << row.at("checked").get<std::uint64_t>() << '\n';
            return os.str();
        }
        std::ostringstream os;
        os << "kind,trials,failures\n"
           << report.config.at("kind").get<std::string>() << ',' << report.trials << ','
           << report.failures << '\n';
        return os.str();
    }
    json doc;
    doc["version"] = kVersion;
    doc["config"] = report.config;
    doc["trials"] = report.trials;
    doc["failures"] = report.failures;
    doc["results"] = report.results;
    doc["witnesses"] = report.witnesses;
    return doc.dump(2) + "\n";
}

} // namespace plab::harness

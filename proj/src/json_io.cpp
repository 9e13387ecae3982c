#include "plab/json_io.hpp"

#include <sstream>

namespace plab::io {

namespace {

json cells_json(const std::vector<std::array<std::uint64_t, 3>>& rows) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({r[0], r[1], r[2]});
    return arr;
}

} // namespace

json to_json(const UnorderedPairColoring& c) {
    std::vector<std::array<std::uint64_t, 3>> rows;
    for (Vertex a = 0; a + 1 < c.size(); ++a)
        for (Vertex b = a + 1; b < c.size(); ++b) rows.push_back({a, b, c.color(a, b)});
    json j;
    j["n"] = c.size();
    j["kind"] = "unordered";
    j["cells"] = cells_json(rows);
    return j;
}

json to_json(const OrderedPairColoring& c) {
    std::vector<std::array<std::uint64_t, 3>> rows;
    for (Vertex a = 0; a < c.size(); ++a)
        for (Vertex b = 0; b < c.size(); ++b)
            if (a != b) rows.push_back({a, b, c.color(a, b)});
    json j;
    j["n"] = c.size();
    j["kind"] = "ordered";
    j["cells"] = cells_json(rows);
    return j;
}

json to_json(const RectangleColoring& c) {
    json rows = json::array();
    for (std::size_t r = 0; r < c.rows(); ++r) {
        std::string row(c.cols(), '0');
        for (std::size_t col = 0; col < c.cols(); ++col)
            if (c.get(r, col)) row[col] = '1';
        rows.push_back(std::move(row));
    }
    json j;
    j["rows"] = c.rows();
    j["cols"] = c.cols();
    j["cells"] = rows;
    return j;
}

namespace {

std::vector<PairEntry> entries_from_json(const json& j) {
    std::vector<PairEntry> entries;
    for (const auto& cell : j.at("cells"))
        entries.push_back({cell.at(0).get<Vertex>(), cell.at(1).get<Vertex>(),
                           cell.at(2).get<Color>()});
    return entries;
}

} // namespace

UnorderedPairColoring unordered_from_json(const json& j) {
    if (j.value("kind", "unordered") != "unordered")
        throw Error(Errc::config_invalid, "expected an unordered coloring");
    const auto entries = entries_from_json(j);
    return UnorderedPairColoring::from_entries(j.at("n").get<std::size_t>(), entries);
}

OrderedPairColoring ordered_from_json(const json& j) {
    if (j.value("kind", "ordered") != "ordered")
        throw Error(Errc::config_invalid, "expected an ordered coloring");
    const auto entries = entries_from_json(j);
    return OrderedPairColoring::from_entries(j.at("n").get<std::size_t>(), entries);
}

json to_json(const PathWitness& w) {
    json j;
    j["vertices"] = w.vertices;
    j["colors"] = w.edge_colors;
    j["lis"] = w.lis_length;
    return j;
}

PathWitness witness_from_json(const json& j) {
    PathWitness w;
    w.vertices = j.at("vertices").get<std::vector<Vertex>>();
    w.edge_colors = j.at("colors").get<std::vector<Color>>();
    w.lis_length = j.at("lis").get<std::uint32_t>();
    return w;
}

json to_json(const branches::BranchFamily& fam) {
    json j;
    j["depth"] = fam.depth;
    j["branches"] = fam.branches;
    return j;
}

branches::BranchFamily branch_family_from_json(const json& j) {
    auto fam = branches::BranchFamily::from_strings(j.at("branches").get<std::vector<std::string>>());
    if (j.contains("depth") && j.at("depth").get<std::uint32_t>() != fam.depth)
        throw Error(Errc::length_mismatch, "depth field disagrees with branch lengths");
    return fam;
}

json to_json(const branches::TripleVerdict& v) {
    json j;
    j["valid"] = v.valid;
    if (!v.valid) {
        j["triple"] = {v.a, v.b, v.c};
        j["color"] = v.color;
    }
    return j;
}

json to_json(const forcing::Condition& cond) {
    json j;
    j["u"] = cond.labels();
    json f = json::array();
    cond.for_each_edge([&](Vertex a, Vertex b, Color c) { f.push_back({a, b, c}); });
    j["f"] = f;
    return j;
}

forcing::Condition condition_from_json(const json& j) {
    std::vector<PairEntry> entries;
    for (const auto& cell : j.at("f"))
        entries.push_back({cell.at(0).get<Vertex>(), cell.at(1).get<Vertex>(),
                           cell.at(2).get<Color>()});
    return forcing::Condition::from_entries(j.at("u").get<std::vector<Vertex>>(), entries);
}

json to_json(const forcing::Verdict& v) {
    json j;
    j["valid"] = v.valid;
    if (!v.valid) {
        j["sequence"] = v.sequence;
        j["v"] = v.increasing_positions;
        j["max_color"] = v.max_color;
    }
    return j;
}

forcing::Verdict forcing_verdict_from_json(const json& j) {
    forcing::Verdict v;
    v.valid = j.at("valid").get<bool>();
    if (!v.valid) {
        v.sequence = j.at("sequence").get<std::vector<Vertex>>();
        v.increasing_positions = j.at("v").get<std::vector<std::size_t>>();
        v.max_color = j.at("max_color").get<Color>();
    }
    return v;
}

json to_json(const forcing::ChainStep& step) {
    json j;
    j["alpha"] = step.alpha;
    json edges = json::array();
    for (const auto& [beta, color] : step.edges) {
        json e;
        e["beta"] = beta;
        e["color"] = color;
        edges.push_back(e);
    }
    j["edges"] = edges;
    return j;
}

json to_json(const polarized::PolarizedInstance& inst) {
    json j;
    j["N"] = inst.N;
    j["M"] = inst.M;
    j["cof"] = inst.cof;
    j["family"] = inst.family;
    if (inst.mode == polarized::EnumMode::cyclic)
        j["enum"] = "cyclic";
    else
        j["enum"] = json{{"permuted", inst.perm_seed}};
    return j;
}

polarized::PolarizedInstance instance_from_json(const json& j) {
    polarized::EnumMode mode = polarized::EnumMode::cyclic;
    std::uint64_t seed = 0;
    if (j.contains("enum")) {
        const auto& e = j.at("enum");
        if (e.is_string() && e.get<std::string>() == "cyclic") {
            mode = polarized::EnumMode::cyclic;
        } else if (e.is_object() && e.contains("permuted")) {
            mode = polarized::EnumMode::permuted;
            seed = e.at("permuted").get<std::uint64_t>();
        } else {
            throw Error(Errc::config_invalid, "enum must be \"cyclic\" or {\"permuted\": seed}");
        }
    }
    std::optional<std::vector<std::vector<Vertex>>> family;
    if (j.contains("family")) family = j.at("family").get<std::vector<std::vector<Vertex>>>();
    return polarized::build_instance(j.at("N").get<std::uint32_t>(), j.at("M").get<std::uint32_t>(),
                                     j.at("cof").get<std::vector<std::uint32_t>>(),
                                     std::move(family), mode, seed);
}

json to_json(const polarized::GammaTable& g) {
    json rows = json::array();
    for (std::uint32_t alpha = 0; alpha < g.N; ++alpha) {
        json row = json::array();
        for (std::uint32_t eps = 0; eps < g.M; ++eps)
            row.push_back(g.cells[static_cast<std::size_t>(alpha) * g.M + eps]);
        rows.push_back(row);
    }
    json j;
    j["rows"] = rows;
    json failures = json::array();
    for (const auto& [alpha, eps] : g.failures) failures.push_back({alpha, eps});
    j["failures"] = failures;
    return j;
}

json to_json(const polarized::CrossRowVerdict& v) {
    json j;
    j["valid"] = v.valid;
    if (!v.valid) {
        j["alpha"] = v.alpha;
        j["eta"] = v.eta;
        j["eps"] = v.eps;
        j["zeta"] = v.zeta;
        j["value"] = v.value;
    }
    return j;
}

json to_json(const polarized::DescentVerdict& v) {
    json j;
    j["valid"] = v.valid;
    j["link_max"] = v.link_max;
    j["rho"] = v.rho;
    j["t_size"] = v.t_size;
    j["bound"] = v.bound;
    if (!v.valid) {
        j["clause"] = v.clause;
        j["gamma"] = v.gamma;
        j["alpha"] = v.alpha;
        j["alpha_next"] = v.alpha_next;
        j["eps_alpha"] = v.eps_alpha;
        j["eps_next"] = v.eps_next;
        j["eta"] = v.eta;
    }
    return j;
}

json to_json(const polarized::GlueReport& rep) {
    json j;
    j["ok"] = rep.ok();
    j["s0"] = rep.s0;
    j["mono_color"] = rep.mono_color;
    j["mono_overflow"] = rep.mono_overflow;
    j["link_max_s0"] = rep.link_max_s0;
    j["t_subset_ok"] = rep.t_subset_ok;
    j["ladder_bound_ok"] = rep.ladder_bound_ok;
    j["t_size"] = rep.t_size;
    j["t0_size"] = rep.t0_size;
    j["descent"] = to_json(rep.descent);
    j["s0_small_palette"] = rep.s0_small_palette;
    j["palette_bound_ok"] = rep.palette_bound_ok;
    return j;
}

json to_json(const paths::ScanRow& row) {
    json j;
    j["n"] = row.n;
    j["t"] = row.t;
    j["L"] = row.L;
    j["flavor"] = row.flavor == paths::ScanFlavor::increasing ? "increasing" : "simple";
    j["mode"] = row.exhaustive ? "exhaustive" : "sampled";
    j["holds"] = row.holds == paths::ScanHolds::yes
                     ? "true"
                     : (row.holds == paths::ScanHolds::no ? "false" : "undetermined");
    j["checked"] = row.checked;
    return j;
}

std::string scan_csv(std::span<const paths::ScanRow> rows) {
    std::ostringstream os;
    os << "n,t,L,flavor,mode,holds,checked\n";
    for (const auto& row : rows) {
        os << row.n << ',' << row.t << ',' << row.L << ','
           << (row.flavor == paths::ScanFlavor::increasing ? "increasing" : "simple") << ','
           << (row.exhaustive ? "exhaustive" : "sampled") << ','
           << (row.holds == paths::ScanHolds::yes
                   ? "true"
                   : (row.holds == paths::ScanHolds::no ? "false" : "undetermined"))
           << ',' << row.checked << '\n';
    }
    return os.str();
}

} // namespace plab::io

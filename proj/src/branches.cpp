#include "plab/branches.hpp"

#include <set>

namespace plab::branches {

BranchFamily BranchFamily::from_strings(std::vector<std::string> branches) {
    BranchFamily fam;
    if (branches.empty()) throw Error(Errc::out_of_range, "empty branch family");
    fam.depth = static_cast<std::uint32_t>(branches[0].size());
    std::set<std::string> seen;
    for (const auto& b : branches) {
        if (b.size() != fam.depth) throw Error(Errc::length_mismatch, "branch lengths differ");
        for (char ch : b)
            if (ch != '0' && ch != '1') throw Error(Errc::out_of_range, "branch digit not 0/1");
        if (!seen.insert(b).second) throw Error(Errc::equal_branches, "duplicate branch " + b);
    }
    fam.branches = std::move(branches);
    return fam;
}

BranchFamily BranchFamily::random(std::uint32_t k, std::uint32_t depth, std::uint64_t seed) {
    if (depth == 0) throw Error(Errc::out_of_range, "depth must be >= 1");
    if (depth < 26 && k > (1u << depth))
        throw Error(Errc::infeasible, "more branches than the tree has");
    Rng rng(seed);
    std::set<std::string> seen;
    std::vector<std::string> out;
    while (out.size() < k) {
        std::string b(depth, '0');
        for (auto& ch : b) ch = rng.coin() ? '1' : '0';
        if (seen.insert(b).second) out.push_back(std::move(b));
    }
    BranchFamily fam;
    fam.depth = depth;
    fam.branches = std::move(out);
    return fam;
}

std::uint32_t departure_level(std::string_view x, std::string_view y) {
    if (x.size() != y.size()) throw Error(Errc::length_mismatch, "branch lengths differ");
    for (std::size_t m = 0; m < x.size(); ++m)
        if (x[m] != y[m]) return static_cast<std::uint32_t>(m);
    throw Error(Errc::equal_branches, "branches are equal");
}

OrderedPairColoring build_branch_coloring(const BranchFamily& fam) {
    const std::size_t n = fam.branches.size();
    if (n < 2) throw Error(Errc::out_of_range, "need at least two branches");
    std::vector<PairEntry> entries;
    entries.reserve(n * (n - 1));
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a == b) continue;
            const std::uint32_t m = departure_level(fam.branches[a], fam.branches[b]);
            const bool a_zero = fam.branches[a][m] == '0';
            entries.push_back({a, b, a_zero ? 2 * m : 2 * m + 1});
        }
    }
    return OrderedPairColoring::from_entries(n, entries);
}

TripleVerdict check_no_mono_3path(const OrderedPairColoring& c) {
    const std::size_t n = c.size();
    std::vector<Color> mat(n * n, 0);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b) mat[a * n + b] = c.color(a, b);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (b == a) continue;
            for (Vertex g = 0; g < n; ++g) {
                if (g == a || g == b) continue;
                if (mat[a * n + b] == mat[b * n + g])
                    return {false, a, b, g, mat[a * n + b]};
            }
        }
    return {};
}

} // namespace plab::branches

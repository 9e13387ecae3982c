#ifndef PLAB_BRANCHES_HPP
#define PLAB_BRANCHES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plab/coloring.hpp"

namespace plab::branches {

// Finite stand-in for a family of distinct branches of the full binary tree:
// equal-length 0/1 strings, pairwise distinct.
struct BranchFamily {
    std::uint32_t depth = 0;
    std::vector<std::string> branches;

    static BranchFamily from_strings(std::vector<std::string> branches);
    static BranchFamily random(std::uint32_t k, std::uint32_t depth, std::uint64_t seed);
};

// Least level where the two strings differ. Throws equal_branches /
// length_mismatch.
std::uint32_t departure_level(std::string_view x, std::string_view y);

// Ordered-pair coloring from departure levels: with m the departure level of
// branches a and b, color(a,b) = 2m when branch a reads 0 and branch b reads
// 1 at level m, and 2m+1 in the opposite case. The two orientations of a
// pair always receive the partner colors {2m, 2m+1}.
OrderedPairColoring build_branch_coloring(const BranchFamily& fam);

struct TripleVerdict {
    bool valid = true;
    Vertex a = 0, b = 0, c = 0; // witness triple when invalid
    Color color = 0;            // the shared color of (a,b) and (b,c)
};

// Valid iff no distinct a,b,c have color(a,b) == color(b,c).
TripleVerdict check_no_mono_3path(const OrderedPairColoring& c);

} // namespace plab::branches

#endif

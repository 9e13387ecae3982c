#ifndef PLAB_FORCING_HPP
#define PLAB_FORCING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "plab/coloring.hpp"
#include "plab/rng.hpp"

namespace plab::forcing {

// The defining bound on a condition: for every admissible vertex sequence
// from u, every strictly increasing subsequence is shorter than the largest
// consecutive-edge color. `injective` admits sequences of distinct vertices;
// `walk` admits repeats as long as consecutive vertices differ. Walk validity
// implies injective validity.
enum class Flavor { injective, walk };

const char* flavor_name(Flavor f);
Flavor flavor_from_name(std::string_view name);

struct Verdict {
    bool valid = true;
    std::vector<Vertex> sequence;                  // violating sequence when invalid
    std::vector<std::size_t> increasing_positions; // v: positions of an increasing subsequence
    Color max_color = 0;                           // max consecutive color of the sequence
};

// A finite partial coloring: a sorted label set u and a total color map on
// its unordered pairs, colors >= 1. Construction checks only structure; the
// path bound is checked by is_valid and enforced by the building operations.
class Condition {
public:
    Condition() = default;

    static Condition from_entries(std::vector<Vertex> u, std::span<const PairEntry> f);
    // Internal trusted constructor: u sorted unique, colors triangular by
    // position pairs (i<j at index j*(j-1)/2+i), all >= 1.
    static Condition from_parts(std::vector<Vertex> u, std::vector<Color> colors);

    std::size_t size() const { return u_.size(); }
    bool empty() const { return u_.empty(); }
    const std::vector<Vertex>& labels() const { return u_; }
    const std::vector<Color>& triangular() const { return f_; }

    bool contains(Vertex a) const;
    std::size_t position(Vertex a) const; // throws out_of_range when absent

    Color color(Vertex a, Vertex b) const;
    Color color_at(std::size_t i, std::size_t j) const;

    template <typename Fn> // Fn(Vertex a, Vertex b, Color) with a < b
    void for_each_edge(Fn&& fn) const {
        for (std::size_t j = 1; j < u_.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) fn(u_[i], u_[j], color_at(i, j));
    }

    friend bool operator==(const Condition& x, const Condition& y) {
        return x.u_ == y.u_ && x.f_ == y.f_;
    }

private:
    std::vector<Vertex> u_; // sorted, unique
    std::vector<Color> f_;  // triangular over positions
};

struct ValidityLostError : Error {
    Verdict verdict;
    ValidityLostError(Verdict v, const std::string& what)
        : Error(Errc::validity_lost, what), verdict(std::move(v)) {}
};

// Exact decision of the path bound. Walk flavor via incremental threshold
// union-find: invalid iff some present color M has a component of size >= M
// in the graph of edges colored <= M. Injective flavor short-circuits on
// walk validity and otherwise falls back to exact bounded search (practical
// for |u| <= 12 or so).
Verdict is_valid(const Condition& cond, Flavor flavor);

// True when the verdict's witness really violates the bound for this
// condition (sequence admissible in the flavor, positions increasing in both
// index and value, |v| >= max consecutive color).
bool revalidate_verdict(const Condition& cond, const Verdict& v, Flavor flavor);

// Adds a vertex, giving each new edge the color |u^p| + bump + |u^p ∩ beta|.
// bump=2 keeps the strict bound; bump=1 reproduces the variant that fails
// already at |u^p|=1 and is pinned as a regression. Validates the result in
// the flavor; throws ValidityLostError if that ever fails, AlreadyPresent if
// alpha is in u.
Condition extend_with_vertex(const Condition& p, Vertex alpha, Flavor flavor,
                             std::uint32_t bump = 2);

// Restriction to labels < delta. Always preserves validity in both flavors.
Condition project_below(const Condition& q, Vertex delta);

// Order-isomorphic copy of q inside [0, delta): h is strictly increasing,
// the identity on u^q ∩ [0,delta), with range below delta. When h is absent
// the displaced labels move, in order, to the largest free labels below
// delta. Throws no_room / bad_h.
Condition copy_below(const Condition& q, Vertex delta,
                     const std::optional<std::vector<std::pair<Vertex, Vertex>>>& h = std::nullopt);

struct Amalgamation {
    Condition p_delta; // copy_below(q, delta)
    Condition merged;  // candidate common extension r
    Verdict verdict;   // path-bound verdict of `merged` in the requested flavor
    bool ok() const { return verdict.valid; }
};

// Merges q with its copy below delta. Colors inside either part are
// inherited; a mixed pair (a from the copy, b from q, neither in the common
// root) gets |u^r| + 2 + |u^r|*(|u^r ∩ a| + |u^r ∩ b|). The merge is NOT
// always walk-valid; an invalid verdict is a first-class outcome.
Amalgamation amalgamate(const Condition& q, Vertex delta, Flavor flavor);

// Relabels u to 0..|u|-1 preserving order and colors. Two conditions are
// order-isomorphic iff their patterns compare equal.
Condition order_pattern(const Condition& cond);

struct CccOutcome {
    bool found = false;
    std::size_t first = 0, second = 0; // indices into the input list
    Condition extension;
    Verdict verdict;
    std::string diagnostics;
};

// Buckets conditions by order pattern, then looks for a pair whose label
// sets share an initial common root and have block-ordered tails; the first
// such pair whose merge passes the flavor check is returned.
CccOutcome ccc_experiment(std::span<const Condition> conditions, Flavor flavor);

struct ChainStep {
    Vertex alpha = 0;
    std::vector<std::pair<Vertex, Color>> edges; // (existing vertex, assigned color)
};

struct GenericColoring {
    UnorderedPairColoring coloring; // total on [n]^2
    Condition condition;            // the final condition, u = [0, n)
    std::vector<ChainStep> chain;
    Flavor flavor = Flavor::walk;
    bool valid = true;
};

// Starting from the empty condition, meets every vertex of [0, n) in a
// seeded order via extend_with_vertex and returns the union coloring with
// its chain log. Propagates ValidityLostError.
GenericColoring build_generic_coloring(std::uint32_t n, std::uint64_t order_seed, Flavor flavor,
                                       std::uint32_t bump = 2);

// Finite restatement of the no-small-palette-path consequence: every
// injective sequence whose consecutive colors are all < bound has an
// increasing subsequence shorter than bound. Exhaustive for n <= 7, sampled
// otherwise. The coloring is treated as a total condition on [0, n).
Verdict sequence_bound_check(const UnorderedPairColoring& c, Color bound, std::uint64_t trials,
                        std::uint64_t seed);

// --- seeded generators for experiments and tests ---

// Arbitrary condition data (validity NOT enforced): `size` distinct labels
// below label_bound, colors uniform in [1, max_color].
Condition random_raw_condition(Rng& rng, std::size_t size, Vertex label_bound, Color max_color);

// Valid condition built by a random-order extension chain over distinct
// labels. Amalgamating such conditions can lose even injective validity
// (see the pinned counterexamples); ascending_chain_condition below is the
// variant that stays amalgamation-friendly.
Condition random_chain_condition(Rng& rng, std::size_t size, Vertex label_bound, Flavor flavor);

// Valid condition built by inserting the sampled labels in ascending order.
Condition ascending_chain_condition(Rng& rng, std::size_t size, Vertex label_bound, Flavor flavor);

// A delta for which copy_below(q, delta) succeeds with a nonempty displaced
// part, if one exists.
std::optional<Vertex> pick_amalgamation_delta(const Condition& q, Rng& rng);

// `count` pairwise order-isomorphic conditions: a shared root condition
// extended, per member, by a block of fresh labels (blocks disjoint and
// ascending with the member index, same insertion script for everyone).
std::vector<Condition> seeded_condition_family(std::span<const Vertex> root_labels,
                                               std::uint32_t tail_size, std::uint32_t count,
                                               std::uint64_t seed);

} // namespace plab::forcing

#endif

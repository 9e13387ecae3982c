#include <doctest.h>

#include "oracles.hpp"
#include "plab/forcing.hpp"
#include "plab/json_io.hpp"

using namespace plab;
using namespace plab::forcing;

namespace {

Condition triangle(Color c01, Color c12, Color c02) {
    const std::vector<PairEntry> f = {{0, 1, c01}, {1, 2, c12}, {0, 2, c02}};
    return Condition::from_entries({0, 1, 2}, f);
}

// the documented amalgamation counterexample input: u={2,5,8} built by the
// extension chain 8, 5, 2
Condition chain_258() {
    Condition c;
    for (Vertex v : {8u, 5u, 2u}) c = extend_with_vertex(c, v, Flavor::walk);
    return c;
}

} // namespace

TEST_CASE("path-bound validity, small cases") {
    CHECK(is_valid(Condition{}, Flavor::walk).valid);
    CHECK(is_valid(Condition::from_entries({7}, {}), Flavor::injective).valid);

    const auto bad = triangle(3, 3, 4);
    const auto bad_verdict = is_valid(bad, Flavor::walk);
    CHECK_FALSE(bad_verdict.valid);
    CHECK(bad_verdict.sequence == std::vector<Vertex>{0, 1, 2});
    CHECK(revalidate_verdict(bad, bad_verdict, Flavor::walk));
    CHECK_FALSE(is_valid(bad, Flavor::injective).valid); // (0,1,2) is injective too

    const auto good = triangle(3, 4, 5);
    CHECK(is_valid(good, Flavor::walk).valid);
    CHECK(is_valid(good, Flavor::injective).valid);
}

TEST_CASE("walk union-find criterion equals the state-walk oracle") {
    // exhaustive: all colorings of a 3-element u with colors 1..5
    for (Color a = 1; a <= 5; ++a)
        for (Color b = 1; b <= 5; ++b)
            for (Color c = 1; c <= 5; ++c) {
                const auto cond = triangle(a, b, c);
                const auto verdict = is_valid(cond, Flavor::walk);
                CHECK(verdict.valid == oracle::walk_valid_oracle(cond));
                if (!verdict.valid) CHECK(revalidate_verdict(cond, verdict, Flavor::walk));
            }
    // seeded conditions
    Rng rng(71);
    for (int trial = 0; trial < 1500; ++trial) {
        Rng tr = rng.split(trial);
        const auto cond = random_raw_condition(tr, 2 + tr.below(5), 40, 12);
        const auto verdict = is_valid(cond, Flavor::walk);
        CHECK(verdict.valid == oracle::walk_valid_oracle(cond));
        if (!verdict.valid) CHECK(revalidate_verdict(cond, verdict, Flavor::walk));
    }
}

TEST_CASE("injective flavor: exact search agrees with the oracle, monotone in walk") {
    Rng rng(73);
    for (int trial = 0; trial < 800; ++trial) {
        Rng tr = rng.split(trial);
        const auto cond = random_raw_condition(tr, 2 + tr.below(5), 30, 10);
        const auto walk = is_valid(cond, Flavor::walk);
        const auto inj = is_valid(cond, Flavor::injective);
        CHECK(inj.valid == oracle::injective_valid_oracle(cond));
        if (walk.valid) CHECK(inj.valid); // walk validity implies injective validity
        if (!inj.valid) CHECK(revalidate_verdict(cond, inj, Flavor::injective));
    }
}

TEST_CASE("extension formula and the off-by-one regression") {
    const std::vector<PairEntry> f59 = {{5, 9, 7}};
    const auto p = Condition::from_entries({5, 9}, f59);
    const auto q = extend_with_vertex(p, 3, Flavor::walk);
    CHECK(q.color(3, 5) == 4); // 2 + 2 + 0
    CHECK(q.color(3, 9) == 5); // 2 + 2 + 1
    CHECK(q.color(5, 9) == 7);
    CHECK(is_valid(q, Flavor::walk).valid);

    const auto single = Condition::from_entries({8}, {});
    const auto ext = extend_with_vertex(single, 5, Flavor::walk);
    CHECK(ext.color(5, 8) == 3); // 1 + 2 + 0

    // the uncorrected variant assigns color 2 to the increasing pair (5,8),
    // and 2 < 2 fails
    CHECK_THROWS_AS(static_cast<void>(extend_with_vertex(single, 5, Flavor::walk, 1)),
                    ValidityLostError);
    try {
        static_cast<void>(extend_with_vertex(single, 5, Flavor::injective, 1));
        CHECK(false);
    } catch (const ValidityLostError& lost) {
        CHECK(lost.verdict.max_color == 2);
        CHECK(lost.verdict.sequence == std::vector<Vertex>{5, 8});
    }

    CHECK_THROWS_AS(static_cast<void>(extend_with_vertex(p, 5, Flavor::walk)), Error);
    const auto from_empty = extend_with_vertex(Condition{}, 7, Flavor::walk);
    CHECK(from_empty.labels() == std::vector<Vertex>{7});
}

TEST_CASE("extension chains preserve validity in both flavors") {
    Rng rng(79);
    for (int trial = 0; trial < 300; ++trial) {
        Rng tr = rng.split(trial);
        const auto flavor = tr.coin() ? Flavor::walk : Flavor::injective;
        const auto cond = random_chain_condition(tr, 2 + tr.below(9), 64, flavor);
        CHECK(is_valid(cond, flavor).valid);
        if (cond.size() <= 6) {
            CHECK(oracle::walk_valid_oracle(cond));
            CHECK(oracle::injective_valid_oracle(cond));
        }
    }
}

TEST_CASE("projection and copy") {
    const auto q = chain_258();
    CHECK(q.color(5, 8) == 3);
    CHECK(q.color(2, 5) == 4);
    CHECK(q.color(2, 8) == 5);

    const auto p = project_below(q, 7);
    CHECK(p.labels() == std::vector<Vertex>{2, 5});
    CHECK(p.color(2, 5) == 4);
    CHECK(project_below(q, 0).empty());
    CHECK(project_below(q, 100) == q);

    const auto copy = copy_below(q, 7);
    CHECK(copy.labels() == std::vector<Vertex>{2, 5, 6});
    CHECK(copy.color(2, 5) == q.color(2, 5));
    CHECK(copy.color(5, 6) == q.color(5, 8));
    CHECK(copy.color(2, 6) == q.color(2, 8));
    CHECK(order_pattern(copy) == order_pattern(q));

    CHECK(copy_below(q, 100) == q);
    CHECK_THROWS_AS(static_cast<void>(copy_below(q, 6)), Error); // no room inside (5,6)

    // explicit h must be increasing, identity below delta, bounded by delta
    using H = std::vector<std::pair<Vertex, Vertex>>;
    const auto manual = copy_below(q, 8, H{{2, 2}, {5, 5}, {8, 6}});
    CHECK(manual.labels() == std::vector<Vertex>{2, 5, 6});
    CHECK_THROWS_AS(static_cast<void>(copy_below(q, 8, H{{2, 2}, {5, 5}, {8, 9}})), Error);
    CHECK_THROWS_AS(static_cast<void>(copy_below(q, 8, H{{2, 3}, {5, 5}, {8, 6}})), Error);
    CHECK_THROWS_AS(static_cast<void>(copy_below(q, 8, H{{2, 2}, {5, 5}})), Error);

    // copies stay valid: they are order-isomorphic
    Rng rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        Rng tr = rng.split(trial);
        const auto cond = random_chain_condition(tr, 3 + tr.below(5), 60, Flavor::walk);
        const auto delta = pick_amalgamation_delta(cond, tr);
        if (!delta) continue;
        const auto cp = copy_below(cond, *delta);
        CHECK(order_pattern(cp) == order_pattern(cond));
        CHECK(is_valid(cp, Flavor::walk).valid == is_valid(cond, Flavor::walk).valid);
        const auto pr = project_below(cond, *delta);
        CHECK(is_valid(pr, Flavor::walk).valid);
        CHECK(is_valid(pr, Flavor::injective).valid);
    }
}

TEST_CASE("amalgamation: the pinned walk counterexample and injective health") {
    const auto q = chain_258();
    const auto walk_am = amalgamate(q, 7, Flavor::walk);
    CHECK(walk_am.p_delta.labels() == std::vector<Vertex>{2, 5, 6});
    CHECK(walk_am.merged.labels() == std::vector<Vertex>{2, 5, 6, 8});
    CHECK(walk_am.merged.color(6, 8) == 26); // 4 + 2 + 4*(2+3)
    CHECK_FALSE(walk_am.ok());
    CHECK(walk_am.verdict.sequence == std::vector<Vertex>{5, 6, 5, 8});
    CHECK(walk_am.verdict.max_color == 3);
    CHECK(walk_am.verdict.increasing_positions == std::vector<std::size_t>{0, 1, 3});
    CHECK(revalidate_verdict(walk_am.merged, walk_am.verdict, Flavor::walk));

    const auto inj_am = amalgamate(q, 7, Flavor::injective);
    CHECK(inj_am.ok());
    CHECK(oracle::injective_valid_oracle(inj_am.merged));
    CHECK_FALSE(oracle::walk_valid_oracle(inj_am.merged));

    // r extends q and the copy
    for (const auto& part : {inj_am.p_delta, q})
        part.for_each_edge([&](Vertex a, Vertex b, Color c) {
            CHECK(inj_am.merged.color(a, b) == c);
        });

    // q entirely below delta: everything collapses to q
    const auto low = amalgamate(q, 100, Flavor::walk);
    CHECK(low.merged == q);
    CHECK(low.p_delta == q);
    CHECK(low.ok());
}

TEST_CASE("amalgamation keeps injective validity on ascending chains") {
    Rng rng(89);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 150; ++trial) {
        Rng tr = rng.split(trial);
        const auto q = ascending_chain_condition(tr, 3 + tr.below(4), 60, Flavor::injective);
        const auto delta = pick_amalgamation_delta(q, tr);
        if (!delta) continue;
        const auto am = amalgamate(q, *delta, Flavor::injective);
        CHECK(am.ok());
        bool extends = true;
        for (const auto& part : {am.p_delta, q})
            part.for_each_edge([&](Vertex a, Vertex b, Color c) {
                if (am.merged.color(a, b) != c) extends = false;
            });
        CHECK(extends);
        ++done;
    }
    CHECK(done >= 150);
}

TEST_CASE("amalgamation can lose injective validity on random-order chains") {
    // pinned finding: a 4-vertex chain (insertion order 11, 2, 10, 8) whose
    // merge below delta=8 admits the injective violating sequence
    // 5,6,7,2,8,10,11 with LIS 6 and max consecutive color 6
    const std::vector<PairEntry> f = {{2, 8, 5},  {2, 10, 4}, {8, 10, 6},
                                      {2, 11, 3}, {8, 11, 7}, {10, 11, 5}};
    const auto q = Condition::from_entries({2, 8, 10, 11}, f);
    CHECK(is_valid(q, Flavor::injective).valid);

    const auto am = amalgamate(q, 8, Flavor::injective);
    CHECK(am.p_delta.labels() == std::vector<Vertex>{2, 5, 6, 7});
    CHECK_FALSE(am.ok());
    CHECK(am.verdict.sequence == std::vector<Vertex>{5, 6, 7, 2, 8, 10, 11});
    CHECK(am.verdict.max_color == 6);
    CHECK(revalidate_verdict(am.merged, am.verdict, Flavor::injective));
    CHECK_FALSE(oracle::injective_valid_oracle(am.merged));

    // random-order chains reproduce this at an appreciable rate
    Rng rng(90);
    int done = 0, lost = 0;
    for (int trial = 0; trial < 600 && done < 200; ++trial) {
        Rng tr = rng.split(trial);
        const auto chain = random_chain_condition(tr, 4 + tr.below(3), 60, Flavor::injective);
        const auto delta = pick_amalgamation_delta(chain, tr);
        if (!delta) continue;
        ++done;
        const auto merged = amalgamate(chain, *delta, Flavor::injective);
        if (!merged.ok()) {
            ++lost;
            CHECK(revalidate_verdict(merged.merged, merged.verdict, Flavor::injective));
        }
    }
    CHECK(done >= 200);
    CHECK(lost > 0);
}

TEST_CASE("order pattern") {
    const std::vector<PairEntry> f = {{5, 9, 7}};
    const auto cond = Condition::from_entries({5, 9}, f);
    const auto pat = order_pattern(cond);
    CHECK(pat.labels() == std::vector<Vertex>{0, 1});
    CHECK(pat.color(0, 1) == 7);
    CHECK(order_pattern(pat) == pat);

    // same build script over disjoint label blocks gives equal patterns
    const auto fam = seeded_condition_family(std::vector<Vertex>{2, 5}, 3, 4, 31);
    REQUIRE(fam.size() == 4);
    for (const auto& cond2 : fam) CHECK(order_pattern(cond2) == order_pattern(fam[0]));
}

TEST_CASE("ccc experiment finds compatible pairs in isomorphic families") {
    const auto lonely = ccc_experiment(std::vector<Condition>{chain_258()}, Flavor::injective);
    CHECK_FALSE(lonely.found);
    CHECK(lonely.diagnostics.find("no pair") != std::string::npos);

    // three disjoint order-isomorphic copies, empty common root
    const auto triple = seeded_condition_family({}, 3, 3, 17);
    const auto res = ccc_experiment(triple, Flavor::injective);
    CHECK(res.found);
    CHECK(res.verdict.valid);
    for (const auto& idx : {res.first, res.second})
        triple[idx].for_each_edge([&](Vertex a, Vertex b, Color c) {
            CHECK(res.extension.color(a, b) == c);
        });

    const auto family = seeded_condition_family(std::vector<Vertex>{2, 5}, 3, 100, 19);
    const auto big = ccc_experiment(family, Flavor::injective);
    CHECK(big.found);
    CHECK(big.verdict.valid);
}

TEST_CASE("generic coloring: density order, totality, sequence bounds") {
    const auto empty = build_generic_coloring(0, 1, Flavor::walk);
    CHECK(empty.coloring.size() == 0);
    CHECK(empty.chain.empty());

    const auto two = build_generic_coloring(2, 5, Flavor::walk);
    CHECK(two.coloring.color(0, 1) == 3);
    CHECK(two.chain.size() == 2);

    const auto g = build_generic_coloring(32, 1, Flavor::walk);
    CHECK(g.condition.size() == 32); // every density target met
    CHECK(g.valid);
    CHECK(is_valid(g.condition, Flavor::injective).valid);
    std::uint64_t edges = 0;
    g.coloring.for_each_pair([&](Vertex, Vertex, Color c) {
        ++edges;
        CHECK(c >= 3);
    });
    CHECK(edges == 32 * 31 / 2);

    CHECK(sequence_bound_check(g.coloring, 8, 2000, 3).valid);

    const auto small = build_generic_coloring(7, 2, Flavor::walk);
    CHECK(sequence_bound_check(small.coloring, 5, 0, 0).valid); // exhaustive branch

    // larger bound than any color reduces to the global bound, still valid
    CHECK(sequence_bound_check(small.coloring, 100, 0, 0).valid);

    // bound at the color floor: no edge qualifies, vacuously valid
    CHECK(sequence_bound_check(small.coloring, 3, 0, 0).valid);

    // corrupt one edge: the cheap pair (a,b) with color 1 has LIS 2 >= 2
    std::vector<PairEntry> entries;
    small.coloring.for_each_pair([&](Vertex a, Vertex b, Color c) {
        entries.push_back({a, b, a == 0 && b == 3 ? 1u : c});
    });
    const auto corrupted = UnorderedPairColoring::from_entries(7, entries);
    const auto broken = sequence_bound_check(corrupted, 2, 0, 0);
    CHECK_FALSE(broken.valid);
    CHECK(broken.sequence == std::vector<Vertex>{0, 3});
}

TEST_CASE("condition serialization round-trips") {
    Rng rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        Rng tr = rng.split(trial);
        const auto cond = random_chain_condition(tr, 2 + tr.below(6), 40, Flavor::walk);
        CHECK(io::condition_from_json(io::to_json(cond)) == cond);
    }
    CHECK_THROWS_AS(
        static_cast<void>(Condition::from_entries({0, 1}, std::vector<PairEntry>{{0, 1, 0}})),
        Error); // color 0 is out of the palette
}

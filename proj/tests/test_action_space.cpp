#include <doctest.h>

#include "oracles.hpp"
#include "weakeq/action.hpp"
#include "weakeq/schreier.hpp"

using namespace weakeq;

TEST_CASE("action invariants are enforced at construction") {
    CHECK_THROWS_AS(FiniteAction({Rat(1, 2)}, {}), input_error);                 // sum != 1
    CHECK_THROWS_AS(FiniteAction({Rat(1), Rat(0)}, {}), input_error);            // zero mass
    CHECK_THROWS_AS(FiniteAction({Rat(1, 2), Rat(1, 2)}, {Permutation({0, 0})}), input_error);
    // measure preservation: unequal weights cannot be swapped
    CHECK_THROWS_AS(FiniteAction({Rat(1, 4), Rat(3, 4)}, {Permutation({1, 0})}), input_error);
}

TEST_CASE("convex combination: blocks, boundary drop") {
    const FiniteAction a = fixtures::swap_pair();
    const FiniteAction b = fixtures::fixed_pair();

    const FiniteAction at1 = convex_combine(1, a, b);
    CHECK(at1.atom_count() == 2);
    CHECK(at1.generator(0) == Permutation({1, 0}));
    const FiniteAction at0 = convex_combine(0, a, b);
    CHECK(at0.atom_count() == 2);
    CHECK(at0.generator(0).is_identity());

    const FiniteAction aa = convex_combine(Rat(1, 2), a, a);
    CHECK(aa.atom_count() == 4);
    for (int x = 0; x < 4; ++x) CHECK(aa.weight(x) == Rat(1, 4));
    CHECK(aa.generator(0) == Permutation({1, 0, 3, 2}));

    const FiniteAction ab = convex_combine(Rat(1, 2), a, b);
    CHECK(ab.generator(0) == Permutation({1, 0, 2, 3}));

    CHECK_THROWS_AS(convex_combine(Rat(1, 2), a, fixtures::trivial(2, 2)), input_error);
}

TEST_CASE("finite mixtures agree with convex_combine and validate input") {
    const FiniteAction a = fixtures::swap_pair();
    const FiniteAction b = fixtures::fixed_pair();

    const FiniteAction single = finite_mixture({{Rat(1), a}});
    CHECK(single.atom_count() == 2);
    CHECK(single.generator(0) == Permutation({1, 0}));

    const FiniteAction two = finite_mixture({{Rat(1, 2), a}, {Rat(1, 2), b}});
    const FiniteAction cc = convex_combine(Rat(1, 2), a, b);
    CHECK(two.weights() == cc.weights());
    CHECK(two.generator(0) == cc.generator(0));

    // three-term mixture has the same type as the two-term combination
    const FiniteAction three =
        finite_mixture({{Rat(1, 4), a}, {Rat(1, 4), a}, {Rat(1, 2), b}});
    CHECK(type_of(three) == type_of(cc));

    CHECK_THROWS_AS(finite_mixture({{Rat(1, 2), a}, {Rat(1, 4), b}}), input_error);
}

TEST_CASE("products act diagonally") {
    const FiniteAction a = fixtures::swap_pair();

    const FiniteAction p1 = product(a, fixtures::trivial(1));
    CHECK(p1.atom_count() == 2);
    CHECK(p1.generator(0) == Permutation({1, 0}));

    const FiniteAction p2 = product(a, fixtures::trivial(2));
    CHECK(p2.atom_count() == 4);
    for (int x = 0; x < 4; ++x) CHECK(p2.weight(x) == Rat(1, 4));
    CHECK(p2.generator(0) == Permutation({2, 3, 0, 1})); // (1 3)(2 4) pattern

    const FiniteAction sq = product(a, a);
    // oracle: brute-force orbit enumeration gives two orbits of size 2,
    // generator fixing nothing
    const auto orbits = oracles::bfs_orbits(sq);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].size() == 2);
    CHECK(orbits[1].size() == 2);
    for (int x = 0; x < 4; ++x) CHECK(sq.generator(0).of(x) != x);
}

TEST_CASE("refinement") {
    const FiniteAction a = fixtures::swap_pair();
    const FiniteAction r1 = refine(a, 1);
    CHECK(r1.atom_count() == 2);
    const FiniteAction r2 = refine(a, 2);
    const FiniteAction p2 = product(a, fixtures::trivial(2));
    CHECK(r2.weights() == p2.weights());
    CHECK(r2.generator(0) == p2.generator(0));

    const FiniteAction rb = refine(fixtures::fixed_pair(), 3);
    CHECK(rb.atom_count() == 6);
    CHECK(rb.generator(0).is_identity());
    for (int x = 0; x < 6; ++x) CHECK(rb.weight(x) == Rat(1, 6));
}

TEST_CASE("ergodicity is single-orbit transitivity") {
    CHECK(is_ergodic(fixtures::swap_pair()));
    CHECK_FALSE(is_ergodic(fixtures::fixed_pair()));
    CHECK_FALSE(is_ergodic(convex_combine(Rat(1, 2), fixtures::swap_pair(), fixtures::swap_pair())));
    CHECK(is_ergodic(fixtures::cycle4()));
}

TEST_CASE("relabeling preserves structure") {
    SplitMix64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const FiniteAction a = oracles::random_action(1000 + i, 5, 2);
        const Permutation p = oracles::random_permutation(rng, a.atom_count());
        const FiniteAction b = relabel(a, p);
        for (int x = 0; x < a.atom_count(); ++x) {
            CHECK(b.weight(p.of(x)) == a.weight(x));
            for (int g = 0; g < a.generator_count(); ++g)
                CHECK(b.generator(g).of(p.of(x)) == p.of(a.generator(g).of(x)));
        }
    }
}

TEST_CASE("symmetry and composition of combinations, exact isomorphism") {
    const FiniteAction a = fixtures::swap_pair();
    const FiniteAction b = fixtures::fixed_pair();
    const FiniteAction c = fixtures::cycle4();

    CHECK(actions_isomorphic(convex_combine(Rat(1, 3), a, b), convex_combine(Rat(2, 3), b, a)));

    // composition with s=1/2, t=2/3 gives weights (1/3, 1/3, 1/3) on both sides
    const Rat s(1, 2), t(2, 3);
    const FiniteAction lhs = convex_combine(t, convex_combine(s, a, b), c);
    const Rat alpha = t * (1 - s) / (1 - s * t);
    const FiniteAction rhs = convex_combine(s * t, a, convex_combine(alpha, b, c));
    CHECK(lhs.weights() == rhs.weights());
    CHECK(lhs.weight(0) == Rat(1, 6)); // first swap atom: (1/3)*(1/2)
    CHECK(actions_isomorphic(lhs, rhs));
}

TEST_CASE("action file round-trip and validation") {
    const FiniteAction a = fixtures::cycle4();
    const FiniteAction back = load_action_json(action_to_json(a));
    CHECK(back.weights() == a.weights());
    CHECK(back.generator(0) == a.generator(0));
    CHECK(back.label() == a.label());

    CHECK_THROWS_AS(load_action_json("{"), input_error);
    CHECK_THROWS_AS(rat_from_string("abc"), input_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK(rat_from_string("6/8") == Rat(3, 4));
    CHECK_THROWS_AS(load_action_json(R"({"atoms":2,"weights":["1/2","1/3"],"generators":[[0,1]]})"),
                    input_error);
    CHECK_THROWS_AS(load_action_json(R"({"atoms":2,"weights":["1/2","1/2"],"generators":[[0,0]]})"),
                    input_error);
    // relator that does not act trivially is an input error naming it
    try {
        load_action_json(
            R"({"atoms":2,"weights":["1/2","1/2"],"generators":[[1,0]],"relators":["a"]})");
        CHECK(false);
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("relator 'a'") != std::string::npos);
    }
}

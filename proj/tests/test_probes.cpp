#include <doctest.h>

#include "oracles.hpp"
#include "weakeq/probes.hpp"

using namespace weakeq;

TEST_CASE("axiom suite passes exactly on fixtures") {
    const std::vector<FiniteAction> samples{fixtures::swap_pair(), fixtures::fixed_pair(),
                                            fixtures::cycle4()};
    const ProbeReport r = axiom_suite(samples, {Rat(1, 3), Rat(1, 2)}, 4);
    CHECK(r.pass);
    CHECK(r.max_violation == 0.0);
    CHECK(r.instances > 0);
}

TEST_CASE("self-combination defect: atomic positive, stable zero") {
    SUBCASE("single atom: the combination splits mass the atom cannot") {
        // Exhaustive enumeration: the doubled action's clouds gain the
        // half-half diagonal points, sup-distance 1/2 at (1,2), (2,2), (1,3),
        // so the atomic distance is (2^-3 + 2^-4 + 2^-4) * 1/2 = 1/8. The
        // hulls agree, so the stable defect vanishes.
        const SelfCombinationDefect d = self_combination_defect(fixtures::trivial(1), Rat(1, 2), 4);
        CHECK(d.atomic_defect == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(d.stable_defect <= 1e-9);
    }
    SUBCASE("swap fixture witnesses the weak-vs-full convex gap") {
        const SelfCombinationDefect d = self_combination_defect(fixtures::swap_pair(), Rat(1, 2), 4);
        CHECK(d.atomic_defect > 0.01);
        CHECK(d.stable_defect <= 1e-6);
    }
    SUBCASE("4-cycle at t=1/3") {
        const SelfCombinationDefect d = self_combination_defect(fixtures::cycle4(), Rat(1, 3), 4);
        CHECK(d.stable_defect <= 1e-6);
    }
    CHECK_THROWS_AS(self_combination_defect(fixtures::swap_pair(), Rat(0), 4), input_error);
}

TEST_CASE("contraction inequality") {
    SUBCASE("t = 0 and t = 1 degenerate cleanly") {
        const ProbeReport r0 = contraction_check(fixtures::swap_pair(), fixtures::fixed_pair(),
                                                 fixtures::cycle4(), Rat(0), 4);
        CHECK(r0.pass);
        const ProbeReport r1 = contraction_check(fixtures::swap_pair(), fixtures::fixed_pair(),
                                                 fixtures::cycle4(), Rat(1), 4);
        CHECK(r1.pass);
    }
    SUBCASE("fixture triple at t = 1/2") {
        const ProbeReport r = contraction_check(fixtures::swap_pair(), fixtures::fixed_pair(),
                                                fixtures::cycle4(), Rat(1, 2), 4);
        CHECK(r.pass);
    }
    SUBCASE("random 4-atom triples") {
        for (int i = 0; i < 6; ++i) {
            const ProbeReport r = contraction_check(
                oracles::random_action(7100 + i, 4, 2), oracles::random_action(7200 + i, 4, 2),
                oracles::random_action(7300 + i, 4, 2), i % 2 ? Rat(1, 4) : Rat(2, 3), 4);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("distance-to-set convexity (stable metric, grid-relative)") {
    const FiniteAction x = fixtures::swap_pair();
    const FiniteAction y = fixtures::fixed_pair();

    SUBCASE("K = {x}") {
        const ProbeReport r = distance_convexity_check(x, y, {x}, Rat(1, 2), 4);
        CHECK(r.pass);
    }
    SUBCASE("x = y") {
        const ProbeReport r = distance_convexity_check(x, x, {x, y}, Rat(1, 4), 4, 4);
        CHECK(r.pass);
    }
    SUBCASE("t = 0 reduces to d(y,K) on both sides") {
        const ProbeReport r = distance_convexity_check(x, y, {y}, Rat(0), 4);
        CHECK(r.pass);
        CHECK(r.max_violation <= 1e-12);
    }
}

TEST_CASE("probe reports are deterministic in their inputs") {
    auto run = [] {
        return contraction_check(fixtures::swap_pair(), fixtures::fixed_pair(),
                                 fixtures::cycle4(), Rat(1, 2), 4);
    };
    const ProbeReport r1 = run();
    const ProbeReport r2 = run();
    CHECK(r1.max_violation == r2.max_violation);
    REQUIRE(r1.details.size() == r2.details.size());
    for (std::size_t i = 0; i < r1.details.size(); ++i)
        CHECK(r1.details[i].violation == r2.details[i].violation);
}

TEST_CASE("mixture hull inclusion") {
    const GroupWindow w = build_window(1, 1);
    SUBCASE("single term") {
        const ProbeReport r = mixture_hull_check({{Rat(1), fixtures::swap_pair()}}, w, 2, 2);
        CHECK(r.pass);
    }
    SUBCASE("two equal terms") {
        const ProbeReport r = mixture_hull_check(
            {{Rat(1, 2), fixtures::swap_pair()}, {Rat(1, 2), fixtures::swap_pair()}}, w, 2, 2);
        CHECK(r.pass);
    }
    SUBCASE("swap + fix") {
        const ProbeReport r = mixture_hull_check(
            {{Rat(1, 2), fixtures::swap_pair()}, {Rat(1, 2), fixtures::fixed_pair()}}, w, 2, 2);
        CHECK(r.pass);
    }
}

#include <doctest.h>

#include "oracles.hpp"
#include "weakeq/group_window.hpp"
#include "weakeq/word.hpp"

using namespace weakeq;

TEST_CASE("words reduce freely and serialize") {
    CHECK(Word::parse("abA").str() == "abA");
    CHECK(Word::parse("aA").is_identity());
    CHECK(Word::parse("abBA").is_identity());
    CHECK(Word::parse("aBbA").is_identity());
    CHECK(Word::parse("ab").concat(Word::parse("Ba")).str() == "aa");
    CHECK(Word::parse("ab").inverse().str() == "BA");
    CHECK(Word::generator(1).pow(4).str() == "aaaa");
    CHECK(Word::generator(1).pow(-2).str() == "AA");
    CHECK_THROWS_AS(Word::parse("a1"), input_error);
}

TEST_CASE("window enumeration: order, size, determinism") {
    const GroupWindow w11 = build_window(1, 1);
    REQUIRE(w11.size() == 3);
    CHECK(w11.words[0].is_identity());
    CHECK(w11.words[1].str() == "a");
    CHECK(w11.words[2].str() == "A");

    const GroupWindow w21 = build_window(2, 1);
    REQUIRE(w21.size() == 5);
    CHECK(w21.words[1].str() == "a");
    CHECK(w21.words[2].str() == "A");
    CHECK(w21.words[3].str() == "b");
    CHECK(w21.words[4].str() == "B");

    // size at (2,2): brute-force enumeration oracle
    CHECK(oracles::count_reduced_words(2, 2) == 17);
    CHECK(build_window(2, 2).size() == 17);
    CHECK(window_size(2, 2) == 17);

    // identical output across repeated builds
    const GroupWindow again = build_window(2, 2);
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again.words[i] == build_window(2, 2).words[i]);

    // every word distinct, ordered by length then rank-lex
    const GroupWindow w23 = build_window(2, 3);
    CHECK(w23.size() == window_size(2, 3));
    for (std::size_t i = 1; i < w23.size(); ++i) CHECK(w23.words[i - 1] < w23.words[i]);

    CHECK(build_window(1, 0).size() == 1);
}

TEST_CASE("word evaluation matches the action homomorphism") {
    const FiniteAction swap = fixtures::swap_pair();
    const FiniteAction cyc = fixtures::cycle4();

    CHECK(evaluate_word(swap, Word::identity()).is_identity());
    CHECK(evaluate_word(swap, Word::parse("a")) == Permutation({1, 0}));
    CHECK(evaluate_word(cyc, Word::parse("aa")) == Permutation({2, 3, 0, 1}));
    CHECK(evaluate_word(cyc, Word::parse("A")) == Permutation({3, 0, 1, 2}));

    CHECK_THROWS_AS(evaluate_word(swap, Word::parse("b")), input_error);

    // w * w^-1 is the identity after reduction
    for (const char* text : {"a", "aa", "A", "aaa"}) {
        const Word w = Word::parse(text);
        CHECK(w.concat(w.inverse()).is_identity());
        CHECK(evaluate_word(cyc, w.concat(w.inverse())).is_identity());
    }

    // homomorphism on reduced concatenations: (uv)^a = u^a o v^a
    SplitMix64 rng(11);
    const auto words = ball(1, 3);
    for (const Word& u : words)
        for (const Word& v : words) {
            const Permutation lhs = evaluate_word(cyc, u.concat(v));
            const Permutation rhs = evaluate_word(cyc, u).compose(evaluate_word(cyc, v));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("relator defect") {
    const FiniteAction swap = fixtures::swap_pair();
    const FiniteAction cyc = fixtures::cycle4();
    CHECK(relator_defect(swap, {Word::parse("aa")}) == 0);
    CHECK(relator_defect(cyc, {Word::parse("aa")}) == 1);
    CHECK(relator_defect(cyc, {Word::parse("aaaa")}) == 0);
    CHECK(relator_defect(cyc, {}) == 0);
}

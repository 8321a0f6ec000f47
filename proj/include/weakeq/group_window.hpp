#pragma once

#include <vector>

#include "weakeq/action.hpp"
#include "weakeq/rational.hpp"
#include "weakeq/word.hpp"

namespace weakeq {

/// Ordered finite enumeration of the free group F_k: all reduced words of
/// length <= radius, sorted by length then lexicographically on letters
/// (g1 < g1^-1 < g2 < g2^-1 < ...). words[0] is always the identity.
///
/// The enumeration order is a fixed convention of this library: the values
/// of the series pseudometrics depend on it, the induced topology does not.
struct GroupWindow {
    int num_generators = 1;
    int radius = 0;
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
    /// First n words of the enumeration (a sub-window).
    std::vector<Word> prefix(std::size_t n) const;
};

GroupWindow build_window(int num_generators, int radius);

/// Ball of radius `radius` as a word list (= build_window(...).words).
std::vector<Word> ball(int num_generators, int radius);

/// Number of reduced words of length <= radius over k generators.
std::uint64_t window_size(int num_generators, int radius);

/// Evaluate a word against the action's generator permutations:
/// (uv)^a = u^a o v^a, so the rightmost letter acts first.
Permutation evaluate_word(const FiniteAction& action, const Word& word);

/// Total mass of atoms moved by at least one relator. Zero means the action
/// factors through the quotient by the relators.
Rat relator_defect(const FiniteAction& action, const std::vector<Word>& relators);

} // namespace weakeq

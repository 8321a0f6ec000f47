#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "weakeq/action.hpp"
#include "weakeq/group_window.hpp"
#include "weakeq/moment.hpp"
#include "weakeq/rational.hpp"
#include "weakeq/word.hpp"

namespace weakeq {

/// Pushforward of the measure under the orbit-pattern map of a coloring:
/// the pattern of an atom x assigns to each word g in F the color of the
/// image of x under g^-1. Masses are exact and sum to 1.
struct ColoringDistribution {
    std::vector<Word> window; // the sub-window F indexing pattern positions
    int alphabet_size = 1;
    std::map<std::vector<int>, Rat> masses; // pattern (one color per word of F) -> mass

    std::size_t window_size() const { return window.size(); }

    bool operator==(const ColoringDistribution& o) const {
        return alphabet_size == o.alphabet_size && masses == o.masses;
    }
    bool operator<(const ColoringDistribution& o) const { return masses < o.masses; }
};

ColoringDistribution coloring_distribution(const FiniteAction& a,
                                           const std::vector<int>& coloring, int alphabet_size,
                                           const std::vector<Word>& F);

/// All (or sampled) coloring distributions over colorings of the atoms,
/// deduplicated. Exhaustive enumeration is refused above the budget.
std::vector<ColoringDistribution> coloring_cloud(
    const FiniteAction& a, int alphabet_size, const std::vector<Word>& F,
    const CloudStrategy& strategy = CloudStrategy::exhaustive(),
    std::uint64_t budget = kDefaultPartitionBudget);

} // namespace weakeq

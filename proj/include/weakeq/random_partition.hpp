#pragma once

#include <cstdint>
#include <vector>

#include "weakeq/action.hpp"
#include "weakeq/partition.hpp"
#include "weakeq/rational.hpp"
#include "weakeq/word.hpp"

namespace weakeq {

/// Result record of the randomized two-coloring experiment.
struct PartitionStats {
    double delta = 0.0;
    int window_size = 0;  // |G| after removing duplicate words
    double target = 0.0;  // 2^-|G|
    int trials = 0;
    std::vector<double> max_deviation_per_trial;
    double empirical_failure_rate = 0.0;
    double chebyshev_bound = 0.0; // min(1, sum over cells of Var^ / (delta/2)^2)
    std::uint64_t seed = 0;

    double freeness_defect = 0.0;    // reported alongside; bound meaningful when small
    std::uint64_t cell_count = 0;    // number of (base-class pattern, coloring pattern) cells
    double analytic_variance_bound = 0.0; // delta^2 / (8 (2r)^|G|), comparison only
    int first_success_trial = -1;    // first trial with max deviation < delta, -1 if none
    std::vector<int> success_coloring; // its coloring (one bit per atom), empty if none
};

/// Total weight of atoms on which two distinct words of G act identically.
/// Zero means the orbit map on G is injective everywhere.
Rat freeness_defect(const FiniteAction& a, const std::vector<Word>& G);

inline constexpr int kDefaultWindowBudget = 12;      // 2^|G| coloring patterns
inline constexpr std::uint64_t kDefaultCellBudget = 1ull << 23; // stored masses

/// Random two-coloring experiment: per trial, color every atom independently
/// and uniformly with 2 colors, intersect the translated color classes over
/// G against every nonempty translated base-class pattern of R, and record
/// the worst deviation of the intersection mass from 2^-|G| times the base
/// mass. A trial fails when that deviation reaches delta. The Chebyshev
/// field aggregates empirical per-cell variances through the union bound.
PartitionStats run_partition_experiment(const FiniteAction& a, const std::vector<Word>& G,
                                        const Partition& base, double delta, int trials,
                                        std::uint64_t seed,
                                        int window_budget = kDefaultWindowBudget,
                                        std::uint64_t cell_budget = kDefaultCellBudget);

} // namespace weakeq

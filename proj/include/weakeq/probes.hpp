#pragma once

#include <string>
#include <vector>

#include "weakeq/action.hpp"
#include "weakeq/moment.hpp"
#include "weakeq/rational.hpp"

namespace weakeq {

struct ProbeInstance {
    std::string what;
    double violation = 0.0;
};

/// Deterministic report of a property suite. pass <=> max_violation <= tolerance.
struct ProbeReport {
    std::string name;
    int instances = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::vector<ProbeInstance> details;

    void add(std::string what, double violation);
};

/// Convex-combination axioms (identity at t in {0,1}, symmetry, composition)
/// checked two ways on consecutive pairs/triples of the samples: exact action
/// isomorphism, and series-pseudometric distance zero at the given cut.
/// Isomorphism failure counts as violation 1. Tolerance is 0.
ProbeReport axiom_suite(const std::vector<FiniteAction>& samples,
                        const std::vector<Rat>& t_values, int cut);

struct SelfCombinationDefect {
    double atomic_defect = 0.0;
    double stable_defect = 0.0;
};

/// Distance from a to t*a + (1-t)*a in both metrics. The atomic value is
/// generally positive (the combined cloud has points the original's atoms
/// cannot realize); the stable value vanishes since the hulls agree.
SelfCombinationDefect self_combination_defect(const FiniteAction& a, const Rat& t, int cut);

/// d(ta+(1-t)c, tb+(1-t)c) <= t d(a,b) + 1e-9, for both metrics.
ProbeReport contraction_check(const FiniteAction& a, const FiniteAction& b,
                              const FiniteAction& c, const Rat& t, int cut);

/// Convexity of the distance-to-a-convex-set function, with the convex set
/// represented by all mixtures of K_reps on a rational coefficient grid
/// (denominators <= grid_denominator). The stable metric is asserted (the
/// grid is closed under combination only up to stable equivalence); atomic
/// values are reported in the details.
ProbeReport distance_convexity_check(const FiniteAction& x, const FiniteAction& y,
                                     const std::vector<FiniteAction>& K_reps, const Rat& t,
                                     int cut, int grid_denominator = 8);

/// Every point of the mixture's cloud lies in the convex hull of the union
/// of the component clouds (membership defect <= 1e-7).
ProbeReport mixture_hull_check(const std::vector<std::pair<Rat, FiniteAction>>& terms,
                               const GroupWindow& window, int n, int k);

} // namespace weakeq

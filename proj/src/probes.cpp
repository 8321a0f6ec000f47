#include "weakeq/probes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "weakeq/hull.hpp"
#include "weakeq/schreier.hpp"

namespace weakeq {

void ProbeReport::add(std::string what, double violation) {
    details.push_back({std::move(what), violation});
    ++instances;
    max_violation = std::max(max_violation, violation);
    pass = max_violation <= tolerance;
}

namespace {

// Exact isomorphism and metric distance at the cut; either failure shows up
// as a positive violation (isomorphism failure counts as 1).
double two_way_violation(const FiniteAction& lhs, const FiniteAction& rhs, int cut) {
    const bool iso = actions_isomorphic(lhs, rhs);
    const double dist = metric_d(lhs, rhs, cut).value;
    return std::max(dist, iso ? 0.0 : 1.0);
}

} // namespace

ProbeReport axiom_suite(const std::vector<FiniteAction>& samples,
                        const std::vector<Rat>& t_values_raw, int cut) {
    if (samples.size() < 2) throw input_error("axiom suite needs at least two sample actions");
    std::vector<Rat> t_values;
    for (const Rat& t : t_values_raw) t_values.push_back(canonical(t));
    ProbeReport report;
    report.name = "axioms";
    report.tolerance = 0.0;

    const std::size_t N = samples.size();
    for (std::size_t i = 0; i < N; ++i) {
        const FiniteAction& x = samples[i];
        const FiniteAction& y = samples[(i + 1) % N];
        report.add("identity: 1*x + 0*y vs x [" + std::to_string(i) + "]",
                   two_way_violation(convex_combine(1, x, y), x, cut));
        report.add("identity: 0*x + 1*y vs y [" + std::to_string(i) + "]",
                   two_way_violation(convex_combine(0, x, y), y, cut));
        for (const Rat& t : t_values)
            report.add("symmetry: t=" + rat_to_string(t) + " [" + std::to_string(i) + "]",
                       two_way_violation(convex_combine(t, x, y),
                                         convex_combine(1 - t, y, x), cut));
    }
    if (N >= 3) {
        for (std::size_t i = 0; i < N; ++i) {
            const FiniteAction& x = samples[i];
            const FiniteAction& y = samples[(i + 1) % N];
            const FiniteAction& z = samples[(i + 2) % N];
            for (const Rat& s : t_values)
                for (const Rat& t : t_values) {
                    if (s * t == 1) continue;
                    const Rat alpha = t * (1 - s) / (1 - s * t);
                    report.add("composition: s=" + rat_to_string(s) + ",t=" + rat_to_string(t) +
                                   " [" + std::to_string(i) + "]",
                               two_way_violation(
                                   convex_combine(t, convex_combine(s, x, y), z),
                                   convex_combine(s * t, x, convex_combine(alpha, y, z)), cut));
                }
        }
    }
    return report;
}

SelfCombinationDefect self_combination_defect(const FiniteAction& a, const Rat& t_raw, int cut) {
    const Rat t = canonical(t_raw);
    if (t <= 0 || t >= 1) throw input_error("self-combination coefficient must lie in (0,1)");
    const FiniteAction doubled = convex_combine(t, a, a);
    SelfCombinationDefect d;
    d.atomic_defect = metric_d(a, doubled, cut).value;
    d.stable_defect = metric_d_stable(a, doubled, cut).value;
    return d;
}

ProbeReport contraction_check(const FiniteAction& a, const FiniteAction& b, const FiniteAction& c,
                              const Rat& t_raw, int cut) {
    const Rat t = canonical(t_raw);
    ProbeReport report;
    report.name = "contraction";
    report.tolerance = 1e-9;

    const FiniteAction lhs_a = convex_combine(t, a, c);
    const FiniteAction lhs_b = convex_combine(t, b, c);
    const double td = rat_to_double(t);

    const double atomic = metric_d(lhs_a, lhs_b, cut).value - td * metric_d(a, b, cut).value;
    report.add("atomic metric, t=" + rat_to_string(t), atomic);
    const double stable =
        metric_d_stable(lhs_a, lhs_b, cut).value - td * metric_d_stable(a, b, cut).value;
    report.add("stable metric, t=" + rat_to_string(t), stable);
    return report;
}

ProbeReport distance_convexity_check(const FiniteAction& x, const FiniteAction& y,
                                     const std::vector<FiniteAction>& K_reps, const Rat& t_raw,
                                     int cut, int grid_denominator) {
    const Rat t = canonical(t_raw);
    if (K_reps.empty()) throw input_error("distance convexity needs at least one representative");
    if (grid_denominator < 1) throw input_error("grid denominator must be positive");

    // All mixtures of the representatives with coefficients c_i/denominator.
    std::vector<FiniteAction> grid;
    const std::size_t R = K_reps.size();
    std::vector<int> counter(R, 0);
    std::function<void(std::size_t, int)> emit = [&](std::size_t idx, int left) {
        if (idx + 1 == R) {
            counter[idx] = left;
            std::vector<std::pair<Rat, FiniteAction>> terms;
            for (std::size_t i = 0; i < R; ++i)
                terms.emplace_back(Rat(counter[i], grid_denominator), K_reps[i]);
            grid.push_back(finite_mixture(terms));
            return;
        }
        for (int c = left; c >= 0; --c) {
            counter[idx] = c;
            emit(idx + 1, left - c);
        }
    };
    emit(0, grid_denominator);
    if (grid.size() > 5000)
        throw budget_error("distance-convexity grid exceeds 5000 mixtures");

    auto dist_to_grid = [&](const FiniteAction& v, bool stable) {
        double best = 1e100;
        for (const FiniteAction& g : grid)
            best = std::min(best, stable ? metric_d_stable(v, g, cut).value
                                         : metric_d(v, g, cut).value);
        return best;
    };

    const FiniteAction mid = convex_combine(t, x, y);
    const double td = rat_to_double(t);

    ProbeReport report;
    report.name = "distance-convexity";
    report.tolerance = 1e-9;

    const double sv = dist_to_grid(mid, true) -
                      (td * dist_to_grid(x, true) + (1 - td) * dist_to_grid(y, true));
    report.add("stable metric, t=" + rat_to_string(t), sv);

    // The atomic value is informational: the grid is closed under combination
    // only up to stable equivalence, so convexity is asserted for the stable
    // metric alone.
    const double av = dist_to_grid(mid, false) -
                      (td * dist_to_grid(x, false) + (1 - td) * dist_to_grid(y, false));
    report.details.push_back({"atomic metric (informational), t=" + rat_to_string(t), av});
    return report;
}

ProbeReport mixture_hull_check(const std::vector<std::pair<Rat, FiniteAction>>& terms,
                               const GroupWindow& window, int n, int k) {
    ProbeReport report;
    report.name = "mixture-hull";
    report.tolerance = 1e-7;

    const FiniteAction mixed = finite_mixture(terms);
    const MomentCloud mixed_cloud = moment_cloud(mixed, window, n, k);

    std::vector<std::vector<double>> hull_vertices;
    for (const auto& [coeff, act] : terms) {
        if (coeff == 0) continue;
        const MomentCloud c = moment_cloud(act, window, n, k);
        hull_vertices.insert(hull_vertices.end(), c.points_d.begin(), c.points_d.end());
    }

    double worst = 0.0;
    for (const auto& p : mixed_cloud.points_d)
        worst = std::max(worst, distance_to_hull(p, hull_vertices));
    report.add("membership defect over " + std::to_string(mixed_cloud.points.size()) +
                   " mixture points at (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
               worst);
    return report;
}

} // namespace weakeq

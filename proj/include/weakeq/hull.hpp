#pragma once

#include <cstdint>
#include <vector>

namespace weakeq {

/// Euclidean distance from `point` to the convex hull of `vertices`,
/// by Wolfe's minimum-norm-point algorithm (active-set over corrals;
/// converges finitely). Throws budget_error when the iteration cap is hit.
///
/// All vectors must share point.size() coordinates.
double distance_to_hull(const std::vector<double>& point,
                        const std::vector<std::vector<double>>& vertices,
                        std::uint64_t iteration_cap = 100000);

/// Membership test: distance_to_hull(...) <= tol.
bool in_hull(const std::vector<double>& point,
             const std::vector<std::vector<double>>& vertices, double tol);

double sup_distance(const std::vector<double>& a, const std::vector<double>& b);
double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

} // namespace weakeq

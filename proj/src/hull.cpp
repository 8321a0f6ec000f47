#include "weakeq/hull.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "weakeq/errors.hpp"

namespace weakeq {

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Solve the (s+1)x(s+1) KKT system for the min-norm point of the affine hull
// of rows: [G 1; 1^T 0][alpha; nu] = [0; 1]. Returns false when singular.
bool affine_min_norm(const std::vector<std::vector<double>>& w, const std::vector<int>& S,
                     std::vector<double>& alpha) {
    const std::size_t s = S.size();
    const std::size_t n = s + 1;
    std::vector<std::vector<double>> M(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) M[i][j] = dot(w[S[i]], w[S[j]]);
        M[i][s] = 1.0;
        M[i][n] = 0.0;
    }
    for (std::size_t j = 0; j < s; ++j) M[s][j] = 1.0;
    M[s][s] = 0.0;
    M[s][n] = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
        if (std::fabs(M[piv][col]) < 1e-13) return false;
        std::swap(M[col], M[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = M[r][col] / M[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    alpha.assign(s, 0.0);
    for (std::size_t i = 0; i < s; ++i) alpha[i] = M[i][n] / M[i][i];
    return true;
}

} // namespace

double distance_to_hull(const std::vector<double>& point,
                        const std::vector<std::vector<double>>& vertices,
                        std::uint64_t iteration_cap) {
    if (vertices.empty()) throw input_error("distance_to_hull: empty vertex set");
    const std::size_t dim = point.size();
    for (const auto& v : vertices)
        if (v.size() != dim) throw input_error("distance_to_hull: dimension mismatch");

    // Translate so the query point is the origin.
    std::vector<std::vector<double>> w(vertices.size(), std::vector<double>(dim));
    for (std::size_t j = 0; j < vertices.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) w[j][i] = vertices[j][i] - point[i];

    std::size_t best = 0;
    double best_norm = dot(w[0], w[0]);
    for (std::size_t j = 1; j < w.size(); ++j) {
        const double nj = dot(w[j], w[j]);
        if (nj < best_norm) {
            best_norm = nj;
            best = j;
        }
    }

    std::vector<int> S{static_cast<int>(best)};
    std::vector<double> lambda{1.0};
    std::vector<double> x = w[best];

    double prev_obj = dot(x, x);
    int stalls = 0;

    for (std::uint64_t iter = 0;; ++iter) {
        if (iter >= iteration_cap)
            throw budget_error("hull solver iteration cap (" + std::to_string(iteration_cap) +
                               ") exceeded");

        // Linear minimization step.
        std::size_t jstar = 0;
        double mindot = dot(x, w[0]);
        for (std::size_t j = 1; j < w.size(); ++j) {
            const double d = dot(x, w[j]);
            if (d < mindot) {
                mindot = d;
                jstar = j;
            }
        }
        const double obj = dot(x, x);
        const double gap = obj - mindot;
        if (gap <= 1e-14 * std::max(1.0, obj)) break;

        bool already = false;
        for (int s : S)
            if (s == static_cast<int>(jstar)) already = true;
        if (already) break;

        S.push_back(static_cast<int>(jstar));
        lambda.push_back(0.0);

        // Minor cycle: move to the affine minimizer, trimming non-positive
        // support. The support threshold is shared by the interior test and
        // the trim, so every non-breaking pass removes at least one index.
        constexpr double kSupportTol = 1e-12;
        for (int minor = 0; minor < 256; ++minor) {
            std::vector<double> alpha;
            if (!affine_min_norm(w, S, alpha)) {
                // Degenerate corral: drop the latest addition and stop descending.
                S.pop_back();
                lambda.pop_back();
                break;
            }
            bool interior = true;
            for (double a : alpha)
                if (a <= kSupportTol) interior = false;
            if (interior) {
                lambda = alpha;
                break;
            }
            double theta = 1.0;
            for (std::size_t i = 0; i < S.size(); ++i)
                if (alpha[i] <= kSupportTol && lambda[i] - alpha[i] > 0)
                    theta = std::min(theta, lambda[i] / (lambda[i] - alpha[i]));
            std::vector<int> keepS;
            std::vector<double> keepL;
            for (std::size_t i = 0; i < S.size(); ++i) {
                const double li = (1 - theta) * lambda[i] + theta * alpha[i];
                if (li > kSupportTol) {
                    keepS.push_back(S[i]);
                    keepL.push_back(li);
                }
            }
            if (keepS.empty()) {
                keepS.push_back(S.back());
                keepL.push_back(1.0);
            }
            S = std::move(keepS);
            lambda = std::move(keepL);
            if (S.size() == 1) break;
        }

        double norm = 0.0;
        for (double l : lambda) norm += l;
        x.assign(dim, 0.0);
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t c = 0; c < dim; ++c) x[c] += (lambda[i] / norm) * w[S[i]][c];

        const double new_obj = dot(x, x);
        if (new_obj >= prev_obj - 1e-18) {
            if (++stalls >= 2) break;
        } else {
            stalls = 0;
        }
        prev_obj = new_obj;
    }

    const double obj = dot(x, x);
    return obj <= 0.0 ? 0.0 : std::sqrt(obj);
}

bool in_hull(const std::vector<double>& point, const std::vector<std::vector<double>>& vertices,
             double tol) {
    return distance_to_hull(point, vertices) <= tol;
}

} // namespace weakeq

#include "weakeq/moment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "weakeq/hull.hpp"
#include "weakeq/parallel.hpp"
#include "weakeq/rng.hpp"

namespace weakeq {

std::vector<double> MomentMatrix::to_doubles() const {
    std::vector<double> out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out[i] = rat_to_double(entries[i]);
    return out;
}

bool MomentMatrix::operator<(const MomentMatrix& o) const {
    if (n != o.n) return n < o.n;
    if (k != o.k) return k < o.k;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int c = cmp(entries[i], o.entries[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CloudStrategy CloudStrategy::random(std::uint64_t samples, std::uint64_t seed) {
    CloudStrategy s;
    s.kind = Kind::Random;
    s.samples = samples;
    s.seed = seed;
    return s;
}

CloudStrategy CloudStrategy::local_search(std::uint64_t starts, std::uint64_t seed) {
    CloudStrategy s;
    s.kind = Kind::LocalSearch;
    s.starts = starts;
    s.seed = seed;
    return s;
}

std::string CloudStrategy::note() const {
    switch (kind) {
        case Kind::Exhaustive: return "exhaustive";
        case Kind::Random:
            return "random(samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")";
        case Kind::LocalSearch:
            return "local_search(starts=" + std::to_string(starts) + ",seed=" + std::to_string(seed) + ")";
    }
    return "?";
}

namespace {

struct CloudContext {
    const FiniteAction* a;
    int n = 0, k = 0, m = 0;
    // inv_image[p][x]: image of atom x under the inverse of the p-th window word.
    std::vector<std::vector<int>> inv_image;

    void fill_entries(const std::vector<int>& labels, std::vector<Rat>& entries) const {
        entries.assign(static_cast<std::size_t>(n) * k * k, Rat(0));
        for (int p = 0; p < n; ++p) {
            const auto& inv = inv_image[p];
            const std::size_t base = static_cast<std::size_t>(p) * k * k;
            for (int x = 0; x < m; ++x)
                entries[base + static_cast<std::size_t>(labels[inv[x]]) * k + labels[x]] +=
                    a->weight(x);
        }
    }
};

CloudContext make_context(const FiniteAction& a, const GroupWindow& window, int n, int k) {
    if (n < 1 || static_cast<std::size_t>(n) > window.size())
        throw input_error("moment index n must satisfy 1 <= n <= window size");
    if (k < 1) throw input_error("moment index k must be positive");
    if (window.num_generators < a.generator_count())
        throw input_error("window has fewer generators than the action");
    CloudContext ctx;
    ctx.a = &a;
    ctx.n = n;
    ctx.k = k;
    ctx.m = a.atom_count();
    ctx.inv_image.reserve(n);
    for (int p = 0; p < n; ++p) {
        const Permutation inv = evaluate_word(a, window.words[p]).inverse();
        ctx.inv_image.push_back(inv.images());
    }
    return ctx;
}

void decode_labeling(std::uint64_t index, int m, int k, std::vector<int>& labels) {
    labels.assign(m, 0);
    for (int i = m - 1; i >= 0; --i) {
        labels[i] = static_cast<int>(index % k);
        index /= k;
    }
}

// Checked k^m against the budget; throws the named refusal when exceeded.
std::uint64_t labeling_count(int k, int m, std::uint64_t budget, const char* what) {
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > budget / static_cast<std::uint64_t>(k) + 1) {
            total = budget + 1;
            break;
        }
        total *= static_cast<std::uint64_t>(k);
    }
    if (total > budget)
        throw budget_error(std::string(what) + ": k^m exceeds partition budget " +
                           std::to_string(budget) + " (k=" + std::to_string(k) +
                           ", m=" + std::to_string(m) + ")");
    return total;
}

using PointMap = std::map<std::vector<Rat>, std::vector<int>>; // entries -> witness labels

MomentCloud finalize_cloud(PointMap&& found, const CloudContext& ctx, bool exhaustive,
                           const std::string& note, const std::string& label) {
    MomentCloud cloud;
    cloud.n = ctx.n;
    cloud.k = ctx.k;
    cloud.exhaustive = exhaustive;
    cloud.strategy_note = note;
    cloud.action_label = label;
    cloud.points.reserve(found.size());
    for (auto& [entries, labels] : found) {
        MomentMatrix mat;
        mat.n = ctx.n;
        mat.k = ctx.k;
        mat.entries = entries;
        cloud.points_d.push_back(mat.to_doubles());
        cloud.points.push_back(std::move(mat));
        cloud.witnesses.emplace_back(labels, ctx.k);
    }
    return cloud;
}

PointMap enumerate_exhaustive(const CloudContext& ctx, std::uint64_t budget) {
    const std::uint64_t total = labeling_count(ctx.k, ctx.m, budget, "exhaustive moment cloud");
    const std::uint64_t chunk = 2048;
    std::vector<PointMap> partial(chunk_count(total, chunk));
    parallel_chunks(total, chunk, [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
        std::vector<int> labels;
        std::vector<Rat> entries;
        PointMap local;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            decode_labeling(idx, ctx.m, ctx.k, labels);
            ctx.fill_entries(labels, entries);
            local.try_emplace(entries, labels);
        }
        partial[ci] = std::move(local);
    });
    PointMap merged;
    for (auto& part : partial)
        for (auto& [entries, labels] : part) merged.try_emplace(std::move(entries), std::move(labels));
    return merged;
}

PointMap enumerate_random(const CloudContext& ctx, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw input_error("random cloud strategy needs at least one sample");
    const std::uint64_t chunk = 1024;
    std::vector<PointMap> partial(chunk_count(samples, chunk));
    parallel_chunks(samples, chunk, [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
        std::vector<int> labels(ctx.m);
        std::vector<Rat> entries;
        PointMap local;
        for (std::uint64_t s = begin; s < end; ++s) {
            SplitMix64 rng(derive_seed(seed, s));
            for (int x = 0; x < ctx.m; ++x) labels[x] = static_cast<int>(rng.below(ctx.k));
            ctx.fill_entries(labels, entries);
            local.try_emplace(entries, labels);
        }
        partial[ci] = std::move(local);
    });
    PointMap merged;
    for (auto& part : partial)
        for (auto& [entries, labels] : part) merged.try_emplace(std::move(entries), std::move(labels));
    return merged;
}

// Hill-climbing over single-atom relabelings, scoring a candidate by its
// sup-distance to the points accumulated so far (enriches extreme points).
PointMap enumerate_local_search(const CloudContext& ctx, std::uint64_t starts, std::uint64_t seed) {
    if (starts < 1) throw input_error("local_search cloud strategy needs at least one start");
    std::vector<PointMap> partial(starts);
    parallel_chunks(starts, 1, [&](std::size_t ci, std::uint64_t begin, std::uint64_t) {
        PointMap local;
        SplitMix64 rng(derive_seed(seed ^ 0xC0FFEEULL, begin));
        std::vector<int> labels(ctx.m);
        for (int x = 0; x < ctx.m; ++x) labels[x] = static_cast<int>(rng.below(ctx.k));
        std::vector<Rat> entries;
        ctx.fill_entries(labels, entries);
        std::vector<std::vector<double>> seen;
        {
            MomentMatrix mat{ctx.n, ctx.k, entries};
            seen.push_back(mat.to_doubles());
        }
        local.try_emplace(entries, labels);

        const int step_cap = 10 * ctx.m * ctx.k;
        for (int step = 0; step < step_cap; ++step) {
            double best_score = 1e-12;
            int best_atom = -1, best_label = -1;
            std::vector<Rat> best_entries;
            for (int x = 0; x < ctx.m; ++x) {
                const int old = labels[x];
                for (int l = 0; l < ctx.k; ++l) {
                    if (l == old) continue;
                    labels[x] = l;
                    ctx.fill_entries(labels, entries);
                    MomentMatrix mat{ctx.n, ctx.k, entries};
                    const auto dbl = mat.to_doubles();
                    double score = 1e100;
                    for (const auto& s : seen) score = std::min(score, sup_distance(dbl, s));
                    if (score > best_score) {
                        best_score = score;
                        best_atom = x;
                        best_label = l;
                        best_entries = entries;
                    }
                }
                labels[x] = old;
            }
            if (best_atom < 0) break;
            labels[best_atom] = best_label;
            MomentMatrix mat{ctx.n, ctx.k, best_entries};
            seen.push_back(mat.to_doubles());
            local.try_emplace(best_entries, labels);
        }
        partial[ci] = std::move(local);
    });
    PointMap merged;
    for (auto& part : partial)
        for (auto& [entries, labels] : part) merged.try_emplace(std::move(entries), std::move(labels));
    return merged;
}

} // namespace

MomentMatrix moment_matrix(const FiniteAction& a, const GroupWindow& window,
                           const Partition& partition, int n, int k) {
    if (static_cast<int>(partition.labels.size()) != a.atom_count())
        throw input_error("partition does not cover the action's atoms");
    if (partition.class_count != k) throw input_error("partition class count != k");
    const CloudContext ctx = make_context(a, window, n, k);
    MomentMatrix mat;
    mat.n = n;
    mat.k = k;
    ctx.fill_entries(partition.labels, mat.entries);
    return mat;
}

MomentCloud moment_cloud(const FiniteAction& a, const GroupWindow& window, int n, int k,
                         const CloudStrategy& strategy, std::uint64_t partition_budget) {
    const CloudContext ctx = make_context(a, window, n, k);
    PointMap found;
    bool exhaustive = false;
    switch (strategy.kind) {
        case CloudStrategy::Kind::Exhaustive:
            found = enumerate_exhaustive(ctx, partition_budget);
            exhaustive = true;
            break;
        case CloudStrategy::Kind::Random:
            found = enumerate_random(ctx, strategy.samples, strategy.seed);
            break;
        case CloudStrategy::Kind::LocalSearch:
            found = enumerate_local_search(ctx, strategy.starts, strategy.seed);
            break;
    }
    return finalize_cloud(std::move(found), ctx, exhaustive, strategy.note(), a.label());
}

MomentCloud refined_cloud(const FiniteAction& a, const GroupWindow& window, int n, int k, int q,
                          std::uint64_t partition_budget) {
    if (q < 1) throw input_error("refinement factor must be positive");
    const MomentCloud base = moment_cloud(a, window, n, k, CloudStrategy::exhaustive(),
                                          partition_budget);
    const std::size_t c = base.points.size();
    const int m = a.atom_count();

    // Multisets of size q over the base points; count C(c+q-1, q) against the budget.
    double est = 1.0;
    for (int i = 1; i <= q; ++i) est *= static_cast<double>(c + q - i) / i;
    if (est > static_cast<double>(partition_budget))
        throw budget_error("refined cloud: multiset count exceeds partition budget " +
                           std::to_string(partition_budget));

    PointMap found;
    std::vector<std::size_t> pick(q, 0); // non-decreasing indices into base.points
    const Rat inv_q(1, q);
    for (;;) {
        std::vector<Rat> entries(base.points.front().entries.size(), Rat(0));
        for (std::size_t j = 0; j < pick.size(); ++j)
            for (std::size_t e = 0; e < entries.size(); ++e)
                entries[e] += base.points[pick[j]].entries[e];
        for (auto& e : entries) e *= inv_q;

        std::vector<int> labels(static_cast<std::size_t>(m) * q);
        for (int x = 0; x < m; ++x)
            for (int j = 0; j < q; ++j)
                labels[static_cast<std::size_t>(x) * q + j] =
                    base.witnesses[pick[j]].labels[x];
        found.try_emplace(std::move(entries), std::move(labels));

        int pos = q - 1;
        while (pos >= 0 && pick[pos] == c - 1) --pos;
        if (pos < 0) break;
        const std::size_t v = pick[pos] + 1;
        for (int j = pos; j < q; ++j) pick[j] = v;
    }

    CloudContext rctx;
    rctx.n = n;
    rctx.k = k;
    rctx.m = m * q;
    MomentCloud cloud = finalize_cloud(std::move(found), rctx, true,
                                       "refined(q=" + std::to_string(q) + ")", a.label());
    return cloud;
}

double cloud_one_sided(const MomentCloud& from, const MomentCloud& to, HausdorffMode mode,
                       std::size_t* arg_max) {
    if (from.n != to.n || from.k != to.k)
        throw input_error("cloud (n,k) mismatch in Hausdorff computation");
    if (from.points.empty() || to.points.empty())
        throw input_error("Hausdorff distance over an empty cloud");

    double worst = -1.0;
    std::size_t worst_i = 0;

    if (mode == HausdorffMode::Points) {
        for (std::size_t i = 0; i < from.points_d.size(); ++i) {
            const auto& x = from.points_d[i];
            double nearest = 1e100;
            for (const auto& y : to.points_d) {
                // partial sup with early exit once it cannot improve `nearest`
                double d = 0.0;
                for (std::size_t c = 0; c < x.size(); ++c) {
                    const double t = std::fabs(x[c] - y[c]);
                    if (t > d) d = t;
                    if (d >= nearest) break;
                }
                if (d < nearest) nearest = d;
                if (nearest == 0.0) break;
            }
            if (nearest > worst) {
                worst = nearest;
                worst_i = i;
            }
        }
    } else {
        // Upper bound per point: distance to the nearest vertex. Points whose
        // bound cannot beat the running maximum skip the hull projection.
        std::vector<std::pair<double, std::size_t>> order(from.points_d.size());
        for (std::size_t i = 0; i < from.points_d.size(); ++i) {
            double ub = 1e100;
            for (const auto& y : to.points_d)
                ub = std::min(ub, euclidean_distance(from.points_d[i], y));
            order[i] = {ub, i};
        }
        std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
            if (l.first != r.first) return l.first > r.first;
            return l.second < r.second;
        });
        worst = 0.0;
        worst_i = order.empty() ? 0 : order.front().second;
        for (const auto& [ub, i] : order) {
            if (ub <= worst) break;
            const double d = distance_to_hull(from.points_d[i], to.points_d);
            if (d > worst) {
                worst = d;
                worst_i = i;
            }
        }
    }
    if (arg_max) *arg_max = worst_i;
    return worst < 0 ? 0.0 : worst;
}

double cloud_hausdorff(const MomentCloud& A, const MomentCloud& B, HausdorffMode mode) {
    return std::max(cloud_one_sided(A, B, mode), cloud_one_sided(B, A, mode));
}

int radius_for_words(int num_generators, std::uint64_t words) {
    int radius = 0;
    while (window_size(num_generators, radius) < words) ++radius;
    return radius;
}

double truncation_tail(int cut) { return std::ldexp(static_cast<double>(cut + 1), -cut); }

namespace {

// Shrink a cloud to a smaller word index n (prefix of the entries), re-deduplicating.
MomentCloud truncate_cloud(const MomentCloud& cloud, int n) {
    if (n == cloud.n) return cloud;
    PointMap found;
    const std::size_t keep = static_cast<std::size_t>(n) * cloud.k * cloud.k;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        std::vector<Rat> entries(cloud.points[i].entries.begin(),
                                 cloud.points[i].entries.begin() + keep);
        found.try_emplace(std::move(entries), cloud.witnesses[i].labels);
    }
    MomentCloud out;
    out.n = n;
    out.k = cloud.k;
    out.exhaustive = cloud.exhaustive;
    out.strategy_note = cloud.strategy_note;
    out.action_label = cloud.action_label;
    for (auto& [entries, labels] : found) {
        MomentMatrix mat;
        mat.n = n;
        mat.k = cloud.k;
        mat.entries = entries;
        out.points_d.push_back(mat.to_doubles());
        out.points.push_back(std::move(mat));
        out.witnesses.emplace_back(labels, cloud.k);
    }
    return out;
}

MetricResult metric_series(const FiniteAction& a, const FiniteAction& b, int cut,
                           const CloudStrategy& strategy, std::uint64_t partition_budget,
                           HausdorffMode mode) {
    if (cut < 2) throw input_error("metric cut must be at least 2");
    if (a.generator_count() != b.generator_count())
        throw input_error("metric between actions with different generator counts");
    const int gens = std::max(1, a.generator_count());
    const GroupWindow window = build_window(gens, radius_for_words(gens, cut - 1));

    MetricResult res;
    res.truncation_bound = truncation_tail(cut);
    for (int k = 1; k <= cut - 1; ++k) {
        const int n_max = cut - k;
        const MomentCloud full_a = moment_cloud(a, window, n_max, k, strategy, partition_budget);
        const MomentCloud full_b = moment_cloud(b, window, n_max, k, strategy, partition_budget);
        for (int n = n_max; n >= 1; --n) {
            const MomentCloud ca = truncate_cloud(full_a, n);
            const MomentCloud cb = truncate_cloud(full_b, n);
            res.value += std::ldexp(cloud_hausdorff(ca, cb, mode), -(n + k));
        }
    }
    return res;
}

} // namespace

MetricResult metric_d(const FiniteAction& a, const FiniteAction& b, int cut,
                      const CloudStrategy& strategy, std::uint64_t partition_budget) {
    return metric_series(a, b, cut, strategy, partition_budget, HausdorffMode::Points);
}

MetricResult metric_d_stable(const FiniteAction& a, const FiniteAction& b, int cut,
                             const CloudStrategy& strategy, std::uint64_t partition_budget) {
    return metric_series(a, b, cut, strategy, partition_budget, HausdorffMode::Hulls);
}

ContainmentResult containment_defect(const FiniteAction& a, const FiniteAction& b,
                                     const GroupWindow& window, int n, int k, HausdorffMode mode,
                                     const CloudStrategy& strategy,
                                     std::uint64_t partition_budget) {
    const MomentCloud ca = moment_cloud(a, window, n, k, strategy, partition_budget);
    const MomentCloud cb = moment_cloud(b, window, n, k, strategy, partition_budget);
    std::size_t arg = 0;
    ContainmentResult res;
    res.defect = cloud_one_sided(ca, cb, mode, &arg);
    res.witness = ca.witnesses[arg];
    return res;
}

} // namespace weakeq

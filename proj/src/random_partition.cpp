#include "weakeq/random_partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "weakeq/group_window.hpp"
#include "weakeq/parallel.hpp"
#include "weakeq/rng.hpp"

namespace weakeq {

namespace {

std::vector<Word> dedupe_words(const std::vector<Word>& G) {
    std::vector<Word> out;
    for (const Word& w : G) {
        bool seen = false;
        for (const Word& v : out)
            if (v == w) seen = true;
        if (!seen) out.push_back(w);
    }
    return out;
}

} // namespace

Rat freeness_defect(const FiniteAction& a, const std::vector<Word>& G) {
    const std::vector<Word> words = dedupe_words(G);
    std::vector<Permutation> perms;
    perms.reserve(words.size());
    for (const Word& w : words) perms.push_back(evaluate_word(a, w));

    Rat defect = 0;
    std::vector<int> images(words.size());
    for (int x = 0; x < a.atom_count(); ++x) {
        for (std::size_t j = 0; j < perms.size(); ++j) images[j] = perms[j].of(x);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            defect += a.weight(x);
    }
    return defect;
}

PartitionStats run_partition_experiment(const FiniteAction& a, const std::vector<Word>& G,
                                        const Partition& base, double delta, int trials,
                                        std::uint64_t seed, int window_budget,
                                        std::uint64_t cell_budget) {
    if (delta <= 0) throw input_error("deviation threshold delta must be positive");
    if (trials < 1) throw input_error("trials must be positive");
    if (static_cast<int>(base.labels.size()) != a.atom_count())
        throw input_error("base partition does not cover the action's atoms");

    const std::vector<Word> words = dedupe_words(G);
    const int gsize = static_cast<int>(words.size());
    if (gsize > window_budget)
        throw budget_error("window budget " + std::to_string(window_budget) +
                           " exceeded: |G| = " + std::to_string(gsize));

    const int m = a.atom_count();
    const std::uint64_t n_tau = 1ull << gsize;

    // Inverse images per word; the translated-class pattern of an atom reads
    // the base label (resp. color) of each of these images.
    std::vector<std::vector<int>> inv(gsize);
    for (int j = 0; j < gsize; ++j) inv[j] = evaluate_word(a, words[j]).inverse().images();

    // Distinct nonempty base-class patterns sigma, as dense ids.
    std::map<std::vector<int>, int> sigma_ids;
    std::vector<int> sigma_of_atom(m);
    {
        std::vector<int> key(gsize);
        std::vector<std::vector<int>> keys(m);
        for (int x = 0; x < m; ++x) {
            for (int j = 0; j < gsize; ++j) key[j] = base.labels[inv[j][x]];
            keys[x] = key;
            sigma_ids.emplace(key, 0);
        }
        int next = 0;
        for (auto& [k, id] : sigma_ids) id = next++;
        for (int x = 0; x < m; ++x) sigma_of_atom[x] = sigma_ids.at(keys[x]);
    }
    const std::size_t n_sigma = sigma_ids.size();

    const std::uint64_t cells = static_cast<std::uint64_t>(n_sigma) * n_tau;
    if (cells * static_cast<std::uint64_t>(trials) > cell_budget)
        throw budget_error("experiment cell budget " + std::to_string(cell_budget) +
                           " exceeded: cells*trials = " + std::to_string(cells) + "*" +
                           std::to_string(trials));

    std::vector<double> sigma_mass(n_sigma, 0.0);
    {
        std::vector<Rat> exact(n_sigma, Rat(0));
        for (int x = 0; x < m; ++x) exact[sigma_of_atom[x]] += a.weight(x);
        for (std::size_t s = 0; s < n_sigma; ++s) sigma_mass[s] = rat_to_double(exact[s]);
    }
    std::vector<double> atom_weight(m);
    for (int x = 0; x < m; ++x) atom_weight[x] = rat_to_double(a.weight(x));

    const double target = std::ldexp(1.0, -gsize);

    PartitionStats stats;
    stats.delta = delta;
    stats.window_size = gsize;
    stats.target = target;
    stats.trials = trials;
    stats.seed = seed;
    stats.freeness_defect = rat_to_double(freeness_defect(a, words));
    stats.cell_count = cells;
    stats.max_deviation_per_trial.assign(trials, 0.0);

    // Per-trial cell masses, slot per trial so the aggregation below is
    // independent of how trials were scheduled across workers.
    std::vector<std::vector<double>> masses(trials);
    std::vector<std::vector<int>> colorings(trials);

    parallel_chunks(static_cast<std::uint64_t>(trials), 8,
                    [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t t = begin; t < end; ++t) {
                            SplitMix64 rng(derive_seed(seed, t));
                            std::vector<int>& color = colorings[t];
                            color.resize(m);
                            for (int x = 0; x < m; ++x) color[x] = static_cast<int>(rng.next() & 1);

                            std::vector<double>& cell = masses[t];
                            cell.assign(cells, 0.0);
                            for (int x = 0; x < m; ++x) {
                                std::uint64_t tau = 0;
                                for (int j = 0; j < gsize; ++j)
                                    tau |= static_cast<std::uint64_t>(color[inv[j][x]]) << j;
                                cell[sigma_of_atom[x] * n_tau + tau] += atom_weight[x];
                            }
                            double dev = 0.0;
                            for (std::size_t s = 0; s < n_sigma; ++s)
                                for (std::uint64_t tau = 0; tau < n_tau; ++tau)
                                    dev = std::max(dev, std::fabs(cell[s * n_tau + tau] -
                                                                  target * sigma_mass[s]));
                            stats.max_deviation_per_trial[t] = dev;
                        }
                    });

    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        if (stats.max_deviation_per_trial[t] >= delta)
            ++failures;
        else if (stats.first_success_trial < 0) {
            stats.first_success_trial = t;
            stats.success_coloring = colorings[t];
        }
    }
    stats.empirical_failure_rate = static_cast<double>(failures) / trials;

    // Union-of-Chebyshev over all cells with empirical variances.
    double bound = 0.0;
    const double half_delta_sq = (delta / 2) * (delta / 2);
    for (std::uint64_t c = 0; c < cells; ++c) {
        double mean = 0.0;
        for (int t = 0; t < trials; ++t) mean += masses[t][c];
        mean /= trials;
        double var = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double d = masses[t][c] - mean;
            var += d * d;
        }
        var /= trials;
        bound += var / half_delta_sq;
    }
    stats.chebyshev_bound = std::min(1.0, bound);

    const double two_r = 2.0 * base.class_count;
    stats.analytic_variance_bound = delta * delta / (8.0 * std::pow(two_r, gsize));

    return stats;
}

} // namespace weakeq

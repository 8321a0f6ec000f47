#include "weakeq/coloring.hpp"

#include <set>

#include "weakeq/parallel.hpp"
#include "weakeq/rng.hpp"

namespace weakeq {

namespace {

struct ColoringContext {
    const FiniteAction* a;
    int m = 0;
    int alphabet = 1;
    std::vector<Word> words;
    std::vector<std::vector<int>> inv_image; // per word of F

    ColoringDistribution distribution(const std::vector<int>& coloring) const {
        ColoringDistribution dist;
        dist.window = words;
        dist.alphabet_size = alphabet;
        std::vector<int> pattern(inv_image.size());
        for (int x = 0; x < m; ++x) {
            for (std::size_t j = 0; j < inv_image.size(); ++j)
                pattern[j] = coloring[inv_image[j][x]];
            dist.masses[pattern] += a->weight(x);
        }
        return dist;
    }
};

ColoringContext make_coloring_context(const FiniteAction& a, int alphabet_size,
                                      const std::vector<Word>& F) {
    if (alphabet_size < 1) throw input_error("alphabet size must be positive");
    if (F.empty()) throw input_error("coloring window F must be nonempty");
    ColoringContext ctx;
    ctx.a = &a;
    ctx.m = a.atom_count();
    ctx.alphabet = alphabet_size;
    ctx.words = F;
    for (const Word& w : F) ctx.inv_image.push_back(evaluate_word(a, w).inverse().images());
    return ctx;
}

std::uint64_t coloring_count(int alphabet, int m, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > budget / static_cast<std::uint64_t>(alphabet) + 1) {
            total = budget + 1;
            break;
        }
        total *= static_cast<std::uint64_t>(alphabet);
    }
    if (total > budget)
        throw budget_error("exhaustive coloring cloud: L^m exceeds budget " +
                           std::to_string(budget));
    return total;
}

double tv_distance(const ColoringDistribution& a, const ColoringDistribution& b) {
    Rat acc = 0;
    auto it = a.masses.begin();
    auto jt = b.masses.begin();
    while (it != a.masses.end() || jt != b.masses.end()) {
        if (jt == b.masses.end() || (it != a.masses.end() && it->first < jt->first)) {
            acc += it->second;
            ++it;
        } else if (it == a.masses.end() || jt->first < it->first) {
            acc += jt->second;
            ++jt;
        } else {
            acc += abs(it->second - jt->second);
            ++it;
            ++jt;
        }
    }
    return rat_to_double(acc) / 2.0;
}

} // namespace

ColoringDistribution coloring_distribution(const FiniteAction& a,
                                           const std::vector<int>& coloring, int alphabet_size,
                                           const std::vector<Word>& F) {
    if (static_cast<int>(coloring.size()) != a.atom_count())
        throw input_error("coloring length != atom count");
    for (int c : coloring)
        if (c < 0 || c >= alphabet_size) throw input_error("coloring value outside the alphabet");
    return make_coloring_context(a, alphabet_size, F).distribution(coloring);
}

std::vector<ColoringDistribution> coloring_cloud(const FiniteAction& a, int alphabet_size,
                                                 const std::vector<Word>& F,
                                                 const CloudStrategy& strategy,
                                                 std::uint64_t budget) {
    const ColoringContext ctx = make_coloring_context(a, alphabet_size, F);
    std::set<ColoringDistribution> found;

    auto decode = [&](std::uint64_t index, std::vector<int>& coloring) {
        coloring.assign(ctx.m, 0);
        for (int i = ctx.m - 1; i >= 0; --i) {
            coloring[i] = static_cast<int>(index % alphabet_size);
            index /= alphabet_size;
        }
    };

    switch (strategy.kind) {
        case CloudStrategy::Kind::Exhaustive: {
            const std::uint64_t total = coloring_count(alphabet_size, ctx.m, budget);
            const std::uint64_t chunk = 2048;
            std::vector<std::set<ColoringDistribution>> partial(chunk_count(total, chunk));
            parallel_chunks(total, chunk,
                            [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
                                std::vector<int> coloring;
                                std::set<ColoringDistribution> local;
                                for (std::uint64_t idx = begin; idx < end; ++idx) {
                                    decode(idx, coloring);
                                    local.insert(ctx.distribution(coloring));
                                }
                                partial[ci] = std::move(local);
                            });
            for (auto& part : partial)
                for (auto& d : part) found.insert(std::move(d));
            break;
        }
        case CloudStrategy::Kind::Random: {
            if (strategy.samples < 1)
                throw input_error("random coloring cloud needs at least one sample");
            for (std::uint64_t s = 0; s < strategy.samples; ++s) {
                SplitMix64 rng(derive_seed(strategy.seed, s));
                std::vector<int> coloring(ctx.m);
                for (int x = 0; x < ctx.m; ++x)
                    coloring[x] = static_cast<int>(rng.below(alphabet_size));
                found.insert(ctx.distribution(coloring));
            }
            break;
        }
        case CloudStrategy::Kind::LocalSearch: {
            if (strategy.starts < 1)
                throw input_error("local_search coloring cloud needs at least one start");
            for (std::uint64_t st = 0; st < strategy.starts; ++st) {
                SplitMix64 rng(derive_seed(strategy.seed ^ 0xC0FFEEULL, st));
                std::vector<int> coloring(ctx.m);
                for (int x = 0; x < ctx.m; ++x)
                    coloring[x] = static_cast<int>(rng.below(alphabet_size));
                std::vector<ColoringDistribution> seen{ctx.distribution(coloring)};
                found.insert(seen.back());
                const int step_cap = 10 * ctx.m * alphabet_size;
                for (int step = 0; step < step_cap; ++step) {
                    double best_score = 1e-12;
                    int best_atom = -1, best_color = -1;
                    for (int x = 0; x < ctx.m; ++x) {
                        const int old = coloring[x];
                        for (int c = 0; c < alphabet_size; ++c) {
                            if (c == old) continue;
                            coloring[x] = c;
                            const ColoringDistribution cand = ctx.distribution(coloring);
                            double score = 1e100;
                            for (const auto& s : seen) score = std::min(score, tv_distance(cand, s));
                            if (score > best_score) {
                                best_score = score;
                                best_atom = x;
                                best_color = c;
                            }
                        }
                        coloring[x] = old;
                    }
                    if (best_atom < 0) break;
                    coloring[best_atom] = best_color;
                    seen.push_back(ctx.distribution(coloring));
                    found.insert(seen.back());
                }
            }
            break;
        }
    }
    return std::vector<ColoringDistribution>(found.begin(), found.end());
}

} // namespace weakeq

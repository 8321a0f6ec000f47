#include "weakeq/group_window.hpp"

#include <algorithm>

namespace weakeq {

std::vector<Word> GroupWindow::prefix(std::size_t n) const {
    if (n > words.size()) throw input_error("window prefix longer than the window");
    return std::vector<Word>(words.begin(), words.begin() + n);
}

std::uint64_t window_size(int num_generators, int radius) {
    const std::uint64_t k = static_cast<std::uint64_t>(num_generators);
    std::uint64_t total = 1, shell = 2 * k;
    for (int l = 1; l <= radius; ++l) {
        total += shell;
        shell *= 2 * k - 1;
    }
    return total;
}

GroupWindow build_window(int num_generators, int radius) {
    if (num_generators < 1) throw input_error("build_window needs at least one generator");
    if (radius < 0) throw input_error("build_window radius must be non-negative");

    // Letters in rank order: g1, g1^-1, g2, g2^-1, ...
    std::vector<int> alphabet;
    for (int g = 1; g <= num_generators; ++g) {
        alphabet.push_back(g);
        alphabet.push_back(-g);
    }

    GroupWindow w;
    w.num_generators = num_generators;
    w.radius = radius;
    w.words.push_back(Word::identity());

    std::vector<std::vector<int>> frontier{{}};
    for (int l = 1; l <= radius; ++l) {
        std::vector<std::vector<int>> next;
        for (const auto& stem : frontier) {
            for (int letter : alphabet) {
                if (!stem.empty() && stem.back() == -letter) continue;
                auto extended = stem;
                extended.push_back(letter);
                next.push_back(std::move(extended));
            }
        }
        for (auto& letters : next) w.words.emplace_back(Word(letters));
        frontier = std::move(next);
    }
    return w;
}

std::vector<Word> ball(int num_generators, int radius) {
    return build_window(num_generators, radius).words;
}

Permutation evaluate_word(const FiniteAction& action, const Word& word) {
    if (word.max_generator() > action.generator_count())
        throw input_error("word uses generator index beyond the action's generator count");

    std::vector<Permutation> inverses(action.generator_count());
    for (int l : word.letters())
        if (l < 0 && inverses[-l - 1].size() == 0)
            inverses[-l - 1] = action.generator(-l - 1).inverse();

    // left-to-right composition: (uv)^a = u^a o v^a
    Permutation acc = Permutation::identity(action.atom_count());
    for (int l : word.letters())
        acc = acc.compose(l > 0 ? action.generator(l - 1) : inverses[-l - 1]);
    return acc;
}

Rat relator_defect(const FiniteAction& action, const std::vector<Word>& relators) {
    std::vector<bool> moved(action.atom_count(), false);
    for (const auto& rel : relators) {
        const Permutation p = evaluate_word(action, rel);
        for (int x = 0; x < action.atom_count(); ++x)
            if (p.of(x) != x) moved[x] = true;
    }
    Rat defect = 0;
    for (int x = 0; x < action.atom_count(); ++x)
        if (moved[x]) defect += action.weight(x);
    return defect;
}

} // namespace weakeq

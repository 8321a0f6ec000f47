#include "weakeq/schreier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "weakeq/group_window.hpp"

namespace weakeq {

bool SchreierForm::operator<(const SchreierForm& o) const {
    if (size != o.size) return size < o.size;
    for (std::size_t g = 0; g < perms.size() && g < o.perms.size(); ++g) {
        if (perms[g].images() != o.perms[g].images())
            return perms[g].images() < o.perms[g].images();
    }
    return perms.size() < o.perms.size();
}

std::string SchreierForm::str() const {
    std::string s = "n=" + std::to_string(size) + ":";
    for (const auto& p : perms) {
        s += " (";
        for (int i = 0; i < p.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(p.of(i));
        }
        s += ")";
    }
    return s;
}

std::vector<Orbit> orbit_decomposition(const FiniteAction& a) {
    const int m = a.atom_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int g = 0; g < a.generator_count(); ++g)
        for (int x = 0; x < m; ++x) {
            const int rx = find(x), ry = find(a.generator(g).of(x));
            if (rx != ry) parent[rx] = ry;
        }

    std::vector<std::vector<int>> buckets(m);
    for (int x = 0; x < m; ++x) buckets[find(x)].push_back(x);

    std::vector<Orbit> orbits;
    for (int r = 0; r < m; ++r) {
        if (buckets[r].empty()) continue;
        Orbit o;
        o.atoms = buckets[r];
        std::sort(o.atoms.begin(), o.atoms.end());
        o.total_weight = 0;
        for (int x : o.atoms) o.total_weight += a.weight(x);
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const Orbit& l, const Orbit& r) { return l.atoms.front() < r.atoms.front(); });
    return orbits;
}

CanonicalOrbit canonical_schreier_form(const FiniteAction& a, const Orbit& orbit,
                                       int canon_budget) {
    const int s = static_cast<int>(orbit.atoms.size());
    if (s > canon_budget)
        throw budget_error("canonicalization budget " + std::to_string(canon_budget) +
                           " exceeded: orbit has " + std::to_string(s) + " atoms");

    const int gens = a.generator_count();
    std::vector<int> arrangement = orbit.atoms; // ascending start
    std::vector<int> best_arrangement;
    std::vector<int> best; // concatenated one-line notations
    std::vector<int> pos(a.atom_count(), -1);
    std::vector<int> candidate(static_cast<std::size_t>(gens) * s);

    do {
        for (int i = 0; i < s; ++i) pos[arrangement[i]] = i;
        for (int g = 0; g < gens; ++g)
            for (int i = 0; i < s; ++i)
                candidate[static_cast<std::size_t>(g) * s + i] =
                    pos[a.generator(g).of(arrangement[i])];
        if (best.empty() || candidate < best) {
            best = candidate;
            best_arrangement = arrangement;
        }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    CanonicalOrbit out;
    out.form.size = s;
    for (int g = 0; g < gens; ++g) {
        std::vector<int> img(best.begin() + static_cast<std::size_t>(g) * s,
                             best.begin() + static_cast<std::size_t>(g + 1) * s);
        out.form.perms.emplace_back(std::move(img));
    }
    out.arrangement = best_arrangement;
    return out;
}

TypeDistribution type_of(const FiniteAction& a, int canon_budget) {
    TypeDistribution type;
    for (const Orbit& orbit : orbit_decomposition(a)) {
        CanonicalOrbit canon = canonical_schreier_form(a, orbit, canon_budget);
        type.weights[canon.form] += orbit.total_weight;
    }
    return type;
}

TypeDistribution type_mix(const Rat& t_raw, const TypeDistribution& ta,
                          const TypeDistribution& tb) {
    const Rat t = canonical(t_raw);
    TypeDistribution out;
    if (t != 0)
        for (const auto& [form, w] : ta.weights) out.weights[form] += t * w;
    if (t != 1)
        for (const auto& [form, w] : tb.weights) out.weights[form] += (1 - t) * w;
    for (auto it = out.weights.begin(); it != out.weights.end();)
        it = it->second == 0 ? out.weights.erase(it) : std::next(it);
    return out;
}

Rat type_distance(const TypeDistribution& ta, const TypeDistribution& tb) {
    Rat acc = 0;
    auto it = ta.weights.begin();
    auto jt = tb.weights.begin();
    while (it != ta.weights.end() || jt != tb.weights.end()) {
        if (jt == tb.weights.end() || (it != ta.weights.end() && it->first < jt->first)) {
            acc += it->second;
            ++it;
        } else if (it == ta.weights.end() || jt->first < it->first) {
            acc += jt->second;
            ++jt;
        } else {
            acc += abs(it->second - jt->second);
            ++it;
            ++jt;
        }
    }
    return acc / 2;
}

namespace {

struct OrbitClass {
    SchreierForm form;
    Rat atom_weight;

    bool operator<(const OrbitClass& o) const {
        if (!(form == o.form)) return form < o.form;
        return cmp(atom_weight, o.atom_weight) < 0;
    }
};

} // namespace

ConjugatorResult conjugator(const FiniteAction& a, const FiniteAction& b,
                            const std::vector<Word>& F, int canon_budget) {
    ConjugatorResult res;
    if (a.generator_count() != b.generator_count()) {
        res.diagnostic = "generator counts differ";
        return res;
    }

    auto classify = [&](const FiniteAction& act) {
        std::map<OrbitClass, std::vector<CanonicalOrbit>> classes;
        for (const Orbit& orbit : orbit_decomposition(act)) {
            CanonicalOrbit canon = canonical_schreier_form(act, orbit, canon_budget);
            classes[{canon.form, orbit.atom_weight()}].push_back(std::move(canon));
        }
        return classes;
    };
    const auto ca = classify(a);
    const auto cb = classify(b);

    // Orbit classes must match atom-for-atom: same form, same atom weight,
    // same multiplicity. Report the first mismatch in canonical order.
    auto it = ca.begin();
    auto jt = cb.begin();
    while (it != ca.end() || jt != cb.end()) {
        const bool only_a = jt == cb.end() || (it != ca.end() && it->first < jt->first);
        const bool only_b = it == ca.end() || (jt != cb.end() && jt->first < it->first);
        const std::size_t count_a = only_b ? 0 : it->second.size();
        const std::size_t count_b = only_a ? 0 : jt->second.size();
        if (count_a != count_b) {
            const OrbitClass& c = only_b ? jt->first : it->first;
            res.diagnostic = "unmatched orbit class: form {" + c.form.str() + "}, atom weight " +
                             rat_to_string(c.atom_weight) + " (count " + std::to_string(count_a) +
                             " vs " + std::to_string(count_b) + ")";
            return res;
        }
        ++it;
        ++jt;
    }

    std::vector<int> mapping(a.atom_count(), -1);
    for (const auto& [cls, orbits_a] : ca) {
        const auto& orbits_b = cb.at(cls);
        for (std::size_t i = 0; i < orbits_a.size(); ++i) {
            const auto& arr_a = orbits_a[i].arrangement;
            const auto& arr_b = orbits_b[i].arrangement;
            for (std::size_t p = 0; p < arr_a.size(); ++p) mapping[arr_a[p]] = arr_b[p];
        }
    }
    Permutation T(mapping);

    // Verify the intertwining identity on F and weight preservation.
    for (int x = 0; x < a.atom_count(); ++x)
        if (a.weight(x) != b.weight(T.of(x))) {
            res.diagnostic = "internal: mapping not weight-preserving";
            return res;
        }
    for (const Word& w : F) {
        const Permutation pa = evaluate_word(a, w);
        const Permutation pb = evaluate_word(b, w);
        for (int x = 0; x < a.atom_count(); ++x)
            if (T.of(pa.of(x)) != pb.of(T.of(x))) {
                res.diagnostic = "internal: intertwining identity failed on word " + w.str();
                return res;
            }
    }

    res.mapping = std::move(T);
    return res;
}

bool actions_isomorphic(const FiniteAction& a, const FiniteAction& b, int canon_budget) {
    if (a.atom_count() != b.atom_count()) return false;
    if (a.generator_count() != b.generator_count()) return false;
    return conjugator(a, b, {Word::identity()}, canon_budget).success();
}

} // namespace weakeq

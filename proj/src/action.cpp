#include "weakeq/action.hpp"

#include <fstream>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "weakeq/group_window.hpp"
#include "weakeq/word.hpp"

namespace weakeq {

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
        mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + text);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational: " + text);
    }
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw input_error("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& g) const {
    if (size() != g.size()) throw input_error("composing permutations of different sizes");
    std::vector<int> img(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) img[x] = images_[g.images_[x]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<int>(x);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) return false;
    return true;
}

FiniteAction::FiniteAction(std::vector<Rat> weights, std::vector<Permutation> generators,
                           std::string label)
    : weights_(std::move(weights)), generators_(std::move(generators)), label_(std::move(label)) {
    if (weights_.empty()) throw input_error("action needs at least one atom");
    for (Rat& w : weights_) w.canonicalize();
    Rat total = 0;
    for (const Rat& w : weights_) {
        if (w <= 0) throw input_error("atom weights must be positive (zero-mass atoms are dropped)");
        total += w;
    }
    if (total != 1) throw input_error("atom weights must sum to 1 exactly, got " + rat_to_string(total));
    for (const auto& g : generators_) {
        if (g.size() != atom_count()) throw input_error("generator permutation size != atom count");
        for (int x = 0; x < atom_count(); ++x)
            if (weights_[g.of(x)] != weights_[x])
                throw input_error("generator does not preserve the measure at atom " + std::to_string(x));
    }
}

namespace fixtures {

FiniteAction swap_pair() {
    return FiniteAction({Rat(1, 2), Rat(1, 2)}, {Permutation({1, 0})}, "swap");
}

FiniteAction fixed_pair() {
    return FiniteAction({Rat(1, 2), Rat(1, 2)}, {Permutation({0, 1})}, "fix");
}

FiniteAction cycle4() { return cycle(4); }

FiniteAction trivial(int q, int generators) {
    if (q < 1) throw input_error("trivial action needs at least one atom");
    std::vector<Rat> w(q, Rat(1, q));
    std::vector<Permutation> gens(generators, Permutation::identity(q));
    return FiniteAction(std::move(w), std::move(gens), "trivial" + std::to_string(q));
}

FiniteAction cycle(int n) {
    if (n < 1) throw input_error("cycle needs at least one atom");
    std::vector<Rat> w(n, Rat(1, n));
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return FiniteAction(std::move(w), {Permutation(std::move(img))}, "cycle" + std::to_string(n));
}

} // namespace fixtures

FiniteAction convex_combine(const Rat& t, const FiniteAction& a, const FiniteAction& b) {
    const Rat tc = canonical(t);
    if (tc < 0 || tc > 1) throw input_error("combination coefficient must lie in [0,1]");
    return finite_mixture({{tc, a}, {1 - tc, b}});
}

FiniteAction finite_mixture(const std::vector<std::pair<Rat, FiniteAction>>& raw_terms) {
    if (raw_terms.empty()) throw input_error("mixture needs at least one term");
    std::vector<std::pair<Rat, const FiniteAction*>> terms;
    terms.reserve(raw_terms.size());
    for (const auto& [coeff, act] : raw_terms) terms.emplace_back(canonical(coeff), &act);

    Rat total = 0;
    const int gens = terms.front().second->generator_count();
    for (const auto& [coeff, act] : terms) {
        if (coeff < 0) throw input_error("mixture coefficients must be non-negative");
        if (act->generator_count() != gens)
            throw input_error("mixture terms must share the generator count");
        total += coeff;
    }
    if (total != 1)
        throw input_error("mixture coefficients must sum to 1 exactly, got " + rat_to_string(total));

    std::vector<Rat> weights;
    std::size_t m = 0;
    for (const auto& [coeff, act] : terms)
        if (coeff != 0) m += act->atom_count();

    std::vector<std::vector<int>> images(gens, std::vector<int>(m));
    int base = 0;
    std::string label;
    for (const auto& [coeff, act] : terms) {
        if (coeff == 0) continue; // dropped block
        for (int x = 0; x < act->atom_count(); ++x) {
            weights.push_back(coeff * act->weight(x));
            for (int g = 0; g < gens; ++g) images[g][base + x] = base + act->generator(g).of(x);
        }
        if (!label.empty()) label += "+";
        label += rat_to_string(coeff) + "*" + (act->label().empty() ? "?" : act->label());
        base += act->atom_count();
    }
    std::vector<Permutation> perms;
    perms.reserve(gens);
    for (auto& img : images) perms.emplace_back(std::move(img));
    return FiniteAction(std::move(weights), std::move(perms), label);
}

FiniteAction product(const FiniteAction& a, const FiniteAction& b) {
    if (a.generator_count() != b.generator_count())
        throw input_error("product requires equal generator counts");
    const int ma = a.atom_count(), mb = b.atom_count();
    std::vector<Rat> weights;
    weights.reserve(static_cast<std::size_t>(ma) * mb);
    for (int x = 0; x < ma; ++x)
        for (int y = 0; y < mb; ++y) weights.push_back(a.weight(x) * b.weight(y));

    std::vector<Permutation> perms;
    for (int g = 0; g < a.generator_count(); ++g) {
        std::vector<int> img(static_cast<std::size_t>(ma) * mb);
        for (int x = 0; x < ma; ++x)
            for (int y = 0; y < mb; ++y)
                img[x * mb + y] = a.generator(g).of(x) * mb + b.generator(g).of(y);
        perms.emplace_back(std::move(img));
    }
    return FiniteAction(std::move(weights), std::move(perms),
                        (a.label().empty() ? "?" : a.label()) + "x" +
                            (b.label().empty() ? "?" : b.label()));
}

FiniteAction refine(const FiniteAction& a, int q) {
    if (q < 1) throw input_error("refinement factor must be positive");
    return product(a, fixtures::trivial(q, a.generator_count()));
}

bool is_ergodic(const FiniteAction& a) {
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
    for (int x = 1; x < m; ++x)
        if (find(x) != find(0)) return false;
    return true;
}

FiniteAction relabel(const FiniteAction& a, const Permutation& perm) {
    if (perm.size() != a.atom_count()) throw input_error("relabeling size != atom count");
    std::vector<Rat> weights(a.atom_count());
    for (int x = 0; x < a.atom_count(); ++x) weights[perm.of(x)] = a.weight(x);
    std::vector<Permutation> gens;
    for (int g = 0; g < a.generator_count(); ++g)
        gens.push_back(perm.compose(a.generator(g)).compose(perm.inverse()));
    return FiniteAction(std::move(weights), std::move(gens), a.label());
}

FiniteAction load_action_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("action file is not valid JSON: ") + e.what());
    }
    if (!doc.contains("atoms") || !doc.contains("weights") || !doc.contains("generators"))
        throw input_error("action file needs fields: atoms, weights, generators");

    try {
        const int m = doc["atoms"].get<int>();
        std::vector<Rat> weights;
        for (const auto& w : doc["weights"]) weights.push_back(rat_from_string(w.get<std::string>()));
        if (static_cast<int>(weights.size()) != m)
            throw input_error("weights count != atoms");

        std::vector<Permutation> gens;
        for (const auto& g : doc["generators"]) {
            std::vector<int> img;
            for (const auto& v : g) img.push_back(v.get<int>());
            if (static_cast<int>(img.size()) != m)
                throw input_error("generator image array length != atoms");
            gens.emplace_back(std::move(img));
        }

        FiniteAction action(std::move(weights), std::move(gens),
                            doc.contains("label") ? doc["label"].get<std::string>() : "");

        if (doc.contains("relators")) {
            for (const auto& r : doc["relators"]) {
                const Word rel = Word::parse(r.get<std::string>());
                const Rat defect = relator_defect(action, {rel});
                if (defect != 0)
                    throw input_error("relator '" + r.get<std::string>() +
                                      "' does not act trivially (defect " + rat_to_string(defect) +
                                      ")");
            }
        }
        return action;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("action file field has the wrong shape: ") + e.what());
    }
}

FiniteAction load_action_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open action file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_action_json(buf.str());
}

std::string action_to_json(const FiniteAction& a) {
    nlohmann::ordered_json doc;
    doc["atoms"] = a.atom_count();
    std::vector<std::string> ws;
    for (const Rat& w : a.weights()) ws.push_back(rat_to_string(w));
    doc["weights"] = ws;
    std::vector<std::vector<int>> gens;
    for (const auto& g : a.generators()) gens.push_back(g.images());
    doc["generators"] = gens;
    if (!a.label().empty()) doc["label"] = a.label();
    return doc.dump(2) + "\n";
}

} // namespace weakeq

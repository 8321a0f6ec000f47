#pragma once

#include <string>
#include <vector>

#include "weakeq/rational.hpp"

namespace weakeq {

/// Bijection of {0..m-1}, stored as the image sequence.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);

    int size() const { return static_cast<int>(images_.size()); }
    int of(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    /// (f.compose(g))(x) = f(g(x)).
    Permutation compose(const Permutation& g) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

/// Finite weighted measure-preserving action: m atoms with exact positive
/// rational weights summing to 1, and one weight-preserving permutation per
/// generator. Immutable after construction; the constructor checks every
/// invariant and throws input_error on violation.
class FiniteAction {
public:
    FiniteAction(std::vector<Rat> weights, std::vector<Permutation> generators,
                 std::string label = "");

    int atom_count() const { return static_cast<int>(weights_.size()); }
    int generator_count() const { return static_cast<int>(generators_.size()); }
    const std::vector<Rat>& weights() const { return weights_; }
    const Rat& weight(int atom) const { return weights_[atom]; }
    const Permutation& generator(int i) const { return generators_[i]; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::string& label() const { return label_; }

private:
    std::vector<Rat> weights_;
    std::vector<Permutation> generators_;
    std::string label_;
};

// Desk fixtures used throughout the test suites.
namespace fixtures {
/// Two atoms of mass 1/2, one generator acting as the transposition.
FiniteAction swap_pair();
/// Two fixed atoms of mass 1/2, one identity generator.
FiniteAction fixed_pair();
/// Four uniform atoms, one generator acting as a 4-cycle.
FiniteAction cycle4();
/// q uniform atoms, every one of `generators` generators acting trivially.
FiniteAction trivial(int q, int generators = 1);
/// Uniform n-cycle on one generator.
FiniteAction cycle(int n);
} // namespace fixtures

/// t*a + (1-t)*b on the disjoint union, generators acting blockwise.
/// At t = 0 or t = 1 the zero-mass block is dropped entirely.
FiniteAction convex_combine(const Rat& t, const FiniteAction& a, const FiniteAction& b);

/// Weighted disjoint union of finitely many actions; coefficients must sum
/// to 1 exactly, zero-coefficient terms are dropped.
FiniteAction finite_mixture(const std::vector<std::pair<Rat, FiniteAction>>& terms);

/// Product action: atom set is the Cartesian product (a-major indexing),
/// weights multiply, generators act diagonally.
FiniteAction product(const FiniteAction& a, const FiniteAction& b);

/// a x trivial(q): each atom split into q equal shares the generators fix.
FiniteAction refine(const FiniteAction& a, int q);

/// True iff the generators act transitively on the atoms.
bool is_ergodic(const FiniteAction& a);

/// Push the action forward along an atom bijection (new index = perm(old)).
FiniteAction relabel(const FiniteAction& a, const Permutation& perm);

/// Action file format (JSON): {atoms, weights: ["p/q"...], generators:
/// [[images]...], relators: ["word"...]?, label?}. Loading validates all
/// FiniteAction invariants and, when relators are present, that every
/// relator acts trivially; the first violation is reported.
FiniteAction load_action_json(const std::string& json_text);
FiniteAction load_action_file(const std::string& path);
std::string action_to_json(const FiniteAction& a);

} // namespace weakeq

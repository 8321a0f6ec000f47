#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakeq/action.hpp"
#include "weakeq/rational.hpp"
#include "weakeq/word.hpp"

namespace weakeq {

/// Minimal generator-invariant set of atoms. Atoms of one orbit all carry
/// the same weight (generators preserve weights).
struct Orbit {
    std::vector<int> atoms; // ascending
    Rat total_weight;

    Rat atom_weight() const { return total_weight / static_cast<int>(atoms.size()); }
};

/// Transitive action of the generators on {0..size-1} in canonical form:
/// the lexicographically least concatenation of generator one-line notations
/// over all relabelings of the orbit. Isomorphic orbits yield equal forms.
struct SchreierForm {
    int size = 0;
    std::vector<Permutation> perms;

    bool operator==(const SchreierForm& o) const { return size == o.size && perms == o.perms; }
    bool operator<(const SchreierForm& o) const;
    std::string str() const;
};

/// Brute-force canonicalization is factorial in the orbit size; refusal
/// above this many atoms.
inline constexpr int kDefaultCanonBudget = 9;

/// Orbits in deterministic order (by least atom index).
std::vector<Orbit> orbit_decomposition(const FiniteAction& a);

struct CanonicalOrbit {
    SchreierForm form;
    /// arrangement[i] = original atom placed at canonical position i.
    std::vector<int> arrangement;
};

CanonicalOrbit canonical_schreier_form(const FiniteAction& a, const Orbit& orbit,
                                       int canon_budget = kDefaultCanonBudget);

/// Weighted multiset of canonical transitive forms: the pushforward of the
/// measure under the stabilizer map at this finite scale. Compared exactly.
struct TypeDistribution {
    std::map<SchreierForm, Rat> weights;

    bool operator==(const TypeDistribution& o) const { return weights == o.weights; }
};

TypeDistribution type_of(const FiniteAction& a, int canon_budget = kDefaultCanonBudget);

/// t*ta + (1-t)*tb as distributions (exact).
TypeDistribution type_mix(const Rat& t, const TypeDistribution& ta, const TypeDistribution& tb);

/// Total variation distance (1/2) sum |difference|; zero iff equal.
Rat type_distance(const TypeDistribution& ta, const TypeDistribution& tb);

/// Result of the conjugator construction: either a weight-preserving atom
/// bijection T with T(g^a x) = g^b T(x) for every generator g (hence every
/// word), or a structured failure naming the first unmatched
/// (form, atom-weight) class.
struct ConjugatorResult {
    std::optional<Permutation> mapping; // atom of a -> atom of b
    std::string diagnostic;

    bool success() const { return mapping.has_value(); }
};

/// Preconditions (checked, reported as failure values): equal types and
/// matching orbit-weight multisets per canonical form. The words of F are
/// used to re-verify the intertwining identity on the returned mapping.
ConjugatorResult conjugator(const FiniteAction& a, const FiniteAction& b,
                            const std::vector<Word>& F,
                            int canon_budget = kDefaultCanonBudget);

/// Isomorphism of weighted actions, decided by canonical forms orbitwise
/// plus exact weight matching.
bool actions_isomorphic(const FiniteAction& a, const FiniteAction& b,
                        int canon_budget = kDefaultCanonBudget);

} // namespace weakeq

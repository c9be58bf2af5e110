#pragma once
// Substructures and constructions on finite semigroups: subsemigroups,
// ideals, coideals, prime coideals, Rees quotients, 0/1-extensions,
// generated congruences, quotients, and direct products.

#include <utility>
#include <vector>

#include "semiclose/semigroup.hpp"

namespace semiclose {

bool is_commutative(const FiniteSemigroup& s);

// A subsemigroup is closed under multiplication; the empty set qualifies.
bool is_subsemigroup(const FiniteSemigroup& s, const ElementSet& a);

// An ideal absorbs multiplication on both sides; the empty set qualifies.
bool is_ideal(const FiniteSemigroup& s, const ElementSet& a);

// A coideal is a set whose complement is an ideal.
bool is_coideal(const FiniteSemigroup& s, const ElementSet& a);

// A prime coideal is simultaneously a subsemigroup and a coideal.
bool is_prime_coideal(const FiniteSemigroup& s, const ElementSet& c);

// Equivalent route: the characteristic function of c is a homomorphism onto
// the two-element min-semilattice {0,1}. Kept separate so the two
// implementations can be tested against each other.
bool chi_is_min_homomorphism(const FiniteSemigroup& s, const ElementSet& c);

struct QuotientResult {
  FiniteSemigroup semigroup;
  std::vector<int> projection;  // parent element -> quotient element
};

// Collapses the ideal to a single absorbing element, keeping every other
// element separate. Empty ideal returns the semigroup unchanged (identity
// projection). Throws NotAnIdeal.
QuotientResult rees_quotient(const FiniteSemigroup& s, const ElementSet& ideal);

// Adjoins an absorbing zero / neutral identity as the new last element; the
// original table is embedded unchanged.
FiniteSemigroup zero_extension(const FiniteSemigroup& s);
FiniteSemigroup one_extension(const FiniteSemigroup& s);

// Smallest congruence containing the seed pairs: closes under
// (ax,ay), (xa,ya) for every a until a fixed point.
Congruence generated_congruence(const FiniteSemigroup& s,
                                const std::vector<std::pair<int, int>>& pairs);

// Quotient by a compatible partition; throws IncompatiblePartition.
QuotientResult quotient(const FiniteSemigroup& s, const Congruence& cong);

bool is_compatible(const FiniteSemigroup& s, const Congruence& cong);

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

// Reindexes a multiplicatively closed subset as a semigroup of its own.
// back_map (if given) receives sub-element -> parent-element. Throws
// InvalidArgument if the subset is empty or not closed.
FiniteSemigroup induced_subsemigroup(const FiniteSemigroup& s,
                                     const ElementSet& a,
                                     std::vector<int>* back_map = nullptr);

// image[x] is the target element for source element x.
bool is_homomorphism(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                     const std::vector<int>& image);

// A group: some identity element and a two-sided inverse for every element.
bool is_group(const FiniteSemigroup& s);

}  // namespace semiclose

#pragma once
// Structural invariants of a finite semigroup: idempotents and their natural
// partial order, monogenic data, maximal subgroups and the Clifford part,
// center and ideal center, viable idempotents, the semilattice reflection,
// root sets, and exponents.

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "semiclose/semigroup.hpp"

namespace semiclose {

ElementSet idempotents(const FiniteSemigroup& s);

struct MonogenicData {
  int element;
  int index;   // smallest i with x^i = x^(i+period)
  int period;  // cycle length of the power sequence
  int pi;      // the unique idempotent power of x
};

MonogenicData monogenic_data(const FiniteSemigroup& s, int x);

// The natural partial order on idempotents: e <= f iff ef = fe = e.
class IdempotentPoset {
 public:
  IdempotentPoset(std::vector<int> elements, std::vector<bool> leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool leq(int e, int f) const;  // by semigroup element, not position

  // Covering pairs (e, f) with e < f and nothing strictly between.
  std::vector<std::pair<int, int>> hasse_pairs() const;

  // Both are trivially true for finite posets; kept as real entry points so
  // symbolic reasoning and the finite case share one poset interface. They
  // verify the partial-order axioms as a side effect.
  bool chain_finite() const;
  bool well_founded() const;

 private:
  bool check_axioms() const;
  std::vector<int> elements_;
  std::vector<int> position_;   // element -> index into elements_, or -1
  std::vector<bool> leq_;       // size * size, by position
};

IdempotentPoset natural_order(const FiniteSemigroup& s);

// Maximal subgroup at idempotent e: units of the local monoid eSe.
// Throws NotIdempotent.
ElementSet maximal_subgroup(const FiniteSemigroup& s, int e);

// Union of all maximal subgroups.
ElementSet clifford_part(const FiniteSemigroup& s);

ElementSet center(const FiniteSemigroup& s);

// Elements z of the center with zX contained in the center.
ElementSet ideal_center(const FiniteSemigroup& s);

// Local coideal at e: elements x with xe = ex lying in the maximal subgroup
// at e. Throws NotIdempotent.
ElementSet local_coideal(const FiniteSemigroup& s, int e);

// e is viable iff the complement of its local coideal is an ideal.
bool viable_by_coideal(const FiniteSemigroup& s, int e);

// Equivalent characterization: every factorization xy = e has xe = ex and
// ye = ey. The two are cross-checked by the verification suite.
bool viable_by_products(const FiniteSemigroup& s, int e);

ElementSet viable_idempotents(const FiniteSemigroup& s);

struct ReflectionResult {
  FiniteSemigroup reflection;   // the semilattice quotient
  std::vector<int> projection;  // element -> reflection element
};

// Quotient by the smallest semilattice congruence (generated by x^2 ~ x and
// xy ~ yx for all x, y).
ReflectionResult semilattice_reflection(const FiniteSemigroup& s);

bool is_semilattice(const FiniteSemigroup& s);

// n-th roots of a: elements x with x^n in a.
ElementSet roots(const FiniteSemigroup& s, const ElementSet& a, std::uint64_t n);

// Union of n-th roots over all n >= 1.
ElementSet roots_all(const FiniteSemigroup& s, const ElementSet& a);

// Exponent of a subset: with the infinity marker reserved for symbolic use,
// finite tables always produce a finite value.
struct Exponent {
  bool finite;
  std::uint64_t value;  // meaningful only when finite

  static Exponent of(std::uint64_t n) { return {true, n}; }
  static Exponent infinite() { return {false, 0}; }
  bool operator==(const Exponent&) const = default;
};

// Smallest n >= 1 with x^n idempotent for every x in b (vacuously 1 when b
// is empty).
Exponent exponent_of(const FiniteSemigroup& s, const ElementSet& b);

// Inverse of g within the subgroup h whose identity is e.
int group_inverse(const FiniteSemigroup& s, const ElementSet& h, int g, int e);

// Structural report fragment: idempotents, Hasse pairs of the natural order,
// per-idempotent subgroup orders, |H|, |Z|, |IZ|, viable idempotents,
// reflection order, exponent.
nlohmann::json invariant_report(const FiniteSemigroup& s);

}  // namespace semiclose

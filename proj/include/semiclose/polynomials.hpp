#pragma once
// Semigroup polynomials f(x) = a0 x a1 x ... x an with coefficients drawn
// from the semigroup with an adjoined unit (encoded -1). Degree counts the
// variable slots. Includes composition, polybounded covers, and polyfinite
// witnesses with their verification procedure.

#include <optional>
#include <vector>

#include "json.hpp"
#include "semiclose/semigroup.hpp"

namespace semiclose {

inline constexpr int kUnitCoefficient = -1;

class SemigroupPolynomial {
 public:
  // coeffs.size() == degree + 1, degree >= 1; entries are element indices or
  // kUnitCoefficient for the adjoined unit.
  explicit SemigroupPolynomial(std::vector<int> coeffs);

  static SemigroupPolynomial identity();  // f(x) = x

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<int>& coeffs() const { return coeffs_; }

  bool operator==(const SemigroupPolynomial&) const = default;

 private:
  std::vector<int> coeffs_;
};

int eval_polynomial(const FiniteSemigroup& s, const SemigroupPolynomial& f,
                    int x);

// f after g: substitutes g's word into every variable slot of f and merges
// the constants that become adjacent, so deg(compose) = deg(f) * deg(g).
SemigroupPolynomial compose(const FiniteSemigroup& s,
                            const SemigroupPolynomial& f,
                            const SemigroupPolynomial& g);

struct CoverItem {
  SemigroupPolynomial poly;
  int target;
};

// X = union of f_i^{-1}(b_i): every element is mapped to some target by some
// item.
struct PolyboundedCover {
  std::vector<CoverItem> items;
};

bool verify_cover(const FiniteSemigroup& s, const PolyboundedCover& cover);

// Truncated search space. Coefficients formally range over words of length
// <= max_coeff_word, but over a finite semigroup any such word multiplies
// down to a single element of X with adjoined unit, so the search covers all
// of X^1 per slot directly.
struct SearchLimits {
  int max_degree = 3;
  int max_coeff_word = 2;
};

// Minimal-k cover within the truncated space, or nothing. A |S|-cover via
// identity polynomials always exists inside the default space.
std::optional<PolyboundedCover> search_polybounded(const FiniteSemigroup& s,
                                                   int max_k,
                                                   SearchLimits limits = {});

struct PolyfiniteWitness {
  int degree_bound;
  ElementSet trap;  // the finite set F
};

// Constructive witness from a cover: F = {b_i} united with {f_i(b_j)}, and
// d = max over pairs of deg(f_i after f_j). Throws InvalidCover.
PolyfiniteWitness polyfinite_from_polybounded(const FiniteSemigroup& s,
                                              const PolyboundedCover& cover);

// Checks that for every pair (x, y) some polynomial f of degree at most the
// witness bound (capped further by degree_cap if given) sends both x and y
// into the trap. The search is exact over all coefficient choices via a
// reachable-pair dynamic program.
bool verify_polyfinite(const FiniteSemigroup& s, const PolyfiniteWitness& w,
                       std::optional<int> degree_cap = {});

nlohmann::json cover_to_json(const PolyboundedCover& cover);
nlohmann::json witness_to_json(const PolyfiniteWitness& w);

}  // namespace semiclose

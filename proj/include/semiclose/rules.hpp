#pragma once
// Three-valued predicate evaluation over symbolic semigroups. Finite trees
// are expanded and measured directly; infinite constructors answer through a
// fixed table of sound rules, each verdict carrying a rule name, a citation,
// and sub-verdicts. True/False are only produced by a sound rule; everything
// else is Unknown.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiclose/semigroup.hpp"
#include "semiclose/symbolic.hpp"

namespace semiclose {

enum class Tri { False, Unknown, True };

std::string tri_to_string(Tri t);

enum class Pred {
  Finite,
  Commutative,
  ChainFinite,
  Periodic,
  Bounded,
  GroupFinite,
  GroupBounded,
  GroupCommutative,
  Clifford,
  CliffordPlusFinite,
  Nonsingular,
  ECommutative,
  Viable,
  ZViable,
};

inline constexpr Pred kAllPreds[] = {
    Pred::Finite,           Pred::Commutative,     Pred::ChainFinite,
    Pred::Periodic,         Pred::Bounded,         Pred::GroupFinite,
    Pred::GroupBounded,     Pred::GroupCommutative, Pred::Clifford,
    Pred::CliffordPlusFinite, Pred::Nonsingular,   Pred::ECommutative,
    Pred::Viable,           Pred::ZViable,
};

// Display names ("chain-finite", "group-bounded", ...).
std::string pred_to_string(Pred p);
// Throws UnknownPredicate.
Pred pred_from_string(const std::string& name);

struct Verdict {
  Tri value = Tri::Unknown;
  std::optional<std::uint64_t> exponent;  // carried when bounded is True
  std::string rule;                       // which rule fired
  std::string citation;                   // definition / theorem vocabulary
  std::string note;
  std::vector<Verdict> sub;

  bool is_true() const { return value == Tri::True; }
  bool is_false() const { return value == Tri::False; }
};

nlohmann::json verdict_to_json(const Verdict& v);

// Definitional evaluation on a concrete table: always True or False.
Verdict eval_predicate_finite(const FiniteSemigroup& s, Pred p);

// Rule-based evaluation; finite trees delegate to the table computation.
Verdict eval_predicate(const SymPtr& node, Pred p);

// The compositional product rules applied even when both factors are finite,
// exposed so tests can cross-check them against the expanded computation.
// Requires a Product node.
Verdict eval_product_compositional(const SymPtr& node, Pred p);

// Three-valued conjunction helpers shared with the classifier.
Tri tri_and(Tri a, Tri b);

}  // namespace semiclose

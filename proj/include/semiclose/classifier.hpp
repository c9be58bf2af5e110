#pragma once

// Maps predicate verdicts to the closedness hierarchy for commutative
// semigroups, with the supporting citation attached to every determinate
// verdict.  The five classes form a chain:
//
//   absolutely_T1S ==> absolutely_T2S ==> projectively ==> ideally ==> C_closed
//
// and every emitted report is closed under those implications.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semiclose/rules.hpp"
#include "semiclose/semigroup.hpp"
#include "semiclose/symbolic.hpp"

namespace semiclose {

enum class ClosednessClass {
  CClosed = 0,
  IdeallyClosed = 1,
  ProjectivelyClosed = 2,
  AbsolutelyT2S = 3,
  AbsolutelyT1S = 4,
};

// Weakest to strongest.
inline constexpr std::array<ClosednessClass, 5> kClassChain = {
    ClosednessClass::CClosed,        ClosednessClass::IdeallyClosed,
    ClosednessClass::ProjectivelyClosed, ClosednessClass::AbsolutelyT2S,
    ClosednessClass::AbsolutelyT1S,
};

std::string class_to_string(ClosednessClass c);

// One hypothesis consumed by a class verdict: the predicate, its evaluated
// verdict, and the citation backing the conjunction it belongs to.
struct ClassCondition {
  Pred predicate;
  Verdict verdict;
  std::string citation;
};

struct ClassVerdict {
  Tri value = Tri::Unknown;
  std::string citation;  // theorem citation or rule id for True/False
  std::string note;
  std::vector<ClassCondition> conditions;
};

struct ClassificationReport {
  std::string input;
  Verdict commutative;
  std::array<ClassVerdict, 5> classes;  // indexed by ClosednessClass

  const ClassVerdict& at(ClosednessClass c) const {
    return classes[static_cast<int>(c)];
  }
  ClassVerdict& at(ClosednessClass c) { return classes[static_cast<int>(c)]; }
};

ClassificationReport classify(const SymPtr& node);
ClassificationReport classify(const FiniteSemigroup& s);

// True iff the report respects the implication chain: no class is True while
// a weaker one fails, and every False propagates to all stronger classes.
bool chain_consistent(const ClassificationReport& report);

// Sufficient bundle for absolute T2S-closedness that does not assume
// commutativity: chain-finite, group-finite, bounded, Clifford+finite, and
// E-commutative together are enough.  This is the only positive route the
// classifier takes for noncommutative inputs.
Verdict absolute_t2s_sufficiency(const SymPtr& node);
Verdict absolute_t2s_sufficiency(const FiniteSemigroup& s);

// Witness for the centrobounded property over a set A of idempotents: the
// least n >= 1 such that for every e in A and all x, y in the joint local
// coideal of A whose combination (xe)(ye)^{-1} is central, the n-th power of
// that combination is idempotent.
struct CentroboundWitness {
  ElementSet idempotent_set;
  std::uint64_t n = 1;
};

CentroboundWitness centrobounded_witness(const FiniteSemigroup& s,
                                         const ElementSet& a);

// Central elements with some power in VE(S) that lie outside the Clifford
// part: Z(S) ∩ roots(VE(S)) ∖ H(S).
ElementSet central_nonclifford_roots(const FiniteSemigroup& s);

// Computes central_nonclifford_roots through the invariant pipeline and
// cross-checks it against a direct one-pass recomputation; True iff the two
// agree.  The note reports the set.
Verdict check_central_roots(const FiniteSemigroup& s);

nlohmann::json classification_to_json(const ClassificationReport& report);
std::string classification_to_markdown(const ClassificationReport& report);

}  // namespace semiclose

#pragma once

// Exhaustive enumeration of small semigroups and the verification suite that
// grounds the rest of the library: a slow generate-and-filter oracle, a
// pruned backtracking enumerator (serial and worker-parallel), canonical
// forms for isomorphism filtering, and batch structural checks with
// counterexample reporting.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semiclose/semigroup.hpp"

namespace semiclose {

struct EnumerationSpec {
  int order = 1;
  bool commutative_only = false;
  bool up_to_isomorphism = false;
};

// Runtime guardrails: order <= 5 when restricted to commutative tables up to
// isomorphism, order <= 4 otherwise. The SEMICLOSE_MAX_ORDER environment
// variable replaces the cap at the user's risk. Throws SpecTooLarge.
void validate_enumeration_spec(const EnumerationSpec& spec);

// Independent oracle: all order^(order^2) candidate tables filtered by the
// full associativity triple loop. Practical only for order <= 3; no code
// shared with the backtracking enumerator.
std::uint64_t naive_labeled_count(int order, bool commutative_only = false);
std::vector<FiniteSemigroup> naive_enumerate(int order,
                                             bool commutative_only = false);

// Backtracking fill of the Cayley table with incremental associativity
// pruning; canonical-form filtering when up_to_isomorphism is set. The
// default entry point partitions the search by the first table row and fans
// the branches out across workers, merging results in branch order so output
// is deterministic. The serial variant walks the same tree in one thread and
// is kept as the reference implementation.
std::vector<FiniteSemigroup> enumerate_semigroups(const EnumerationSpec& spec);
std::vector<FiniteSemigroup> enumerate_semigroups_serial(
    const EnumerationSpec& spec);
std::uint64_t count_semigroups(const EnumerationSpec& spec);

// Lexicographically minimal flattened table over all relabelings.
std::vector<int> canonical_form(const FiniteSemigroup& s);
bool are_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b);

// Every labeled semilattice table of order 1..max_order, used as the target
// family for the reflection universal-property check.
std::vector<FiniteSemigroup> semilattice_targets(int max_order);

struct CheckStats {
  std::string name;
  std::string citation;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
};

struct Counterexample {
  std::string check;
  FiniteSemigroup table;
  std::string witness;
};

struct SuiteReport {
  EnumerationSpec spec;
  std::string banner;
  std::vector<CheckStats> checks;
  std::vector<Counterexample> counterexamples;
  std::uint64_t semigroups_examined = 0;
  double wall_seconds = 0.0;

  bool ok() const { return counterexamples.empty(); }
};

// Runs the structural checks over every semigroup the given
// EnumerationSpec admits:
//   - idempotents of the ideal center equal the central idempotents inside
//     it and all of them are viable;
//   - the reflection projection is injective on the viable idempotents;
//   - prime coideal and characteristic-homomorphism agree on all subsets;
//   - the two viability definitions agree on every idempotent;
//   - commutative tables have every idempotent viable;
//   - the semilattice reflection factors every homomorphism into every
//     small semilattice target uniquely;
//   - each discovered polynomial cover converts to a witness that verifies.
// Failures become report entries, never exceptions.
SuiteReport run_lemma_suite(const EnumerationSpec& spec);

nlohmann::json suite_report_to_json(const SuiteReport& report);

}  // namespace semiclose

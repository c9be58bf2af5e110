#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "semiclose/invariants.hpp"
#include "semiclose/kernel.hpp"
#include "semiclose/oracle.hpp"
#include "semiclose/semigroup.hpp"

using namespace semiclose;

namespace {

FiniteSemigroup s2() { return FiniteSemigroup::from_rows({{0, 0}, {0, 1}}); }
FiniteSemigroup z2() { return FiniteSemigroup::from_rows({{0, 1}, {1, 0}}); }
FiniteSemigroup z3() {
  return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

EnumerationSpec spec_of(int order, bool comm, bool iso) {
  EnumerationSpec s;
  s.order = order;
  s.commutative_only = comm;
  s.up_to_isomorphism = iso;
  return s;
}

}  // namespace

TEST_CASE("labeled counts match the naive oracle and the literature") {
  // Labeled semigroup counts 1, 8, 113 (orders 1-3); commutative 1, 6, 63.
  for (int order = 1; order <= 3; ++order) {
    CAPTURE(order);
    CHECK(count_semigroups(spec_of(order, false, false)) ==
          naive_labeled_count(order));
    CHECK(count_semigroups(spec_of(order, true, false)) ==
          naive_labeled_count(order, true));
  }
  CHECK(naive_labeled_count(1) == 1);
  CHECK(naive_labeled_count(2) == 8);
  CHECK(naive_labeled_count(3) == 113);
  CHECK(naive_labeled_count(2, true) == 6);
  CHECK(naive_labeled_count(3, true) == 63);
  CHECK(count_semigroups(spec_of(4, false, false)) == 3492);
  CHECK(count_semigroups(spec_of(4, true, false)) == 1140);
}

TEST_CASE("isomorphism-filtered counts") {
  CHECK(count_semigroups(spec_of(1, false, true)) == 1);
  CHECK(count_semigroups(spec_of(2, false, true)) == 5);
  CHECK(count_semigroups(spec_of(3, false, true)) == 24);
  CHECK(count_semigroups(spec_of(4, false, true)) == 188);
  CHECK(count_semigroups(spec_of(2, true, true)) == 3);
  CHECK(count_semigroups(spec_of(3, true, true)) == 12);
  CHECK(count_semigroups(spec_of(4, true, true)) == 58);
  CHECK(count_semigroups(spec_of(5, true, true)) == 325);
}

TEST_CASE("naive enumeration produces valid, distinct tables") {
  std::vector<FiniteSemigroup> all = naive_enumerate(2);
  CHECK(all.size() == 8);
  std::set<std::vector<int>> seen;
  for (const FiniteSemigroup& s : all) {
    CHECK(s.order() == 2);
    seen.insert(s.table());  // construction already validated associativity
  }
  CHECK(seen.size() == 8);

  for (const FiniteSemigroup& s : naive_enumerate(3, true))
    CHECK(is_commutative(s));
}

TEST_CASE("parallel and serial enumeration agree exactly") {
  for (bool iso : {false, true}) {
    for (bool comm : {false, true}) {
      EnumerationSpec spec = spec_of(4, comm, iso);
      std::vector<FiniteSemigroup> parallel = enumerate_semigroups(spec);
      std::vector<FiniteSemigroup> serial = enumerate_semigroups_serial(spec);
      REQUIRE(parallel.size() == serial.size());
      for (std::size_t i = 0; i < parallel.size(); ++i)
        CHECK(parallel[i] == serial[i]);
    }
  }
}

TEST_CASE("enumeration output is sorted and duplicate-free") {
  std::vector<FiniteSemigroup> all = enumerate_semigroups(spec_of(3, false, false));
  REQUIRE(all.size() == 113);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].table() < all[i].table());

  // Up-to-isomorphism output consists of canonical representatives.
  for (const FiniteSemigroup& s : enumerate_semigroups(spec_of(3, false, true)))
    CHECK(canonical_form(s) == s.table());
}

TEST_CASE("canonical forms characterize isomorphism") {
  // A relabeled copy of Z3: apply the cycle 0->1->2->0, which moves the
  // identity to position 1.  (Swapping 1 and 2 would be a no-op: negation is
  // an automorphism of Z3.)
  FiniteSemigroup z3_relabeled =
      FiniteSemigroup::from_rows({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
  CHECK(are_isomorphic(z3(), z3_relabeled));
  CHECK(canonical_form(z3()) == canonical_form(z3_relabeled));

  CHECK_FALSE(are_isomorphic(z2(), s2()));
  CHECK_FALSE(are_isomorphic(z2(), z3()));

  // Canonical form is itself a table of an isomorphic semigroup.
  std::vector<int> canon = canonical_form(s2());
  FiniteSemigroup canon_s = validate_table(2, canon);
  CHECK(are_isomorphic(canon_s, s2()));
}

TEST_CASE("guardrails reject oversized specs") {
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(5, false, false)),
                  SpecTooLarge);
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(5, true, false)),
                  SpecTooLarge);
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(6, true, true)),
                  SpecTooLarge);
  CHECK_NOTHROW(validate_enumeration_spec(spec_of(4, false, false)));
  CHECK_NOTHROW(validate_enumeration_spec(spec_of(5, true, true)));
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(0, false, false)),
                  SpecTooLarge);

  try {
    validate_enumeration_spec(spec_of(7, false, false));
    FAIL("expected SpecTooLarge");
  } catch (const SpecTooLarge& e) {
    CHECK(std::string(e.what()).find("SEMICLOSE_MAX_ORDER") !=
          std::string::npos);
  }

  // Naive enumeration has its own tighter cap.
  CHECK_THROWS_AS(naive_labeled_count(4), SpecTooLarge);
  CHECK_THROWS_AS(naive_enumerate(4), SpecTooLarge);
}

TEST_CASE("the environment variable overrides the guardrail") {
  setenv("SEMICLOSE_MAX_ORDER", "3", 1);
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(4, false, false)),
                  SpecTooLarge);
  CHECK_NOTHROW(validate_enumeration_spec(spec_of(3, false, false)));

  setenv("SEMICLOSE_MAX_ORDER", "6", 1);
  CHECK_NOTHROW(validate_enumeration_spec(spec_of(6, true, true)));
  CHECK_NOTHROW(validate_enumeration_spec(spec_of(5, false, false)));

  // Garbage values fall back to the built-in caps.
  setenv("SEMICLOSE_MAX_ORDER", "banana", 1);
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(5, false, false)),
                  SpecTooLarge);
  unsetenv("SEMICLOSE_MAX_ORDER");
  CHECK_THROWS_AS(validate_enumeration_spec(spec_of(5, false, false)),
                  SpecTooLarge);
}

TEST_CASE("semilattice targets enumerate every labeled semilattice") {
  std::vector<FiniteSemigroup> targets = semilattice_targets(3);
  CHECK(targets.size() == 12);  // 1 + 2 + 9 by order
  int by_order[4] = {0, 0, 0, 0};
  for (const FiniteSemigroup& t : targets) {
    REQUIRE(t.order() <= 3);
    CHECK(is_semilattice(t));
    ++by_order[t.order()];
  }
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 2);
  CHECK(by_order[3] == 9);
}

TEST_CASE("verification suite passes exhaustively at order 3") {
  SuiteReport report = run_lemma_suite(spec_of(3, false, false));
  CHECK(report.ok());
  CHECK(report.semigroups_examined == 113);
  CHECK(report.counterexamples.empty());
  REQUIRE(report.checks.size() == 7);
  for (const CheckStats& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.failures == 0);
    // Every check ran on each table except the commutative-only one.
    if (c.name == "commutative-implies-all-viable")
      CHECK(c.passes == 63);
    else
      CHECK(c.passes == 113);
  }
  CHECK(report.wall_seconds >= 0.0);

  // The banner states what a failure would mean.
  CHECK(report.banner.find("implementation bug") != std::string::npos);
}

TEST_CASE("suite reports are deterministic") {
  SuiteReport a = run_lemma_suite(spec_of(3, true, true));
  SuiteReport b = run_lemma_suite(spec_of(3, true, true));
  nlohmann::json ja = suite_report_to_json(a);
  nlohmann::json jb = suite_report_to_json(b);
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  CHECK(ja == jb);
}

TEST_CASE("suite JSON shape") {
  SuiteReport report = run_lemma_suite(spec_of(2, false, false));
  nlohmann::json j = suite_report_to_json(report);
  REQUIRE(j.contains("spec"));
  CHECK(j["spec"]["order"] == 2);
  CHECK(j["spec"]["commutative_only"] == false);
  CHECK(j["spec"]["up_to_isomorphism"] == false);
  CHECK(j["semigroups_examined"] == 8);
  REQUIRE(j.contains("checks"));
  CHECK(j["checks"].size() == 7);
  for (const auto& c : j["checks"]) {
    REQUIRE(c.contains("name"));
    REQUIRE(c.contains("citation"));
    REQUIRE(c.contains("passes"));
    REQUIRE(c.contains("failures"));
  }
  CHECK(j["counterexamples"].empty());
  CHECK(j["ok"] == true);

  // Citations name the statements the checks are grounded in.
  bool lemma25 = false, prop31 = false, lemma23 = false;
  for (const auto& c : j["checks"]) {
    std::string cite = c["citation"].get<std::string>();
    lemma25 |= cite.find("Lemma 2.5") != std::string::npos;
    prop31 |= cite.find("Proposition 3.1") != std::string::npos;
    lemma23 |= cite.find("Lemma 2.3") != std::string::npos;
  }
  CHECK(lemma25);
  CHECK(prop31);
  CHECK(lemma23);
}

TEST_CASE("isomorphism filtering keeps one representative per class") {
  std::vector<FiniteSemigroup> reps = enumerate_semigroups(spec_of(3, false, true));
  REQUIRE(reps.size() == 24);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(are_isomorphic(reps[i], reps[j]));

  // Every labeled table is isomorphic to exactly one representative.
  std::vector<FiniteSemigroup> all = enumerate_semigroups(spec_of(3, false, false));
  for (const FiniteSemigroup& s : all) {
    int hits = 0;
    for (const FiniteSemigroup& r : reps)
      if (are_isomorphic(s, r)) ++hits;
    CHECK(hits == 1);
  }
}

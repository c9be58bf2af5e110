#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "semiclose/classifier.hpp"
#include "semiclose/invariants.hpp"
#include "semiclose/kernel.hpp"
#include "semiclose/oracle.hpp"
#include "semiclose/rules.hpp"
#include "semiclose/semigroup.hpp"
#include "semiclose/symbolic.hpp"

using namespace semiclose;

namespace {

FiniteSemigroup s2() { return FiniteSemigroup::from_rows({{0, 0}, {0, 1}}); }
FiniteSemigroup z2() { return FiniteSemigroup::from_rows({{0, 1}, {1, 0}}); }
FiniteSemigroup z3() {
  return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}
FiniteSemigroup left_zero2() { return FiniteSemigroup::from_rows({{0, 0}, {1, 1}}); }
FiniteSemigroup null2() { return FiniteSemigroup::from_rows({{0, 0}, {0, 0}}); }
// Zero taken as the second element, so the null part starts at a non-zero id.
FiniteSemigroup null2_swapped() {
  return FiniteSemigroup::from_rows({{1, 1}, {1, 1}});
}
// Noncommutative 3-nilpotent semigroup on {a, b, c, z}: ab = c, every other
// product is z. Its only idempotent is z, so the sufficiency bundle holds.
FiniteSemigroup nilpotent4() {
  return FiniteSemigroup::from_rows(
      {{3, 2, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}});
}

Tri value_of(const ClassificationReport& r, ClosednessClass c) {
  return r.at(c).value;
}

void expect_all(const ClassificationReport& r, Tri expected) {
  for (ClosednessClass c : kClassChain) CHECK(value_of(r, c) == expected);
}

bool note_mentions(const ClassVerdict& cv, const std::string& text) {
  return cv.note.find(text) != std::string::npos;
}

}  // namespace

TEST_CASE("predicate names round-trip and reject unknowns") {
  for (Pred p : kAllPreds) CHECK(pred_from_string(pred_to_string(p)) == p);
  CHECK(pred_to_string(Pred::ChainFinite) == "chain-finite");
  CHECK(pred_to_string(Pred::CliffordPlusFinite) == "Clifford+finite");
  CHECK_THROWS_AS(pred_from_string("bogus"), UnknownPredicate);
}

TEST_CASE("finite tables evaluate definitionally") {
  // The two-element semilattice satisfies every predicate.
  for (Pred p : kAllPreds) {
    Verdict v = eval_predicate_finite(s2(), p);
    CHECK(v.value == Tri::True);
  }
  CHECK(*eval_predicate_finite(s2(), Pred::Bounded).exponent == 1);
  CHECK(*eval_predicate_finite(z3(), Pred::Bounded).exponent == 3);

  CHECK(eval_predicate_finite(left_zero2(), Pred::Commutative).value ==
        Tri::False);
  CHECK(eval_predicate_finite(left_zero2(), Pred::ECommutative).value ==
        Tri::False);
  CHECK(eval_predicate_finite(left_zero2(), Pred::Viable).value == Tri::False);
  CHECK(eval_predicate_finite(left_zero2(), Pred::Clifford).value == Tri::True);
  CHECK(eval_predicate_finite(null2(), Pred::Clifford).value == Tri::False);
  CHECK(eval_predicate_finite(null2(), Pred::CliffordPlusFinite).value ==
        Tri::True);  // the complement is finite here
}

TEST_CASE("constructor verdict table") {
  struct Row {
    const char* expr;
    Pred pred;
    Tri expected;
  };
  const std::vector<Row> rows = {
      {"OmegaChain", Pred::Finite, Tri::False},
      {"OmegaChain", Pred::Commutative, Tri::True},
      {"OmegaChain", Pred::ChainFinite, Tri::False},
      {"OmegaChain", Pred::Periodic, Tri::True},
      {"OmegaChain", Pred::Bounded, Tri::True},
      {"OmegaChain", Pred::GroupFinite, Tri::True},
      {"OmegaChain", Pred::GroupBounded, Tri::True},
      {"OmegaChain", Pred::Clifford, Tri::True},
      {"OmegaChain", Pred::CliffordPlusFinite, Tri::True},
      {"OmegaChain", Pred::Nonsingular, Tri::True},

      {"NullOmega", Pred::ChainFinite, Tri::True},
      {"NullOmega", Pred::Periodic, Tri::True},
      {"NullOmega", Pred::Bounded, Tri::True},
      {"NullOmega", Pred::GroupFinite, Tri::True},
      {"NullOmega", Pred::GroupBounded, Tri::True},
      {"NullOmega", Pred::Clifford, Tri::False},
      {"NullOmega", Pred::CliffordPlusFinite, Tri::False},
      {"NullOmega", Pred::Nonsingular, Tri::False},

      {"Prufer(2)", Pred::ChainFinite, Tri::True},
      {"Prufer(2)", Pred::Periodic, Tri::True},
      {"Prufer(2)", Pred::Bounded, Tri::False},
      {"Prufer(2)", Pred::GroupFinite, Tri::False},
      {"Prufer(2)", Pred::GroupBounded, Tri::False},
      {"Prufer(2)", Pred::Clifford, Tri::True},
      {"Prufer(2)", Pred::CliffordPlusFinite, Tri::True},
      {"Prufer(2)", Pred::Nonsingular, Tri::True},

      {"FreeComm(2)", Pred::ChainFinite, Tri::True},
      {"FreeComm(2)", Pred::Periodic, Tri::False},
      {"FreeComm(2)", Pred::Bounded, Tri::False},
      {"FreeComm(2)", Pred::GroupFinite, Tri::True},
      {"FreeComm(2)", Pred::GroupBounded, Tri::True},
      {"FreeComm(2)", Pred::Clifford, Tri::False},
      {"FreeComm(2)", Pred::CliffordPlusFinite, Tri::False},
      {"FreeComm(2)", Pred::Nonsingular, Tri::True},

      {"Sum(omega, C(2))", Pred::ChainFinite, Tri::True},
      {"Sum(omega, C(2))", Pred::Periodic, Tri::True},
      {"Sum(omega, C(2))", Pred::Bounded, Tri::True},
      {"Sum(omega, C(2))", Pred::GroupFinite, Tri::False},
      {"Sum(omega, C(2))", Pred::GroupBounded, Tri::True},
      {"Sum(omega, C(2))", Pred::Clifford, Tri::True},
      {"Sum(omega, C(2))", Pred::CliffordPlusFinite, Tri::True},
      {"Sum(omega, C(2))", Pred::Nonsingular, Tri::True},
  };
  for (const Row& row : rows) {
    Verdict v = eval_predicate(parse_dsl(row.expr), row.pred);
    INFO(row.expr << " / " << pred_to_string(row.pred));
    CHECK(v.value == row.expected);
    CHECK_FALSE(v.rule.empty());
    CHECK_FALSE(v.citation.empty());
  }

  // Every infinite constructor in the family is commutative, hence viable,
  // Z-viable, E-commutative, and group-commutative.
  for (const char* expr : {"OmegaChain", "NullOmega", "Prufer(3)",
                           "FreeComm(1)", "Sum(omega, C(3))"}) {
    for (Pred p : {Pred::Commutative, Pred::Viable, Pred::ZViable,
                   Pred::ECommutative, Pred::GroupCommutative})
      CHECK(eval_predicate(parse_dsl(expr), p).value == Tri::True);
    CHECK(eval_predicate(parse_dsl(expr), Pred::Finite).value == Tri::False);
  }

  // Bounded verdicts carry their exponent.
  CHECK(*eval_predicate(parse_dsl("OmegaChain"), Pred::Bounded).exponent == 1);
  CHECK(*eval_predicate(parse_dsl("NullOmega"), Pred::Bounded).exponent == 2);
  CHECK(*eval_predicate(parse_dsl("Sum(omega, C(6))"), Pred::Bounded).exponent ==
        6);
}

TEST_CASE("zero and one extensions inherit every predicate verdict") {
  for (const char* base : {"OmegaChain", "NullOmega", "Prufer(2)",
                           "FreeComm(1)", "Sum(omega, C(2))"}) {
    SymPtr child = parse_dsl(base);
    for (const char* wrap : {"Zero", "One"}) {
      SymPtr node = parse_dsl(std::string(wrap) + "(" + base + ")");
      for (Pred p : kAllPreds) {
        Verdict inner = eval_predicate(child, p);
        Verdict outer = eval_predicate(node, p);
        INFO(describe(node) << " / " << pred_to_string(p));
        CHECK(outer.value == inner.value);
        CHECK(outer.rule == "extension-inherits");
        REQUIRE(outer.sub.size() == 1);
        CHECK(outer.sub[0].value == inner.value);
        if (p == Pred::Bounded && inner.exponent)
          CHECK(*outer.exponent == *inner.exponent);
      }
    }
  }
}

TEST_CASE("product rules on infinite operands") {
  // Group x group: chain-finite by the unit-forcing argument.
  CHECK(eval_predicate(parse_dsl("C(2) * Prufer(2)"), Pred::ChainFinite).value ==
        Tri::True);
  // Bounded fails through the Prufer factor; periodicity survives.
  CHECK(eval_predicate(parse_dsl("C(2) * Prufer(2)"), Pred::Bounded).value ==
        Tri::False);
  CHECK(eval_predicate(parse_dsl("C(2) * Prufer(2)"), Pred::Periodic).value ==
        Tri::True);
  CHECK(eval_predicate(parse_dsl("C(2) * Prufer(2)"), Pred::GroupFinite).value ==
        Tri::False);

  // A factor with no idempotents wipes out E(A x B).
  SymPtr free_pair = parse_dsl("FreeComm(1) * C(2)");
  for (Pred p : {Pred::ECommutative, Pred::GroupFinite, Pred::GroupBounded,
                 Pred::GroupCommutative}) {
    Verdict v = eval_predicate(free_pair, p);
    CHECK(v.value == Tri::True);
    CHECK(v.rule == "product-no-idempotents");
  }
  CHECK(eval_predicate(free_pair, Pred::Clifford).value == Tri::False);
  CHECK(eval_predicate(free_pair, Pred::CliffordPlusFinite).value ==
        Tri::Unknown);
  CHECK(eval_predicate(free_pair, Pred::ChainFinite).value == Tri::Unknown);
  CHECK(eval_predicate(free_pair, Pred::Nonsingular).value == Tri::Unknown);

  // Non-Clifford part times an infinite factor: the complement stays infinite.
  CHECK(eval_predicate(parse_dsl("OmegaChain * NullOmega"),
                       Pred::CliffordPlusFinite)
            .value == Tri::False);

  // Commutativity of the product gives viability outright.
  CHECK(eval_predicate(parse_dsl("OmegaChain * NullOmega"), Pred::Viable).value ==
        Tri::True);

  // The bounded exponent of a product is the lcm of the factor exponents.
  Verdict b = eval_predicate(parse_dsl("Sum(omega, C(2)) * Sum(omega, C(3))"),
                             Pred::Bounded);
  CHECK(b.value == Tri::True);
  REQUIRE(b.exponent.has_value());
  CHECK(*b.exponent == 6);
}

TEST_CASE("compositional product rules agree with expansion on finite tables") {
  const std::vector<FiniteSemigroup> fixtures = {s2(), z2(), z3(), left_zero2(),
                                                 null2()};
  for (const FiniteSemigroup& a : fixtures) {
    for (const FiniteSemigroup& b : fixtures) {
      SymPtr node = sym_product(sym_table(a), sym_table(b));
      FiniteSemigroup product = direct_product(a, b);
      for (Pred p : kAllPreds) {
        Verdict comp = eval_product_compositional(node, p);
        if (comp.value == Tri::Unknown) continue;  // the rule may give up
        Verdict direct = eval_predicate_finite(product, p);
        INFO("order " << a.order() << " x " << b.order() << " / "
                      << pred_to_string(p));
        CHECK(comp.value == direct.value);
        if (p == Pred::Bounded && comp.value == Tri::True) {
          // The compositional exponent is the lcm of the factor exponents: a
          // sound uniform bound, never below the true minimal exponent.
          REQUIRE(comp.exponent.has_value());
          CHECK(*comp.exponent >= *direct.exponent);
          ElementSet idem = idempotents(product);
          for (int x = 0; x < product.order(); ++x)
            CHECK(idem.contains(product.power(x, *comp.exponent)));
        }
      }
    }
  }
  CHECK_THROWS_AS(eval_product_compositional(parse_dsl("C(2)"), Pred::Finite),
                  InvalidArgument);
}

TEST_CASE("classification golden set") {
  // An infinite chain of idempotents breaks every class.
  ClassificationReport chain = classify(parse_dsl("OmegaChain"));
  expect_all(chain, Tri::False);
  CHECK(note_mentions(chain.at(ClosednessClass::CClosed), "chain-finite"));

  // Unbounded subgroups break every class.
  ClassificationReport prufer = classify(parse_dsl("Prufer(2)"));
  expect_all(prufer, Tri::False);
  CHECK(note_mentions(prufer.at(ClosednessClass::CClosed), "group-bounded"));

  // Free commutative: not periodic.
  ClassificationReport free1 = classify(parse_dsl("FreeComm(1)"));
  expect_all(free1, Tri::False);
  CHECK(note_mentions(free1.at(ClosednessClass::CClosed), "periodic"));

  // Null: singular.
  ClassificationReport null_omega = classify(parse_dsl("NullOmega"));
  expect_all(null_omega, Tri::False);
  CHECK(note_mentions(null_omega.at(ClosednessClass::CClosed), "nonsingular"));

  // Bounded infinite torsion group: closed in the three weaker senses only.
  ClassificationReport sum = classify(parse_dsl("Sum(omega, C(2))"));
  CHECK(value_of(sum, ClosednessClass::CClosed) == Tri::True);
  CHECK(value_of(sum, ClosednessClass::IdeallyClosed) == Tri::True);
  CHECK(value_of(sum, ClosednessClass::ProjectivelyClosed) == Tri::True);
  CHECK(value_of(sum, ClosednessClass::AbsolutelyT2S) == Tri::False);
  CHECK(value_of(sum, ClosednessClass::AbsolutelyT1S) == Tri::False);
  CHECK(note_mentions(sum.at(ClosednessClass::AbsolutelyT2S), "group-finite"));
  CHECK(note_mentions(sum.at(ClosednessClass::AbsolutelyT1S), "finite"));

  // Citations quote the hypotheses they consumed.
  CHECK(sum.at(ClosednessClass::CClosed).citation.find("Theorem 1.1") !=
        std::string::npos);
  CHECK(sum.at(ClosednessClass::IdeallyClosed).citation.find("Theorem 1.2") !=
        std::string::npos);
  CHECK(sum.at(ClosednessClass::AbsolutelyT2S).citation.find("Theorem 1.5(4)") !=
        std::string::npos);
  CHECK(sum.at(ClosednessClass::AbsolutelyT1S).citation.find("Theorem 1.4(4)") !=
        std::string::npos);
  CHECK(sum.at(ClosednessClass::AbsolutelyT1S).citation.find("X is finite") !=
        std::string::npos);

  for (const ClassificationReport* r :
       {&chain, &prufer, &free1, &null_omega, &sum})
    CHECK(chain_consistent(*r));
}

TEST_CASE("finite commutative semigroups land in every class") {
  for (const FiniteSemigroup& s : {s2(), z2(), z3(), null2()}) {
    ClassificationReport r = classify(s);
    CHECK(r.commutative.value == Tri::True);
    expect_all(r, Tri::True);
    CHECK(chain_consistent(r));
  }
  // Exhaustively at order 3.
  for (const FiniteSemigroup& s : naive_enumerate(3, /*commutative_only=*/true)) {
    ClassificationReport r = classify(s);
    expect_all(r, Tri::True);
    CHECK(chain_consistent(r));
  }
}

TEST_CASE("noncommutative inputs stay unknown unless the bundle fires") {
  ClassificationReport lz = classify(left_zero2());
  CHECK(lz.commutative.value == Tri::False);
  expect_all(lz, Tri::Unknown);
  CHECK(chain_consistent(lz));
  CHECK(note_mentions(lz.at(ClosednessClass::CClosed), "hypotheses"));

  // The nilpotent example satisfies the bundle: T2S and everything below.
  ClassificationReport nil = classify(nilpotent4());
  CHECK(nil.commutative.value == Tri::False);
  CHECK(value_of(nil, ClosednessClass::AbsolutelyT2S) == Tri::True);
  CHECK(value_of(nil, ClosednessClass::ProjectivelyClosed) == Tri::True);
  CHECK(value_of(nil, ClosednessClass::IdeallyClosed) == Tri::True);
  CHECK(value_of(nil, ClosednessClass::CClosed) == Tri::True);
  CHECK(value_of(nil, ClosednessClass::AbsolutelyT1S) == Tri::Unknown);
  CHECK(chain_consistent(nil));
  CHECK(nil.at(ClosednessClass::AbsolutelyT2S).citation.find("Lemma 5.2") !=
        std::string::npos);
  CHECK(nil.at(ClosednessClass::CClosed).citation == "implication chain");
}

TEST_CASE("sufficiency bundle verdicts") {
  CHECK(absolute_t2s_sufficiency(s2()).value == Tri::True);
  CHECK(absolute_t2s_sufficiency(nilpotent4()).value == Tri::True);

  Verdict lz = absolute_t2s_sufficiency(left_zero2());
  CHECK(lz.value == Tri::False);
  CHECK(lz.note.find("E-commutative") != std::string::npos);

  Verdict sum = absolute_t2s_sufficiency(parse_dsl("Sum(omega, C(3))"));
  CHECK(sum.value == Tri::False);
  CHECK(sum.note.find("group-finite") != std::string::npos);

  // The infinite idempotent chain fails the bundle outright (it is not
  // chain-finite), while a product of two such chains leaves chain-finiteness
  // undetermined with every other conjunct true.
  Verdict chain = absolute_t2s_sufficiency(parse_dsl("OmegaChain"));
  CHECK(chain.value == Tri::False);
  CHECK(chain.note.find("chain-finite") != std::string::npos);
  CHECK(absolute_t2s_sufficiency(parse_dsl("OmegaChain * OmegaChain")).value ==
        Tri::Unknown);
}

TEST_CASE("centrobounded witnesses") {
  CHECK(centrobounded_witness(z2(), ElementSet(2, {0})).n == 2);
  CHECK(centrobounded_witness(z3(), ElementSet(3, {0})).n == 3);
  CHECK(centrobounded_witness(s2(), ElementSet(2, {0, 1})).n == 1);
  CHECK_THROWS_AS(centrobounded_witness(z3(), ElementSet(3, {1})),
                  NotIdempotent);

  // The witness always divides the lcm of the subgroup orders; checked here
  // across all commutative semigroups of order <= 3 and every nonempty
  // idempotent subset.
  for (int order = 1; order <= 3; ++order) {
    for (const FiniteSemigroup& s : naive_enumerate(order, true)) {
      std::vector<int> es = idempotents(s).members();
      for (int mask = 1; mask < (1 << es.size()); ++mask) {
        ElementSet a(order);
        std::uint64_t lcm_h = 1;
        for (std::size_t i = 0; i < es.size(); ++i)
          if (mask & (1 << i)) {
            a.insert(es[i]);
            lcm_h = std::lcm(
                lcm_h,
                static_cast<std::uint64_t>(maximal_subgroup(s, es[i]).size()));
          }
        CentroboundWitness w = centrobounded_witness(s, a);
        CHECK(w.n >= 1);
        CHECK(lcm_h % w.n == 0);
      }
    }
  }
}

TEST_CASE("central non-Clifford roots and the pipeline cross-check") {
  CHECK(central_nonclifford_roots(null2()) == ElementSet(2, {1}));
  CHECK(central_nonclifford_roots(z2()) == ElementSet::empty(2));
  CHECK(central_nonclifford_roots(null2_swapped()) == ElementSet(2, {0}));
  CHECK(central_nonclifford_roots(left_zero2()) == ElementSet::empty(2));

  for (const FiniteSemigroup& s :
       {s2(), z2(), z3(), left_zero2(), null2(), null2_swapped()}) {
    Verdict v = check_central_roots(s);
    CHECK(v.value == Tri::True);
    CHECK(v.citation.find("Theorem 1.9") != std::string::npos);
  }
  for (const FiniteSemigroup& s : naive_enumerate(3))
    CHECK(check_central_roots(s).value == Tri::True);
}

TEST_CASE("ideal center of an everywhere-closed semigroup classifies the same") {
  // For finite commutative semigroups IZ is the whole semigroup; inducing on
  // it and reclassifying must preserve the all-true verdicts.
  for (const FiniteSemigroup& s : naive_enumerate(3, true)) {
    ElementSet iz = ideal_center(s);
    REQUIRE(iz == ElementSet::full(s.order()));
    ClassificationReport r = classify(induced_subsemigroup(s, iz));
    expect_all(r, Tri::True);
  }
}

TEST_CASE("truncations of closed constructors stay closed") {
  // Finite subsemigroups of Sum(omega, C(2)) are commutative and finite, so
  // they classify true everywhere; this mirrors the symbolic verdicts on the
  // three weaker classes.
  for (const FiniteSemigroup& t : truncations(parse_dsl("Sum(omega, C(2))"), 6)) {
    ClassificationReport r = classify(t);
    expect_all(r, Tri::True);
  }
}

TEST_CASE("classification JSON and markdown surfaces") {
  ClassificationReport r = classify(parse_dsl("Sum(omega, C(2))"));
  nlohmann::json j = classification_to_json(r);
  CHECK(j["input"] == "Sum(omega, C(2))");
  CHECK(j["commutative"]["value"] == "true");
  REQUIRE(j.contains("classes"));
  for (const char* key :
       {"C_closed", "ideally_closed", "projectively_closed",
        "absolutely_T2S_closed", "absolutely_T1S_closed"})
    REQUIRE(j["classes"].contains(key));
  CHECK(j["classes"]["C_closed"]["value"] == "true");
  CHECK(j["classes"]["absolutely_T2S_closed"]["value"] == "false");
  CHECK(j["classes"]["C_closed"]["conditions"].size() == 4);

  std::string md = classification_to_markdown(r);
  CHECK(md.find("| C_closed | true |") != std::string::npos);
  CHECK(md.find("Theorem 1.1") != std::string::npos);
  CHECK(md.find("Sum(omega, C(2))") != std::string::npos);
}

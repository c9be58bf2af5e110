#include "semiclose/rules.hpp"

#include <numeric>

#include "semiclose/invariants.hpp"
#include "semiclose/kernel.hpp"

namespace semiclose {

std::string tri_to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

std::string pred_to_string(Pred p) {
  switch (p) {
    case Pred::Finite: return "finite";
    case Pred::Commutative: return "commutative";
    case Pred::ChainFinite: return "chain-finite";
    case Pred::Periodic: return "periodic";
    case Pred::Bounded: return "bounded";
    case Pred::GroupFinite: return "group-finite";
    case Pred::GroupBounded: return "group-bounded";
    case Pred::GroupCommutative: return "group-commutative";
    case Pred::Clifford: return "Clifford";
    case Pred::CliffordPlusFinite: return "Clifford+finite";
    case Pred::Nonsingular: return "nonsingular";
    case Pred::ECommutative: return "E-commutative";
    case Pred::Viable: return "viable";
    case Pred::ZViable: return "Z-viable";
  }
  return "?";
}

Pred pred_from_string(const std::string& name) {
  for (Pred p : kAllPreds)
    if (pred_to_string(p) == name) return p;
  throw UnknownPredicate(name);
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["value"] = tri_to_string(v.value);
  if (v.exponent) j["exponent"] = *v.exponent;
  if (!v.rule.empty()) j["rule"] = v.rule;
  if (!v.citation.empty()) j["citation"] = v.citation;
  if (!v.note.empty()) j["note"] = v.note;
  if (!v.sub.empty()) {
    nlohmann::json sub = nlohmann::json::array();
    for (const auto& child : v.sub) sub.push_back(verdict_to_json(child));
    j["sub"] = std::move(sub);
  }
  return j;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Unknown;
}

namespace {

Verdict make_verdict(Tri value, std::string rule, std::string citation,
                     std::string note = "") {
  Verdict v;
  v.value = value;
  v.rule = std::move(rule);
  v.citation = std::move(citation);
  v.note = std::move(note);
  return v;
}

Tri tri_of(bool b) { return b ? Tri::True : Tri::False; }

}  // namespace

// --------------------------------------------------------- finite tables ---

Verdict eval_predicate_finite(const FiniteSemigroup& s, Pred p) {
  auto done = [&](bool value, std::string note = "") {
    return make_verdict(tri_of(value), "finite-evaluation",
                        "measured on the Cayley table", std::move(note));
  };
  switch (p) {
    case Pred::Finite:
      return done(true, "order " + std::to_string(s.order()));
    case Pred::Commutative:
      return done(is_commutative(s));
    case Pred::ChainFinite:
      // A finite semigroup has no infinite subsets at all.
      return done(true, "finite semigroups are chain-finite");
    case Pred::Periodic:
      return done(true, "every element of a finite semigroup has an idempotent power");
    case Pred::Bounded: {
      Verdict v = done(true);
      v.exponent = exponent_of(s, ElementSet::full(s.order())).value;
      v.note = "exponent " + std::to_string(*v.exponent);
      return v;
    }
    case Pred::GroupFinite:
      return done(true, "all subgroups of a finite semigroup are finite");
    case Pred::GroupBounded:
      return done(true, "all subgroups of a finite semigroup are bounded");
    case Pred::GroupCommutative: {
      // Every subgroup sits inside a maximal one.
      for (int e : idempotents(s).members()) {
        ElementSet h = maximal_subgroup(s, e);
        for (int x : h.members())
          for (int y : h.members())
            if (s.at(x, y) != s.at(y, x))
              return done(false, "noncommutative subgroup at idempotent " +
                                     std::to_string(e));
      }
      return done(true);
    }
    case Pred::Clifford:
      return done(clifford_part(s) == ElementSet::full(s.order()));
    case Pred::CliffordPlusFinite:
      return done(true, "the complement of the Clifford part is finite");
    case Pred::Nonsingular:
      return done(true, "finite semigroups have no infinite subsets");
    case Pred::ECommutative: {
      auto e = idempotents(s).members();
      for (int x : e)
        for (int y : e)
          if (s.at(x, y) != s.at(y, x)) return done(false);
      return done(true);
    }
    case Pred::Viable:
      return done(viable_idempotents(s) == idempotents(s));
    case Pred::ZViable:
      return done(idempotents(s).intersect(center(s))
                      .subset_of(viable_idempotents(s)));
  }
  return make_verdict(Tri::Unknown, "none", "");
}

// ------------------------------------------------------------------ rules ---

namespace {

// Fixed verdicts for the bare infinite constructors.
Verdict constructor_rule(const SymPtr& node, Pred p);

Verdict eval_impl(const SymPtr& node, Pred p);

Verdict inherit_rule(const SymPtr& node, Pred p) {
  // Zero/One extensions: the adjoined element is a central idempotent that
  // is its own maximal subgroup; every tracked predicate passes through
  // unchanged, including the bounded exponent.
  Verdict child = eval_impl(node->left, p);
  Verdict v = make_verdict(child.value, "extension-inherits",
                           "adjoined absorbing zero / identity preserves the predicate");
  v.exponent = child.exponent;
  v.sub.push_back(std::move(child));
  return v;
}

Verdict product_rules(const SymPtr& node, Pred p) {
  const SymPtr& a = node->left;
  const SymPtr& b = node->right;
  auto sub2 = [&](Verdict& v, Verdict va, Verdict vb) {
    v.sub.push_back(std::move(va));
    v.sub.push_back(std::move(vb));
  };

  switch (p) {
    case Pred::Finite: {
      Verdict va = eval_impl(a, p), vb = eval_impl(b, p);
      Verdict v = make_verdict(tri_and(va.value, vb.value), "product-finite",
                               "a product is finite iff both factors are");
      sub2(v, std::move(va), std::move(vb));
      return v;
    }
    case Pred::Commutative:
    case Pred::Periodic: {
      Verdict va = eval_impl(a, p), vb = eval_impl(b, p);
      Verdict v = make_verdict(
          tri_and(va.value, vb.value), "product-componentwise",
          "products are computed coordinatewise; both factors embed as "
          "retracts once idempotents exist, and the predicate projects");
      // Both predicates are genuine iffs for direct products.
      sub2(v, std::move(va), std::move(vb));
      return v;
    }
    case Pred::Bounded: {
      Verdict va = eval_impl(a, p), vb = eval_impl(b, p);
      Verdict v = make_verdict(tri_and(va.value, vb.value), "product-bounded",
                               "x^n lands in E(A x B) = E(A) x E(B) "
                               "coordinatewise");
      if (v.value == Tri::True && va.exponent && vb.exponent)
        v.exponent = std::lcm(*va.exponent, *vb.exponent);
      sub2(v, std::move(va), std::move(vb));
      return v;
    }
    case Pred::ECommutative:
    case Pred::GroupFinite:
    case Pred::GroupBounded:
    case Pred::GroupCommutative: {
      // These quantify over idempotents/subgroups. If either factor has no
      // idempotents the product has none either, and all four hold
      // vacuously; otherwise the conjunction is exact in both directions
      // (a failure on one side persists next to any idempotent of the
      // other).
      if (!has_idempotent_tree(a) || !has_idempotent_tree(b))
        return make_verdict(Tri::True, "product-no-idempotents",
                            "E(A x B) = E(A) x E(B) is empty, so the "
                            "property holds vacuously");
      Verdict va = eval_impl(a, p), vb = eval_impl(b, p);
      Verdict v = make_verdict(tri_and(va.value, vb.value),
                               "product-idempotentwise",
                               "E(A x B) = E(A) x E(B) and "
                               "H_(e,f) = H_e x H_f");
      sub2(v, std::move(va), std::move(vb));
      return v;
    }
    case Pred::Clifford: {
      Verdict va = eval_impl(a, p), vb = eval_impl(b, p);
      if (!has_idempotent_tree(a) || !has_idempotent_tree(b)) {
        Verdict v = make_verdict(Tri::False, "product-no-idempotents",
                                 "with no idempotents the union of subgroups "
                                 "is empty and cannot be everything");
        sub2(v, std::move(va), std::move(vb));
        return v;
      }
      Verdict v = make_verdict(tri_and(va.value, vb.value), "product-clifford",
                               "H(A x B) = H(A) x H(B)");
      sub2(v, std::move(va), std::move(vb));
      return v;
    }
    case Pred::CliffordPlusFinite: {
      Verdict ca = eval_impl(a, Pred::Clifford);
      Verdict cb = eval_impl(b, Pred::Clifford);
      if (ca.value == Tri::True && cb.value == Tri::True) {
        Verdict v = make_verdict(Tri::True, "product-clifford-plus-finite",
                                 "both factors are Clifford, the complement "
                                 "is empty");
        sub2(v, std::move(ca), std::move(cb));
        return v;
      }
      bool a_inf = !is_finite_tree(a), b_inf = !is_finite_tree(b);
      if ((ca.value == Tri::False && b_inf) ||
          (cb.value == Tri::False && a_inf)) {
        Verdict v = make_verdict(Tri::False, "product-clifford-plus-finite",
                                 "a nonempty non-Clifford part times an "
                                 "infinite factor leaves an infinite "
                                 "complement");
        sub2(v, std::move(ca), std::move(cb));
        return v;
      }
      Verdict v = make_verdict(Tri::Unknown, "product-clifford-plus-finite",
                               "no sound compositional rule applies");
      sub2(v, std::move(ca), std::move(cb));
      return v;
    }
    case Pred::ChainFinite: {
      if (is_group_tree(a) && is_group_tree(b))
        return make_verdict(Tri::True, "product-of-groups-chain-finite",
                            "in a group xy = x or xy = y forces a unit, so "
                            "any two non-unit elements of an infinite subset "
                            "witness chain-finiteness");
      return make_verdict(Tri::Unknown, "product-chain-finite",
                          "chain-finiteness is not known to be productive");
    }
    case Pred::Nonsingular:
      return make_verdict(Tri::Unknown, "product-nonsingular",
                          "no sound compositional rule applies");
    case Pred::Viable:
    case Pred::ZViable: {
      Verdict comm = eval_impl(node, Pred::Commutative);
      if (comm.value == Tri::True) {
        Verdict v = make_verdict(Tri::True, "commutative-viable",
                                 "every commutative semigroup is viable");
        v.sub.push_back(std::move(comm));
        return v;
      }
      Verdict v = make_verdict(Tri::Unknown, "product-viability",
                               "no sound compositional rule applies");
      v.sub.push_back(std::move(comm));
      return v;
    }
  }
  return make_verdict(Tri::Unknown, "none", "");
}

Verdict constructor_rule(const SymPtr& node, Pred p) {
  auto fixed = [&](Tri value, const char* rule, const char* citation,
                   std::optional<std::uint64_t> exponent =
                       std::nullopt) {
    Verdict v = make_verdict(value, rule, citation);
    v.exponent = exponent;
    return v;
  };

  const bool group = node->kind == NodeKind::Prufer || node->kind == NodeKind::SumOmega;

  // Rules shared by every infinite constructor in the family (all denote
  // commutative semigroups).
  switch (p) {
    case Pred::Finite:
      return fixed(Tri::False, "infinite-constructor",
                   "the constructor denotes an infinite semigroup");
    case Pred::Commutative:
      return fixed(Tri::True, "constructor-commutative",
                   "the constructor denotes a commutative semigroup");
    case Pred::Viable:
    case Pred::ZViable:
      return fixed(Tri::True, "commutative-viable",
                   "every commutative semigroup is viable");
    case Pred::ECommutative:
      return fixed(Tri::True, "commutative-E-commutative",
                   "idempotents of a commutative semigroup commute");
    case Pred::GroupCommutative:
      return fixed(Tri::True, "commutative-subgroups",
                   "subgroups of a commutative semigroup are commutative");
    default:
      break;
  }

  switch (node->kind) {
    case NodeKind::OmegaChain:
      switch (p) {
        case Pred::ChainFinite:
          return fixed(Tri::False, "infinite-chain",
                       "the whole semilattice is an infinite chain: xy = "
                       "min(x,y) always lands in {x,y}");
        case Pred::Periodic:
          return fixed(Tri::True, "idempotent-periodic",
                       "every element is idempotent", 1);
        case Pred::Bounded:
          return fixed(Tri::True, "idempotent-bounded",
                       "x^1 is already idempotent", 1);
        case Pred::GroupFinite:
        case Pred::GroupBounded:
          return fixed(Tri::True, "semilattice-subgroups-trivial",
                       "subgroups of a semilattice are singletons");
        case Pred::Clifford:
          return fixed(Tri::True, "semilattice-clifford",
                       "every element is its own maximal subgroup");
        case Pred::CliffordPlusFinite:
          return fixed(Tri::True, "semilattice-clifford",
                       "the non-Clifford part is empty");
        case Pred::Nonsingular:
          return fixed(Tri::True, "idempotents-nonsingular",
                       "A is contained in AA for idempotents, so no infinite "
                       "set has a singleton square");
        default: break;
      }
      break;

    case NodeKind::NullOmega:
      switch (p) {
        case Pred::ChainFinite:
          return fixed(Tri::True, "null-chain-finite",
                       "any two distinct nonzero elements multiply to the "
                       "zero, which lies outside the pair");
        case Pred::Periodic:
          return fixed(Tri::True, "null-periodic", "x^2 is the zero", 2);
        case Pred::Bounded:
          return fixed(Tri::True, "null-bounded", "x^2 is the zero for every x", 2);
        case Pred::GroupFinite:
        case Pred::GroupBounded:
          return fixed(Tri::True, "null-subgroups-trivial",
                       "the only subgroup is the zero");
        case Pred::Clifford:
          return fixed(Tri::False, "null-not-clifford",
                       "the union of subgroups is just the zero");
        case Pred::CliffordPlusFinite:
          return fixed(Tri::False, "null-not-clifford-plus-finite",
                       "infinitely many elements lie outside the zero");
        case Pred::Nonsingular:
          return fixed(Tri::False, "null-singular",
                       "the infinite set of nonzero elements has the "
                       "singleton square {0}");
        default: break;
      }
      break;

    case NodeKind::Prufer:
      switch (p) {
        case Pred::ChainFinite:
          return fixed(Tri::True, "group-chain-finite",
                       "in a group xy = x or xy = y forces a unit, so any "
                       "two non-unit elements of an infinite subset witness "
                       "chain-finiteness");
        case Pred::Periodic:
          return fixed(Tri::True, "prufer-torsion",
                       "every element has order a power of p");
        case Pred::Bounded:
          return fixed(Tri::False, "prufer-unbounded",
                       "element orders p^k grow without bound");
        case Pred::GroupFinite:
          return fixed(Tri::False, "prufer-infinite-subgroup",
                       "the group itself is an infinite subgroup");
        case Pred::GroupBounded:
          return fixed(Tri::False, "prufer-unbounded-subgroup",
                       "the group itself is an unbounded subgroup");
        case Pred::Clifford:
          return fixed(Tri::True, "group-clifford", "a group is its own "
                       "maximal subgroup");
        case Pred::CliffordPlusFinite:
          return fixed(Tri::True, "group-clifford",
                       "the non-Clifford part is empty");
        case Pred::Nonsingular:
          return fixed(Tri::True, "group-nonsingular",
                       "left translation by a fixed element of A is "
                       "injective, so AA is infinite with A");
        default: break;
      }
      break;

    case NodeKind::FreeComm:
      switch (p) {
        case Pred::ChainFinite:
          return fixed(Tri::True, "free-lengths-add",
                       "word lengths add, so xy is always longer than x and y");
        case Pred::Periodic:
          return fixed(Tri::False, "free-no-idempotents",
                       "nx = x never holds, there are no idempotent powers");
        case Pred::Bounded:
          return fixed(Tri::False, "free-no-idempotents",
                       "there are no idempotents to land on");
        case Pred::GroupFinite:
        case Pred::GroupBounded:
          return fixed(Tri::True, "free-no-subgroups",
                       "with no idempotents there are no subgroups at all");
        case Pred::Clifford:
          return fixed(Tri::False, "free-no-subgroups",
                       "the union of subgroups is empty");
        case Pred::CliffordPlusFinite:
          return fixed(Tri::False, "free-no-subgroups",
                       "everything lies outside the empty Clifford part");
        case Pred::Nonsingular:
          return fixed(Tri::True, "free-cancellative",
                       "translation by a fixed element is injective, so AA "
                       "is infinite with A");
        default: break;
      }
      break;

    case NodeKind::SumOmega:
      switch (p) {
        case Pred::ChainFinite:
          return fixed(Tri::True, "group-chain-finite",
                       "in a group xy = x or xy = y forces a unit, so any "
                       "two non-unit elements of an infinite subset witness "
                       "chain-finiteness");
        case Pred::Periodic:
          return fixed(Tri::True, "sum-omega-torsion",
                       "every element has finite order dividing the exponent "
                       "of G");
        case Pred::Bounded: {
          std::uint64_t e =
              exponent_of(*node->table, ElementSet::full(node->table->order()))
                  .value;
          return fixed(Tri::True, "sum-omega-bounded",
                       "coordinatewise the exponent of G bounds every element",
                       e);
        }
        case Pred::GroupFinite:
          return fixed(Tri::False, "sum-omega-infinite-subgroup",
                       "the group itself is an infinite subgroup");
        case Pred::GroupBounded:
          return fixed(Tri::True, "sum-omega-group-bounded",
                       "every subgroup is bounded by the exponent of G");
        case Pred::Clifford:
          return fixed(Tri::True, "group-clifford",
                       "a group is its own maximal subgroup");
        case Pred::CliffordPlusFinite:
          return fixed(Tri::True, "group-clifford",
                       "the non-Clifford part is empty");
        case Pred::Nonsingular:
          return fixed(Tri::True, "group-nonsingular",
                       "left translation by a fixed element of A is "
                       "injective, so AA is infinite with A");
        default: break;
      }
      break;

    default:
      break;
  }
  (void)group;
  return make_verdict(Tri::Unknown, "no-rule",
                      "no sound rule is known for this constructor and "
                      "predicate");
}

Verdict eval_impl(const SymPtr& node, Pred p) {
  if (is_finite_tree(node)) {
    Verdict v = eval_predicate_finite(expand(node), p);
    v.note = v.note.empty() ? describe(node) : v.note + "; " + describe(node);
    return v;
  }
  switch (node->kind) {
    case NodeKind::Zero:
    case NodeKind::One:
      return inherit_rule(node, p);
    case NodeKind::Product:
      return product_rules(node, p);
    default:
      return constructor_rule(node, p);
  }
}

}  // namespace

Verdict eval_predicate(const SymPtr& node, Pred p) { return eval_impl(node, p); }

Verdict eval_product_compositional(const SymPtr& node, Pred p) {
  if (node->kind != NodeKind::Product)
    throw InvalidArgument("compositional evaluation needs a product node");
  return product_rules(node, p);
}

}  // namespace semiclose

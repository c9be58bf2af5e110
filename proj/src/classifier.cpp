#include "semiclose/classifier.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "semiclose/invariants.hpp"
#include "semiclose/kernel.hpp"

namespace semiclose {

namespace {

constexpr const char* kCite11 =
    "Theorem 1.1, \"chain-finite, nonsingular, periodic, and group-bounded\"";
constexpr const char* kCite12 =
    "Theorem 1.2, \"chain-finite, group-bounded and Clifford+finite\"";
constexpr const char* kCite14 = "Theorem 1.4(4), \"X is finite\"";
constexpr const char* kCite15 =
    "Theorem 1.5(4), \"chain-finite, bounded, group-finite and "
    "Clifford+finite\"";
constexpr const char* kCite52 =
    "Lemma 5.2, \"chain-finite group-finite bounded Clifford+finite "
    "E-commutative semigroup X is absolutely T2S-closed\"";
constexpr const char* kCite19 =
    "Theorem 1.9, \"Z(X) ∩ ℕ√(VE(X)) ∖ H(X) is finite\"";

struct ClassRecipe {
  ClosednessClass cls;
  const char* citation;
  std::vector<Pred> preds;
};

const std::vector<ClassRecipe>& commutative_recipes() {
  static const std::vector<ClassRecipe> recipes = {
      {ClosednessClass::CClosed,
       kCite11,
       {Pred::ChainFinite, Pred::Nonsingular, Pred::Periodic,
        Pred::GroupBounded}},
      {ClosednessClass::IdeallyClosed,
       kCite12,
       {Pred::ChainFinite, Pred::GroupBounded, Pred::CliffordPlusFinite}},
      {ClosednessClass::ProjectivelyClosed,
       kCite12,
       {Pred::ChainFinite, Pred::GroupBounded, Pred::CliffordPlusFinite}},
      {ClosednessClass::AbsolutelyT2S,
       kCite15,
       {Pred::ChainFinite, Pred::Bounded, Pred::GroupFinite,
        Pred::CliffordPlusFinite}},
      {ClosednessClass::AbsolutelyT1S, kCite14, {Pred::Finite}},
  };
  return recipes;
}

constexpr std::array<Pred, 5> kSufficiencyPreds = {
    Pred::ChainFinite, Pred::GroupFinite, Pred::Bounded,
    Pred::CliffordPlusFinite, Pred::ECommutative};

std::string failing_summary(const std::vector<ClassCondition>& conditions) {
  std::string failing, undetermined;
  for (const auto& c : conditions) {
    std::string name = pred_to_string(c.predicate);
    if (c.verdict.value == Tri::False)
      failing += (failing.empty() ? "" : ", ") + name;
    else if (c.verdict.value == Tri::Unknown)
      undetermined += (undetermined.empty() ? "" : ", ") + name;
  }
  if (!failing.empty()) return "failing condition: " + failing;
  if (!undetermined.empty()) return "undetermined condition: " + undetermined;
  return "all conditions hold";
}

ClassVerdict conjunction_verdict(const ClassRecipe& recipe,
                                 std::map<Pred, Verdict>& cache,
                                 const SymPtr& node) {
  ClassVerdict cv;
  cv.citation = recipe.citation;
  Tri value = Tri::True;
  for (Pred p : recipe.preds) {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, eval_predicate(node, p)).first;
    value = tri_and(value, it->second.value);
    cv.conditions.push_back({p, it->second, recipe.citation});
  }
  cv.value = value;
  cv.note = failing_summary(cv.conditions);
  return cv;
}

// Propagate True down to weaker classes and False up to stronger ones,
// strengthening Unknown entries only.
void close_under_implications(ClassificationReport& report) {
  const int n = static_cast<int>(report.classes.size());
  for (int i = n - 1; i >= 0; --i) {
    if (report.classes[i].value != Tri::True) continue;
    for (int j = i - 1; j >= 0; --j) {
      if (report.classes[j].value != Tri::Unknown) continue;
      report.classes[j].value = Tri::True;
      report.classes[j].citation = "implication chain";
      report.classes[j].note =
          "forced by " + class_to_string(kClassChain[i]) + " = true";
    }
  }
  for (int i = 0; i < n; ++i) {
    if (report.classes[i].value != Tri::False) continue;
    for (int j = i + 1; j < n; ++j) {
      if (report.classes[j].value != Tri::Unknown) continue;
      report.classes[j].value = Tri::False;
      report.classes[j].citation = "implication chain";
      report.classes[j].note =
          "forced by " + class_to_string(kClassChain[i]) + " = false";
    }
  }
}

Verdict sufficiency_bundle(const SymPtr& node) {
  Verdict v;
  v.rule = "sufficient-bundle";
  v.citation = kCite52;
  Tri value = Tri::True;
  std::string failing;
  for (Pred p : kSufficiencyPreds) {
    Verdict sub = eval_predicate(node, p);
    value = tri_and(value, sub.value);
    if (sub.value == Tri::False)
      failing += (failing.empty() ? "" : ", ") + pred_to_string(p);
    v.sub.push_back(std::move(sub));
  }
  v.value = value;
  if (!failing.empty()) v.note = "failing condition: " + failing;
  return v;
}

}  // namespace

std::string class_to_string(ClosednessClass c) {
  switch (c) {
    case ClosednessClass::CClosed: return "C_closed";
    case ClosednessClass::IdeallyClosed: return "ideally_closed";
    case ClosednessClass::ProjectivelyClosed: return "projectively_closed";
    case ClosednessClass::AbsolutelyT2S: return "absolutely_T2S_closed";
    case ClosednessClass::AbsolutelyT1S: return "absolutely_T1S_closed";
  }
  return "?";
}

ClassificationReport classify(const SymPtr& node) {
  ClassificationReport report;
  report.input = describe(node);
  report.commutative = eval_predicate(node, Pred::Commutative);

  if (report.commutative.value == Tri::True) {
    std::map<Pred, Verdict> cache;
    for (const auto& recipe : commutative_recipes())
      report.at(recipe.cls) = conjunction_verdict(recipe, cache, node);
  } else {
    for (auto& cv : report.classes) {
      cv.value = Tri::Unknown;
      cv.note = "theorem hypotheses not met";
    }
    // The one positive route that does not need commutativity.
    Verdict bundle = sufficiency_bundle(node);
    if (bundle.value == Tri::True) {
      ClassVerdict& t2s = report.at(ClosednessClass::AbsolutelyT2S);
      t2s.value = Tri::True;
      t2s.citation = kCite52;
      t2s.note = "sufficient bundle holds";
      for (std::size_t i = 0; i < kSufficiencyPreds.size(); ++i)
        t2s.conditions.push_back(
            {kSufficiencyPreds[i], bundle.sub[i], kCite52});
    }
  }

  close_under_implications(report);
  return report;
}

ClassificationReport classify(const FiniteSemigroup& s) {
  return classify(sym_table(s));
}

bool chain_consistent(const ClassificationReport& report) {
  const int n = static_cast<int>(report.classes.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // j is stronger than i.
      if (report.classes[j].value == Tri::True &&
          report.classes[i].value != Tri::True)
        return false;
      if (report.classes[i].value == Tri::False &&
          report.classes[j].value != Tri::False)
        return false;
    }
  }
  return true;
}

Verdict absolute_t2s_sufficiency(const SymPtr& node) {
  return sufficiency_bundle(node);
}

Verdict absolute_t2s_sufficiency(const FiniteSemigroup& s) {
  return sufficiency_bundle(sym_table(s));
}

CentroboundWitness centrobounded_witness(const FiniteSemigroup& s,
                                         const ElementSet& a) {
  const ElementSet e_all = idempotents(s);
  for (int e : a.members())
    if (!e_all.contains(e)) throw NotIdempotent(e);

  ElementSet joint = ElementSet::full(s.order());
  for (int e : a.members()) joint = joint.intersect(local_coideal(s, e));
  const ElementSet z = center(s);

  // Collect every central combination g = (xe)(ye)^{-1}; the witness n must
  // push all of them into an idempotent simultaneously.
  std::vector<int> combinations;
  std::uint64_t bound = 1;
  for (int e : a.members()) {
    const ElementSet he = maximal_subgroup(s, e);
    bound = std::lcm(bound, static_cast<std::uint64_t>(he.size()));
    for (int x : joint.members()) {
      const int xe = s.at(x, e);
      if (!he.contains(xe)) continue;
      for (int y : joint.members()) {
        const int ye = s.at(y, e);
        if (!he.contains(ye)) continue;
        const int g = s.at(xe, group_inverse(s, he, ye, e));
        if (z.contains(g)) combinations.push_back(g);
      }
    }
  }

  for (std::uint64_t n = 1; n <= bound; ++n) {
    bool ok = true;
    for (int g : combinations)
      if (!e_all.contains(s.power(g, n))) {
        ok = false;
        break;
      }
    if (ok) return {a, n};
  }
  return {a, bound};
}

ElementSet central_nonclifford_roots(const FiniteSemigroup& s) {
  return center(s)
      .intersect(roots_all(s, viable_idempotents(s)))
      .intersect(clifford_part(s).complement());
}

Verdict check_central_roots(const FiniteSemigroup& s) {
  const ElementSet fast = central_nonclifford_roots(s);

  // Direct recomputation from first principles.
  const int n = s.order();
  ElementSet slow = ElementSet::empty(n);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      if (s.at(x, y) != s.at(y, x)) central = false;
    if (!central) continue;
    bool has_viable_power = false;
    for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(2 * n) + 1; ++k) {
      const int p = s.power(x, k);
      if (idempotents(s).contains(p) && viable_by_coideal(s, p)) {
        has_viable_power = true;
        break;
      }
    }
    if (!has_viable_power) continue;
    bool in_some_subgroup = false;
    for (int e : idempotents(s).members())
      if (maximal_subgroup(s, e).contains(x)) in_some_subgroup = true;
    if (!in_some_subgroup) slow.insert(x);
  }

  Verdict v;
  v.value = (fast == slow) ? Tri::True : Tri::False;
  v.rule = "pipeline-crosscheck";
  v.citation = kCite19;
  std::ostringstream note;
  note << "size " << fast.size() << "; members {";
  bool first = true;
  for (int x : fast.members()) {
    if (!first) note << ", ";
    note << x;
    first = false;
  }
  note << "}";
  v.note = note.str();
  return v;
}

nlohmann::json classification_to_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["input"] = report.input;
  j["commutative"] = verdict_to_json(report.commutative);
  nlohmann::json classes = nlohmann::json::object();
  for (ClosednessClass c : kClassChain) {
    const ClassVerdict& cv = report.at(c);
    nlohmann::json jc;
    jc["value"] = tri_to_string(cv.value);
    if (!cv.citation.empty()) jc["citation"] = cv.citation;
    if (!cv.note.empty()) jc["note"] = cv.note;
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& cond : cv.conditions) {
      nlohmann::json jcond;
      jcond["predicate"] = pred_to_string(cond.predicate);
      jcond["verdict"] = tri_to_string(cond.verdict.value);
      jcond["citation"] = cond.citation;
      conds.push_back(std::move(jcond));
    }
    jc["conditions"] = std::move(conds);
    classes[class_to_string(c)] = std::move(jc);
  }
  j["classes"] = std::move(classes);
  return j;
}

std::string classification_to_markdown(const ClassificationReport& report) {
  std::ostringstream out;
  out << "# Classification: " << report.input << "\n\n";
  out << "Commutative: " << tri_to_string(report.commutative.value) << "\n\n";
  out << "| class | verdict | justification |\n";
  out << "|---|---|---|\n";
  for (ClosednessClass c : kClassChain) {
    const ClassVerdict& cv = report.at(c);
    out << "| " << class_to_string(c) << " | " << tri_to_string(cv.value)
        << " | ";
    if (!cv.citation.empty()) out << cv.citation;
    if (!cv.note.empty()) out << (cv.citation.empty() ? "" : " — ") << cv.note;
    out << " |\n";
  }
  out << "\nConditions:\n";
  for (ClosednessClass c : kClassChain) {
    const ClassVerdict& cv = report.at(c);
    if (cv.conditions.empty()) continue;
    out << "- " << class_to_string(c) << ":";
    for (const auto& cond : cv.conditions)
      out << " " << pred_to_string(cond.predicate) << " = "
          << tri_to_string(cond.verdict.value) << ";";
    out << "\n";
  }
  return out.str();
}

}  // namespace semiclose

#include "semiclose/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "semiclose/invariants.hpp"
#include "semiclose/io.hpp"
#include "semiclose/kernel.hpp"
#include "semiclose/polynomials.hpp"

namespace semiclose {

namespace {

constexpr int kIsoCommutativeCap = 5;
constexpr int kGeneralCap = 4;
constexpr int kNaiveCap = 3;
constexpr std::size_t kMaxStoredCounterexamples = 25;

int effective_cap(const EnumerationSpec& spec) {
  if (const char* env = std::getenv("SEMICLOSE_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return (spec.commutative_only && spec.up_to_isomorphism) ? kIsoCommutativeCap
                                                           : kGeneralCap;
}

// Backtracking fill. Cells are assigned in row-major order; after each
// assignment only the triples whose evaluation touches the new cell are
// re-examined, which is exactly the set of triples that may have become
// fully determined. Completed tables are therefore associative by
// construction (and re-validated when wrapped later).
struct Backtracker {
  int n;
  bool commutative_only;
  std::vector<int> t;  // n*n, -1 = unfilled

  Backtracker(int order, bool comm)
      : n(order), commutative_only(comm), t(static_cast<std::size_t>(order) * order, -1) {}

  bool consistent_after(int i, int j) const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = t[a * n + b];
        for (int c = 0; c < n; ++c) {
          const int bc = t[b * n + c];
          const bool uses = (a == i && b == j) || (b == i && c == j) ||
                            (ab >= 0 && ab == i && c == j) ||
                            (bc >= 0 && a == i && bc == j);
          if (!uses || ab < 0 || bc < 0) continue;
          const int lhs = t[ab * n + c];
          const int rhs = t[a * n + bc];
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
        }
      }
    return true;
  }

  // Fills positions [pos, stop); invokes sink on reaching stop.
  template <typename Sink>
  void fill(int pos, int stop, Sink&& sink) {
    if (pos == stop) {
      sink(t);
      return;
    }
    const int i = pos / n, j = pos % n;
    if (commutative_only && j < i) {
      t[pos] = t[j * n + i];
      if (consistent_after(i, j)) fill(pos + 1, stop, sink);
      t[pos] = -1;
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[pos] = v;
      if (consistent_after(i, j)) fill(pos + 1, stop, sink);
    }
    t[pos] = -1;
  }
};

bool flat_is_associative(const std::vector<int>& t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

std::vector<int> flat_table(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = s.at(i, j);
  return t;
}

std::vector<FiniteSemigroup> enumerate_impl(const EnumerationSpec& spec,
                                            bool parallel) {
  validate_enumeration_spec(spec);
  const int n = spec.order;
  const int cells = n * n;

  // Phase 1: every consistent filling of the first row becomes a branch.
  std::vector<std::vector<int>> branches;
  {
    Backtracker bt(n, spec.commutative_only);
    bt.fill(0, std::min(n, cells),
            [&](const std::vector<int>& t) { branches.push_back(t); });
  }

  // Phase 2: finish each branch independently; branch order keeps the merge
  // deterministic no matter how the work is scheduled.
  std::vector<std::vector<std::vector<int>>> buckets(branches.size());
  const int branch_count = static_cast<int>(branches.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int bi = 0; bi < branch_count; ++bi) {
    Backtracker bt(n, spec.commutative_only);
    bt.t = branches[bi];
    bt.fill(std::min(n, cells), cells,
            [&](const std::vector<int>& t) { buckets[bi].push_back(t); });
  }

  std::vector<FiniteSemigroup> out;
  for (auto& bucket : buckets)
    for (auto& flat : bucket) out.emplace_back(n, std::move(flat));

  if (spec.up_to_isomorphism) {
    std::vector<FiniteSemigroup> reps;
    for (auto& s : out)
      if (flat_table(s) == canonical_form(s)) reps.push_back(std::move(s));
    return reps;
  }
  return out;
}

}  // namespace

void validate_enumeration_spec(const EnumerationSpec& spec) {
  if (spec.order < 1) throw SpecTooLarge("order must be at least 1");
  const int cap = effective_cap(spec);
  if (spec.order > cap)
    throw SpecTooLarge(
        "order " + std::to_string(spec.order) + " exceeds the guardrail of " +
        std::to_string(cap) + " (set SEMICLOSE_MAX_ORDER to override)");
}

std::uint64_t naive_labeled_count(int order, bool commutative_only) {
  return static_cast<std::uint64_t>(naive_enumerate(order, commutative_only).size());
}

std::vector<FiniteSemigroup> naive_enumerate(int order, bool commutative_only) {
  if (order < 1 || order > kNaiveCap)
    throw SpecTooLarge("the generate-and-filter oracle handles order 1.." +
                       std::to_string(kNaiveCap) + " only");
  const int n = order;
  const int cells = n * n;
  std::vector<int> t(cells, 0);
  std::vector<FiniteSemigroup> out;
  while (true) {
    bool symmetric_ok = true;
    if (commutative_only)
      for (int i = 0; i < n && symmetric_ok; ++i)
        for (int j = i + 1; j < n && symmetric_ok; ++j)
          symmetric_ok = t[i * n + j] == t[j * n + i];
    if (symmetric_ok && flat_is_associative(t, n))
      out.emplace_back(n, t);

    int pos = cells - 1;
    while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

std::vector<FiniteSemigroup> enumerate_semigroups(const EnumerationSpec& spec) {
  return enumerate_impl(spec, true);
}

std::vector<FiniteSemigroup> enumerate_semigroups_serial(
    const EnumerationSpec& spec) {
  return enumerate_impl(spec, false);
}

std::uint64_t count_semigroups(const EnumerationSpec& spec) {
  return static_cast<std::uint64_t>(enumerate_semigroups(spec).size());
}

std::vector<int> canonical_form(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> candidate(static_cast<std::size_t>(n) * n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        candidate[perm[i] * n + perm[j]] = perm[s.at(i, j)];
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool are_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::vector<FiniteSemigroup> semilattice_targets(int max_order) {
  std::vector<FiniteSemigroup> out;
  for (int n = 1; n <= max_order; ++n)
    for (auto& s : naive_enumerate(n, true))
      if (is_semilattice(s)) out.push_back(std::move(s));
  return out;
}

// ------------------------------------------------------------------ suite ---

namespace {

std::string set_to_string(const ElementSet& a) {
  std::string out = "{";
  bool first = true;
  for (int x : a.members()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

struct SuiteContext {
  SuiteReport* report;
  const FiniteSemigroup* current;

  void record(int check_index, bool pass, const std::string& witness) {
    CheckStats& stats = report->checks[check_index];
    if (pass) {
      ++stats.passes;
      return;
    }
    ++stats.failures;
    if (report->counterexamples.size() < kMaxStoredCounterexamples)
      report->counterexamples.push_back({stats.name, *current, witness});
  }
};

enum SuiteCheck {
  kIdealCenterIdempotents = 0,
  kReflectionInjective,
  kPrimeCoidealChi,
  kViabilityAgreement,
  kCommutativeViable,
  kReflectionUniversal,
  kPolyboundedWitness,
  kSuiteCheckCount,
};

void check_ideal_center(SuiteContext& ctx, const FiniteSemigroup& s) {
  const ElementSet e = idempotents(s);
  const ElementSet iz = ideal_center(s);
  const ElementSet ve = viable_idempotents(s);

  ElementSet lhs = ElementSet::empty(s.order());
  if (!iz.is_empty()) {
    std::vector<int> back;
    const FiniteSemigroup sub = induced_subsemigroup(s, iz, &back);
    for (int i : idempotents(sub).members()) lhs.insert(back[i]);
  }
  const ElementSet rhs = e.intersect(center(s)).intersect(iz);
  const bool pass = lhs == rhs && lhs.subset_of(ve);
  ctx.record(kIdealCenterIdempotents, pass,
             "E(IZ)=" + set_to_string(lhs) + " central idempotents in IZ=" +
                 set_to_string(rhs) + " VE=" + set_to_string(ve));
}

void check_reflection_injective(SuiteContext& ctx, const FiniteSemigroup& s) {
  const ReflectionResult refl = semilattice_reflection(s);
  const std::vector<int> ve = viable_idempotents(s).members();
  for (std::size_t i = 0; i < ve.size(); ++i)
    for (std::size_t j = i + 1; j < ve.size(); ++j)
      if (refl.projection[ve[i]] == refl.projection[ve[j]]) {
        ctx.record(kReflectionInjective, false,
                   "viable idempotents " + std::to_string(ve[i]) + " and " +
                       std::to_string(ve[j]) + " collapse");
        return;
      }
  ctx.record(kReflectionInjective, true, "");
}

void check_prime_coideal_chi(SuiteContext& ctx, const FiniteSemigroup& s) {
  const int n = s.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElementSet c = ElementSet::empty(n);
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) c.insert(x);
    const bool via_sets = is_prime_coideal(s, c);
    const bool via_chi = chi_is_min_homomorphism(s, c);
    if (via_sets != via_chi) {
      ctx.record(kPrimeCoidealChi, false,
                 "subset " + set_to_string(c) + ": prime-coideal=" +
                     (via_sets ? "yes" : "no") + " characteristic-hom=" +
                     (via_chi ? "yes" : "no"));
      return;
    }
  }
  ctx.record(kPrimeCoidealChi, true, "");
}

void check_viability_agreement(SuiteContext& ctx, const FiniteSemigroup& s) {
  for (int e : idempotents(s).members())
    if (viable_by_coideal(s, e) != viable_by_products(s, e)) {
      ctx.record(kViabilityAgreement, false,
                 "idempotent " + std::to_string(e) +
                     ": coideal and products definitions disagree");
      return;
    }
  ctx.record(kViabilityAgreement, true, "");
}

void check_commutative_viable(SuiteContext& ctx, const FiniteSemigroup& s) {
  if (!is_commutative(s)) return;  // not applicable
  const ElementSet e = idempotents(s);
  const ElementSet ve = viable_idempotents(s);
  ctx.record(kCommutativeViable, ve == e,
             "VE=" + set_to_string(ve) + " E=" + set_to_string(e));
}

void check_reflection_universal(SuiteContext& ctx, const FiniteSemigroup& s,
                                const std::vector<FiniteSemigroup>& targets) {
  const ReflectionResult refl = semilattice_reflection(s);
  const int n = s.order();
  const int m = refl.reflection.order();

  if (!is_semilattice(refl.reflection) ||
      !is_homomorphism(s, refl.reflection, refl.projection)) {
    ctx.record(kReflectionUniversal, false,
               "projection is not a semilattice homomorphism");
    return;
  }

  for (const FiniteSemigroup& target : targets) {
    const int tn = target.order();
    std::vector<int> f(n, 0);
    while (true) {
      if (is_homomorphism(s, target, f)) {
        // Factor through the reflection: induced[class] must be well defined
        // and a homomorphism (uniqueness is automatic, the projection is
        // surjective).
        std::vector<int> induced(m, -1);
        bool well_defined = true;
        for (int x = 0; x < n && well_defined; ++x) {
          int& slot = induced[refl.projection[x]];
          if (slot < 0)
            slot = f[x];
          else if (slot != f[x])
            well_defined = false;
        }
        if (!well_defined ||
            !is_homomorphism(refl.reflection, target, induced)) {
          std::string fn = "[";
          for (int x = 0; x < n; ++x) fn += (x ? "," : "") + std::to_string(f[x]);
          ctx.record(kReflectionUniversal, false,
                     "homomorphism " + fn + " into a " + std::to_string(tn) +
                         "-element semilattice does not factor");
          return;
        }
      }
      int pos = n - 1;
      while (pos >= 0 && f[pos] == tn - 1) f[pos--] = 0;
      if (pos < 0) break;
      ++f[pos];
    }
  }
  ctx.record(kReflectionUniversal, true, "");
}

void check_polybounded_witness(SuiteContext& ctx, const FiniteSemigroup& s) {
  const auto cover = search_polybounded(s, s.order());
  if (!cover) {
    ctx.record(kPolyboundedWitness, false, "no cover found");
    return;
  }
  if (!verify_cover(s, *cover)) {
    ctx.record(kPolyboundedWitness, false, "search returned an invalid cover");
    return;
  }
  const PolyfiniteWitness witness = polyfinite_from_polybounded(s, *cover);
  const bool pass = verify_polyfinite(s, witness);
  ctx.record(kPolyboundedWitness, pass,
             pass ? ""
                  : "witness d=" + std::to_string(witness.degree_bound) +
                        " F=" + set_to_string(witness.trap) + " fails");
}

}  // namespace

SuiteReport run_lemma_suite(const EnumerationSpec& spec) {
  const auto start = std::chrono::steady_clock::now();

  SuiteReport report;
  report.spec = spec;
  report.banner =
      "Every check validates this library against statements with known "
      "proofs; a failure below is an implementation bug, not a refutation.";
  report.checks = {
      {"ideal-center-idempotents",
       "Lemma 2.5, \"E(IZ(X)) = E(Z) ∩ IZ(X) ⊆ VE(X)\"", 0, 0},
      {"reflection-injective-on-viable",
       "Proposition 3.1, \"The restriction q↾ VE(X) is injective\"", 0,
       0},
      {"prime-coideal-characteristic-homomorphism",
       "characteristic function is a homomorphism to the semilattice {0,1}",
       0, 0},
      {"viability-definitions-agree",
       "local-coideal and factorization descriptions of viability", 0, 0},
      {"commutative-implies-all-viable",
       "every commutative semigroup is viable", 0, 0},
      {"reflection-universal-property",
       "universal property of the semilattice reflection", 0, 0},
      {"polybounded-witness-verifies",
       "Lemma 2.3, \"Every polybounded semigroup X is polyfinite\"", 0, 0},
  };

  const std::vector<FiniteSemigroup> targets = semilattice_targets(3);
  const std::vector<FiniteSemigroup> semis = enumerate_semigroups(spec);
  report.semigroups_examined = semis.size();

  SuiteContext ctx{&report, nullptr};
  for (const FiniteSemigroup& s : semis) {
    ctx.current = &s;
    try {
      check_ideal_center(ctx, s);
      check_reflection_injective(ctx, s);
      check_prime_coideal_chi(ctx, s);
      check_viability_agreement(ctx, s);
      check_commutative_viable(ctx, s);
      check_reflection_universal(ctx, s, targets);
      check_polybounded_witness(ctx, s);
    } catch (const SemigroupError& err) {
      if (report.counterexamples.size() < kMaxStoredCounterexamples)
        report.counterexamples.push_back(
            {"unexpected-error", s, err.what()});
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

nlohmann::json suite_report_to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["spec"] = {{"order", report.spec.order},
               {"commutative_only", report.spec.commutative_only},
               {"up_to_isomorphism", report.spec.up_to_isomorphism}};
  j["banner"] = report.banner;
  j["semigroups_examined"] = report.semigroups_examined;
  j["wall_seconds"] = report.wall_seconds;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckStats& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"citation", c.citation},
                      {"passes", c.passes},
                      {"failures", c.failures}});
  j["checks"] = std::move(checks);
  nlohmann::json ces = nlohmann::json::array();
  for (const Counterexample& ce : report.counterexamples)
    ces.push_back({{"check", ce.check},
                   {"table", semigroup_to_json(ce.table)},
                   {"witness", ce.witness}});
  j["counterexamples"] = std::move(ces);
  j["ok"] = report.ok();
  return j;
}

}  // namespace semiclose

#include "semiclose/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "semiclose/kernel.hpp"

namespace semiclose {

ElementSet idempotents(const FiniteSemigroup& s) {
  ElementSet e(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (s.at(x, x) == x) e.insert(x);
  return e;
}

MonogenicData monogenic_data(const FiniteSemigroup& s, int x) {
  if (x < 0 || x >= s.order()) throw InvalidArgument("element out of range");
  std::vector<int> first_seen(s.order(), -1);
  int value = x, exponent = 1;
  while (first_seen[value] < 0) {
    first_seen[value] = exponent;
    value = s.at(value, x);
    ++exponent;
  }
  int index = first_seen[value];
  int period = exponent - index;
  // The cycle is a cyclic group of order `period`; its identity is x^k for
  // the unique multiple k of the period within [index, index+period).
  int k = index + (period - index % period) % period;
  return {x, index, period, s.power(x, static_cast<std::uint64_t>(k))};
}

// ---------------------------------------------------------- IdempotentPoset

IdempotentPoset::IdempotentPoset(std::vector<int> elements, std::vector<bool> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  int universe = elements_.empty() ? 0 : *std::max_element(elements_.begin(),
                                                           elements_.end()) + 1;
  position_.assign(universe, -1);
  for (int i = 0; i < size(); ++i) position_[elements_[i]] = i;
}

bool IdempotentPoset::leq(int e, int f) const {
  int pe = (e < static_cast<int>(position_.size())) ? position_[e] : -1;
  int pf = (f < static_cast<int>(position_.size())) ? position_[f] : -1;
  if (pe < 0 || pf < 0) throw InvalidArgument("element is not in the poset");
  return leq_[pe * size() + pf];
}

std::vector<std::pair<int, int>> IdempotentPoset::hasse_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int k = size();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !leq_[i * k + j]) continue;
      bool covering = true;
      for (int m = 0; m < k && covering; ++m)
        if (m != i && m != j && leq_[i * k + m] && leq_[m * k + j])
          covering = false;
      if (covering) out.emplace_back(elements_[i], elements_[j]);
    }
  return out;
}

bool IdempotentPoset::check_axioms() const {
  const int k = size();
  for (int i = 0; i < k; ++i)
    if (!leq_[i * k + i]) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i != j && leq_[i * k + j] && leq_[j * k + i]) return false;
      for (int m = 0; m < k; ++m)
        if (leq_[i * k + j] && leq_[j * k + m] && !leq_[i * k + m]) return false;
    }
  return true;
}

bool IdempotentPoset::chain_finite() const {
  // A finite poset cannot contain an infinite chain; validate the axioms so
  // the answer is about a genuine partial order.
  return check_axioms();
}

bool IdempotentPoset::well_founded() const {
  // Every nonempty subset of a finite poset has a minimal element.
  return check_axioms();
}

IdempotentPoset natural_order(const FiniteSemigroup& s) {
  std::vector<int> elems = idempotents(s).members();
  const int k = static_cast<int>(elems.size());
  std::vector<bool> leq(static_cast<std::size_t>(k) * k, false);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int e = elems[i], f = elems[j];
      leq[i * k + j] = (s.at(e, f) == e && s.at(f, e) == e);
    }
  return IdempotentPoset(std::move(elems), std::move(leq));
}

// --------------------------------------------------------------- subgroups

ElementSet maximal_subgroup(const FiniteSemigroup& s, int e) {
  if (e < 0 || e >= s.order() || s.at(e, e) != e) throw NotIdempotent(e);
  ElementSet local(s.order());
  for (int x = 0; x < s.order(); ++x)
    local.insert(s.at(s.at(e, x), e));  // exe
  ElementSet h(s.order());
  for (int x : local.members()) {
    for (int y : local.members())
      if (s.at(x, y) == e && s.at(y, x) == e) {
        h.insert(x);
        break;
      }
  }
  return h;
}

ElementSet clifford_part(const FiniteSemigroup& s) {
  ElementSet h(s.order());
  for (int e : idempotents(s).members()) h = h.unite(maximal_subgroup(s, e));
  return h;
}

ElementSet center(const FiniteSemigroup& s) {
  ElementSet z(s.order());
  for (int x = 0; x < s.order(); ++x) {
    bool central = true;
    for (int y = 0; y < s.order() && central; ++y)
      central = s.at(x, y) == s.at(y, x);
    if (central) z.insert(x);
  }
  return z;
}

ElementSet ideal_center(const FiniteSemigroup& s) {
  ElementSet z = center(s);
  ElementSet iz(s.order());
  for (int x : z.members()) {
    bool ok = true;
    for (int y = 0; y < s.order() && ok; ++y) ok = z.contains(s.at(x, y));
    if (ok) iz.insert(x);
  }
  return iz;
}

// ---------------------------------------------------------------- viability

ElementSet local_coideal(const FiniteSemigroup& s, int e) {
  ElementSet h = maximal_subgroup(s, e);
  ElementSet out(s.order());
  for (int x = 0; x < s.order(); ++x) {
    int xe = s.at(x, e), ex = s.at(e, x);
    if (xe == ex && h.contains(xe)) out.insert(x);
  }
  return out;
}

bool viable_by_coideal(const FiniteSemigroup& s, int e) {
  return is_coideal(s, local_coideal(s, e));
}

bool viable_by_products(const FiniteSemigroup& s, int e) {
  if (e < 0 || e >= s.order() || s.at(e, e) != e) throw NotIdempotent(e);
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      if (s.at(x, y) != e) continue;
      if (s.at(x, e) != s.at(e, x)) return false;
      if (s.at(y, e) != s.at(e, y)) return false;
    }
  return true;
}

ElementSet viable_idempotents(const FiniteSemigroup& s) {
  ElementSet ve(s.order());
  for (int e : idempotents(s).members())
    if (viable_by_coideal(s, e)) ve.insert(e);
  return ve;
}

// --------------------------------------------------------------- reflection

ReflectionResult semilattice_reflection(const FiniteSemigroup& s) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < s.order(); ++x) pairs.emplace_back(s.at(x, x), x);
  for (int x = 0; x < s.order(); ++x)
    for (int y = x + 1; y < s.order(); ++y)
      pairs.emplace_back(s.at(x, y), s.at(y, x));
  QuotientResult q = quotient(s, generated_congruence(s, pairs));
  return {std::move(q.semigroup), std::move(q.projection)};
}

bool is_semilattice(const FiniteSemigroup& s) {
  if (!is_commutative(s)) return false;
  for (int x = 0; x < s.order(); ++x)
    if (s.at(x, x) != x) return false;
  return true;
}

// -------------------------------------------------------------------- roots

ElementSet roots(const FiniteSemigroup& s, const ElementSet& a, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("root degree must be >= 1");
  ElementSet out(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (a.contains(s.power(x, n))) out.insert(x);
  return out;
}

ElementSet roots_all(const FiniteSemigroup& s, const ElementSet& a) {
  ElementSet out(s.order());
  for (int x = 0; x < s.order(); ++x) {
    MonogenicData m = monogenic_data(s, x);
    // Powers x^1 .. x^(index+period-1) exhaust all powers of x.
    int v = x;
    for (int e = 1; e < m.index + m.period; ++e) {
      if (a.contains(v)) {
        out.insert(x);
        break;
      }
      v = s.at(v, x);
    }
  }
  return out;
}

Exponent exponent_of(const FiniteSemigroup& s, const ElementSet& b) {
  // x^n is idempotent iff n >= index(x) and period(x) divides n, so the
  // smallest uniform n is the least multiple of lcm(periods) reaching every
  // index.
  std::uint64_t lcm_periods = 1, max_index = 1;
  for (int x : b.members()) {
    MonogenicData m = monogenic_data(s, x);
    lcm_periods = std::lcm(lcm_periods, static_cast<std::uint64_t>(m.period));
    max_index = std::max(max_index, static_cast<std::uint64_t>(m.index));
  }
  std::uint64_t n = lcm_periods * ((max_index + lcm_periods - 1) / lcm_periods);
  return Exponent::of(n);
}

int group_inverse(const FiniteSemigroup& s, const ElementSet& h, int g, int e) {
  for (int y : h.members())
    if (s.at(g, y) == e && s.at(y, g) == e) return y;
  throw InvalidArgument("no inverse in the given subgroup");
}

// ------------------------------------------------------------------- report

nlohmann::json invariant_report(const FiniteSemigroup& s) {
  nlohmann::json j;
  j["order"] = s.order();
  j["commutative"] = is_commutative(s);
  ElementSet e = idempotents(s);
  j["idempotents"] = e.members();
  IdempotentPoset poset = natural_order(s);
  nlohmann::json hasse = nlohmann::json::array();
  for (auto [lo, hi] : poset.hasse_pairs()) hasse.push_back({lo, hi});
  j["natural_order_hasse"] = std::move(hasse);
  nlohmann::json subgroup_orders = nlohmann::json::array();
  for (int id : e.members())
    subgroup_orders.push_back(
        {{"idempotent", id}, {"order", maximal_subgroup(s, id).size()}});
  j["maximal_subgroups"] = std::move(subgroup_orders);
  j["clifford_part_size"] = clifford_part(s).size();
  j["center_size"] = center(s).size();
  j["ideal_center_size"] = ideal_center(s).size();
  j["viable_idempotents"] = viable_idempotents(s).members();
  j["reflection_order"] = semilattice_reflection(s).reflection.order();
  j["exponent"] = exponent_of(s, ElementSet::full(s.order())).value;
  return j;
}

}  // namespace semiclose

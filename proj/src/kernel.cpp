#include "semiclose/kernel.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace semiclose {

bool is_commutative(const FiniteSemigroup& s) {
  for (int i = 0; i < s.order(); ++i)
    for (int j = i + 1; j < s.order(); ++j)
      if (s.at(i, j) != s.at(j, i)) return false;
  return true;
}

bool is_subsemigroup(const FiniteSemigroup& s, const ElementSet& a) {
  for (int x : a.members())
    for (int y : a.members())
      if (!a.contains(s.at(x, y))) return false;
  return true;
}

bool is_ideal(const FiniteSemigroup& s, const ElementSet& a) {
  for (int x : a.members())
    for (int t = 0; t < s.order(); ++t)
      if (!a.contains(s.at(x, t)) || !a.contains(s.at(t, x))) return false;
  return true;
}

bool is_coideal(const FiniteSemigroup& s, const ElementSet& a) {
  return is_ideal(s, a.complement());
}

bool is_prime_coideal(const FiniteSemigroup& s, const ElementSet& c) {
  return is_subsemigroup(s, c) && is_ideal(s, c.complement());
}

bool chi_is_min_homomorphism(const FiniteSemigroup& s, const ElementSet& c) {
  // chi(x) = 1 iff x in c; homomorphism into ({0,1}, min).
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      int chi_x = c.contains(x) ? 1 : 0;
      int chi_y = c.contains(y) ? 1 : 0;
      int chi_xy = c.contains(s.at(x, y)) ? 1 : 0;
      if (chi_xy != std::min(chi_x, chi_y)) return false;
    }
  return true;
}

QuotientResult rees_quotient(const FiniteSemigroup& s, const ElementSet& ideal) {
  if (!is_ideal(s, ideal)) throw NotAnIdeal("rees quotient needs an ideal");
  const int n = s.order();
  if (ideal.is_empty()) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return {s, std::move(id)};
  }
  // All of the ideal becomes one absorbing class; singletons elsewhere.
  std::vector<int> class_of(n, -1);
  int next = 0, zero_class = -1;
  for (int i = 0; i < n; ++i) {
    if (ideal.contains(i)) {
      if (zero_class < 0) zero_class = next++;
      class_of[i] = zero_class;
    } else {
      class_of[i] = next++;
    }
  }
  const int k = next;
  std::vector<int> repr(k, -1);
  for (int i = 0; i < n; ++i)
    if (repr[class_of[i]] < 0) repr[class_of[i]] = i;
  std::vector<int> flat(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      flat[a * k + b] = class_of[s.at(repr[a], repr[b])];
  return {FiniteSemigroup(k, std::move(flat)), std::move(class_of)};
}

FiniteSemigroup zero_extension(const FiniteSemigroup& s) {
  const int n = s.order(), m = n + 1;
  std::vector<int> flat(static_cast<std::size_t>(m) * m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * m + j] = s.at(i, j);
  return FiniteSemigroup(m, std::move(flat));
}

FiniteSemigroup one_extension(const FiniteSemigroup& s) {
  const int n = s.order(), m = n + 1;
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * m + j] = s.at(i, j);
  for (int i = 0; i < n; ++i) {
    flat[i * m + n] = i;  // x * 1 = x
    flat[n * m + i] = i;  // 1 * x = x
  }
  flat[n * m + n] = n;
  return FiniteSemigroup(m, std::move(flat));
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence generated_congruence(const FiniteSemigroup& s,
                                const std::vector<std::pair<int, int>>& pairs) {
  const int n = s.order();
  for (auto [a, b] : pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidArgument("congruence seed pair out of range");
  Dsu dsu(n);
  std::deque<std::pair<int, int>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (!dsu.merge(x, y)) continue;
    // x ~ y forces ax ~ ay and xa ~ ya for every a.
    for (int a = 0; a < n; ++a) {
      work.emplace_back(s.at(a, x), s.at(a, y));
      work.emplace_back(s.at(x, a), s.at(y, a));
    }
  }
  std::vector<int> class_of(n);
  for (int i = 0; i < n; ++i) class_of[i] = dsu.find(i);
  return Congruence(n, std::move(class_of));
}

bool is_compatible(const FiniteSemigroup& s, const Congruence& cong) {
  const int n = s.order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (cong.class_of(x) != cong.class_of(y)) continue;
      for (int a = 0; a < n; ++a) {
        if (cong.class_of(s.at(a, x)) != cong.class_of(s.at(a, y))) return false;
        if (cong.class_of(s.at(x, a)) != cong.class_of(s.at(y, a))) return false;
      }
    }
  return true;
}

QuotientResult quotient(const FiniteSemigroup& s, const Congruence& cong) {
  if (cong.parent_order() != s.order())
    throw InvalidArgument("congruence order does not match semigroup");
  if (!is_compatible(s, cong))
    throw IncompatiblePartition("partition is not compatible with the table");
  const int n = s.order(), k = cong.num_classes();
  std::vector<int> repr(k, -1);
  for (int i = 0; i < n; ++i)
    if (repr[cong.class_of(i)] < 0) repr[cong.class_of(i)] = i;
  std::vector<int> flat(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      flat[a * k + b] = cong.class_of(s.at(repr[a], repr[b]));
  return {FiniteSemigroup(k, std::move(flat)), cong.classes()};
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          int x = i1 * nb + j1, y = i2 * nb + j2;
          flat[x * n + y] = a.at(i1, i2) * nb + b.at(j1, j2);
        }
  std::vector<std::string> names;
  if (a.has_names() && b.has_names()) {
    names.reserve(n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        names.push_back("(" + a.names()[i] + "," + b.names()[j] + ")");
  }
  return FiniteSemigroup(n, std::move(flat), std::move(names));
}

FiniteSemigroup induced_subsemigroup(const FiniteSemigroup& s,
                                     const ElementSet& a,
                                     std::vector<int>* back_map) {
  if (a.is_empty()) throw InvalidArgument("empty subset has no table");
  if (!is_subsemigroup(s, a))
    throw InvalidArgument("subset is not closed under multiplication");
  const std::vector<int> elems = a.members();
  std::vector<int> pos(s.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) flat[i * m + j] = pos[s.at(elems[i], elems[j])];
  if (back_map) *back_map = elems;
  return FiniteSemigroup(m, std::move(flat));
}

bool is_homomorphism(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                     const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != src.order()) return false;
  for (int v : image)
    if (v < 0 || v >= dst.order()) return false;
  for (int x = 0; x < src.order(); ++x)
    for (int y = 0; y < src.order(); ++y)
      if (image[src.at(x, y)] != dst.at(image[x], image[y])) return false;
  return true;
}

bool is_group(const FiniteSemigroup& s) {
  const int n = s.order();
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = s.at(e, x) == x && s.at(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return false;
  for (int x = 0; x < n; ++x) {
    bool inv = false;
    for (int y = 0; y < n && !inv; ++y)
      inv = s.at(x, y) == identity && s.at(y, x) == identity;
    if (!inv) return false;
  }
  return true;
}

}  // namespace semiclose

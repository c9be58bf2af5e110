#include "semiclose/polynomials.hpp"

#include <algorithm>
#include <map>

namespace semiclose {

namespace {

// Multiplication in X with an adjoined unit.
int mul1(const FiniteSemigroup& s, int a, int b) {
  if (a == kUnitCoefficient) return b;
  if (b == kUnitCoefficient) return a;
  return s.at(a, b);
}

}  // namespace

SemigroupPolynomial::SemigroupPolynomial(std::vector<int> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2)
    throw InvalidArgument("polynomial degree must be >= 1");
  for (int c : coeffs_)
    if (c < kUnitCoefficient)
      throw InvalidArgument("bad polynomial coefficient");
}

SemigroupPolynomial SemigroupPolynomial::identity() {
  return SemigroupPolynomial({kUnitCoefficient, kUnitCoefficient});
}

int eval_polynomial(const FiniteSemigroup& s, const SemigroupPolynomial& f,
                    int x) {
  if (x < 0 || x >= s.order()) throw InvalidArgument("argument out of range");
  for (int c : f.coeffs())
    if (c >= s.order()) throw InvalidArgument("coefficient out of range");
  int acc = f.coeffs()[0];
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    acc = mul1(s, acc, x);
    acc = mul1(s, acc, f.coeffs()[i]);
  }
  return acc;  // degree >= 1 guarantees a real element, never the bare unit
}

SemigroupPolynomial compose(const FiniteSemigroup& s,
                            const SemigroupPolynomial& f,
                            const SemigroupPolynomial& g) {
  // Substitute g's word for each variable slot of f; constants meeting at
  // the seams multiply together immediately.
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(f.degree()) * g.degree() + 1);
  int pending = a[0];
  for (int slot = 0; slot < f.degree(); ++slot) {
    // g's word opens with b0 merged into whatever constant is pending.
    out.push_back(mul1(s, pending, b[0]));
    for (std::size_t i = 1; i + 1 < b.size(); ++i) out.push_back(b[i]);
    pending = mul1(s, b.back(), a[slot + 1]);
  }
  out.push_back(pending);
  return SemigroupPolynomial(std::move(out));
}

bool verify_cover(const FiniteSemigroup& s, const PolyboundedCover& cover) {
  for (int x = 0; x < s.order(); ++x) {
    bool hit = false;
    for (const auto& item : cover.items)
      if (eval_polynomial(s, item.poly, x) == item.target) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

namespace {

// All polynomials of degree 1..max_degree with coefficients over X^1,
// enumerated in a stable order.
template <typename Fn>
void for_each_polynomial(const FiniteSemigroup& s, int max_degree, Fn&& fn) {
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<int> coeffs(d + 1, kUnitCoefficient);
    while (true) {
      fn(SemigroupPolynomial(coeffs));
      int i = d;
      while (i >= 0) {
        if (coeffs[i] + 1 < s.order()) {
          ++coeffs[i];
          break;
        }
        coeffs[i] = kUnitCoefficient;
        --i;
      }
      if (i < 0) break;
    }
  }
}

using Mask = std::uint64_t;

bool cover_search(const std::vector<Mask>& masks, Mask need, int k, int from,
                  std::vector<int>& picked) {
  if (need == 0) return true;
  if (k == 0) return false;
  for (int i = from; i < static_cast<int>(masks.size()); ++i) {
    if ((masks[i] & need) == 0) continue;
    picked.push_back(i);
    if (cover_search(masks, need & ~masks[i], k - 1, i + 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PolyboundedCover> search_polybounded(const FiniteSemigroup& s,
                                                   int max_k,
                                                   SearchLimits limits) {
  if (s.order() > 64) throw SpecTooLarge("polybounded search capped at order 64");
  // Collect distinct fiber masks f^{-1}(b); remember the first (and thus
  // lowest-degree) item realizing each mask.
  std::map<Mask, CoverItem> by_mask;
  for_each_polynomial(s, limits.max_degree, [&](const SemigroupPolynomial& f) {
    std::vector<Mask> fiber(s.order(), 0);
    for (int x = 0; x < s.order(); ++x)
      fiber[eval_polynomial(s, f, x)] |= (Mask{1} << x);
    for (int b = 0; b < s.order(); ++b) {
      if (fiber[b] == 0) continue;
      by_mask.emplace(fiber[b], CoverItem{f, b});
    }
  });
  std::vector<Mask> masks;
  std::vector<CoverItem> items;
  for (auto& [mask, item] : by_mask) {
    masks.push_back(mask);
    items.push_back(item);
  }
  const Mask all = (s.order() == 64) ? ~Mask{0} : (Mask{1} << s.order()) - 1;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> picked;
    if (cover_search(masks, all, k, 0, picked)) {
      PolyboundedCover cover;
      for (int i : picked) cover.items.push_back(items[i]);
      return cover;
    }
  }
  return std::nullopt;
}

PolyfiniteWitness polyfinite_from_polybounded(const FiniteSemigroup& s,
                                              const PolyboundedCover& cover) {
  if (cover.items.empty()) throw InvalidCover("cover has no items");
  if (!verify_cover(s, cover)) throw InvalidCover("cover does not cover X");
  ElementSet trap(s.order());
  for (const auto& item : cover.items) trap.insert(item.target);
  for (const auto& fi : cover.items)
    for (const auto& bj : cover.items)
      trap.insert(eval_polynomial(s, fi.poly, bj.target));
  int d = 0;
  for (const auto& fi : cover.items)
    for (const auto& fj : cover.items)
      d = std::max(d, compose(s, fi.poly, fj.poly).degree());
  return {d, trap};
}

bool verify_polyfinite(const FiniteSemigroup& s, const PolyfiniteWitness& w,
                       std::optional<int> degree_cap) {
  int max_d = w.degree_bound;
  if (degree_cap) max_d = std::min(max_d, *degree_cap);
  if (max_d < 1 || w.trap.is_empty()) return false;
  const int n = s.order();
  std::vector<char> in_trap(n, 0);
  for (int t : w.trap.members()) in_trap[t] = 1;

  // For a fixed pair (x, y) the values (f(x), f(y)) reachable by degree-d
  // polynomials satisfy a one-step recurrence: append "· x · a" / "· y · a".
  // Walk the reachable pair set level by level instead of enumerating
  // coefficient tuples.
  auto pair_witnessed = [&](int x, int y) {
    std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> frontier;
    // Level 1: a0 x a1.
    for (int a0 = kUnitCoefficient; a0 < n; ++a0) {
      int ux = (a0 == kUnitCoefficient) ? x : s.at(a0, x);
      int uy = (a0 == kUnitCoefficient) ? y : s.at(a0, y);
      for (int a1 = kUnitCoefficient; a1 < n; ++a1) {
        int vx = (a1 == kUnitCoefficient) ? ux : s.at(ux, a1);
        int vy = (a1 == kUnitCoefficient) ? uy : s.at(uy, a1);
        if (!reach[vx * n + vy]) {
          reach[vx * n + vy] = 1;
          frontier.emplace_back(vx, vy);
        }
      }
    }
    auto hit = [&](const std::vector<std::pair<int, int>>& level) {
      for (auto [px, py] : level)
        if (in_trap[px] && in_trap[py]) return true;
      return false;
    };
    if (hit(frontier)) return true;
    for (int level = 2; level <= max_d; ++level) {
      std::vector<std::pair<int, int>> next;
      for (auto [px, py] : frontier) {
        int qx = s.at(px, x), qy = s.at(py, y);
        for (int a = kUnitCoefficient; a < n; ++a) {
          int rx = (a == kUnitCoefficient) ? qx : s.at(qx, a);
          int ry = (a == kUnitCoefficient) ? qy : s.at(qy, a);
          if (!reach[rx * n + ry]) {
            reach[rx * n + ry] = 1;
            next.emplace_back(rx, ry);
          }
        }
      }
      if (hit(next)) return true;
      if (next.empty()) break;
      frontier = std::move(next);
    }
    return false;
  };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!pair_witnessed(x, y)) return false;
  return true;
}

nlohmann::json cover_to_json(const PolyboundedCover& cover) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : cover.items)
    items.push_back(
        {{"coefficients", item.poly.coeffs()}, {"target", item.target}});
  return {{"items", std::move(items)}};
}

nlohmann::json witness_to_json(const PolyfiniteWitness& w) {
  return {{"degree_bound", w.degree_bound}, {"trap", w.trap.members()}};
}

}  // namespace semiclose

#include "semiclose/semigroup.hpp"

#include <algorithm>

namespace semiclose {

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> flat_table,
                                 std::vector<std::string> names)
    : order_(order), table_(std::move(flat_table)), names_(std::move(names)) {
  if (order_ <= 0) throw InvalidArgument("semigroup order must be positive");
  if (static_cast<int>(table_.size()) != order_ * order_)
    throw InvalidArgument("table size does not match order");
  if (!names_.empty() && static_cast<int>(names_.size()) != order_)
    throw InvalidArgument("names size does not match order");
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) {
      int v = table_[i * order_ + j];
      if (v < 0 || v >= order_) throw OutOfRangeEntry(i, j, v);
    }
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) {
      int ij = at(i, j);
      for (int k = 0; k < order_; ++k)
        if (at(ij, k) != at(i, at(j, k))) throw NonAssociative(i, j, k);
    }
}

FiniteSemigroup FiniteSemigroup::from_rows(
    const std::vector<std::vector<int>>& rows, std::vector<std::string> names) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidArgument("table rows must all have length equal to the order");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(n, std::move(flat), std::move(names));
}

std::string FiniteSemigroup::name_of(int i) const {
  if (has_names()) return names_[i];
  return std::to_string(i);
}

int FiniteSemigroup::power(int x, std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("power exponent must be >= 1");
  // Walk x, x^2, ... recording first-seen exponents; once the walk closes a
  // cycle we can reduce n modulo the period.
  std::vector<int> first_seen(order_, -1);
  int value = x;
  std::uint64_t e = 1;
  while (e < n) {
    if (first_seen[value] >= 0) {
      std::uint64_t index = static_cast<std::uint64_t>(first_seen[value]);
      std::uint64_t period = e - index;
      std::uint64_t target = index + (n - index) % period;
      // Replay from x up to the reduced exponent.
      int v = x;
      for (std::uint64_t t = 1; t < target; ++t) v = at(v, x);
      return v;
    }
    first_seen[value] = static_cast<int>(e);
    value = at(value, x);
    ++e;
  }
  return value;
}

FiniteSemigroup validate_table(int order, const std::vector<int>& flat_table,
                               std::vector<std::string> names) {
  return FiniteSemigroup(order, flat_table, std::move(names));
}

ElementSet::ElementSet(int universe, std::initializer_list<int> elems)
    : mask_(universe, false) {
  for (int e : elems) mask_.at(e) = true;
}

ElementSet::ElementSet(int universe, const std::vector<int>& elems)
    : mask_(universe, false) {
  for (int e : elems) mask_.at(e) = true;
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (int i = 0; i < universe; ++i) s.insert(i);
  return s;
}

int ElementSet::size() const {
  return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < universe(); ++i)
    if (mask_[i]) out.push_back(i);
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet s(universe());
  for (int i = 0; i < universe(); ++i)
    if (!mask_[i]) s.insert(i);
  return s;
}

ElementSet ElementSet::intersect(const ElementSet& o) const {
  ElementSet s(universe());
  for (int i = 0; i < universe(); ++i)
    if (mask_[i] && o.mask_[i]) s.insert(i);
  return s;
}

ElementSet ElementSet::unite(const ElementSet& o) const {
  ElementSet s(universe());
  for (int i = 0; i < universe(); ++i)
    if (mask_[i] || o.mask_[i]) s.insert(i);
  return s;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (int i = 0; i < universe(); ++i)
    if (mask_[i] && !o.mask_[i]) return false;
  return true;
}

Congruence::Congruence(int n, std::vector<int> class_of_raw) : class_of_(n) {
  if (static_cast<int>(class_of_raw.size()) != n)
    throw InvalidArgument("congruence size does not match order");
  // Canonicalize to first-occurrence class ids.
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int raw = class_of_raw[i];
    if (raw < 0 || raw >= n)
      throw InvalidArgument("congruence class id out of range");
    if (remap[raw] < 0) remap[raw] = next++;
    class_of_[i] = remap[raw];
  }
  num_classes_ = next;
}

Congruence Congruence::identity(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return Congruence(n, std::move(ids));
}

}  // namespace semiclose

#pragma once
// Core value types: finite semigroups as Cayley tables, element sets,
// congruences, and the error hierarchy shared by every module.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiclose {

// ------------------------------------------------------------------ errors

class SemigroupError : public std::runtime_error {
 public:
  explicit SemigroupError(const std::string& what) : std::runtime_error(what) {}
};

// A table entry outside [0, order).
class OutOfRangeEntry : public SemigroupError {
 public:
  OutOfRangeEntry(int row, int col, int value)
      : SemigroupError("table entry out of range at (" + std::to_string(row) +
                       "," + std::to_string(col) + "): " + std::to_string(value)),
        row(row), col(col), value(value) {}
  int row, col, value;
};

// Associativity fails at the witness triple (i j) k != i (j k).
class NonAssociative : public SemigroupError {
 public:
  NonAssociative(int i, int j, int k)
      : SemigroupError("not associative at triple (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

class NotAnIdeal : public SemigroupError {
 public:
  explicit NotAnIdeal(const std::string& what) : SemigroupError(what) {}
};

class IncompatiblePartition : public SemigroupError {
 public:
  explicit IncompatiblePartition(const std::string& what) : SemigroupError(what) {}
};

class NotIdempotent : public SemigroupError {
 public:
  explicit NotIdempotent(int element)
      : SemigroupError("element " + std::to_string(element) + " is not idempotent"),
        element(element) {}
  int element;
};

class InvalidCover : public SemigroupError {
 public:
  explicit InvalidCover(const std::string& what) : SemigroupError(what) {}
};

class DslSyntaxError : public SemigroupError {
 public:
  DslSyntaxError(std::size_t position, const std::string& what)
      : SemigroupError("syntax error at position " + std::to_string(position) +
                       ": " + what),
        position(position) {}
  std::size_t position;
};

class InvalidArgument : public SemigroupError {
 public:
  explicit InvalidArgument(const std::string& what) : SemigroupError(what) {}
};

class UnknownPredicate : public SemigroupError {
 public:
  explicit UnknownPredicate(const std::string& name)
      : SemigroupError("unknown predicate: " + name), name(name) {}
  std::string name;
};

class SpecTooLarge : public SemigroupError {
 public:
  explicit SpecTooLarge(const std::string& what) : SemigroupError(what) {}
};

// --------------------------------------------------------- FiniteSemigroup

// Immutable Cayley table over elements {0..order-1}. Construction validates
// entry ranges and full associativity; every instance is a real semigroup.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int order, std::vector<int> flat_table,
                  std::vector<std::string> names = {});

  static FiniteSemigroup from_rows(const std::vector<std::vector<int>>& rows,
                                   std::vector<std::string> names = {});

  int order() const { return order_; }
  int at(int i, int j) const { return table_[i * order_ + j]; }
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  bool has_names() const { return !names_.empty(); }
  std::string name_of(int i) const;

  // x^n for n >= 1, with index/period reduction so huge n is cheap.
  int power(int x, std::uint64_t n) const;

  bool operator==(const FiniteSemigroup& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> names_;
};

// Validates ranges then associativity; throws OutOfRangeEntry / NonAssociative.
FiniteSemigroup validate_table(int order, const std::vector<int>& flat_table,
                               std::vector<std::string> names = {});

// -------------------------------------------------------------- ElementSet

// Subset of {0..universe-1}; value type, no parent pointer (operations take
// the semigroup explicitly).
class ElementSet {
 public:
  explicit ElementSet(int universe) : mask_(universe, false) {}
  ElementSet(int universe, std::initializer_list<int> elems);
  ElementSet(int universe, const std::vector<int>& elems);

  static ElementSet full(int universe);
  static ElementSet empty(int universe) { return ElementSet(universe); }

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(int x) const { return mask_[x]; }
  void insert(int x) { mask_[x] = true; }
  void erase(int x) { mask_[x] = false; }
  int size() const;
  bool is_empty() const { return size() == 0; }
  std::vector<int> members() const;

  ElementSet complement() const;
  ElementSet intersect(const ElementSet& o) const;
  ElementSet unite(const ElementSet& o) const;
  bool subset_of(const ElementSet& o) const;

  bool operator==(const ElementSet& o) const { return mask_ == o.mask_; }

 private:
  std::vector<bool> mask_;
};

// -------------------------------------------------------------- Congruence

// Partition of {0..n-1} into classes with canonical ids: classes are numbered
// by first occurrence (class_of[0] == 0, each new id is the smallest unused).
// Compatibility with the multiplication is checked by quotient(), not here.
class Congruence {
 public:
  Congruence(int n, std::vector<int> class_of_raw);

  static Congruence identity(int n);

  int parent_order() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return num_classes_; }
  int class_of(int x) const { return class_of_[x]; }
  const std::vector<int>& classes() const { return class_of_; }

  bool operator==(const Congruence& o) const { return class_of_ == o.class_of_; }

 private:
  std::vector<int> class_of_;
  int num_classes_;
};

}  // namespace semiclose

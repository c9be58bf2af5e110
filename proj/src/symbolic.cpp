#include "semiclose/symbolic.hpp"

#include <cctype>
#include <utility>

#include "semiclose/io.hpp"
#include "semiclose/kernel.hpp"

namespace semiclose {

// ------------------------------------------------------------ constructors

FiniteSemigroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("C(n) needs n >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = (i + j) % n;
  return FiniteSemigroup(n, std::move(flat));
}

FiniteSemigroup monogenic_semigroup(int index, int period) {
  if (index < 1 || period < 1) throw InvalidArgument("M(i,p) needs i,p >= 1");
  // Elements are x^1 .. x^(index+period-1), stored as exponents-1.
  const int n = index + period - 1;
  auto reduce = [&](int exponent) {
    if (exponent <= n) return exponent - 1;
    return index - 1 + (exponent - index) % period;
  };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = reduce(i + j + 2);
  return FiniteSemigroup(n, std::move(flat));
}

FiniteSemigroup chain_semilattice(int n) {
  if (n < 1) throw InvalidArgument("chain needs n >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = std::min(i, j);
  return FiniteSemigroup(n, std::move(flat));
}

FiniteSemigroup null_semigroup(int n) {
  if (n < 1) throw InvalidArgument("null semigroup needs n >= 1");
  return FiniteSemigroup(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
}

namespace {

SymPtr make(SymbolicSemigroup node) {
  return std::make_shared<const SymbolicSemigroup>(std::move(node));
}

SymbolicSemigroup blank(NodeKind kind) {
  SymbolicSemigroup node{};
  node.kind = kind;
  return node;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

SymPtr sym_table(FiniteSemigroup s, std::string label) {
  SymbolicSemigroup node = blank(NodeKind::Table);
  node.table = std::move(s);
  node.label = std::move(label);
  return make(std::move(node));
}

SymPtr sym_cyclic(int n) {
  if (n < 1) throw InvalidArgument("C(n) needs n >= 1");
  SymbolicSemigroup node = blank(NodeKind::Cyclic);
  node.arg0 = n;
  return make(std::move(node));
}

SymPtr sym_monogenic(int index, int period) {
  if (index < 1 || period < 1) throw InvalidArgument("M(i,p) needs i,p >= 1");
  SymbolicSemigroup node = blank(NodeKind::Monogenic);
  node.arg0 = index;
  node.arg1 = period;
  return make(std::move(node));
}

SymPtr sym_omega_chain() { return make(blank(NodeKind::OmegaChain)); }
SymPtr sym_null_omega() { return make(blank(NodeKind::NullOmega)); }

SymPtr sym_prufer(int p) {
  if (!is_prime(p)) throw InvalidArgument("Prufer(p) needs a prime p");
  SymbolicSemigroup node = blank(NodeKind::Prufer);
  node.arg0 = p;
  return make(std::move(node));
}

SymPtr sym_free_comm(int k) {
  if (k < 1) throw InvalidArgument("FreeComm(k) needs k >= 1");
  SymbolicSemigroup node = blank(NodeKind::FreeComm);
  node.arg0 = k;
  return make(std::move(node));
}

SymPtr sym_sum_omega(SymPtr group) {
  if (!group) throw InvalidArgument("Sum(omega, _) needs an argument");
  if (!is_finite_tree(group))
    throw InvalidArgument("Sum(omega, G) needs a finite group argument");
  FiniteSemigroup g = expand(group);
  if (!is_group(g) || !is_commutative(g))
    throw InvalidArgument("Sum(omega, G) needs a finite commutative group");
  SymbolicSemigroup node = blank(NodeKind::SumOmega);
  node.table = std::move(g);
  node.left = std::move(group);
  return make(std::move(node));
}

SymPtr sym_zero(SymPtr child) {
  if (!child) throw InvalidArgument("Zero(_) needs an argument");
  SymbolicSemigroup node = blank(NodeKind::Zero);
  node.left = std::move(child);
  return make(std::move(node));
}

SymPtr sym_one(SymPtr child) {
  if (!child) throw InvalidArgument("One(_) needs an argument");
  SymbolicSemigroup node = blank(NodeKind::One);
  node.left = std::move(child);
  return make(std::move(node));
}

SymPtr sym_product(SymPtr left, SymPtr right) {
  if (!left || !right) throw InvalidArgument("product needs two arguments");
  SymbolicSemigroup node = blank(NodeKind::Product);
  node.left = std::move(left);
  node.right = std::move(right);
  return make(std::move(node));
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const TableLoader& loader)
      : text_(text), loader_(loader) {}

  SymPtr parse() {
    SymPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw DslSyntaxError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  SymPtr expr() {
    SymPtr lhs = primary();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        lhs = sym_product(lhs, primary());
      } else {
        return lhs;
      }
    }
  }

  SymPtr primary() {
    skip_ws();
    std::size_t start = pos_;
    std::string word = identifier();
    if (word == "C") return sym_cyclic(single_int());
    if (word == "M") {
      expect('(');
      int i = integer();
      expect(',');
      int p = integer();
      expect(')');
      return sym_monogenic(i, p);
    }
    if (word == "OmegaChain") return sym_omega_chain();
    if (word == "NullOmega") return sym_null_omega();
    if (word == "Prufer") return sym_prufer(single_int());
    if (word == "FreeComm") return sym_free_comm(single_int());
    if (word == "Sum") {
      expect('(');
      skip_ws();
      std::string omega = identifier();
      if (omega != "omega")
        throw DslSyntaxError(pos_, "expected 'omega' as the first Sum argument");
      expect(',');
      SymPtr g = expr();
      expect(')');
      return sym_sum_omega(g);
    }
    if (word == "Zero") return sym_zero(parenthesized());
    if (word == "One") return sym_one(parenthesized());
    if (word == "Table") {
      expect('(');
      std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos)
        throw DslSyntaxError(pos_, "unterminated Table(");
      std::string path = text_.substr(pos_, close - pos_);
      // trim
      std::size_t a = path.find_first_not_of(" \t");
      std::size_t b = path.find_last_not_of(" \t");
      if (a == std::string::npos)
        throw DslSyntaxError(pos_, "Table() needs a path");
      path = path.substr(a, b - a + 1);
      pos_ = close + 1;
      return sym_table(loader_(path), path);
    }
    throw DslSyntaxError(start, word.empty() ? "expected a constructor"
                                             : "unknown constructor '" + word + "'");
  }

  SymPtr parenthesized() {
    expect('(');
    SymPtr e = expr();
    expect(')');
    return e;
  }

  int single_int() {
    expect('(');
    int v = integer();
    expect(')');
    return v;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw DslSyntaxError(pos_, "expected an integer");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw DslSyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  const TableLoader& loader_;
  std::size_t pos_ = 0;
};

}  // namespace

SymPtr parse_dsl(const std::string& text, const TableLoader& loader) {
  return Parser(text, loader).parse();
}

SymPtr parse_dsl(const std::string& text) {
  return parse_dsl(text, [](const std::string& path) { return load_semigroup(path); });
}

// --------------------------------------------------------------- structure

std::string describe(const SymPtr& node) {
  switch (node->kind) {
    case NodeKind::Table:
      return "Table(" + (node->label.empty()
                             ? "order " + std::to_string(node->table->order())
                             : node->label) + ")";
    case NodeKind::Cyclic: return "C(" + std::to_string(node->arg0) + ")";
    case NodeKind::Monogenic:
      return "M(" + std::to_string(node->arg0) + "," + std::to_string(node->arg1) + ")";
    case NodeKind::OmegaChain: return "OmegaChain";
    case NodeKind::NullOmega: return "NullOmega";
    case NodeKind::Prufer: return "Prufer(" + std::to_string(node->arg0) + ")";
    case NodeKind::FreeComm: return "FreeComm(" + std::to_string(node->arg0) + ")";
    case NodeKind::SumOmega: return "Sum(omega, " + describe(node->left) + ")";
    case NodeKind::Zero: return "Zero(" + describe(node->left) + ")";
    case NodeKind::One: return "One(" + describe(node->left) + ")";
    case NodeKind::Product:
      return describe(node->left) + " * " + describe(node->right);
  }
  return "?";
}

bool is_finite_tree(const SymPtr& node) {
  switch (node->kind) {
    case NodeKind::Table:
    case NodeKind::Cyclic:
    case NodeKind::Monogenic:
      return true;
    case NodeKind::OmegaChain:
    case NodeKind::NullOmega:
    case NodeKind::Prufer:
    case NodeKind::FreeComm:
      return false;
    case NodeKind::SumOmega:
      // The direct sum of copies of the trivial group is trivial.
      return node->table->order() == 1;
    case NodeKind::Zero:
    case NodeKind::One:
      return is_finite_tree(node->left);
    case NodeKind::Product:
      return is_finite_tree(node->left) && is_finite_tree(node->right);
  }
  return false;
}

bool has_idempotent_tree(const SymPtr& node) {
  switch (node->kind) {
    case NodeKind::FreeComm:
      return false;  // nx = x never holds for n >= 2
    case NodeKind::Product:
      return has_idempotent_tree(node->left) && has_idempotent_tree(node->right);
    default:
      return true;  // finite tables always have one; the other infinite
                    // constructors carry one by construction
  }
}

bool is_group_tree(const SymPtr& node) {
  switch (node->kind) {
    case NodeKind::Table: return is_group(*node->table);
    case NodeKind::Cyclic: return true;
    case NodeKind::Monogenic: return node->arg0 == 1;
    case NodeKind::Prufer:
    case NodeKind::SumOmega:
      return true;
    case NodeKind::Product:
      return is_group_tree(node->left) && is_group_tree(node->right);
    case NodeKind::Zero:
      // A new absorbing element is never invertible next to other elements.
      return false;
    case NodeKind::One:
      return false;  // the adjoined identity leaves the old elements uninvertible
    default:
      return false;
  }
}

FiniteSemigroup expand(const SymPtr& node, int max_order) {
  if (!is_finite_tree(node))
    throw InvalidArgument("cannot expand an infinite expression: " + describe(node));
  FiniteSemigroup result = [&]() -> FiniteSemigroup {
    switch (node->kind) {
      case NodeKind::Table: return *node->table;
      case NodeKind::Cyclic: return cyclic_group(node->arg0);
      case NodeKind::Monogenic: return monogenic_semigroup(node->arg0, node->arg1);
      case NodeKind::SumOmega: return *node->table;  // trivial group
      case NodeKind::Zero: return zero_extension(expand(node->left, max_order));
      case NodeKind::One: return one_extension(expand(node->left, max_order));
      case NodeKind::Product: {
        FiniteSemigroup a = expand(node->left, max_order);
        FiniteSemigroup b = expand(node->right, max_order);
        if (static_cast<long long>(a.order()) * b.order() > max_order)
          throw InvalidArgument("expansion exceeds the order cap");
        return direct_product(a, b);
      }
      default:
        throw InvalidArgument("cannot expand: " + describe(node));
    }
  }();
  if (result.order() > max_order)
    throw InvalidArgument("expansion exceeds the order cap");
  return result;
}

std::vector<FiniteSemigroup> truncations(const SymPtr& node, int max_order) {
  std::vector<FiniteSemigroup> out;
  auto keep = [&](FiniteSemigroup s) {
    if (s.order() <= max_order) out.push_back(std::move(s));
  };
  switch (node->kind) {
    case NodeKind::OmegaChain:
      for (int n = 1; n <= max_order; ++n) keep(chain_semilattice(n));
      break;
    case NodeKind::NullOmega:
      for (int n = 1; n <= max_order; ++n) keep(null_semigroup(n));
      break;
    case NodeKind::Prufer: {
      long long q = node->arg0;
      while (q <= max_order) {
        keep(cyclic_group(static_cast<int>(q)));
        q *= node->arg0;
      }
      break;
    }
    case NodeKind::SumOmega: {
      FiniteSemigroup g = *node->table;
      FiniteSemigroup acc = g;
      for (int factors = 1; factors <= 4 && acc.order() <= max_order; ++factors) {
        keep(acc);
        if (static_cast<long long>(acc.order()) * g.order() > max_order) break;
        acc = direct_product(acc, g);
      }
      break;
    }
    case NodeKind::FreeComm:
      break;  // no idempotent power: no finite subsemigroup exists
    case NodeKind::Zero:
      for (auto& t : truncations(node->left, max_order - 1))
        keep(zero_extension(t));
      break;
    case NodeKind::One:
      for (auto& t : truncations(node->left, max_order - 1))
        keep(one_extension(t));
      break;
    case NodeKind::Product: {
      auto ls = truncations(node->left, max_order);
      auto rs = truncations(node->right, max_order);
      for (const auto& l : ls)
        for (const auto& r : rs)
          if (static_cast<long long>(l.order()) * r.order() <= max_order)
            keep(direct_product(l, r));
      break;
    }
    default:
      try {
        keep(expand(node));
      } catch (const InvalidArgument&) {
        // an oversized finite expansion simply yields no sample
      }
      break;
  }
  return out;
}

}  // namespace semiclose

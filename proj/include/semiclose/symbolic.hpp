#pragma once
// Symbolic semigroup expressions: finite tables plus a fixed family of
// infinite constructors, a small text DSL, finite expansion where possible,
// and finite truncations (subsemigroup samples) of the infinite families.
//
// Grammar (whitespace-insensitive, '*' left-associative):
//   expr    := primary | expr '*' primary
//   primary := 'Table' '(' path ')' | 'C' '(' int ')' | 'M' '(' int ',' int ')'
//            | 'OmegaChain' | 'NullOmega' | 'Prufer' '(' int ')'
//            | 'FreeComm' '(' int ')' | 'Sum' '(' 'omega' ',' expr ')'
//            | 'Zero' '(' expr ')' | 'One' '(' expr ')'

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiclose/semigroup.hpp"

namespace semiclose {

enum class NodeKind {
  Table,       // explicit finite Cayley table
  Cyclic,      // C(n): cyclic group of order n
  Monogenic,   // M(i,p): one generator with index i and period p
  OmegaChain,  // naturals under min: an infinite chain semilattice
  NullOmega,   // countably many elements, every product the zero
  Prufer,      // quasicyclic p-group
  FreeComm,    // free commutative semigroup on k generators
  SumOmega,    // direct sum of countably many copies of a finite abelian group
  Zero,        // child with an absorbing zero adjoined
  One,         // child with an identity adjoined
  Product,     // direct product of the children
};

struct SymbolicSemigroup;
using SymPtr = std::shared_ptr<const SymbolicSemigroup>;

struct SymbolicSemigroup {
  NodeKind kind;
  int arg0 = 0;  // n for Cyclic, i for Monogenic, p for Prufer, k for FreeComm
  int arg1 = 0;  // p for Monogenic
  std::optional<FiniteSemigroup> table;  // Table payload; SumOmega's group
  SymPtr left, right;                    // children for Zero/One/Product/SumOmega (left)
  std::string label;                     // source text for Table paths
};

SymPtr sym_table(FiniteSemigroup s, std::string label = "");
SymPtr sym_cyclic(int n);
SymPtr sym_monogenic(int index, int period);
SymPtr sym_omega_chain();
SymPtr sym_null_omega();
SymPtr sym_prufer(int p);
SymPtr sym_free_comm(int k);
// The child must denote a finite commutative group; throws InvalidArgument.
SymPtr sym_sum_omega(SymPtr group);
SymPtr sym_zero(SymPtr child);
SymPtr sym_one(SymPtr child);
SymPtr sym_product(SymPtr left, SymPtr right);

using TableLoader = std::function<FiniteSemigroup(const std::string&)>;

// Parses the DSL; Table(path) contents are loaded through the loader
// (defaults to reading Cayley files from disk). Throws DslSyntaxError with a
// position, or InvalidArgument for well-formed but invalid constructors.
SymPtr parse_dsl(const std::string& text);
SymPtr parse_dsl(const std::string& text, const TableLoader& loader);

// Canonical textual form of a node.
std::string describe(const SymPtr& node);

// True when every leaf denotes a finite semigroup (SumOmega over the trivial
// group counts as finite).
bool is_finite_tree(const SymPtr& node);

// Structural facts decidable for every constructor.
bool has_idempotent_tree(const SymPtr& node);
bool is_group_tree(const SymPtr& node);

// Cayley table of a finite tree; throws InvalidArgument when the tree is
// infinite or the expansion would exceed the given order cap.
FiniteSemigroup expand(const SymPtr& node, int max_order = 4096);

// Finite subsemigroup samples of a node, used to cross-check symbolic
// verdicts: chains for OmegaChain, finite null semigroups for NullOmega,
// Z/p^k for Prufer, finite powers G^k for SumOmega; Zero/One/Product wrap
// and combine the child samples. Finite trees yield just their expansion.
// Every returned table embeds in the denoted semigroup as a subsemigroup.
std::vector<FiniteSemigroup> truncations(const SymPtr& node, int max_order = 6);

// Cyclic group / monogenic semigroup tables (shared with tests).
FiniteSemigroup cyclic_group(int n);
FiniteSemigroup monogenic_semigroup(int index, int period);
FiniteSemigroup chain_semilattice(int n);
FiniteSemigroup null_semigroup(int n);

}  // namespace semiclose

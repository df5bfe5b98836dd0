#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcoh/linalg.hpp"

namespace lcoh {

/// Structure-constant table: table[i][j] = coordinates of [b_i, b_j].
using BracketTable = std::vector<std::vector<SparseVector>>;

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Antisymmetry and the Jacobi identity are checked on construction.
class LieAlgebra {
 public:
  /// One ordered pair (a, b) whose bracket has a nonzero b_k component.
  struct Term {
    std::uint32_t a;
    std::uint32_t b;
    Rational coeff;
  };

  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> labels, BracketTable table);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& table() const { return table_; }

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// All ordered pairs (a, b) with c(a, b)_k != 0.
  const std::vector<Term>& terms_producing(std::size_t k) const { return producing_.at(k); }

  std::optional<std::size_t> index_of(const std::string& label) const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  BracketTable table_;
  std::vector<std::vector<Term>> producing_;
};

enum class ModuleKind { adjoint, coadjoint, trivial, custom };

std::string to_string(ModuleKind kind);
ModuleKind parse_module_kind(const std::string& text);

/// Left module: b_i . v = action(i) * v. The module axiom
/// A_i A_j - A_j A_i = sum_k c(i,j)_k A_k is checked on construction.
class GModule {
 public:
  GModule() = default;
  GModule(const LieAlgebra& algebra, std::size_t dim, std::vector<SparseRationalMatrix> action,
          ModuleKind kind = ModuleKind::custom);

  std::size_t dim() const { return dim_; }
  std::size_t algebra_dim() const { return action_.size(); }
  ModuleKind kind() const { return kind_; }
  const SparseRationalMatrix& action(std::size_t i) const { return action_.at(i); }

  /// b_i . v_t as a sparse vector.
  const SparseVector& act_on_basis(std::size_t i, std::size_t t) const { return action_.at(i).column(t); }
  SparseVector act(std::size_t i, const SparseVector& v) const { return action_.at(i).multiply(v); }

  /// For each (i, target s): list of (t, coeff) with (b_i . v_t)_s = coeff.
  const SparseVector& preimages(std::size_t i, std::size_t s) const { return transposed_.at(i).column(s); }

  bool is_zero_action() const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseRationalMatrix> action_;
  std::vector<SparseRationalMatrix> transposed_;
  ModuleKind kind_ = ModuleKind::custom;
};

GModule make_module(const LieAlgebra& algebra, ModuleKind kind);

/// Span of a set of parent basis elements that is closed under the bracket.
class SubalgebraEmbedding {
 public:
  SubalgebraEmbedding() = default;
  SubalgebraEmbedding(LieAlgebra parent, std::vector<std::uint32_t> members, std::string name = {});

  const LieAlgebra& parent() const { return parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  const LieAlgebra& algebra() const { return sub_; }
  std::optional<std::uint32_t> local_index(std::uint32_t parent_index) const;
  bool is_ideal() const;

 private:
  LieAlgebra parent_;
  std::vector<std::uint32_t> members_;
  LieAlgebra sub_;
};

/// Module of the subalgebra obtained by restricting the parent action.
GModule restrict_module(const GModule& module, const SubalgebraEmbedding& embedding);
/// Invariant subspace spanned by the given module basis vectors (checked).
GModule submodule(const LieAlgebra& algebra, const GModule& module, const std::vector<std::uint32_t>& basis);
GModule tensor_product(const LieAlgebra& algebra, const GModule& a, const GModule& b);
/// Basis of the k-th exterior power: increasing k-subsets in lexicographic order.
GModule exterior_power(const LieAlgebra& algebra, const GModule& module, std::size_t k);
GModule dual_module(const LieAlgebra& algebra, const GModule& module);
/// Basis of {v : b_i v = 0 for all i}.
std::vector<SparseVector> module_invariants(const GModule& module);

// Builders -----------------------------------------------------------------

/// so(n): basis alpha_ij = x_i d_j - x_j d_i, i < j, in lexicographic order.
LieAlgebra build_so_n(int n);
/// Abelian algebra of translations d_1..d_n.
LieAlgebra build_j_n(int n);
LieAlgebra build_sl2();

/// h_n = so(n) + J_n with basis (alpha_12, ..., alpha_(n-1)n, d_1, ..., d_n).
struct AffineOrthogonal {
  int n = 0;
  LieAlgebra algebra;
  SubalgebraEmbedding rotations;
  SubalgebraEmbedding translations;
};

AffineOrthogonal build_h_n(int n);

/// Index of alpha_ij (1-based i < j) in the so(n) / h_n basis.
std::uint32_t alpha_index(int n, int i, int j);
/// Index of d_i (1-based) in the h_n basis.
std::uint32_t partial_index(int n, int i);
/// Quotient h_n / J_n expressed on the rotation basis.
LieAlgebra quotient_by_translations(const AffineOrthogonal& h);

/// Sorted combinations of size k from 0..n-1 in lexicographic order.
std::vector<std::vector<std::uint32_t>> combinations(std::size_t n, std::size_t k);

}  // namespace lcoh

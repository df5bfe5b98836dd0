#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcoh/complexes.hpp"
#include "lcoh/lie_algebra.hpp"

namespace lcoh {

/// f(b_tuple) has coefficient `value` on v_target.
struct CochainIndex {
  std::vector<std::uint32_t> tuple;
  std::uint32_t target = 0;
  auto operator<=>(const CochainIndex&) const = default;
};

/// Basis element v_x (x) b_tuple of V (x) Lambda^k g, tuple strictly increasing.
struct ChainIndex {
  std::uint32_t x = 0;
  std::vector<std::uint32_t> tuple;
  auto operator<=>(const ChainIndex&) const = default;
};

/// Element of Hom(g^{(x)k}, V) stored sparsely by basis tuple.
class TensorCochain {
 public:
  TensorCochain() = default;
  TensorCochain(std::size_t arity, std::size_t algebra_dim, std::size_t module_dim);

  std::size_t arity() const { return arity_; }
  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::map<CochainIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::vector<std::uint32_t> tuple, std::uint32_t target, const Rational& value);
  Rational coefficient(const std::vector<std::uint32_t>& tuple, std::uint32_t target) const;
  /// f(b_tuple) as a vector of V.
  SparseVector evaluate(std::span<const std::uint32_t> tuple) const;

  TensorCochain& operator+=(const TensorCochain& other);
  TensorCochain& operator*=(const Rational& scale);
  friend bool operator==(const TensorCochain& a, const TensorCochain& b) {
    return a.arity_ == b.arity_ && a.algebra_dim_ == b.algebra_dim_ && a.module_dim_ == b.module_dim_ &&
           a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_ = 0;
  std::size_t algebra_dim_ = 0;
  std::size_t module_dim_ = 0;
  std::map<CochainIndex, Rational> terms_;
};

/// Element of Hom(Lambda^k g, V); keys are strictly increasing tuples.
class WedgeCochain {
 public:
  WedgeCochain() = default;
  WedgeCochain(std::size_t arity, std::size_t algebra_dim, std::size_t module_dim);

  std::size_t arity() const { return arity_; }
  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::map<CochainIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds value * e*_tuple (x) v_target; an unsorted tuple is sorted with sign.
  void add(std::vector<std::uint32_t> tuple, std::uint32_t target, const Rational& value);
  Rational coefficient(std::vector<std::uint32_t> tuple, std::uint32_t target) const;
  /// Evaluation on an arbitrary tuple: sign of the sorting permutation, zero on repeats.
  SparseVector evaluate(std::span<const std::uint32_t> tuple) const;

  WedgeCochain& operator+=(const WedgeCochain& other);
  WedgeCochain& operator*=(const Rational& scale);
  friend bool operator==(const WedgeCochain& a, const WedgeCochain& b) {
    return a.arity_ == b.arity_ && a.algebra_dim_ == b.algebra_dim_ && a.module_dim_ == b.module_dim_ &&
           a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_ = 0;
  std::size_t algebra_dim_ = 0;
  std::size_t module_dim_ = 0;
  std::map<CochainIndex, Rational> terms_;
};

/// Element of V (x) Lambda^k g. The same type also stores linear functionals
/// on V (x) Lambda^k g by their values on basis elements.
class HomologyChain {
 public:
  HomologyChain() = default;
  HomologyChain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim);

  std::size_t degree() const { return degree_; }
  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::map<ChainIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::uint32_t x, std::vector<std::uint32_t> tuple, const Rational& value);
  Rational coefficient(std::uint32_t x, std::vector<std::uint32_t> tuple) const;

  HomologyChain& operator+=(const HomologyChain& other);
  HomologyChain& operator*=(const Rational& scale);
  friend bool operator==(const HomologyChain& a, const HomologyChain& b) {
    return a.degree_ == b.degree_ && a.algebra_dim_ == b.algebra_dim_ && a.module_dim_ == b.module_dim_ &&
           a.terms_ == b.terms_;
  }

 private:
  std::size_t degree_ = 0;
  std::size_t algebra_dim_ = 0;
  std::size_t module_dim_ = 0;
  std::map<ChainIndex, Rational> terms_;
};

using ChainFunctional = HomologyChain;

// Differentials ---------------------------------------------------------------

TensorCochain leibniz_coboundary(const TensorCochain& f, const LieAlgebra& algebra, const GModule& module);
WedgeCochain ce_coboundary(const WedgeCochain& f, const LieAlgebra& algebra, const GModule& module);
/// d : V (x) Lambda^{k+1} g -> V (x) Lambda^k g with
/// d(v (x) g_1..g_{k+1}) = sum_i (-1)^{i+1} (-g_i . v) (x) ..^g_i..
///                       + sum_{i<j} (-1)^{j+1} v (x) ..[g_i, g_j]..^g_j..
HomologyChain homology_differential(const HomologyChain& c, const LieAlgebra& algebra, const GModule& module);
/// Transpose of d: (d* phi)(c) = phi(d c).
ChainFunctional d_star(const ChainFunctional& phi, const LieAlgebra& algebra, const GModule& module);
/// Phi(a)(x (x) g_1..g_k) = (-1)^k a(g_1..g_k)(x) for a valued in the coadjoint module.
ChainFunctional phi_iso(const WedgeCochain& a);

// Conversions and products ---------------------------------------------------

/// Coordinates in the basis codes of the matching complex.
CodeVector to_codes(const TensorCochain& f, const LeibnizComplex& complex);
CodeVector to_codes(const WedgeCochain& f, const CEComplex& complex);


TensorCochain to_tensor(const WedgeCochain& f);
/// Succeeds when f is skew-symmetric.
std::optional<WedgeCochain> to_wedge(const TensorCochain& f);
/// Antisymmetrization pi*: the tensor cochain f(x_1..x_k) = a(x_1 ^ .. ^ x_k).
TensorCochain skew_symmetrize(const WedgeCochain& a);
/// (a (x) b)(x_1..x_{p+q}) = a(x_1..x_p) b(x_{p+1}..x_{p+q}) for b valued in the trivial module.
TensorCochain tensor_product(const TensorCochain& a, const TensorCochain& b);
/// Shuffle product: (a ^ b)(g_1..g_{p+q}) = sum over (p,q)-shuffles sign(s) a(..) b(..), b trivial-valued.
WedgeCochain wedge_extend(const WedgeCochain& a, const WedgeCochain& b);

/// Extends a cochain on a subalgebra to the parent: skew in all slots, zero
/// when any input lies outside the subalgebra.
TensorCochain skew_extend(const WedgeCochain& f, const SubalgebraEmbedding& domain);
/// Extends a functional on V (x) Lambda^k(sub) to Hom(V (x) parent^{(x)k}, R),
/// with V = parent (first slot free, remaining slots skew and in the subalgebra).
TensorCochain skew_extend(const ChainFunctional& phi, const SubalgebraEmbedding& domain);

// g-action and invariants ---------------------------------------------------

/// Cochains defined on an ideal (or the whole algebra) with values in a module
/// of the parent algebra; g ranges over the parent.
struct ActionContext {
  const LieAlgebra* parent = nullptr;
  const GModule* module = nullptr;                ///< module of the parent algebra
  const SubalgebraEmbedding* domain = nullptr;    ///< nullptr: cochains on the whole parent

  std::size_t domain_dim() const { return domain ? domain->members().size() : parent->dim(); }
  std::uint32_t to_parent(std::uint32_t local) const { return domain ? domain->members()[local] : local; }
};

/// (g f)(x_1..x_k) = g . f(x_1..x_k) + sum_i f(.. [x_i, g] ..).
TensorCochain g_action(std::uint32_t g, const TensorCochain& f, const ActionContext& ctx);
WedgeCochain g_action(std::uint32_t g, const WedgeCochain& f, const ActionContext& ctx);
/// (g phi)(v (x) x_1..x_k) = phi(-g.v (x) ..) + sum_i phi(v (x) .. [x_i, g] ..).
ChainFunctional g_action(std::uint32_t g, const ChainFunctional& phi, const ActionContext& ctx);

/// Joint kernel of the actions of the given algebra elements on a module.
std::vector<SparseVector> invariant_subspace(const GModule& module, std::span<const std::uint32_t> generators);

// Serialization -------------------------------------------------------------

/// {"arity": k, "coefficients": [{"tuple": [..], "target": t, "value": "p/q"}]}
std::string cochain_to_json(const TensorCochain& f);
std::string cochain_to_json(const WedgeCochain& f);
TensorCochain tensor_cochain_from_json(const std::string& text, std::size_t algebra_dim, std::size_t module_dim);
WedgeCochain wedge_cochain_from_json(const std::string& text, std::size_t algebra_dim, std::size_t module_dim);

}  // namespace lcoh

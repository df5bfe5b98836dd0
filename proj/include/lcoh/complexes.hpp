#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lcoh/combinatorics.hpp"
#include "lcoh/grading.hpp"
#include "lcoh/lie_algebra.hpp"

namespace lcoh {

/// Sparse vector over basis codes of one degree, sorted by code.
using CodeVector = std::vector<std::pair<std::uint64_t, Rational>>;
void normalize(CodeVector& v);

enum class ComplexKind { leibniz, ce, homology, rel, cr };
std::string to_string(ComplexKind kind);

/// Cochain complex with a distinguished basis in every degree. Basis elements
/// are named by integer codes in [0, code_bound(k)); in quotient complexes only
/// some codes are valid. The coboundary is produced one basis column at a time.
class CochainComplex {
 public:
  virtual ~CochainComplex() = default;

  virtual ComplexKind kind() const = 0;
  virtual std::uint64_t code_bound(int k) const = 0;
  virtual std::uint64_t dimension(int k) const = 0;
  virtual bool valid(int k, std::uint64_t code) const {
    return k >= 0 && code < code_bound(k);
  }
  /// Visits valid codes of degree k in increasing order.
  virtual void enumerate(int k, const std::function<void(std::uint64_t)>& visit) const;
  /// Grading key; the coboundary maps each key block into the same key.
  virtual void key(int k, std::uint64_t code, GradingSet::Key& out) const = 0;
  /// Coboundary of the basis element `code` of degree k, in degree k + 1 codes.
  virtual void coboundary(int k, std::uint64_t code, CodeVector& out) const = 0;
  virtual std::string describe(int k, std::uint64_t code) const = 0;

  /// Applies the coboundary to an arbitrary vector of degree k.
  CodeVector apply(int k, const CodeVector& v) const;
};

/// CL^k(g; V) = Hom(g^{(x)k}, V) with the Leibniz coboundary.
/// Code of e*_{s_1..s_k} (x) v_t: digits of s (base dim g) times dim V plus t.
class LeibnizComplex : public CochainComplex {
 public:
  LeibnizComplex(LieAlgebra algebra, GModule module);

  ComplexKind kind() const override { return ComplexKind::leibniz; }
  std::uint64_t code_bound(int k) const override;
  std::uint64_t dimension(int k) const override { return code_bound(k); }
  void enumerate(int k, const std::function<void(std::uint64_t)>& visit) const override;
  void key(int k, std::uint64_t code, GradingSet::Key& out) const override;
  void coboundary(int k, std::uint64_t code, CodeVector& out) const override;
  std::string describe(int k, std::uint64_t code) const override;

  std::uint64_t encode(std::span<const std::uint32_t> tuple, std::uint32_t target) const;
  std::uint32_t decode(std::uint64_t code, std::size_t k, std::vector<std::uint32_t>& tuple) const;

  const LieAlgebra& algebra() const { return algebra_; }
  const GModule& module() const { return module_; }
  const GradingSet& grading() const { return grading_; }

 private:
  LieAlgebra algebra_;
  GModule module_;
  GradingSet grading_;
};

/// C^k(g; V) = Hom(Lambda^k g, V) with the same coboundary formula.
/// Code: lexicographic rank of the subset times dim V plus target.
class CEComplex : public CochainComplex {
 public:
  CEComplex(LieAlgebra algebra, GModule module);

  ComplexKind kind() const override { return ComplexKind::ce; }
  std::uint64_t code_bound(int k) const override;
  std::uint64_t dimension(int k) const override { return code_bound(k); }
  void key(int k, std::uint64_t code, GradingSet::Key& out) const override;
  void coboundary(int k, std::uint64_t code, CodeVector& out) const override;
  std::string describe(int k, std::uint64_t code) const override;

  std::uint64_t encode(std::span<const std::uint32_t> subset, std::uint32_t target) const;
  std::uint32_t decode(std::uint64_t code, std::size_t k, std::vector<std::uint32_t>& subset) const;

  const LieAlgebra& algebra() const { return algebra_; }
  const GModule& module() const { return module_; }

 private:
  LieAlgebra algebra_;
  GModule module_;
  GradingSet grading_;
  SubsetIndexer subsets_;
};

/// X^k = Hom(V (x) Lambda^k g, F) with the transpose d* of the homology
/// differential. Code: subset rank times dim V plus x.
class HomologyDualComplex : public CochainComplex {
 public:
  HomologyDualComplex(LieAlgebra algebra, GModule module);

  ComplexKind kind() const override { return ComplexKind::homology; }
  std::uint64_t code_bound(int k) const override;
  std::uint64_t dimension(int k) const override { return code_bound(k); }
  void key(int k, std::uint64_t code, GradingSet::Key& out) const override;
  void coboundary(int k, std::uint64_t code, CodeVector& out) const override;
  std::string describe(int k, std::uint64_t code) const override;

  std::uint64_t encode(std::uint32_t x, std::span<const std::uint32_t> subset) const;
  std::uint32_t decode(std::uint64_t code, std::size_t k, std::vector<std::uint32_t>& subset) const;

  const LieAlgebra& algebra() const { return algebra_; }
  const GModule& module() const { return module_; }

 private:
  LieAlgebra algebra_;
  GModule module_;
  GradingSet grading_;
  SubsetIndexer subsets_;
};

/// C^n_rel = CL^{n+2} / (skew-symmetric cochains). Basis: e*_tau (x) v_t for
/// tuples tau that are not strictly increasing; the class of a strictly
/// increasing tuple S equals -sign(tau) times the sum of its other orderings.
class RelativeComplex : public CochainComplex {
 public:
  explicit RelativeComplex(std::shared_ptr<const LeibnizComplex> leibniz);

  ComplexKind kind() const override { return ComplexKind::rel; }
  std::uint64_t code_bound(int k) const override;
  std::uint64_t dimension(int k) const override;
  bool valid(int k, std::uint64_t code) const override;
  void enumerate(int k, const std::function<void(std::uint64_t)>& visit) const override;
  void key(int k, std::uint64_t code, GradingSet::Key& out) const override;
  void coboundary(int k, std::uint64_t code, CodeVector& out) const override;
  std::string describe(int k, std::uint64_t code) const override;

  /// Transversal coordinates of the class of a CL^{k+2} vector.
  CodeVector project(int k, const CodeVector& v) const;
  const LeibnizComplex& leibniz() const { return *leibniz_; }

 private:
  std::shared_ptr<const LeibnizComplex> leibniz_;
};

/// CR^m = X^{m+1} / pi_R^*(Hom(Lambda^{m+2} g, F)) with X the dual homology
/// complex of the adjoint module. Basis: e*_{(x,S)} except x not in S with
/// x < min S; those classes are rewritten through pi_R^*.
class CRComplex : public CochainComplex {
 public:
  explicit CRComplex(std::shared_ptr<const HomologyDualComplex> dual);

  ComplexKind kind() const override { return ComplexKind::cr; }
  std::uint64_t code_bound(int k) const override;
  std::uint64_t dimension(int k) const override;
  bool valid(int k, std::uint64_t code) const override;
  void enumerate(int k, const std::function<void(std::uint64_t)>& visit) const override;
  void key(int k, std::uint64_t code, GradingSet::Key& out) const override;
  void coboundary(int k, std::uint64_t code, CodeVector& out) const override;
  std::string describe(int k, std::uint64_t code) const override;

  CodeVector project(int k, const CodeVector& v) const;
  const HomologyDualComplex& dual() const { return *dual_; }

 private:
  std::shared_ptr<const HomologyDualComplex> dual_;
};

}  // namespace lcoh

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcoh/lie_algebra.hpp"

namespace lcoh {

/// Weight function on algebra and module basis vectors compatible with the
/// bracket and the action: w(b_i) + w(b_j) = w(b_k) whenever c(i,j)_k != 0,
/// w(b_i) + w(v_s) = w(v_t) whenever (A_i)_{t,s} != 0. modulus 0 means Z,
/// otherwise weights live in Z/modulus.
struct Grading {
  std::vector<std::int64_t> algebra;
  std::vector<std::int64_t> module;
  std::int64_t modulus = 0;
};

/// All gradings found for (algebra, module): a basis of the rational solution
/// space and a basis of the GF(2) solution space. Every coboundary of the
/// Leibniz, Chevalley-Eilenberg and homology complexes preserves the combined
/// key, so coboundary matrices split into independent blocks.
class GradingSet {
 public:
  using Key = std::vector<std::int64_t>;

  GradingSet() = default;
  explicit GradingSet(std::vector<Grading> components) : components_(std::move(components)) {}

  static GradingSet detect(const LieAlgebra& algebra, const GModule& module);

  const std::vector<Grading>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  /// Key of the cochain e*_{inputs} -> v_target: w(target) - sum w(inputs).
  void cochain_key(std::span<const std::uint32_t> inputs, std::uint32_t target, Key& out) const;
  /// Key of the chain v_x (x) b_{inputs}: w(x) + sum w(inputs).
  void chain_key(std::uint32_t x, std::span<const std::uint32_t> inputs, Key& out) const;

 private:
  std::vector<Grading> components_;
};

}  // namespace lcoh

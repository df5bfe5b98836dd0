#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lcoh {

/// Sorts t in place and returns the sign of the sorting permutation,
/// or 0 when t has a repeated entry.
int sort_with_sign(std::vector<std::uint32_t>& t);

/// Sign of the permutation sorting t (0 on repeats); t is left unchanged.
int permutation_sign(std::span<const std::uint32_t> t);

/// Binomial coefficients up to a fixed size with ranking of k-subsets
/// (strictly increasing tuples) in lexicographic order.
class SubsetIndexer {
 public:
  SubsetIndexer() = default;
  SubsetIndexer(std::size_t n, std::size_t max_k);

  std::uint64_t binomial(std::size_t n, std::size_t k) const;
  std::uint64_t count(std::size_t k) const { return binomial(n_, k); }
  std::uint64_t rank(std::span<const std::uint32_t> subset) const;
  void unrank(std::uint64_t r, std::size_t k, std::vector<std::uint32_t>& out) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::uint64_t>> table_;
};

/// Digit expansion of tuples in base `base`, first entry most significant.
std::uint64_t encode_tuple(std::span<const std::uint32_t> tuple, std::uint64_t base);
void decode_tuple(std::uint64_t code, std::size_t length, std::uint64_t base, std::vector<std::uint32_t>& out);
std::uint64_t power(std::uint64_t base, std::size_t exponent);

}  // namespace lcoh

#include "lcoh/combinatorics.hpp"

#include <algorithm>

#include "lcoh/errors.hpp"

namespace lcoh {

int sort_with_sign(std::vector<std::uint32_t>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == t[i - 1]) return 0;
  }
  return sign;
}

int permutation_sign(std::span<const std::uint32_t> t) {
  std::vector<std::uint32_t> copy(t.begin(), t.end());
  return sort_with_sign(copy);
}

SubsetIndexer::SubsetIndexer(std::size_t n, std::size_t max_k) : n_(n) {
  table_.assign(n + 1, std::vector<std::uint64_t>(max_k + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    table_[a][0] = 1;
    for (std::size_t b = 1; b <= max_k && b <= a; ++b) {
      table_[a][b] = table_[a - 1][b - 1] + (b <= a - 1 ? table_[a - 1][b] : 0);
    }
  }
}

std::uint64_t SubsetIndexer::binomial(std::size_t n, std::size_t k) const {
  if (k > n) return 0;
  if (n >= table_.size() || k >= table_[n].size()) throw InvalidDimension("subset size exceeds indexer range");
  return table_[n][k];
}

// Lexicographic rank: count subsets that precede `subset` position by position.
std::uint64_t SubsetIndexer::rank(std::span<const std::uint32_t> subset) const {
  const std::size_t k = subset.size();
  std::uint64_t r = 0;
  std::uint32_t prev = 0;
  for (std::size_t p = 0; p < k; ++p) {
    for (std::uint32_t v = (p == 0 ? 0 : prev + 1); v < subset[p]; ++v) {
      r += binomial(n_ - v - 1, k - p - 1);
    }
    prev = subset[p];
  }
  return r;
}

void SubsetIndexer::unrank(std::uint64_t r, std::size_t k, std::vector<std::uint32_t>& out) const {
  out.resize(k);
  std::uint32_t v = 0;
  for (std::size_t p = 0; p < k; ++p) {
    while (true) {
      const std::uint64_t block = binomial(n_ - v - 1, k - p - 1);
      if (r < block) break;
      r -= block;
      ++v;
    }
    out[p] = v++;
  }
}

std::uint64_t encode_tuple(std::span<const std::uint32_t> tuple, std::uint64_t base) {
  std::uint64_t code = 0;
  for (auto x : tuple) code = code * base + x;
  return code;
}

void decode_tuple(std::uint64_t code, std::size_t length, std::uint64_t base, std::vector<std::uint32_t>& out) {
  out.resize(length);
  for (std::size_t p = length; p > 0; --p) {
    out[p - 1] = static_cast<std::uint32_t>(code % base);
    code /= base;
  }
}

std::uint64_t power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace lcoh

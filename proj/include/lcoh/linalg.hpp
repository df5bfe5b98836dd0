#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcoh/rational.hpp"

namespace lcoh {

/// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;
using DenseVector = std::vector<Rational>;

/// Sorts by index, merges duplicates and drops zeros.
void normalize(SparseVector& v);
SparseVector to_sparse(std::span<const Rational> dense);
DenseVector to_dense(const SparseVector& v, std::size_t dim);

/// a + scale * b.
SparseVector axpy(const SparseVector& a, const Rational& scale, const SparseVector& b);

/// Exact sparse matrix over Q, stored column by column.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols);

  static SparseRationalMatrix identity(std::size_t n);
  static SparseRationalMatrix from_dense(const std::vector<DenseVector>& row_major, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const { return nonzeros_; }

  /// Streaming assembly: appends one column and returns its index.
  std::size_t append_column(SparseVector column);
  void set_column(std::size_t col, SparseVector column);
  const SparseVector& column(std::size_t col) const { return columns_.at(col); }

  Rational at(std::size_t row, std::size_t col) const;
  DenseVector multiply(std::span<const Rational> x) const;
  SparseVector multiply(const SparseVector& x) const;

  SparseRationalMatrix transposed() const;
  /// Entry (r, c) moves to (row_perm[r], col_perm[c]).
  SparseRationalMatrix permuted(std::span<const std::size_t> row_perm,
                                std::span<const std::size_t> col_perm) const;

 private:
  void check_column(SparseVector& column) const;

  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
  std::size_t nonzeros_ = 0;
};

enum class RankMode { exact, modular, automatic };

std::string to_string(RankMode mode);
RankMode parse_rank_mode(const std::string& text);

struct RankOptions {
  RankMode mode = RankMode::automatic;
  /// In automatic mode, matrices with fewer nonzeros than this use exact elimination.
  std::size_t exact_threshold = 50000;
  /// Number of agreeing primes required to certify a modular rank.
  int min_primes = 3;
  /// Maximum number of primes tried before giving up with ModularDisagreement.
  int prime_budget = 3;
  std::uint64_t seed = 20240611;
  int threads = 1;
};

struct RankCertificate {
  std::size_t rank = 0;
  RankMode method = RankMode::exact;
  std::vector<std::uint64_t> primes_used;
  bool agreement = true;
};

RankCertificate rank(const SparseRationalMatrix& m, const RankOptions& options = {});
RankCertificate rank(const SparseRationalMatrix& m, RankMode mode);

/// Rank of m over F_p. Throws DimensionMismatch-free; returns nullopt if p divides a denominator.
std::optional<std::size_t> rank_mod_p(const SparseRationalMatrix& m, std::uint32_t p);
/// Rank over Q by fraction-free integer elimination.
std::size_t rank_exact(const SparseRationalMatrix& m);

bool is_prime(std::uint64_t n);
/// Deterministic sequence of distinct primes in (2^30, 2^31) drawn from `seed`.
std::vector<std::uint32_t> draw_primes(std::uint64_t seed, std::size_t count);

/// Basis of the right null space; every vector v satisfies m v = 0.
std::vector<DenseVector> kernel_basis(const SparseRationalMatrix& m);
std::vector<SparseVector> kernel_basis_sparse(const SparseRationalMatrix& m);

struct ImageMembership {
  bool member = false;
  DenseVector witness;  ///< m * witness == v when member
};

/// Decides whether v lies in the column space of m. Throws DimensionMismatch.
ImageMembership in_image(const SparseRationalMatrix& m, std::span<const Rational> v);

/// Subspace of Q^dim kept in reduced row echelon form (pivot entries 1).
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v; returns true when v was independent of the current span.
  bool add(const SparseVector& v);
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// pivot column -> reduced row.
  const std::map<std::uint32_t, SparseVector>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::map<std::uint32_t, SparseVector> rows_;
};

}  // namespace lcoh

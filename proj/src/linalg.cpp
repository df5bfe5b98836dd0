#include "lcoh/linalg.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <unordered_map>

#include "lcoh/errors.hpp"

namespace lcoh {

void normalize(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [idx, val] : v) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second += val;
    } else {
      out.emplace_back(idx, std::move(val));
    }
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  v = std::move(out);
}

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!is_zero(dense[i])) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  }
  return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t dim) {
  DenseVector out(dim);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& scale, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, scale * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + scale * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SparseRationalMatrix

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t n) {
  SparseRationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_column(i, {{static_cast<std::uint32_t>(i), Rational(1)}});
  return m;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const std::vector<DenseVector>& row_major,
                                                      std::size_t cols) {
  SparseRationalMatrix m(row_major.size(), cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SparseVector col;
    for (std::size_t r = 0; r < row_major.size(); ++r) {
      if (row_major[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
      if (!is_zero(row_major[r][c])) col.emplace_back(static_cast<std::uint32_t>(r), row_major[r][c]);
    }
    m.set_column(c, std::move(col));
  }
  return m;
}

void SparseRationalMatrix::check_column(SparseVector& column) const {
  normalize(column);
  if (!column.empty() && column.back().first >= rows_) {
    throw DimensionMismatch("row index " + std::to_string(column.back().first) + " out of range " +
                            std::to_string(rows_));
  }
}

std::size_t SparseRationalMatrix::append_column(SparseVector column) {
  check_column(column);
  nonzeros_ += column.size();
  columns_.push_back(std::move(column));
  return columns_.size() - 1;
}

void SparseRationalMatrix::set_column(std::size_t col, SparseVector column) {
  check_column(column);
  auto& slot = columns_.at(col);
  nonzeros_ -= slot.size();
  nonzeros_ += column.size();
  slot = std::move(column);
}

Rational SparseRationalMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Rational(0);
}

DenseVector SparseRationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols()) throw DimensionMismatch("matrix-vector product: length mismatch");
  DenseVector out(rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (is_zero(x[c])) continue;
    for (const auto& [r, v] : columns_[c]) out[r] += v * x[c];
  }
  return out;
}

SparseVector SparseRationalMatrix::multiply(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [c, xv] : x) {
    if (c >= cols()) throw DimensionMismatch("matrix-vector product: index out of range");
    for (const auto& [r, v] : columns_[c]) out.emplace_back(r, v * xv);
  }
  normalize(out);
  return out;
}

SparseRationalMatrix SparseRationalMatrix::transposed() const {
  std::vector<SparseVector> cols_t(rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) cols_t[r].emplace_back(static_cast<std::uint32_t>(c), v);
  }
  SparseRationalMatrix t(cols(), 0);
  for (auto& col : cols_t) t.append_column(std::move(col));
  return t;
}

SparseRationalMatrix SparseRationalMatrix::permuted(std::span<const std::size_t> row_perm,
                                                    std::span<const std::size_t> col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols()) throw DimensionMismatch("permutation size");
  SparseRationalMatrix out(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    SparseVector col;
    for (const auto& [r, v] : columns_[c]) col.emplace_back(static_cast<std::uint32_t>(row_perm[r]), v);
    out.set_column(col_perm[c], std::move(col));
  }
  return out;
}

std::string to_string(RankMode mode) {
  switch (mode) {
    case RankMode::exact: return "exact";
    case RankMode::modular: return "modular";
    case RankMode::automatic: return "auto";
  }
  return "?";
}

RankMode parse_rank_mode(const std::string& text) {
  if (text == "exact") return RankMode::exact;
  if (text == "modular") return RankMode::modular;
  if (text == "auto" || text == "automatic") return RankMode::automatic;
  throw ParseError("unknown rank mode '" + text + "'");
}

// ---------------------------------------------------------------------------
// Elimination kernels.
//
// Both kernels treat each column as a sparse vector and reduce it against the
// previously stored pivots (left-looking). Rows are relabelled so that rows
// with few entries come first, and columns are processed by increasing
// length; that static Markowitz ordering keeps the fill small.

namespace {

struct Ordering {
  std::vector<std::uint32_t> row_label;
  std::vector<std::size_t> column_order;
};

Ordering markowitz_ordering(const SparseRationalMatrix& m) {
  std::vector<std::size_t> row_count(m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) ++row_count[e.first];
  }
  std::vector<std::uint32_t> rows(m.rows());
  std::iota(rows.begin(), rows.end(), 0u);
  std::stable_sort(rows.begin(), rows.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return row_count[a] < row_count[b]; });
  Ordering ord;
  ord.row_label.resize(m.rows());
  for (std::uint32_t i = 0; i < rows.size(); ++i) ord.row_label[rows[i]] = i;
  ord.column_order.resize(m.cols());
  std::iota(ord.column_order.begin(), ord.column_order.end(), std::size_t{0});
  std::stable_sort(ord.column_order.begin(), ord.column_order.end(), [&](std::size_t a, std::size_t b) {
    return m.column(a).size() < m.column(b).size();
  });
  return ord;
}

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 pow_mod(u64 base, u64 exp, u32 p) {
  u64 result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<u32>(result);
}

u32 inv_mod(u32 a, u32 p) { return pow_mod(a, p - 2, p); }

u32 reduce_mod(const Integer& z, u32 p) {
  return static_cast<u32>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

struct ModEntry {
  u32 row;
  u32 val;
};
using ModVec = std::vector<ModEntry>;

// v - c * s over F_p
void mod_sub(const ModVec& v, u32 c, const ModVec& s, u32 p, ModVec& out) {
  out.clear();
  out.reserve(v.size() + s.size());
  std::size_t i = 0, j = 0;
  const u64 neg = p - c;
  while (i < v.size() || j < s.size()) {
    if (j == s.size() || (i < v.size() && v[i].row < s[j].row)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || s[j].row < v[i].row) {
      out.push_back({s[j].row, static_cast<u32>(neg * s[j].val % p)});
      ++j;
    } else {
      u32 x = static_cast<u32>((v[i].val + neg * s[j].val) % p);
      if (x) out.push_back({v[i].row, x});
      ++i;
      ++j;
    }
  }
}

struct IntEntry {
  u32 row;
  Integer val;
};
using IntVec = std::vector<IntEntry>;

// a * v - b * s, then divide out the content.
void int_combine(const IntVec& v, const Integer& a, const IntVec& s, const Integer& b, IntVec& out) {
  out.clear();
  out.reserve(v.size() + s.size());
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < v.size() || j < s.size()) {
    if (j == s.size() || (i < v.size() && v[i].row < s[j].row)) {
      out.push_back({v[i].row, a * v[i].val});
      ++i;
    } else if (i == v.size() || s[j].row < v[i].row) {
      out.push_back({s[j].row, -b * s[j].val});
      ++j;
    } else {
      tmp = a * v[i].val - b * s[j].val;
      if (tmp != 0) out.push_back({v[i].row, tmp});
      ++i;
      ++j;
    }
  }
  Integer g = 0;
  for (const auto& e : out) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.val.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& e : out) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const SparseRationalMatrix& m, std::uint32_t p) {
  const Ordering ord = markowitz_ordering(m);
  std::vector<ModVec> stored;
  std::vector<std::int64_t> pivot_of(m.rows(), -1);
  ModVec v, scratch;
  for (std::size_t c : ord.column_order) {
    v.clear();
    for (const auto& [r, x] : m.column(c)) {
      const u32 den = reduce_mod(x.get_den(), p);
      if (den == 0) return std::nullopt;
      const u32 num = reduce_mod(x.get_num(), p);
      const u32 val = static_cast<u32>(static_cast<u64>(num) * inv_mod(den, p) % p);
      if (val) v.push_back({ord.row_label[r], val});
    }
    std::sort(v.begin(), v.end(), [](const ModEntry& a, const ModEntry& b) { return a.row < b.row; });
    while (!v.empty()) {
      const auto s = pivot_of[v.front().row];
      if (s < 0) {
        const u64 inv = inv_mod(v.front().val, p);
        for (auto& e : v) e.val = static_cast<u32>(e.val * inv % p);
        pivot_of[v.front().row] = static_cast<std::int64_t>(stored.size());
        stored.push_back(std::move(v));
        v = ModVec{};
        break;
      }
      mod_sub(v, v.front().val, stored[s], p, scratch);
      std::swap(v, scratch);
    }
  }
  return stored.size();
}

std::size_t rank_exact(const SparseRationalMatrix& m) {
  const Ordering ord = markowitz_ordering(m);
  std::vector<IntVec> stored;
  std::vector<std::int64_t> pivot_of(m.rows(), -1);
  IntVec v, scratch;
  Integer g, a, b;
  for (std::size_t c : ord.column_order) {
    const auto& col = m.column(c);
    if (col.empty()) continue;
    Integer lcm = 1;
    for (const auto& e : col) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.second.get_den().get_mpz_t());
    v.clear();
    for (const auto& [r, x] : col) {
      Integer val = x.get_num() * (lcm / x.get_den());
      v.push_back({ord.row_label[r], std::move(val)});
    }
    std::sort(v.begin(), v.end(), [](const IntEntry& x, const IntEntry& y) { return x.row < y.row; });
    while (!v.empty()) {
      const auto s = pivot_of[v.front().row];
      if (s < 0) {
        pivot_of[v.front().row] = static_cast<std::int64_t>(stored.size());
        stored.push_back(std::move(v));
        v = IntVec{};
        break;
      }
      const Integer& lead_s = stored[s].front().val;
      mpz_gcd(g.get_mpz_t(), lead_s.get_mpz_t(), v.front().val.get_mpz_t());
      a = lead_s / g;
      b = v.front().val / g;
      int_combine(v, a, stored[s], b, scratch);
      std::swap(v, scratch);
    }
  }
  return stored.size();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](u64 x, u64 y) { return static_cast<u64>(static_cast<unsigned __int128>(x) * y % n); };
  for (u64 base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = 1, e = d, bb = base % n;
    while (e) {
      if (e & 1) x = mulmod(x, bb);
      bb = mulmod(bb, bb);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> draw_primes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist((1ull << 30) + 1, (1ull << 31) - 1);
  std::vector<std::uint32_t> primes;
  while (primes.size() < count) {
    u64 candidate = dist(rng) | 1ull;
    while (!is_prime(candidate)) candidate += 2;
    if (candidate >= (1ull << 31)) continue;
    if (std::find(primes.begin(), primes.end(), candidate) == primes.end()) {
      primes.push_back(static_cast<std::uint32_t>(candidate));
    }
  }
  return primes;
}

namespace {

RankCertificate modular_rank(const SparseRationalMatrix& m, const RankOptions& options) {
  const std::size_t budget = static_cast<std::size_t>(std::max(options.prime_budget, options.min_primes));
  // Draw extra primes so that primes dividing a denominator can be skipped.
  const auto candidates = draw_primes(options.seed, budget + 16);
  RankCertificate cert;
  cert.method = RankMode::modular;
  std::vector<std::size_t> ranks;
  std::size_t next = 0;
  auto run_batch = [&](std::size_t want) {
    std::vector<std::uint32_t> batch;
    while (batch.size() < want && next < candidates.size()) batch.push_back(candidates[next++]);
    std::vector<std::optional<std::size_t>> results(batch.size());
    if (options.threads > 1 && batch.size() > 1) {
      std::vector<std::future<std::optional<std::size_t>>> futures;
      for (auto p : batch) futures.push_back(std::async(std::launch::async, [&m, p] { return rank_mod_p(m, p); }));
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = futures[i].get();
    } else {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = rank_mod_p(m, batch[i]);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!results[i]) continue;
      cert.primes_used.push_back(batch[i]);
      ranks.push_back(*results[i]);
    }
  };
  const auto min_primes = static_cast<std::size_t>(options.min_primes);
  while (cert.primes_used.size() < budget && next < candidates.size()) {
    run_batch(std::min(budget - cert.primes_used.size(),
                       cert.primes_used.size() < min_primes ? min_primes - cert.primes_used.size() : std::size_t{1}));
    if (ranks.size() < min_primes) continue;
    const std::size_t best = *std::max_element(ranks.begin(), ranks.end());
    const auto agreeing = static_cast<std::size_t>(std::count(ranks.begin(), ranks.end(), best));
    if (agreeing >= min_primes) {
      cert.rank = best;
      // Primes below the maximum were unlucky; keep only the certifying ones.
      std::vector<std::uint64_t> certifying;
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] == best) certifying.push_back(cert.primes_used[i]);
      }
      cert.primes_used = std::move(certifying);
      cert.agreement = true;
      return cert;
    }
  }
  std::string detail;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    detail += " p=" + std::to_string(cert.primes_used[i]) + ":" + std::to_string(ranks[i]);
  }
  throw ModularDisagreement("modular ranks disagree after " + std::to_string(ranks.size()) + " primes:" + detail);
}

}  // namespace

RankCertificate rank(const SparseRationalMatrix& m, const RankOptions& options) {
  RankMode mode = options.mode;
  if (mode == RankMode::automatic) {
    mode = m.nonzeros() < options.exact_threshold ? RankMode::exact : RankMode::modular;
  }
  if (m.nonzeros() == 0) {
    RankCertificate cert;
    cert.method = RankMode::exact;
    return cert;
  }
  if (mode == RankMode::exact) {
    RankCertificate cert;
    cert.rank = rank_exact(m);
    cert.method = RankMode::exact;
    return cert;
  }
  return modular_rank(m, options);
}

RankCertificate rank(const SparseRationalMatrix& m, RankMode mode) {
  RankOptions options;
  options.mode = mode;
  return rank(m, options);
}

// ---------------------------------------------------------------------------
// Reduced echelon form over Q.

SparseVector LinearSpan::reduce(const SparseVector& v) const {
  if (!v.empty() && v.back().first >= dim_) throw DimensionMismatch("vector index out of span dimension");
  SparseVector out = v;
  for (const auto& [idx, val] : v) {
    auto it = rows_.find(idx);
    if (it == rows_.end()) continue;
    // Rows are fully reduced, so pivot entries of `out` equal those of v.
    out = axpy(out, -val, it->second);
  }
  return out;
}

bool LinearSpan::add(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::uint32_t pivot = r.front().first;
  const Rational inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  for (auto& [p, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& e, std::uint32_t idx) { return e.first < idx; });
    if (it != row.end() && it->first == pivot) {
      const Rational coeff = it->second;
      row = axpy(row, -coeff, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

namespace {

LinearSpan row_space(const SparseRationalMatrix& m, std::size_t extra_cols = 0) {
  LinearSpan span(m.cols() + extra_cols);
  const SparseRationalMatrix t = m.transposed();
  for (std::size_t r = 0; r < t.cols(); ++r) span.add(t.column(r));
  return span;
}

}  // namespace

std::vector<SparseVector> kernel_basis_sparse(const SparseRationalMatrix& m) {
  const LinearSpan span = row_space(m);
  std::vector<std::int64_t> free_slot(m.cols(), -1);
  std::vector<SparseVector> basis;
  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    if (!span.rows().contains(c)) {
      free_slot[c] = static_cast<std::int64_t>(basis.size());
      basis.push_back({{c, Rational(1)}});
    }
  }
  for (const auto& [pivot, row] : span.rows()) {
    for (const auto& [c, val] : row) {
      if (c == pivot) continue;
      basis[free_slot[c]].emplace_back(pivot, -val);
    }
  }
  for (auto& v : basis) normalize(v);
  return basis;
}

std::vector<DenseVector> kernel_basis(const SparseRationalMatrix& m) {
  std::vector<DenseVector> out;
  for (const auto& v : kernel_basis_sparse(m)) out.push_back(to_dense(v, m.cols()));
  return out;
}

ImageMembership in_image(const SparseRationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) {
    throw DimensionMismatch("in_image: vector length " + std::to_string(v.size()) + " != rows " +
                            std::to_string(m.rows()));
  }
  const auto rhs = static_cast<std::uint32_t>(m.cols());
  LinearSpan span(m.cols() + 1);
  const SparseRationalMatrix t = m.transposed();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row = t.column(r);
    if (!is_zero(v[r])) row.emplace_back(rhs, v[r]);
    span.add(row);
  }
  ImageMembership result;
  if (span.rows().contains(rhs)) return result;
  result.member = true;
  result.witness.assign(m.cols(), Rational(0));
  for (const auto& [pivot, row] : span.rows()) {
    if (!row.empty() && row.back().first == rhs) result.witness[pivot] = row.back().second;
  }
  return result;
}

}  // namespace lcoh

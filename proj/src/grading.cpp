#include "lcoh/grading.hpp"


namespace lcoh {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t modulus) {
  if (modulus == 0) return v;
  v %= modulus;
  return v < 0 ? v + modulus : v;
}

// Kernel of a 0/1 matrix over GF(2); rows given as index lists of unit entries
// (entries may repeat and then cancel).
std::vector<std::vector<std::uint8_t>> gf2_kernel(const std::vector<std::vector<std::uint32_t>>& rows,
                                                  std::size_t cols) {
  std::vector<std::vector<std::uint8_t>> m;
  for (const auto& r : rows) {
    std::vector<std::uint8_t> row(cols, 0);
    for (auto c : r) row[c] ^= 1;
    m.push_back(std::move(row));
  }
  std::vector<std::int64_t> pivot_row(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    pivot_row[c] = static_cast<std::int64_t>(rank++);
  }
  std::vector<std::vector<std::uint8_t>> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_row[c] >= 0 && m[static_cast<std::size_t>(pivot_row[c])][f]) v[c] = 1;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

GradingSet GradingSet::detect(const LieAlgebra& algebra, const GModule& module) {
  const std::size_t g = algebra.dim();
  const std::size_t n = g + module.dim();
  // Each constraint: plus-plus-minus on three unknowns.
  std::vector<std::vector<std::uint32_t>> support;
  std::vector<SparseVector> rows;
  auto add = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    SparseVector r{{a, Rational(1)}, {b, Rational(1)}, {c, Rational(-1)}};
    normalize(r);
    rows.push_back(std::move(r));
    support.push_back({a, b, c});
  };
  for (std::uint32_t i = 0; i < g; ++i) {
    for (std::uint32_t j = i + 1; j < g; ++j) {
      for (const auto& [k, c] : algebra.bracket(i, j)) add(i, j, k);
    }
  }
  for (std::uint32_t i = 0; i < g; ++i) {
    const auto& a = module.action(i);
    for (std::uint32_t s = 0; s < module.dim(); ++s) {
      for (const auto& [t, c] : a.column(s)) {
        add(i, static_cast<std::uint32_t>(g + s), static_cast<std::uint32_t>(g + t));
      }
    }
  }
  // Transpose the row list into a column-major matrix with rows() constraints.
  SparseRationalMatrix m(rows.size(), n);
  {
    std::vector<SparseVector> cols(n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [c, v] : rows[r]) cols[c].emplace_back(static_cast<std::uint32_t>(r), v);
    }
    for (std::size_t c = 0; c < n; ++c) m.set_column(c, std::move(cols[c]));
  }

  std::vector<Grading> out;
  auto split = [&](const std::vector<std::int64_t>& w, std::int64_t modulus) {
    Grading gr;
    gr.algebra.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(g));
    gr.module.assign(w.begin() + static_cast<std::ptrdiff_t>(g), w.end());
    gr.modulus = modulus;
    bool nonconstant = false;
    for (auto x : gr.algebra) nonconstant = nonconstant || x != 0;
    for (auto x : gr.module) nonconstant = nonconstant || x != gr.module.front();
    if (nonconstant) out.push_back(std::move(gr));
  };
  for (const auto& v : kernel_basis(m)) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
    std::vector<std::int64_t> w;
    for (const auto& x : v) {
      Rational y = x * l;
      w.push_back(y.get_num().get_si());
    }
    split(w, 0);
  }
  for (const auto& v : gf2_kernel(support, n)) {
    split(std::vector<std::int64_t>(v.begin(), v.end()), 2);
  }
  return GradingSet(std::move(out));
}

void GradingSet::cochain_key(std::span<const std::uint32_t> inputs, std::uint32_t target, Key& out) const {
  out.resize(components_.size());
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& gr = components_[c];
    std::int64_t v = gr.module[target];
    for (auto i : inputs) v -= gr.algebra[i];
    out[c] = reduce(v, gr.modulus);
  }
}

void GradingSet::chain_key(std::uint32_t x, std::span<const std::uint32_t> inputs, Key& out) const {
  out.resize(components_.size());
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& gr = components_[c];
    std::int64_t v = gr.module[x];
    for (auto i : inputs) v += gr.algebra[i];
    out[c] = reduce(v, gr.modulus);
  }
}

}  // namespace lcoh

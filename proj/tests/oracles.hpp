#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the basic data types.

#include <functional>
#include <random>
#include <vector>

#include "lcoh/cochains.hpp"
#include "lcoh/lie_algebra.hpp"

namespace oracle {

using lcoh::Rational;
using Dense = std::vector<std::vector<Rational>>;

/// Plain Gaussian elimination over Q.
inline std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline Dense to_dense(const lcoh::SparseRationalMatrix& a) {
  Dense d(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (const auto& [r, v] : a.column(c)) d[r][c] = v;
  }
  return d;
}

/// [b_i, b_j] as a dense coordinate vector.
inline std::vector<Rational> bracket(const lcoh::LieAlgebra& g, std::size_t i, std::size_t j) {
  std::vector<Rational> out(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) out[k] = g.structure_constant(i, j, k);
  return out;
}

/// b_i . v for a dense module vector.
inline std::vector<Rational> act(const lcoh::GModule& m, std::size_t i, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.dim());
  for (std::size_t t = 0; t < m.dim(); ++t) {
    if (v[t] == 0) continue;
    for (std::size_t s = 0; s < m.dim(); ++s) out[s] += m.action(i).at(s, t) * v[t];
  }
  return out;
}

using Tuple = std::vector<std::uint32_t>;
/// A cochain given by its values on basis tuples.
using Evaluator = std::function<std::vector<Rational>(const Tuple&)>;

inline void for_each_tuple(std::size_t dim, std::size_t arity, const std::function<void(const Tuple&)>& visit) {
  Tuple t(arity, 0);
  while (true) {
    visit(t);
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++t[pos] < dim) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (arity == 0) return;
  }
}

/// Value of f on sum_k c_k (tuple with slot `slot` replaced by b_k), by multilinearity.
inline std::vector<Rational> eval_with_slot(const Evaluator& f, Tuple t, std::size_t slot,
                                            const std::vector<Rational>& coords, std::size_t module_dim) {
  std::vector<Rational> out(module_dim);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    t[slot] = static_cast<std::uint32_t>(k);
    const auto v = f(t);
    for (std::size_t s = 0; s < module_dim; ++s) out[s] += coords[k] * v[s];
  }
  return out;
}

/// Direct evaluation of the Leibniz coboundary
///   (delta f)(g_1..g_{n+1}) = sum_i (-1)^i g_i . f(..^g_i..)
///                           + sum_{i<j} (-1)^j f(g_1..g_{i-1}, [g_i, g_j], g_{i+1}..^g_j..)
/// on one basis tuple (1-based signs).
inline std::vector<Rational> leibniz_delta(const Evaluator& f, const lcoh::LieAlgebra& g, const lcoh::GModule& m,
                                           const Tuple& x) {
  const std::size_t n1 = x.size();
  std::vector<Rational> out(m.dim());
  for (std::size_t i = 0; i < n1; ++i) {
    Tuple rest;
    for (std::size_t k = 0; k < n1; ++k) {
      if (k != i) rest.push_back(x[k]);
    }
    const auto v = act(m, x[i], f(rest));
    const int sign = (i + 1) % 2 == 0 ? 1 : -1;
    for (std::size_t s = 0; s < m.dim(); ++s) out[s] += sign * v[s];
  }
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      Tuple rest;
      for (std::size_t k = 0; k < n1; ++k) {
        if (k != j) rest.push_back(x[k]);
      }
      const auto v = eval_with_slot(f, rest, i, bracket(g, x[i], x[j]), m.dim());
      const int sign = (j + 1) % 2 == 0 ? 1 : -1;
      for (std::size_t s = 0; s < m.dim(); ++s) out[s] += sign * v[s];
    }
  }
  return out;
}

inline Evaluator evaluator(const lcoh::TensorCochain& f) {
  return [&f](const Tuple& t) { return lcoh::to_dense(f.evaluate(t), f.module_dim()); };
}

inline Evaluator evaluator(const lcoh::WedgeCochain& f) {
  return [&f](const Tuple& t) { return lcoh::to_dense(f.evaluate(t), f.module_dim()); };
}

/// Homology differential on v_x (x) g_S, S strictly increasing, as a map into
/// dense coordinates over all (x', tuple') with tuple' an arbitrary ordering:
/// returns pairs (x', tuple', coefficient) before any sorting.
struct ChainTerm {
  std::uint32_t x;
  Tuple tuple;
  Rational c;
};

/// d(v (x) g_1..g_{k+1}) = sum_i (-1)^{i+1} (-g_i . v) (x) ..^g_i..
///                       + sum_{i<j} (-1)^{j+1} v (x) g_1..[g_i, g_j]..^g_j..
inline std::vector<ChainTerm> homology_d(const lcoh::LieAlgebra& g, const lcoh::GModule& m, std::uint32_t x,
                                         const Tuple& s) {
  std::vector<ChainTerm> out;
  const std::size_t k1 = s.size();
  for (std::size_t i = 0; i < k1; ++i) {
    Tuple rest;
    for (std::size_t k = 0; k < k1; ++k) {
      if (k != i) rest.push_back(s[k]);
    }
    std::vector<Rational> v(m.dim());
    v[x] = 1;
    const auto gv = act(m, s[i], v);
    const int sign = (i + 2) % 2 == 0 ? 1 : -1;
    for (std::size_t t = 0; t < m.dim(); ++t) {
      if (gv[t] != 0) out.push_back({static_cast<std::uint32_t>(t), rest, -sign * gv[t]});
    }
  }
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = i + 1; j < k1; ++j) {
      const auto br = bracket(g, s[i], s[j]);
      const int sign = (j + 2) % 2 == 0 ? 1 : -1;
      for (std::size_t b = 0; b < br.size(); ++b) {
        if (br[b] == 0) continue;
        Tuple rest;
        for (std::size_t k = 0; k < k1; ++k) {
          if (k == j) continue;
          rest.push_back(k == i ? static_cast<std::uint32_t>(b) : s[k]);
        }
        out.push_back({x, rest, sign * br[b]});
      }
    }
  }
  return out;
}

/// Sign of the permutation sorting t; zero on repeated entries.
inline int sort_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) {
        std::swap(t[i], t[j]);
        sign = -sign;
      }
    }
  }
  return sign;
}

inline lcoh::TensorCochain random_tensor(std::size_t arity, std::size_t dim, std::size_t module_dim,
                                         std::mt19937_64& rng, int terms = 6) {
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(dim - 1));
  std::uniform_int_distribution<std::uint32_t> tgt(0, static_cast<std::uint32_t>(module_dim - 1));
  std::uniform_int_distribution<int> val(-3, 3);
  lcoh::TensorCochain f(arity, dim, module_dim);
  for (int r = 0; r < terms; ++r) {
    Tuple t(arity);
    for (auto& e : t) e = idx(rng);
    f.add(t, tgt(rng), Rational(val(rng)));
  }
  return f;
}

inline lcoh::WedgeCochain random_wedge(std::size_t arity, std::size_t dim, std::size_t module_dim,
                                       std::mt19937_64& rng, int terms = 6) {
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(dim - 1));
  std::uniform_int_distribution<std::uint32_t> tgt(0, static_cast<std::uint32_t>(module_dim - 1));
  std::uniform_int_distribution<int> val(-3, 3);
  lcoh::WedgeCochain f(arity, dim, module_dim);
  for (int r = 0; r < terms; ++r) {
    Tuple t(arity);
    for (auto& e : t) e = idx(rng);
    f.add(t, tgt(rng), Rational(val(rng)));
  }
  return f;
}

}  // namespace oracle

#pragma once

// Randomized structural properties shared by the unit tests and the
// acceptance binary. Each returns the list of failures (empty on success).

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lcoh/cochains.hpp"
#include "lcoh/complexes.hpp"
#include "lcoh/connection.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/linalg.hpp"
#include "oracles.hpp"

namespace props {

using namespace lcoh;
using Failures = std::vector<std::string>;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Random combination of valid basis codes of degree k.
inline CodeVector random_codes(const CochainComplex& c, int k, std::mt19937_64& rng, int terms = 8) {
  std::vector<std::uint64_t> valid;
  c.enumerate(k, [&](std::uint64_t code) { valid.push_back(code); });
  CodeVector v;
  if (valid.empty()) return v;
  std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int t = 0; t < terms; ++t) v.emplace_back(valid[pick(rng)], Rational(val(rng)));
  normalize(v);
  return v;
}

/// delta(delta v) = 0 for random v in degrees 0..max_k.
inline Failures delta_squared(const CochainComplex& c, int max_k, int trials, std::mt19937_64& rng) {
  Failures out;
  for (int k = 0; k <= max_k; ++k) {
    for (int t = 0; t < trials; ++t) {
      const CodeVector v = random_codes(c, k, rng);
      if (!c.apply(k + 1, c.apply(k, v)).empty()) {
        out.push_back(to_string(c.kind()) + ": delta^2 != 0 in degree " + std::to_string(k));
        break;
      }
    }
  }
  return out;
}

/// Library Leibniz coboundary against direct evaluation on every basis tuple.
inline Failures leibniz_matches_oracle(const LieAlgebra& g, const GModule& m, int max_arity, int trials,
                                       std::mt19937_64& rng) {
  Failures out;
  for (int a = 0; a <= max_arity; ++a) {
    for (int t = 0; t < trials; ++t) {
      const TensorCochain f = oracle::random_tensor(static_cast<std::size_t>(a), g.dim(), m.dim(), rng);
      const TensorCochain df = leibniz_coboundary(f, g, m);
      const auto fe = oracle::evaluator(f);
      const auto dfe = oracle::evaluator(df);
      bool ok = true;
      oracle::for_each_tuple(g.dim(), static_cast<std::size_t>(a + 1), [&](const oracle::Tuple& x) {
        if (ok && oracle::leibniz_delta(fe, g, m, x) != dfe(x)) ok = false;
      });
      if (!ok) {
        out.push_back("Leibniz coboundary differs from direct evaluation, arity " + std::to_string(a));
        break;
      }
    }
  }
  return out;
}

/// CE coboundary against the same direct formula evaluated on wedge cochains.
inline Failures ce_matches_oracle(const LieAlgebra& g, const GModule& m, int max_arity, int trials,
                                  std::mt19937_64& rng) {
  Failures out;
  for (int a = 0; a <= max_arity; ++a) {
    for (int t = 0; t < trials; ++t) {
      const WedgeCochain f = oracle::random_wedge(static_cast<std::size_t>(a), g.dim(), m.dim(), rng);
      const WedgeCochain df = ce_coboundary(f, g, m);
      const auto fe = oracle::evaluator(f);
      const auto dfe = oracle::evaluator(df);
      bool ok = true;
      oracle::for_each_tuple(g.dim(), static_cast<std::size_t>(a + 1), [&](const oracle::Tuple& x) {
        if (ok && oracle::leibniz_delta(fe, g, m, x) != dfe(x)) ok = false;
      });
      if (!ok) {
        out.push_back("CE coboundary differs from direct evaluation, arity " + std::to_string(a));
        break;
      }
    }
  }
  return out;
}

/// Library homology differential against the oracle formula, and d o d = 0.
inline Failures homology_checks(const LieAlgebra& g, const GModule& m, int max_degree, int trials,
                                std::mt19937_64& rng) {
  Failures out;
  std::uniform_int_distribution<std::uint32_t> xs(0, static_cast<std::uint32_t>(m.dim() - 1));
  std::uniform_int_distribution<std::uint32_t> gs(0, static_cast<std::uint32_t>(g.dim() - 1));
  std::uniform_int_distribution<int> val(-3, 3);
  for (int k = 1; k <= max_degree; ++k) {
    for (int t = 0; t < trials; ++t) {
      HomologyChain c(static_cast<std::size_t>(k), g.dim(), m.dim());
      HomologyChain expected(static_cast<std::size_t>(k - 1), g.dim(), m.dim());
      for (int r = 0; r < 4; ++r) {
        oracle::Tuple s(static_cast<std::size_t>(k));
        for (auto& e : s) e = gs(rng);
        oracle::Tuple sorted = s;
        const int sign = oracle::sort_sign(sorted);
        if (sign == 0) continue;
        const std::uint32_t x = xs(rng);
        const Rational v(val(rng));
        if (v == 0) continue;
        c.add(x, sorted, v);
        for (const auto& term : oracle::homology_d(g, m, x, sorted)) {
          oracle::Tuple u = term.tuple;
          const int su = oracle::sort_sign(u);
          if (su != 0) expected.add(term.x, u, su * term.c * v);
        }
      }
      const HomologyChain dc = homology_differential(c, g, m);
      if (!(dc == expected)) {
        out.push_back("homology differential differs from the oracle in degree " + std::to_string(k));
        break;
      }
      if (k >= 2 && !homology_differential(dc, g, m).is_zero()) {
        out.push_back("d^2 != 0 in degree " + std::to_string(k));
        break;
      }
    }
  }
  return out;
}

/// Phi(delta a) = d*(Phi a) for random coadjoint-valued a.
inline Failures phi_intertwines(const LieAlgebra& g, int max_arity, int trials, std::mt19937_64& rng) {
  Failures out;
  const GModule coad = make_module(g, ModuleKind::coadjoint);
  const GModule ad = make_module(g, ModuleKind::adjoint);
  for (int a = 0; a <= max_arity; ++a) {
    for (int t = 0; t < trials; ++t) {
      const WedgeCochain f = oracle::random_wedge(static_cast<std::size_t>(a), g.dim(), g.dim(), rng);
      if (!(phi_iso(ce_coboundary(f, g, coad)) == d_star(phi_iso(f), g, ad))) {
        out.push_back("Phi(delta a) != d*(Phi a) at arity " + std::to_string(a));
        break;
      }
    }
  }
  return out;
}

/// Builtin algebras pass Jacobi and module axioms; broken tables are rejected.
inline Failures algebra_axioms() {
  Failures out;
  std::vector<LieAlgebra> algs;
  for (int n = 2; n <= 5; ++n) algs.push_back(build_h_n(n).algebra);
  for (int n = 2; n <= 5; ++n) algs.push_back(build_so_n(n));
  algs.push_back(build_j_n(3));
  algs.push_back(build_sl2());
  for (const auto& g : algs) {
    try {
      for (auto kind : {ModuleKind::adjoint, ModuleKind::coadjoint, ModuleKind::trivial}) (void)make_module(g, kind);
    } catch (const Error& e) {
      out.push_back(g.name() + ": " + e.what());
    }
  }
  // [x, y] = x, [y, z] = y: Jacobi fails on (x, y, z).
  BracketTable t(3, std::vector<SparseVector>(3));
  t[0][1] = {{0, Rational(1)}};
  t[1][0] = {{0, Rational(-1)}};
  t[1][2] = {{1, Rational(1)}};
  t[2][1] = {{1, Rational(-1)}};
  try {
    LieAlgebra bad("bad", {"x", "y", "z"}, t);
    out.push_back("non-Jacobi table accepted");
  } catch (const JacobiViolation&) {
  }
  return out;
}

inline Failures bracket_cross_check() {
  Failures out;
  for (int n = 2; n <= 5; ++n) {
    if (!cross_check_h_n(build_h_n(n)).empty()) out.push_back("h_" + std::to_string(n) + " brackets disagree");
  }
  return out;
}

/// Modular rank (certified) equals exact rank on random sparse matrices
/// and on coboundary blocks of h_3.
inline Failures modular_vs_exact(int trials, std::mt19937_64& rng) {
  Failures out;
  std::uniform_int_distribution<int> size(1, 25), val(-9, 9), coin(0, 3);
  for (int t = 0; t < trials; ++t) {
    const int rows = size(rng), cols = size(rng);
    std::vector<DenseVector> d(static_cast<std::size_t>(rows), DenseVector(static_cast<std::size_t>(cols)));
    for (auto& row : d) {
      for (auto& e : row) e = coin(rng) == 0 ? Rational(Rational(val(rng)) / (1 + coin(rng))) : Rational(0);
    }
    // A dependent row keeps the rank below full in about half the cases.
    if (rows > 2 && coin(rng) < 2) {
      for (int c = 0; c < cols; ++c) d[0][c] = d[1][c] * 3 - d[2][c];
    }
    const auto m = SparseRationalMatrix::from_dense(d, static_cast<std::size_t>(cols));
    RankOptions mod;
    mod.mode = RankMode::modular;
    mod.seed = rng();
    const std::size_t exact = rank_exact(m);
    const auto cert = rank(m, mod);
    if (cert.rank != exact || exact != oracle::dense_rank(d)) {
      out.push_back("random matrix: modular " + std::to_string(cert.rank) + " vs exact " + std::to_string(exact));
      break;
    }
  }
  return out;
}

}  // namespace props

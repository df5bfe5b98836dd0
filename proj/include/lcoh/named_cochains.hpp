#pragma once

#include <string>
#include <vector>

#include "lcoh/cochains.hpp"

namespace lcoh {

/// The distinguished cochains attached to h_n, n >= 3.
///
/// Cochains on J_n carry local indices 0..n-1 for d_1..d_n and take values in
/// h_n restricted to J_n. Starred elements are functionals on h_n (x) Lambda^k J_n.
struct NamedCochainCatalog {
  int n = 0;
  AffineOrthogonal h;
  GModule adjoint;     ///< h_n acting on itself
  GModule restricted;  ///< J_n acting on h_n
  GModule trivial;     ///< h_n acting on R

  WedgeCochain I;      ///< I(d_i) = d_i
  WedgeCochain rho;    ///< rho(d_i ^ d_j) = alpha_ij
  WedgeCochain Gamma;  ///< Gamma(d_1 ^ .. ^d_i .. ^d_j .. ^ d_n) = (-1)^{i+j-1} alpha_ij
  WedgeCochain mu;     ///< mu(d_1 ^ .. ^d_j .. ^ d_n) = (-1)^{j-1} d_j

  TensorCochain I_full;    ///< zero on alpha_ij
  TensorCochain rho_full;  ///< zero when either input lies in so(n)
  TensorCochain Gamma_full;
  TensorCochain mu_full;

  ChainFunctional g_star;           ///< sum dx^i (x) dx^i
  ChainFunctional s_star;           ///< sum_{i<j} alpha*_ij (x) dx^i ^ dx^j
  ChainFunctional w_star;           ///< sum (-1)^{i-1} dx^i (x) dx^1 ^ .. ^dx^i .. ^ dx^n
  ChainFunctional w_star_literal;   ///< same with the constant sign (-1)^{n-1}
  ChainFunctional gamma_star;       ///< sum_{i<j} (-1)^{i+j-1} alpha*_ij (x) dx^1 ^ .. ^ dx^n (i, j omitted)
  ChainFunctional gamma_star_unsigned;

  TensorCochain gamma_star_full;  ///< gamma* on h_n^{(x)(n-1)} -> R

  WedgeCochain v_star;  ///< dx^1 ^ .. ^ dx^n on h_n, trivial coefficients
  WedgeCochain theta;   ///< <[a, b], c> on so(n), extended by zero on J_n
};

NamedCochainCatalog build_catalog(int n);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  ///< first failing tuple or witness
};

/// delta I = 0, delta rho = 0 (Leibniz complex); delta Gamma = (n-1)(-1)^{n-1} mu
/// (J-complex with h_n coefficients); d*(g*) = -2 s*, d*(gamma*) = 0, d*(w*) = 0
/// (mixed complex), for both sign variants where the literature differs.
std::vector<CheckResult> verify_relations(const NamedCochainCatalog& cat);

/// g f = 0 for I, gamma* over h_n and rho, Gamma, mu, g*, s*, w*, v* over so(n);
/// also records that d_1 . rho != 0.
std::vector<CheckResult> verify_invariance(const NamedCochainCatalog& cat);

/// Dimensions of (J^k)^{so(n)}, (J (x) J^k)^{so(n)} and (so(n) (x) J^k)^{so(n)}, k = 0..n,
/// where J^k is the k-th exterior power.
struct InvariantTables {
  std::vector<std::size_t> wedge;
  std::vector<std::size_t> j_tensor_wedge;
  std::vector<std::size_t> so_tensor_wedge;
};
InvariantTables invariant_tables(int n);

/// Catalog as JSON (each entry with its generating-support coefficients).
std::string catalog_to_json(const NamedCochainCatalog& cat);

}  // namespace lcoh

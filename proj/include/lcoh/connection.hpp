#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcoh/lie_algebra.hpp"
#include "lcoh/polynomial.hpp"

namespace lcoh {

/// Sum_i f_i d/dx^i on R^n.
class VectorField {
 public:
  explicit VectorField(std::size_t n = 0);
  explicit VectorField(std::vector<RationalFunction> components);
  /// d/dx^{index+1}.
  static VectorField coordinate(std::size_t n, std::size_t index);

  std::size_t dim() const { return comps_.size(); }
  const RationalFunction& operator[](std::size_t i) const { return comps_[i]; }
  RationalFunction& operator[](std::size_t i) { return comps_[i]; }
  bool is_zero() const;

  /// X(f) = sum_i X^i d_i f.
  RationalFunction apply(const RationalFunction& f) const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const RationalFunction& f, VectorField x);
  VectorField operator-() const;
  friend bool operator==(const VectorField& a, const VectorField& b) = default;

  std::string to_string() const;

 private:
  std::vector<RationalFunction> comps_;
};

/// [X, Y]^k = sum_i (X^i d_i Y^k - Y^i d_i X^k).
VectorField vf_bracket(const VectorField& x, const VectorField& y);

/// Symmetric matrix of rational functions with a cached inverse.
class Metric {
 public:
  explicit Metric(std::vector<std::vector<RationalFunction>> g);
  /// f * identity.
  static Metric conformal(std::size_t n, const RationalFunction& f);

  std::size_t dim() const { return g_.size(); }
  const RationalFunction& at(std::size_t i, std::size_t j) const { return g_[i][j]; }
  const RationalFunction& inverse(std::size_t i, std::size_t j) const { return inv_[i][j]; }
  RationalFunction inner(const VectorField& x, const VectorField& y) const;

 private:
  std::vector<std::vector<RationalFunction>> g_;
  std::vector<std::vector<RationalFunction>> inv_;
};

/// Affine connection given by Christoffel symbols Gamma^k_{ij}.
class Connection {
 public:
  /// gamma[k][i][j] = Gamma^k_{ij}. Throws NotSymmetric if symmetric is set and fails.
  Connection(std::vector<std::vector<std::vector<RationalFunction>>> gamma, bool symmetric);
  static Connection flat(std::size_t n);
  static Connection levi_civita(const Metric& metric);

  std::size_t dim() const { return gamma_.size(); }
  bool symmetric() const { return symmetric_; }
  const RationalFunction& christoffel(std::size_t k, std::size_t i, std::size_t j) const { return gamma_[k][i][j]; }

 private:
  std::vector<std::vector<std::vector<RationalFunction>>> gamma_;
  bool symmetric_;
};

/// (nabla_X Y)^k = X(Y^k) + sum_{i,j} Gamma^k_{ij} X^i Y^j.
VectorField covariant_derivative(const Connection& c, const VectorField& x, const VectorField& y);

/// R(X, Y, Z) = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
VectorField curvature(const Connection& c, const VectorField& x, const VectorField& y, const VectorField& z);

/// Leibniz coboundary of nabla on X1 (x) X2 (x) X3, all six terms.
VectorField delta_nabla(const Connection& c, const VectorField& x1, const VectorField& x2, const VectorField& x3);

struct VectorTriple {
  VectorField x1, x2, x3;
};

/// delta nabla extended additively over a formal sum of triples.
VectorField delta_nabla(const Connection& c, const std::vector<VectorTriple>& sum);

/// Delta(Z) = sum_i (-nabla_{d_i} nabla_{d_i} Z + nabla_{nabla_{d_i} d_i} Z).
VectorField laplace_beltrami(const Connection& c, const VectorField& z);

/// Throws NotLeviCivita unless c is symmetric and compatible with metric.
void check_levi_civita(const Connection& c, const Metric& metric);

/// Trace of W -> R(W, Z, Y).
RationalFunction ricci(const Connection& c, const Metric& metric, const VectorField& z, const VectorField& y);

/// sum_{j,k} g^{jk} Ric(d_j, d_k).
RationalFunction scalar_curvature(const Connection& c, const Metric& metric);

/// <R(X, Y, Y), X> / (<X,X><Y,Y> - <X,Y>^2).
RationalFunction sectional_curvature(const Connection& c, const Metric& metric, const VectorField& x,
                                     const VectorField& y);

enum class Identity { lemma_2_4, corollary_2_5 };

/// lhs - rhs of the chosen identity; zero when it holds.
/// lemma_2_4 uses (X, Z); corollary_2_5 uses Z only. Throws NotSymmetric.
VectorField identity_defect(Identity which, const Connection& c, const VectorField& x, const VectorField& z);

/// (1/x_2^2) delta_{ij} on the upper half-plane.
Metric hyperbolic_half_plane();
/// 4/(1 + x_1^2 + x_2^2)^2 delta_{ij}.
Metric stereographic_sphere();

/// Fields x_i d_j - x_j d_i (i < j, lex) followed by d_1..d_n, in the basis order of build_h_n.
std::vector<VectorField> affine_orthogonal_fields(int n);

/// Coordinates of a field in span(affine_orthogonal_fields(n)). Throws DimensionMismatch if outside.
std::vector<Rational> affine_orthogonal_coordinates(const VectorField& field, int n);

struct BracketMismatch {
  std::size_t i = 0, j = 0;
  std::string expected, computed;
};

/// Compares the structure constants of h with brackets of the defining fields.
std::vector<BracketMismatch> cross_check_h_n(const AffineOrthogonal& h);

struct ConnectionCheckConfig {
  std::string lemma = "2.1";  ///< 2.1 | 2.2 | 2.4 | 2.5
  int dim = 2;
  int degree = 3;
  int cases = 20;
  std::uint64_t seed = 20240611;
};

struct ConnectionCase {
  std::string name;
  bool pass = false;
  std::vector<std::string> inputs;  ///< polynomial strings of the case
  std::string defect;               ///< lhs - rhs when failing
};

struct ConnectionReport {
  ConnectionCheckConfig config;
  std::vector<ConnectionCase> cases;
  bool all_pass() const;
};

/// Randomized and fixed instances of the chosen identity. Throws InvalidDimension on bad config.
ConnectionReport verify_connection(const ConnectionCheckConfig& cfg);

nlohmann::json connection_report_to_json(const ConnectionReport& report);

}  // namespace lcoh

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcoh/connection.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/polynomial.hpp"
#include "properties.hpp"

using namespace lcoh;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial c(std::size_t n, long v) { return Polynomial::constant(n, Rational(v)); }

RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

VectorField random_field(std::size_t n, int degree, std::mt19937_64& rng) {
  VectorField out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rf(random_polynomial(n, degree, rng, 3));
  return out;
}

/// Gauss curvature of lambda * delta on R^2, twice: s = -(lambda Lap lambda - |grad lambda|^2) / lambda^3.
RationalFunction conformal_scalar(const Polynomial& lambda) {
  const Polynomial lx = lambda.derivative(0), ly = lambda.derivative(1);
  const Polynomial lap = lx.derivative(0) + ly.derivative(1);
  const Polynomial top = lambda * lap - lx * lx - ly * ly;
  return RationalFunction(-top, lambda.pow(3));
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const Polynomial p = c(3, 3) * x(3, 0) * x(3, 0) * x(3, 1) - Polynomial::constant(3, Rational(1) / 2) * x(3, 2) + c(3, 4);
  CHECK(p.to_string() == "3*x1^2*x2 - 1/2*x3 + 4");
  CHECK(p.derivative(0).to_string() == "6*x1*x2");
  CHECK(p.degree_in(0) == 2);
  CHECK(Polynomial(2).to_string() == "0");
  CHECK((x(2, 0) + x(2, 1)).pow(2) == x(2, 0) * x(2, 0) + c(2, 2) * x(2, 0) * x(2, 1) + x(2, 1) * x(2, 1));
}

TEST_CASE("gcd and exact division") {
  std::mt19937_64 rng(props::kDefaultSeed);
  for (int t = 0; t < 30; ++t) {
    const Polynomial a = random_polynomial(2, 2, rng);
    const Polynomial b = random_polynomial(2, 2, rng);
    Polynomial g = random_polynomial(2, 2, rng);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const Polynomial d = gcd(a * g, b * g);
    CHECK(d.leading_coefficient() == 1);
    // g divides the gcd, which divides both inputs
    CHECK_NOTHROW(exact_divide(d, g));
    CHECK(exact_divide(a * g, d) * d == a * g);
    CHECK(exact_divide(b * g, d) * d == b * g);
  }
  CHECK(gcd(Polynomial(2), Polynomial(2)).is_zero());
  CHECK_THROWS_AS(exact_divide(x(2, 0), x(2, 1)), std::domain_error);
}

TEST_CASE("rational functions are canonical") {
  const Polynomial a = x(2, 0) + c(2, 1), b = x(2, 1) - c(2, 2);
  const RationalFunction f(c(2, 2) * a * b, c(2, 4) * b);
  CHECK(f.denominator() == c(2, 1));
  CHECK(f.numerator() == Polynomial::constant(2, Rational(1) / 2) * a);
  CHECK(RationalFunction(a, b) - RationalFunction(a, b) == RationalFunction(2));
  const RationalFunction q(c(2, 1), x(2, 1));
  CHECK(q.derivative(1) == RationalFunction(-c(2, 1), x(2, 1) * x(2, 1)));
}

TEST_CASE("vector field brackets") {
  // [x1 d2, d1] = -d2
  VectorField a(2);
  a[1] = rf(x(2, 0));
  const VectorField d1 = VectorField::coordinate(2, 0);
  VectorField expected(2);
  expected[1] = rf(-c(2, 1));
  CHECK(vf_bracket(a, d1) == expected);
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto p = random_field(3, 2, rng), q = random_field(3, 2, rng), r = random_field(3, 2, rng);
  CHECK(vf_bracket(p, q) == -vf_bracket(q, p));
  CHECK((vf_bracket(p, vf_bracket(q, r)) + vf_bracket(q, vf_bracket(r, p)) + vf_bracket(r, vf_bracket(p, q)))
            .is_zero());
}

TEST_CASE("connection axioms") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const Connection hyp = Connection::levi_civita(hyperbolic_half_plane());
  for (int t = 0; t < 5; ++t) {
    const auto X = random_field(2, 2, rng), Y = random_field(2, 2, rng), Z = random_field(2, 2, rng);
    const RationalFunction f = rf(random_polynomial(2, 2, rng));
    // C-infinity linear in X, Leibniz in Y
    CHECK(covariant_derivative(hyp, f * X, Y) == f * covariant_derivative(hyp, X, Y));
    CHECK(covariant_derivative(hyp, X, f * Y) == X.apply(f) * Y + f * covariant_derivative(hyp, X, Y));
    CHECK(covariant_derivative(hyp, X, Y) - covariant_derivative(hyp, Y, X) == vf_bracket(X, Y));
    CHECK(curvature(hyp, X, Y, Z) == -curvature(hyp, Y, X, Z));
    CHECK((curvature(hyp, X, Y, Z) + curvature(hyp, Y, Z, X) + curvature(hyp, Z, X, Y)).is_zero());
  }
}

TEST_CASE("flat curvature vanishes") {
  std::mt19937_64 rng(props::kDefaultSeed);
  for (std::size_t n : {2u, 3u}) {
    const Connection flat = Connection::flat(n);
    for (int t = 0; t < 5; ++t) {
      CHECK(curvature(flat, random_field(n, 3, rng), random_field(n, 3, rng), random_field(n, 3, rng)).is_zero());
    }
  }
}

TEST_CASE("half-plane Christoffel symbols and curvature") {
  const Connection hyp = Connection::levi_civita(hyperbolic_half_plane());
  const RationalFunction inv_y(c(2, 1), x(2, 1));
  CHECK(hyp.christoffel(0, 0, 1) == -inv_y);
  CHECK(hyp.christoffel(1, 0, 0) == inv_y);
  CHECK(hyp.christoffel(1, 1, 1) == -inv_y);
  CHECK(hyp.christoffel(0, 0, 0).is_zero());
  const VectorField d1 = VectorField::coordinate(2, 0), d2 = VectorField::coordinate(2, 1);
  CHECK(curvature(hyp, d1, d2, d2) == -(inv_y * inv_y) * d1);
  CHECK_NOTHROW(check_levi_civita(hyp, hyperbolic_half_plane()));
  CHECK_THROWS_AS(check_levi_civita(Connection::flat(2), hyperbolic_half_plane()), NotLeviCivita);
}

TEST_CASE("Levi-Civita of a conformal metric matches the closed form") {
  std::mt19937_64 rng(props::kDefaultSeed);
  for (int t = 0; t < 4; ++t) {
    Polynomial lambda = random_polynomial(2, 2, rng);
    if (lambda.is_zero() || lambda.is_constant()) continue;
    const Connection lc = Connection::levi_civita(Metric::conformal(2, rf(lambda)));
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          Polynomial num(2);
          if (i == k) num += lambda.derivative(j);
          if (j == k) num += lambda.derivative(i);
          if (i == j) num -= lambda.derivative(k);
          CHECK(lc.christoffel(k, i, j) == RationalFunction(num, c(2, 2) * lambda));
        }
      }
    }
  }
}

TEST_CASE("scalar curvature against the conformal formula") {
  CHECK(scalar_curvature(Connection::levi_civita(hyperbolic_half_plane()), hyperbolic_half_plane()) ==
        RationalFunction::constant(2, Rational(-2)));
  CHECK(scalar_curvature(Connection::levi_civita(stereographic_sphere()), stereographic_sphere()) ==
        RationalFunction::constant(2, Rational(2)));
  std::mt19937_64 rng(props::kDefaultSeed);
  for (int t = 0; t < 4; ++t) {
    const Polynomial lambda = random_polynomial(2, 2, rng);
    if (lambda.is_zero()) continue;
    const Metric m = Metric::conformal(2, rf(lambda));
    CHECK(scalar_curvature(Connection::levi_civita(m), m) == conformal_scalar(lambda));
  }
}

TEST_CASE("delta nabla examples") {
  const Connection flat1 = Connection::flat(1);
  const VectorField d = VectorField::coordinate(1, 0);
  const Polynomial t = x(1, 0);
  const Polynomial f = t.pow(3) - c(1, 2) * t;
  VectorField fd(1);
  fd[0] = rf(f);
  VectorField expected(1);
  expected[0] = rf(-f.derivative(0).derivative(0));
  CHECK(delta_nabla(flat1, d, d, fd) == expected);

  // Laplacian of f d_1 on flat R^2 is -(f_xx + f_yy) d_1.
  const Connection flat2 = Connection::flat(2);
  const Polynomial g = x(2, 0).pow(3) * x(2, 1);
  VectorField gd(2);
  gd[0] = rf(g);
  VectorField lap(2);
  lap[0] = rf(-(g.derivative(0).derivative(0) + g.derivative(1).derivative(1)));
  CHECK(laplace_beltrami(flat2, gd) == lap);
}

TEST_CASE("asymmetric Christoffel symbols are rejected") {
  std::vector<std::vector<std::vector<RationalFunction>>> gamma(
      2, std::vector<std::vector<RationalFunction>>(2, std::vector<RationalFunction>(2, RationalFunction(2))));
  gamma[0][0][1] = rf(c(2, 1));
  CHECK_THROWS_AS(Connection(gamma, true), NotSymmetric);
  const Connection torsion(gamma, false);
  const VectorField z = VectorField::coordinate(2, 0);
  CHECK_THROWS_AS(identity_defect(Identity::corollary_2_5, torsion, z, z), NotSymmetric);
}

TEST_CASE("identity batteries") {
  for (const auto& [lemma, dim] : std::vector<std::pair<std::string, int>>{
           {"2.1", 1}, {"2.2", 2}, {"2.2", 3}, {"2.4", 2}, {"2.4", 3}, {"2.5", 2}, {"2.5", 3}}) {
    ConnectionCheckConfig cfg;
    cfg.lemma = lemma;
    cfg.dim = dim;
    const auto rep = verify_connection(cfg);
    CHECK_FALSE(rep.cases.empty());
    for (const auto& k : rep.cases) {
      INFO(lemma << " dim " << dim << ": " << k.name << " " << k.defect);
      CHECK(k.pass);
    }
  }
  ConnectionCheckConfig bad;
  bad.lemma = "2.1";
  bad.dim = 2;
  CHECK_THROWS_AS(verify_connection(bad), InvalidDimension);
}

TEST_CASE("h_n fields") {
  for (int n = 2; n <= 5; ++n) {
    const auto fields = affine_orthogonal_fields(n);
    CHECK(fields.size() == static_cast<std::size_t>(n * (n - 1) / 2 + n));
    const auto coords = affine_orthogonal_coordinates(fields.back(), n);
    CHECK(coords.back() == 1);
  }
  VectorField sq(2);
  sq[0] = rf(x(2, 0) * x(2, 0));
  CHECK_THROWS_AS(affine_orthogonal_coordinates(sq, 2), DimensionMismatch);
}

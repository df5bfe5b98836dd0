#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lcoh/rational.hpp"

namespace lcoh {

/// Multivariate polynomial in x_1..x_n over Q, sparse in monomials.
///
/// Monomials are exponent vectors compared lexicographically, so the last
/// entry of the term map is the leading term for x_1 > x_2 > ... > x_n.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// x_{index+1}, zero-based index.
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term; zero for the zero polynomial.
  Rational constant_term() const;
  Rational coefficient(const Exponents& exps) const;
  int degree_in(std::size_t var) const;
  int total_degree() const;
  const Rational& leading_coefficient() const;
  const Exponents& leading_exponents() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  /// "3*x1^2*x2 - 1/2*x3 + 4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_vars(const Polynomial& other) const;

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic (leading coefficient 1) greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Random polynomial with integer coefficients in [-bound, bound] and total degree <= degree.
Polynomial random_polynomial(std::size_t nvars, int degree, std::mt19937_64& rng, int bound = 5);

/// Quotient of polynomials kept in canonical form: gcd(num, den) = 1, den monic.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t nvars = 0);
  RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(std::size_t nvars, const Rational& c);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  RationalFunction derivative(std::size_t var) const;

  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace lcoh

#include "lcoh/polynomial.hpp"

#include <stdexcept>

#include "lcoh/errors.hpp"

namespace lcoh {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents exps, const Rational& c) {
  if (exps.size() != nvars) throw DimensionMismatch("exponent vector has wrong length");
  Polynomial p(nvars);
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const Polynomial::Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (lcoh::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (lcoh::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::check_vars(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (lcoh::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_vars(b);
  Polynomial out(a.nvars_);
  Polynomial::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionMismatch("derivative variable out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += lcoh::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += lcoh::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial q(a.nvars());
  Polynomial r = a;
  const auto& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    Polynomial::Exponents e = r.leading_exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] -= lb[i];
      if (e[i] < 0) throw std::domain_error("polynomial division is not exact");
    }
    Polynomial t = Polynomial::monomial(a.nvars(), e, r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

int main_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return static_cast<int>(v);
  }
  return -1;
}

Polynomial monic(Polynomial p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_coefficient();
  return p *= inv;
}

/// Coefficient of x_var^deg, as a polynomial free of x_var.
Polynomial coefficient_in(const Polynomial& p, std::size_t var, int deg) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != deg) continue;
    Polynomial::Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (int d = p.degree_in(var); d >= 0; --d) {
    Polynomial c = coefficient_in(p, var, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return exact_divide(p, content_in(p, var));
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lb = coefficient_in(b, var, db);
  while (!a.is_zero()) {
    const int da = a.degree_in(var);
    if (da < db) break;
    Polynomial::Exponents shift(a.nvars(), 0);
    shift[var] = da - db;
    Polynomial la = coefficient_in(a, var, da);
    a = lb * a - la * Polynomial::monomial(a.nvars(), shift, Rational(1)) * b;
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("gcd over different variable sets");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const int v = main_variable(a, b);
  if (v < 0) return Polynomial::constant(a.nvars(), Rational(1));
  const auto var = static_cast<std::size_t>(v);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  const Polynomial c = gcd(content_in(a, var), content_in(b, var));
  Polynomial p = primitive_part(a, var);
  Polynomial q = primitive_part(b, var);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = pseudo_remainder(p, q, var);
    p = std::move(q);
    q = primitive_part(r, var);
  }
  if (p.degree_in(var) == 0) return monic(c);
  return monic(primitive_part(p, var) * c);
}

Polynomial random_polynomial(std::size_t nvars, int degree, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  Polynomial p(nvars);
  Polynomial::Exponents e(nvars, 0);
  // Enumerate every exponent vector of total degree <= degree.
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == nvars) {
      p.add_term(e, Rational(coeff(rng)));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[i] = d;
      self(self, i + 1, left - d);
    }
    e[i] = 0;
  };
  visit(visit, 0, degree);
  return p;
}

RationalFunction::RationalFunction(std::size_t nvars)
    : num_(nvars), den_(Polynomial::constant(nvars, Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw DimensionMismatch("numerator and denominator variable sets differ");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& c) {
  return RationalFunction(Polynomial::constant(nvars, c));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  Rational inv = 1 / den_.leading_coefficient();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * other.den_;
  den_ = den_ * other.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace lcoh

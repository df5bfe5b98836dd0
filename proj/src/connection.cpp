#include "lcoh/connection.hpp"

#include <stdexcept>

#include "lcoh/errors.hpp"

namespace lcoh {

namespace {

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("ambient dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

RationalFunction zero_fn(std::size_t n) { return RationalFunction(n); }
RationalFunction const_fn(std::size_t n, const Rational& c) { return RationalFunction::constant(n, c); }
RationalFunction var_fn(std::size_t n, std::size_t i) { return RationalFunction(Polynomial::variable(n, i)); }

}  // namespace

VectorField::VectorField(std::size_t n) : comps_(n, zero_fn(n)) {}

VectorField::VectorField(std::vector<RationalFunction> components) : comps_(std::move(components)) {
  for (const auto& f : comps_) check_dim(f.nvars(), comps_.size());
}

VectorField VectorField::coordinate(std::size_t n, std::size_t index) {
  VectorField v(n);
  v[index] = const_fn(n, Rational(1));
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& f : comps_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  check_dim(f.nvars(), dim());
  RationalFunction out = zero_fn(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (comps_[i].is_zero()) continue;
    out += comps_[i] * f.derivative(i);
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  check_dim(dim(), other.dim());
  for (std::size_t i = 0; i < dim(); ++i) comps_[i] += other.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  check_dim(dim(), other.dim());
  for (std::size_t i = 0; i < dim(); ++i) comps_[i] -= other.comps_[i];
  return *this;
}

VectorField operator*(const RationalFunction& f, VectorField x) {
  check_dim(f.nvars(), x.dim());
  for (auto& c : x.comps_) c *= f;
  return x;
}

VectorField VectorField::operator-() const {
  VectorField v = *this;
  for (auto& c : v.comps_) c = -c;
  return v;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comps_[i].to_string() + ")*d" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  check_dim(x.dim(), y.dim());
  VectorField out(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) out[k] = x.apply(y[k]) - y.apply(x[k]);
  return out;
}

Metric::Metric(std::vector<std::vector<RationalFunction>> g) : g_(std::move(g)) {
  const std::size_t n = g_.size();
  for (std::size_t i = 0; i < n; ++i) {
    check_dim(g_[i].size(), n);
    for (std::size_t j = 0; j < n; ++j) {
      check_dim(g_[i][j].nvars(), n);
      if (!(g_[i][j] == g_[j][i])) throw InvalidDimension("metric is not symmetric");
    }
  }
  // Gauss-Jordan over the field of rational functions.
  auto a = g_;
  inv_.assign(n, std::vector<RationalFunction>(n, zero_fn(n)));
  for (std::size_t i = 0; i < n; ++i) inv_[i][i] = const_fn(n, Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw InvalidDimension("metric determinant vanishes identically");
    std::swap(a[piv], a[col]);
    std::swap(inv_[piv], inv_[col]);
    const RationalFunction p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv_[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const RationalFunction f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv_[r][j] -= f * inv_[col][j];
      }
    }
  }
}

Metric Metric::conformal(std::size_t n, const RationalFunction& f) {
  std::vector<std::vector<RationalFunction>> g(n, std::vector<RationalFunction>(n, zero_fn(n)));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = f;
  return Metric(std::move(g));
}

RationalFunction Metric::inner(const VectorField& x, const VectorField& y) const {
  check_dim(x.dim(), dim());
  check_dim(y.dim(), dim());
  RationalFunction out = zero_fn(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (g_[i][j].is_zero() || x[i].is_zero() || y[j].is_zero()) continue;
      out += g_[i][j] * x[i] * y[j];
    }
  }
  return out;
}

Connection::Connection(std::vector<std::vector<std::vector<RationalFunction>>> gamma, bool symmetric)
    : gamma_(std::move(gamma)), symmetric_(symmetric) {
  const std::size_t n = gamma_.size();
  for (const auto& plane : gamma_) {
    check_dim(plane.size(), n);
    for (const auto& row : plane) {
      check_dim(row.size(), n);
      for (const auto& f : row) check_dim(f.nvars(), n);
    }
  }
  if (symmetric_) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!(gamma_[k][i][j] == gamma_[k][j][i])) {
            throw NotSymmetric("Gamma^" + std::to_string(k + 1) + "_" + std::to_string(i + 1) +
                               std::to_string(j + 1) + " != Gamma^" + std::to_string(k + 1) + "_" +
                               std::to_string(j + 1) + std::to_string(i + 1));
          }
        }
      }
    }
  }
}

Connection Connection::flat(std::size_t n) {
  return Connection(std::vector(n, std::vector(n, std::vector<RationalFunction>(n, zero_fn(n)))), true);
}

Connection Connection::levi_civita(const Metric& metric) {
  const std::size_t n = metric.dim();
  std::vector<std::vector<std::vector<RationalFunction>>> d(
      n, std::vector(n, std::vector<RationalFunction>(n, zero_fn(n))));
  // d[l][i][j] = d_l g_ij
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[l][i][j] = metric.at(i, j).derivative(l);
    }
  }
  auto gamma = std::vector(n, std::vector(n, std::vector<RationalFunction>(n, zero_fn(n))));
  const RationalFunction half = const_fn(n, Rational(1, 2));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        RationalFunction s = zero_fn(n);
        for (std::size_t l = 0; l < n; ++l) {
          if (metric.inverse(k, l).is_zero()) continue;
          s += metric.inverse(k, l) * (d[i][j][l] + d[j][i][l] - d[l][i][j]);
        }
        gamma[k][i][j] = half * s;
      }
    }
  }
  return Connection(std::move(gamma), true);
}

VectorField covariant_derivative(const Connection& c, const VectorField& x, const VectorField& y) {
  check_dim(c.dim(), x.dim());
  check_dim(c.dim(), y.dim());
  const std::size_t n = c.dim();
  VectorField out(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalFunction v = x.apply(y[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero() || c.christoffel(k, i, j).is_zero()) continue;
        v += c.christoffel(k, i, j) * x[i] * y[j];
      }
    }
    out[k] = std::move(v);
  }
  return out;
}

VectorField curvature(const Connection& c, const VectorField& x, const VectorField& y, const VectorField& z) {
  return covariant_derivative(c, x, covariant_derivative(c, y, z)) -
         covariant_derivative(c, y, covariant_derivative(c, x, z)) -
         covariant_derivative(c, vf_bracket(x, y), z);
}

VectorField delta_nabla(const Connection& c, const VectorField& x1, const VectorField& x2, const VectorField& x3) {
  auto nab = [&](const VectorField& a, const VectorField& b) { return covariant_derivative(c, a, b); };
  VectorField out = -vf_bracket(x1, nab(x2, x3));
  out += vf_bracket(x2, nab(x1, x3));
  out -= vf_bracket(x3, nab(x1, x2));
  out += nab(vf_bracket(x1, x2), x3);
  out -= nab(vf_bracket(x1, x3), x2);
  out -= nab(x1, vf_bracket(x2, x3));
  return out;
}

VectorField delta_nabla(const Connection& c, const std::vector<VectorTriple>& sum) {
  VectorField out(c.dim());
  for (const auto& t : sum) out += delta_nabla(c, t.x1, t.x2, t.x3);
  return out;
}

VectorField laplace_beltrami(const Connection& c, const VectorField& z) {
  check_dim(c.dim(), z.dim());
  VectorField out(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const VectorField di = VectorField::coordinate(c.dim(), i);
    out -= covariant_derivative(c, di, covariant_derivative(c, di, z));
    out += covariant_derivative(c, covariant_derivative(c, di, di), z);
  }
  return out;
}

void check_levi_civita(const Connection& c, const Metric& metric) {
  check_dim(c.dim(), metric.dim());
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(c.christoffel(k, i, j) == c.christoffel(k, j, i))) throw NotLeviCivita("connection is not symmetric");
      }
    }
  }
  // d_k g_ij = sum_l (Gamma^l_ki g_lj + Gamma^l_kj g_il)
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        RationalFunction rhs = zero_fn(n);
        for (std::size_t l = 0; l < n; ++l) {
          rhs += c.christoffel(l, k, i) * metric.at(l, j) + c.christoffel(l, k, j) * metric.at(i, l);
        }
        if (!(metric.at(i, j).derivative(k) == rhs)) {
          throw NotLeviCivita("metric compatibility fails for d_" + std::to_string(k + 1) + " g_" +
                              std::to_string(i + 1) + std::to_string(j + 1));
        }
      }
    }
  }
}

RationalFunction ricci(const Connection& c, const Metric& metric, const VectorField& z, const VectorField& y) {
  check_levi_civita(c, metric);
  RationalFunction out = zero_fn(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    out += curvature(c, VectorField::coordinate(c.dim(), i), z, y)[i];
  }
  return out;
}

RationalFunction scalar_curvature(const Connection& c, const Metric& metric) {
  check_levi_civita(c, metric);
  const std::size_t n = c.dim();
  RationalFunction out = zero_fn(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (metric.inverse(j, k).is_zero()) continue;
      out += metric.inverse(j, k) *
             ricci(c, metric, VectorField::coordinate(n, j), VectorField::coordinate(n, k));
    }
  }
  return out;
}

RationalFunction sectional_curvature(const Connection& c, const Metric& metric, const VectorField& x,
                                     const VectorField& y) {
  const RationalFunction num = metric.inner(curvature(c, x, y, y), x);
  const RationalFunction xy = metric.inner(x, y);
  return num / (metric.inner(x, x) * metric.inner(y, y) - xy * xy);
}

VectorField identity_defect(Identity which, const Connection& c, const VectorField& x, const VectorField& z) {
  if (!c.symmetric()) throw NotSymmetric("identity requires a symmetric connection");
  const std::size_t n = c.dim();
  if (which == Identity::lemma_2_4) {
    const VectorField xx = covariant_derivative(c, x, x);
    VectorField rhs = curvature(c, x, z, x);
    rhs -= covariant_derivative(c, x, covariant_derivative(c, x, z));
    rhs += covariant_derivative(c, xx, z);
    return delta_nabla(c, x, x, z) - rhs;
  }
  std::vector<VectorTriple> sum;
  VectorField rhs = laplace_beltrami(c, z);
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField di = VectorField::coordinate(n, i);
    sum.push_back({di, di, z});
    rhs += curvature(c, di, z, di);
  }
  return delta_nabla(c, sum) - rhs;
}

Metric hyperbolic_half_plane() {
  const Polynomial y = Polynomial::variable(2, 1);
  return Metric::conformal(2, RationalFunction(Polynomial::constant(2, Rational(1)), y * y));
}

Metric stereographic_sphere() {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const Polynomial q = Polynomial::constant(2, Rational(1)) + x * x + y * y;
  return Metric::conformal(2, RationalFunction(Polynomial::constant(2, Rational(4)), q * q));
}

std::vector<VectorField> affine_orthogonal_fields(int n) {
  if (n < 1) throw InvalidDimension("h_n needs n >= 1");
  const auto m = static_cast<std::size_t>(n);
  std::vector<VectorField> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      VectorField a(m);
      a[j] = var_fn(m, i);
      a[i] = -var_fn(m, j);
      out.push_back(std::move(a));
    }
  }
  for (std::size_t i = 0; i < m; ++i) out.push_back(VectorField::coordinate(m, i));
  return out;
}

std::vector<Rational> affine_orthogonal_coordinates(const VectorField& field, int n) {
  const auto m = static_cast<std::size_t>(n);
  check_dim(field.dim(), m);
  const auto basis = affine_orthogonal_fields(n);
  std::vector<Rational> coords(basis.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (!field[i].denominator().is_constant()) throw DimensionMismatch("field has non-polynomial coefficients");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Polynomial::Exponents e(m, 0);
      e[i] = 1;
      coords[idx++] = field[j].numerator().coefficient(e) / field[j].denominator().constant_term();
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    coords[idx++] = field[i].numerator().constant_term() / field[i].denominator().constant_term();
  }
  VectorField rebuilt(m);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (is_zero(coords[b])) continue;
    rebuilt += const_fn(m, coords[b]) * basis[b];
  }
  if (!(rebuilt == field)) throw DimensionMismatch("field is not in the span of the h_n fields");
  return coords;
}

std::vector<BracketMismatch> cross_check_h_n(const AffineOrthogonal& h) {
  const auto fields = affine_orthogonal_fields(h.n);
  const std::size_t dim = h.algebra.dim();
  if (fields.size() != dim) throw DimensionMismatch("h_n field count differs from algebra dimension");
  std::vector<BracketMismatch> out;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto coords = affine_orthogonal_coordinates(vf_bracket(fields[i], fields[j]), h.n);
      bool same = true;
      for (std::size_t k = 0; k < dim; ++k) {
        if (coords[k] != h.algebra.structure_constant(i, j, k)) same = false;
      }
      if (same) continue;
      BracketMismatch m{i, j, {}, {}};
      for (std::size_t k = 0; k < dim; ++k) {
        m.expected += (k ? "," : "") + to_string(h.algebra.structure_constant(i, j, k));
        m.computed += (k ? "," : "") + to_string(coords[k]);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace lcoh

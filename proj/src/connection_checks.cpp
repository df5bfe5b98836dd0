#include <random>

#include "lcoh/connection.hpp"
#include "lcoh/errors.hpp"

namespace lcoh {

namespace {

RationalFunction poly_fn(Polynomial p) { return RationalFunction(std::move(p)); }

VectorField random_field(std::size_t n, int degree, std::mt19937_64& rng) {
  VectorField v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = poly_fn(random_polynomial(n, degree, rng));
  return v;
}

std::vector<std::string> field_inputs(std::initializer_list<const VectorField*> fields) {
  std::vector<std::string> out;
  for (const auto* f : fields) out.push_back(f->to_string());
  return out;
}

ConnectionCase field_case(std::string name, const VectorField& defect, std::vector<std::string> inputs) {
  ConnectionCase c{std::move(name), defect.is_zero(), std::move(inputs), {}};
  if (!c.pass) c.defect = defect.to_string();
  return c;
}

ConnectionCase scalar_case(std::string name, const RationalFunction& defect, std::vector<std::string> inputs) {
  ConnectionCase c{std::move(name), defect.is_zero(), std::move(inputs), {}};
  if (!c.pass) c.defect = defect.to_string();
  return c;
}

/// Sum_i d_i (x) d_i (x) z as a formal sum of triples.
std::vector<VectorTriple> trace_triples(std::size_t n, const VectorField& z) {
  std::vector<VectorTriple> sum;
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField di = VectorField::coordinate(n, i);
    sum.push_back({di, di, z});
  }
  return sum;
}

RationalFunction euclidean_laplacian(const RationalFunction& f) {
  RationalFunction out(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) out += f.derivative(i).derivative(i);
  return out;
}

void lemma_2_1(const ConnectionCheckConfig& cfg, std::mt19937_64& rng, ConnectionReport& report) {
  const Connection flat = Connection::flat(1);
  const VectorField d = VectorField::coordinate(1, 0);
  for (int t = 0; t < cfg.cases; ++t) {
    const RationalFunction f1 = poly_fn(random_polynomial(1, cfg.degree, rng));
    const RationalFunction f2 = poly_fn(random_polynomial(1, cfg.degree, rng));
    const RationalFunction f3 = poly_fn(random_polynomial(1, cfg.degree, rng));
    const RationalFunction a1 = f1.derivative(0), a2 = f2.derivative(0), a3 = f3.derivative(0);
    const RationalFunction expected = a1 * f2 * a3 - f1 * a2 * a3 - f1 * f2 * a3.derivative(0);
    const VectorField lhs = delta_nabla(flat, f1 * d, f2 * d, f3 * d);
    report.cases.push_back(field_case("triple formula", lhs - expected * d,
                                      {f1.to_string(), f2.to_string(), f3.to_string()}));
  }
  for (int t = 0; t < cfg.cases; ++t) {
    const RationalFunction f = poly_fn(random_polynomial(1, cfg.degree, rng));
    const VectorField lhs = delta_nabla(flat, d, d, f * d);
    const VectorField rhs = -(f.derivative(0).derivative(0) * d);
    report.cases.push_back(field_case("d (x) d (x) f d = -f'' d", lhs - rhs, {f.to_string()}));
  }
}

void lemma_2_2(const ConnectionCheckConfig& cfg, std::mt19937_64& rng, ConnectionReport& report) {
  const auto n = static_cast<std::size_t>(cfg.dim);
  const Connection flat = Connection::flat(n);
  std::uniform_int_distribution<int> small(-5, 5);
  for (int t = 0; t < cfg.cases; ++t) {
    const RationalFunction f = poly_fn(random_polynomial(n, cfg.degree, rng));
    VectorField z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = RationalFunction::constant(n, Rational(small(rng)));
    const VectorField lhs = delta_nabla(flat, trace_triples(n, f * z));
    const VectorField rhs = -(euclidean_laplacian(f) * z);
    report.cases.push_back(field_case("trace form = -(Laplacian f) Z", lhs - rhs, {f.to_string(), z.to_string()}));
  }
  if (n < 2) return;
  // Unit constant Z from the Pythagorean pair ((1-s^2)/(1+s^2), 2s/(1+s^2)).
  const Metric euclid = Metric::conformal(n, RationalFunction::constant(n, Rational(1)));
  std::uniform_int_distribution<int> param(1, 9);
  for (int t = 0; t < cfg.cases; ++t) {
    const RationalFunction f = poly_fn(random_polynomial(n, cfg.degree, rng));
    const Rational s(param(rng));
    VectorField z(n);
    z[0] = RationalFunction::constant(n, (1 - s * s) / (1 + s * s));
    z[1] = RationalFunction::constant(n, 2 * s / (1 + s * s));
    const RationalFunction lhs = euclid.inner(delta_nabla(flat, trace_triples(n, f * z)), z);
    report.cases.push_back(scalar_case("<trace form, Z> = -(Laplacian f) for unit Z", lhs + euclidean_laplacian(f),
                                       {f.to_string(), z.to_string()}));
  }
}

void lemma_2_4(const ConnectionCheckConfig& cfg, std::mt19937_64& rng, ConnectionReport& report) {
  const auto n = static_cast<std::size_t>(cfg.dim);
  const Connection flat = Connection::flat(n);
  for (int t = 0; t < cfg.cases; ++t) {
    const VectorField x = random_field(n, cfg.degree, rng);
    const VectorField z = random_field(n, cfg.degree, rng);
    report.cases.push_back(
        field_case("flat X (x) X (x) Z", identity_defect(Identity::lemma_2_4, flat, x, z), field_inputs({&x, &z})));
  }
  const Connection hyp = Connection::levi_civita(hyperbolic_half_plane());
  const int d = std::min(cfg.degree, 2);
  for (int t = 0; t < cfg.cases; ++t) {
    const VectorField x = random_field(2, d, rng);
    const VectorField z = random_field(2, d, rng);
    report.cases.push_back(field_case("half-plane X (x) X (x) Z", identity_defect(Identity::lemma_2_4, hyp, x, z),
                                      field_inputs({&x, &z})));
  }
}

void corollary_2_5(const ConnectionCheckConfig& cfg, std::mt19937_64& rng, ConnectionReport& report) {
  const auto n = static_cast<std::size_t>(cfg.dim);
  const Connection flat = Connection::flat(n);
  for (int t = 0; t < cfg.cases; ++t) {
    const VectorField z = random_field(n, cfg.degree, rng);
    report.cases.push_back(
        field_case("flat trace identity", identity_defect(Identity::corollary_2_5, flat, z, z), field_inputs({&z})));
  }
  const Metric hyp_metric = hyperbolic_half_plane();
  const Connection hyp = Connection::levi_civita(hyp_metric);
  const Metric sphere_metric = stereographic_sphere();
  const Connection sphere = Connection::levi_civita(sphere_metric);
  const int d = std::min(cfg.degree, 2);
  for (int t = 0; t < cfg.cases; ++t) {
    const VectorField z = random_field(2, d, rng);
    report.cases.push_back(field_case("half-plane trace identity", identity_defect(Identity::corollary_2_5, hyp, z, z),
                                      field_inputs({&z})));
  }
  {
    VectorField z(2);
    z[0] = poly_fn(Polynomial::variable(2, 1));
    report.cases.push_back(field_case("half-plane trace identity, Z = x2 d1",
                                      identity_defect(Identity::corollary_2_5, hyp, z, z), field_inputs({&z})));
    report.cases.push_back(field_case("sphere trace identity, Z = x2 d1",
                                      identity_defect(Identity::corollary_2_5, sphere, z, z), field_inputs({&z})));
  }

  const RationalFunction two = RationalFunction::constant(2, Rational(2));
  report.cases.push_back(scalar_case("half-plane scalar curvature = -2", scalar_curvature(hyp, hyp_metric) + two, {}));
  report.cases.push_back(scalar_case("sphere scalar curvature = 2", scalar_curvature(sphere, sphere_metric) - two, {}));
  const VectorField d1 = VectorField::coordinate(2, 0), d2 = VectorField::coordinate(2, 1);
  report.cases.push_back(scalar_case("half-plane sectional curvature = -1",
                                     sectional_curvature(hyp, hyp_metric, d1, d2) +
                                         RationalFunction::constant(2, Rational(1)),
                                     {}));

  if (n < 2) return;
  // Flat instance of the eigenfunction statement: s = 0, so the trace form
  // vanishes on f d_j exactly when f is harmonic.
  const Polynomial x1 = Polynomial::variable(n, 0), x2 = Polynomial::variable(n, 1);
  const RationalFunction harmonic = poly_fn(x1 * x1 - x2 * x2);
  const RationalFunction non_harmonic = poly_fn(x1 * x1);
  for (std::size_t j = 0; j < n; ++j) {
    const VectorField dj = VectorField::coordinate(n, j);
    report.cases.push_back(field_case("harmonic f: trace form on f d_" + std::to_string(j + 1) + " = 0",
                                      delta_nabla(flat, trace_triples(n, harmonic * dj)), {harmonic.to_string()}));
    const VectorField v = delta_nabla(flat, trace_triples(n, non_harmonic * dj));
    ConnectionCase c{"non-harmonic f: trace form on f d_" + std::to_string(j + 1) + " != 0", !v.is_zero(),
                     {non_harmonic.to_string()}, {}};
    if (!c.pass) c.defect = "0";
    report.cases.push_back(std::move(c));
  }
}

}  // namespace

bool ConnectionReport::all_pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

ConnectionReport verify_connection(const ConnectionCheckConfig& cfg) {
  if (cfg.dim < 1 || cfg.degree < 0 || cfg.cases < 0) throw InvalidDimension("dim >= 1, degree >= 0, cases >= 0");
  ConnectionReport report{cfg, {}};
  std::mt19937_64 rng(cfg.seed);
  if (cfg.lemma == "2.1") {
    if (cfg.dim != 1) throw InvalidDimension("lemma 2.1 lives on R^1; use --dim 1");
    lemma_2_1(cfg, rng, report);
  } else if (cfg.lemma == "2.2") {
    lemma_2_2(cfg, rng, report);
  } else if (cfg.lemma == "2.4") {
    lemma_2_4(cfg, rng, report);
  } else if (cfg.lemma == "2.5") {
    corollary_2_5(cfg, rng, report);
  } else {
    throw InvalidDimension("unknown lemma '" + cfg.lemma + "'");
  }
  return report;
}

nlohmann::json connection_report_to_json(const ConnectionReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& c : report.cases) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}, {"inputs", c.inputs}};
    if (!c.pass) j["counterexample"] = c.defect;
    cases.push_back(std::move(j));
    passed += c.pass ? 1 : 0;
  }
  const auto& cfg = report.config;
  return {{"lemma", cfg.lemma},   {"dim", cfg.dim},          {"degree", cfg.degree},
          {"cases", cfg.cases},   {"seed", cfg.seed},        {"passed", passed},
          {"total", report.cases.size()}, {"pass", report.all_pass()}, {"results", std::move(cases)}};
}

}  // namespace lcoh

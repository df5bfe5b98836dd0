#include "lcoh/named_cochains.hpp"

#include <json.hpp>

#include "lcoh/errors.hpp"

namespace lcoh {

namespace {

std::vector<std::uint32_t> all_but(int n, std::initializer_list<int> omitted) {
  std::vector<std::uint32_t> out;
  for (int i = 1; i <= n; ++i) {
    if (std::find(omitted.begin(), omitted.end(), i) == omitted.end()) out.push_back(static_cast<std::uint32_t>(i - 1));
  }
  return out;
}

Rational sign_of(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

std::string labels_of(const LieAlgebra& alg, const std::vector<std::uint32_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + alg.labels()[t[i]];
  return s + ")";
}

template <class Cochain>
std::string first_term(const Cochain& f, const LieAlgebra& domain, const LieAlgebra& values) {
  if (f.is_zero()) return {};
  const auto& [idx, c] = *f.terms().begin();
  return labels_of(domain, idx.tuple) + " -> " + values.labels()[idx.target] + " : " + to_string(c);
}

std::string first_term(const ChainFunctional& f, const LieAlgebra& domain, const LieAlgebra& values) {
  if (f.is_zero()) return {};
  const auto& [idx, c] = *f.terms().begin();
  return values.labels()[idx.x] + " (x) " + labels_of(domain, idx.tuple) + " : " + to_string(c);
}

template <class Cochain>
CheckResult compare(std::string name, Cochain lhs, const Cochain& rhs, const LieAlgebra& domain,
                    const LieAlgebra& values) {
  Cochain diff = rhs;
  diff *= Rational(-1);
  lhs += diff;
  CheckResult r;
  r.name = std::move(name);
  r.pass = lhs.is_zero();
  if (!r.pass) r.detail = "difference at " + first_term(lhs, domain, values);
  return r;
}

}  // namespace

NamedCochainCatalog build_catalog(int n) {
  if (n < 3) throw InvalidDimension("the named cochains need n >= 3");
  NamedCochainCatalog cat;
  cat.n = n;
  cat.h = build_h_n(n);
  const auto& alg = cat.h.algebra;
  const std::size_t d = alg.dim();
  const auto un = static_cast<std::size_t>(n);
  cat.adjoint = make_module(alg, ModuleKind::adjoint);
  cat.restricted = restrict_module(cat.adjoint, cat.h.translations);
  cat.trivial = make_module(alg, ModuleKind::trivial);

  cat.I = WedgeCochain(1, un, d);
  cat.rho = WedgeCochain(2, un, d);
  cat.Gamma = WedgeCochain(un - 2, un, d);
  cat.mu = WedgeCochain(un - 1, un, d);
  cat.g_star = ChainFunctional(1, un, d);
  cat.s_star = ChainFunctional(2, un, d);
  cat.w_star = ChainFunctional(un - 1, un, d);
  cat.w_star_literal = ChainFunctional(un - 1, un, d);
  cat.gamma_star = ChainFunctional(un - 2, un, d);
  cat.gamma_star_unsigned = ChainFunctional(un - 2, un, d);

  for (int i = 1; i <= n; ++i) {
    const auto li = static_cast<std::uint32_t>(i - 1);
    cat.I.add({li}, partial_index(n, i), Rational(1));
    cat.g_star.add(partial_index(n, i), {li}, Rational(1));
    cat.mu.add(all_but(n, {i}), partial_index(n, i), sign_of(i - 1));
    cat.w_star.add(partial_index(n, i), all_but(n, {i}), sign_of(i - 1));
    cat.w_star_literal.add(partial_index(n, i), all_but(n, {i}), sign_of(n - 1));
    for (int j = i + 1; j <= n; ++j) {
      const auto lj = static_cast<std::uint32_t>(j - 1);
      const auto a = alpha_index(n, i, j);
      cat.rho.add({li, lj}, a, Rational(1));
      cat.s_star.add(a, {li, lj}, Rational(1));
      cat.Gamma.add(all_but(n, {i, j}), a, sign_of(i + j - 1));
      cat.gamma_star.add(a, all_but(n, {i, j}), sign_of(i + j - 1));
      cat.gamma_star_unsigned.add(a, all_but(n, {i, j}), Rational(1));
    }
  }

  cat.I_full = skew_extend(cat.I, cat.h.translations);
  cat.rho_full = skew_extend(cat.rho, cat.h.translations);
  cat.Gamma_full = skew_extend(cat.Gamma, cat.h.translations);
  cat.mu_full = skew_extend(cat.mu, cat.h.translations);
  cat.gamma_star_full = skew_extend(cat.gamma_star, cat.h.translations);

  cat.v_star = WedgeCochain(un, d, 1);
  std::vector<std::uint32_t> partials;
  for (int i = 1; i <= n; ++i) partials.push_back(partial_index(n, i));
  cat.v_star.add(partials, 0, Rational(1));

  // Cartan 3-form of so(n) for the invariant inner product making alpha_ij orthonormal.
  cat.theta = WedgeCochain(3, d, 1);
  const auto& rot = cat.h.rotations.members();
  for (std::size_t a = 0; a < rot.size(); ++a) {
    for (std::size_t b = a + 1; b < rot.size(); ++b) {
      for (std::size_t c = b + 1; c < rot.size(); ++c) {
        const Rational v = alg.structure_constant(rot[a], rot[b], rot[c]);
        if (sgn(v) != 0) cat.theta.add({rot[a], rot[b], rot[c]}, 0, v);
      }
    }
  }
  return cat;
}

std::vector<CheckResult> verify_relations(const NamedCochainCatalog& cat) {
  const auto& alg = cat.h.algebra;
  const auto& J = cat.h.translations.algebra();
  const int n = cat.n;
  std::vector<CheckResult> out;

  const TensorCochain zero1(2, alg.dim(), alg.dim());
  out.push_back(compare("delta I = 0", leibniz_coboundary(cat.I_full, alg, cat.adjoint), zero1, alg, alg));
  const TensorCochain zero2(3, alg.dim(), alg.dim());
  out.push_back(compare("delta rho = 0", leibniz_coboundary(cat.rho_full, alg, cat.adjoint), zero2, alg, alg));

  const WedgeCochain dGamma = ce_coboundary(cat.Gamma, J, cat.restricted);
  WedgeCochain expected_mu = cat.mu;
  expected_mu *= Rational(n - 1) * sign_of(n - 1);
  out.push_back(compare("delta Gamma = (n-1)(-1)^(n-1) mu", dGamma, expected_mu, J, alg));
  {
    // The scalar actually relating the two cochains.
    const auto& [idx, c] = *cat.mu.terms().begin();
    const Rational lambda = dGamma.coefficient(idx.tuple, idx.target) / c;
    WedgeCochain scaled = cat.mu;
    scaled *= lambda;
    auto r = compare("delta Gamma is a multiple of mu", dGamma, scaled, J, alg);
    if (r.pass) r.detail = "delta Gamma = " + to_string(lambda) + " mu";
    out.push_back(std::move(r));
  }

  ChainFunctional expected_s = cat.s_star;
  expected_s *= Rational(-2);
  out.push_back(compare("delta g* = -2 s*", d_star(cat.g_star, J, cat.restricted), expected_s, J, alg));

  auto closed = [&](std::string name, const ChainFunctional& f) {
    const ChainFunctional zero(f.degree() + 1, f.algebra_dim(), f.module_dim());
    out.push_back(compare(std::move(name), d_star(f, J, cat.restricted), zero, J, alg));
  };
  closed("delta gamma* = 0", cat.gamma_star);
  closed("delta gamma* = 0 (unsigned variant)", cat.gamma_star_unsigned);
  closed("delta w* = 0", cat.w_star);
  closed("delta w* = 0 (constant-sign variant)", cat.w_star_literal);

  const WedgeCochain zero_v(cat.v_star.arity() + 1, alg.dim(), 1);
  out.push_back(compare("delta v* = 0", ce_coboundary(cat.v_star, alg, cat.trivial), zero_v, alg, alg));
  const WedgeCochain zero_t(4, alg.dim(), 1);
  out.push_back(compare("delta theta = 0", ce_coboundary(cat.theta, alg, cat.trivial), zero_t, alg, alg));
  return out;
}

namespace {

template <class Cochain>
void check_invariant(std::vector<CheckResult>& out, const std::string& name, const Cochain& f,
                     const std::vector<std::uint32_t>& generators, const ActionContext& ctx, const LieAlgebra& domain,
                     const LieAlgebra& values, bool expect_invariant = true) {
  CheckResult r;
  r.name = name;
  bool invariant = true;
  for (auto g : generators) {
    const auto gf = g_action(g, f, ctx);
    if (!gf.is_zero()) {
      invariant = false;
      r.detail = ctx.parent->labels()[g] + " . f at " + first_term(gf, domain, values);
      break;
    }
  }
  r.pass = invariant == expect_invariant;
  out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> verify_invariance(const NamedCochainCatalog& cat) {
  const auto& alg = cat.h.algebra;
  const auto& J = cat.h.translations.algebra();
  std::vector<std::uint32_t> all(alg.dim());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto& so = cat.h.rotations.members();
  const ActionContext on_j{&alg, &cat.adjoint, &cat.h.translations};
  const ActionContext on_h{&alg, &cat.trivial, nullptr};
  const LieAlgebra trivial_values("R", {"1"}, BracketTable(1, std::vector<SparseVector>(1)));

  std::vector<CheckResult> out;
  check_invariant(out, "I is h_n-invariant", cat.I, all, on_j, J, alg);
  check_invariant(out, "gamma* is h_n-invariant", cat.gamma_star, all, on_j, J, alg);
  check_invariant(out, "rho is so(n)-invariant", cat.rho, so, on_j, J, alg);
  check_invariant(out, "Gamma is so(n)-invariant", cat.Gamma, so, on_j, J, alg);
  check_invariant(out, "mu is so(n)-invariant", cat.mu, so, on_j, J, alg);
  check_invariant(out, "g* is so(n)-invariant", cat.g_star, so, on_j, J, alg);
  check_invariant(out, "s* is so(n)-invariant", cat.s_star, so, on_j, J, alg);
  check_invariant(out, "w* is so(n)-invariant", cat.w_star, so, on_j, J, alg);
  check_invariant(out, "v* is so(n)-invariant", cat.v_star, so, on_h, alg, trivial_values);
  {
    // On J_n^{wedge n} every element of h_n annihilates v*.
    const ActionContext on_j_trivial{&alg, &cat.trivial, &cat.h.translations};
    WedgeCochain v_j(static_cast<std::size_t>(cat.n), static_cast<std::size_t>(cat.n), 1);
    std::vector<std::uint32_t> local(static_cast<std::size_t>(cat.n));
    for (std::uint32_t i = 0; i < local.size(); ++i) local[i] = i;
    v_j.add(local, 0, Rational(1));
    check_invariant(out, "v* on J_n is h_n-invariant", v_j, all, on_j_trivial, J, trivial_values);
  }
  check_invariant(out, "theta is so(n)-invariant", cat.theta, so, on_h, alg, trivial_values);

  // Variants kept for comparison: closed, but not invariant.
  check_invariant(out, "gamma* (unsigned variant) is not so(n)-invariant", cat.gamma_star_unsigned, so, on_j, J, alg,
                  false);
  check_invariant(out, "w* (constant-sign variant) is not so(n)-invariant", cat.w_star_literal, so, on_j, J, alg,
                  false);

  // rho is not J_n-invariant: d_1 . rho maps d_1 ^ d_2 to d_2.
  CheckResult r;
  r.name = "d_1 . rho != 0";
  const auto g = g_action(partial_index(cat.n, 1), cat.rho, on_j);
  const auto value = g.coefficient({0, 1}, partial_index(cat.n, 2));
  r.pass = !g.is_zero() && value == 1;
  r.detail = "(d1,d2) -> d2 : " + to_string(value);
  out.push_back(std::move(r));
  return out;
}

InvariantTables invariant_tables(int n) {
  if (n < 2) throw InvalidDimension("invariant tables need n >= 2");
  const auto h = build_h_n(n);
  const auto adjoint = make_module(h.algebra, ModuleKind::adjoint);
  const auto& so = h.rotations.algebra();
  const auto on_h = restrict_module(adjoint, h.rotations);
  const auto j_mod = submodule(so, on_h, h.translations.members());
  const auto so_mod = submodule(so, on_h, h.rotations.members());
  InvariantTables t;
  for (int k = 0; k <= n; ++k) {
    const auto wedge = exterior_power(so, j_mod, static_cast<std::size_t>(k));
    t.wedge.push_back(module_invariants(wedge).size());
    t.j_tensor_wedge.push_back(module_invariants(tensor_product(so, j_mod, wedge)).size());
    t.so_tensor_wedge.push_back(module_invariants(tensor_product(so, so_mod, wedge)).size());
  }
  return t;
}

namespace {

using nlohmann::json;

json entry(const std::string& support, const WedgeCochain& f, const LieAlgebra& domain, const LieAlgebra& values) {
  json coeffs = json::array();
  for (const auto& [idx, c] : f.terms()) {
    json labels = json::array();
    for (auto t : idx.tuple) labels.push_back(domain.labels()[t]);
    coeffs.push_back({{"inputs", labels}, {"value", values.labels()[idx.target]}, {"coeff", to_string(c)}});
  }
  return {{"support", support}, {"arity", f.arity()}, {"terms", coeffs}};
}

json entry(const std::string& support, const ChainFunctional& f, const LieAlgebra& domain, const LieAlgebra& values) {
  json coeffs = json::array();
  for (const auto& [idx, c] : f.terms()) {
    json labels = json::array();
    for (auto t : idx.tuple) labels.push_back(domain.labels()[t]);
    coeffs.push_back({{"first", values.labels()[idx.x]}, {"wedge", labels}, {"coeff", to_string(c)}});
  }
  return {{"support", support}, {"arity", f.degree() + 1}, {"terms", coeffs}};
}

}  // namespace

std::string catalog_to_json(const NamedCochainCatalog& cat) {
  const auto& alg = cat.h.algebra;
  const auto& J = cat.h.translations.algebra();
  const LieAlgebra r("R", {"1"}, BracketTable(1, std::vector<SparseVector>(1)));
  json doc;
  doc["n"] = cat.n;
  doc["algebra"] = alg.name();
  json e;
  e["I"] = entry("Hom(J, h)", cat.I, J, alg);
  e["rho"] = entry("Hom(J^2, h)", cat.rho, J, alg);
  e["Gamma"] = entry("Hom(J^(n-2), h)", cat.Gamma, J, alg);
  e["mu"] = entry("Hom(J^(n-1), h)", cat.mu, J, alg);
  e["g*"] = entry("Hom(h (x) J, R)", cat.g_star, J, alg);
  e["s*"] = entry("Hom(h (x) J^2, R)", cat.s_star, J, alg);
  e["w*"] = entry("Hom(h (x) J^(n-1), R)", cat.w_star, J, alg);
  e["w*_constant_sign"] = entry("Hom(h (x) J^(n-1), R)", cat.w_star_literal, J, alg);
  e["gamma*"] = entry("Hom(h (x) J^(n-2), R)", cat.gamma_star, J, alg);
  e["gamma*_unsigned"] = entry("Hom(h (x) J^(n-2), R)", cat.gamma_star_unsigned, J, alg);
  e["v*"] = entry("Hom(h^n, R)", cat.v_star, alg, r);
  e["theta"] = entry("Hom(h^3, R)", cat.theta, alg, r);
  doc["cochains"] = e;
  return doc.dump(2);
}

}  // namespace lcoh

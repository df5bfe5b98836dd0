#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "lcoh/errors.hpp"
#include "lcoh/named_cochains.hpp"
#include "lcoh/verification.hpp"
#include "oracles.hpp"

using namespace lcoh;

namespace {

const CheckResult& find(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

EngineOptions exact() {
  EngineOptions opt;
  opt.rank.mode = RankMode::exact;
  return opt;
}

}  // namespace

TEST_CASE("catalog values on generators") {
  const auto cat = build_catalog(3);
  const auto& h = cat.h;
  // I(d_i) = d_i
  CHECK(cat.I.evaluate(std::vector<std::uint32_t>{1}) == SparseVector{{partial_index(3, 2), Rational(1)}});
  // rho(d_1 ^ d_3) = alpha_13
  CHECK(cat.rho.evaluate(std::vector<std::uint32_t>{0, 2}) == SparseVector{{alpha_index(3, 1, 3), Rational(1)}});
  // mu(d_2 ^ d_3) = d_1, mu(d_1 ^ d_3) = -d_2
  CHECK(cat.mu.evaluate(std::vector<std::uint32_t>{1, 2}) == SparseVector{{partial_index(3, 1), Rational(1)}});
  CHECK(cat.mu.evaluate(std::vector<std::uint32_t>{0, 2}) == SparseVector{{partial_index(3, 2), Rational(-1)}});
  // Gamma(d_3) = (-1)^{1+2-1} alpha_12
  CHECK(cat.Gamma.evaluate(std::vector<std::uint32_t>{2}) == SparseVector{{alpha_index(3, 1, 2), Rational(1)}});
  CHECK(cat.I_full.evaluate(std::vector<std::uint32_t>{alpha_index(3, 1, 2)}).empty());
  CHECK(h.algebra.dim() == 6);
  CHECK_THROWS_AS(build_catalog(2), InvalidDimension);
}

TEST_CASE("named-cochain relations hold for n = 3, 5") {
  for (int n : {3, 5}) {
    const auto checks = verify_relations(build_catalog(n));
    for (const auto& c : checks) {
      INFO(c.name << " n=" << n << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("named-cochain relations for n = 4 apart from the Gamma sign") {
  const auto checks = verify_relations(build_catalog(4));
  for (const auto& c : checks) {
    if (c.name == "delta Gamma = (n-1)(-1)^(n-1) mu") continue;
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("delta Gamma = (n-1) mu by direct evaluation") {
  for (int n = 3; n <= 5; ++n) {
    const auto cat = build_catalog(n);
    const LieAlgebra& J = cat.h.translations.algebra();
    const auto gamma = oracle::evaluator(cat.Gamma);
    const auto mu = oracle::evaluator(cat.mu);
    bool ok = true;
    oracle::for_each_tuple(J.dim(), static_cast<std::size_t>(n - 1), [&](const oracle::Tuple& x) {
      auto lhs = oracle::leibniz_delta(gamma, J, cat.restricted, x);
      auto rhs = mu(x);
      for (std::size_t s = 0; s < rhs.size(); ++s) {
        if (lhs[s] != (n - 1) * rhs[s]) ok = false;
      }
    });
    INFO("n=" << n);
    CHECK(ok);
    CHECK(find(verify_relations(cat), "delta Gamma is a multiple of mu").detail ==
          "delta Gamma = " + std::to_string(n - 1) + " mu");
  }
}

TEST_CASE("invariance of the named cochains") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& c : verify_invariance(build_catalog(n))) {
      INFO(c.name << " n=" << n << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("invariant-subspace tables") {
  using V = std::vector<std::size_t>;
  const auto t3 = invariant_tables(3);
  CHECK(t3.wedge == V{1, 0, 0, 1});
  CHECK(t3.j_tensor_wedge == V{0, 1, 1, 0});
  CHECK(t3.so_tensor_wedge == V{0, 1, 1, 0});
  const auto t4 = invariant_tables(4);
  CHECK(t4.wedge == V{1, 0, 0, 0, 1});
  CHECK(t4.j_tensor_wedge == V{0, 1, 0, 1, 0});
  CHECK(t4.so_tensor_wedge == V{0, 0, 2, 0, 0});
  const auto t5 = invariant_tables(5);
  CHECK(t5.wedge == V{1, 0, 0, 0, 0, 1});
  CHECK(t5.j_tensor_wedge == V{0, 1, 0, 0, 1, 0});
  CHECK(t5.so_tensor_wedge == V{0, 0, 1, 1, 0, 0});
  for (const auto& c : verify_invariant_tables(5)) CHECK(c.pass);
}

TEST_CASE("[I] and [rho] span HL^1 and HL^2") {
  for (int n : {3, 4}) {
    for (const auto& c : verify_class_spans(n, exact())) {
      INFO(c.name << " n=" << n << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("theta products in degree 4") {
  for (const auto& c : verify_theta_products(exact())) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("catalog JSON lists every entry") {
  const auto doc = nlohmann::json::parse(catalog_to_json(build_catalog(3)));
  CHECK(doc["n"] == 3);
  for (const char* key : {"I", "rho", "Gamma", "mu", "g*", "s*", "w*", "gamma*", "v*", "theta"}) {
    INFO(key);
    CHECK(doc["cochains"].contains(key));
  }
}

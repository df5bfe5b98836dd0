#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>

#include "lcoh/cochains.hpp"
#include "lcoh/complexes.hpp"
#include "lcoh/lie_algebra.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace lcoh;

namespace {

void report(const props::Failures& failures) {
  for (const auto& f : failures) UNSCOPED_INFO(f);
  CHECK(failures.empty());
}

}  // namespace

TEST_CASE("coboundary squares to zero on every complex") {
  std::mt19937_64 rng(props::kDefaultSeed);
  for (int n = 2; n <= 3; ++n) {
    const auto g = build_h_n(n).algebra;
    for (auto kind : {ModuleKind::adjoint, ModuleKind::coadjoint, ModuleKind::trivial}) {
      const GModule m = make_module(g, kind);
      auto cl = std::make_shared<LeibnizComplex>(g, m);
      report(props::delta_squared(*cl, 3, 10, rng));
      report(props::delta_squared(CEComplex(g, m), 4, 10, rng));
      report(props::delta_squared(RelativeComplex(cl), 2, 10, rng));
    }
    auto dual = std::make_shared<HomologyDualComplex>(g, make_module(g, ModuleKind::adjoint));
    report(props::delta_squared(*dual, 4, 10, rng));
    report(props::delta_squared(CRComplex(dual), 3, 10, rng));
  }
  const auto so4 = build_so_n(4);
  report(props::delta_squared(CEComplex(so4, make_module(so4, ModuleKind::adjoint)), 4, 10, rng));
}

TEST_CASE("Leibniz coboundary matches direct evaluation") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto h3 = build_h_n(3).algebra;
  for (auto kind : {ModuleKind::adjoint, ModuleKind::coadjoint, ModuleKind::trivial}) {
    report(props::leibniz_matches_oracle(h3, make_module(h3, kind), 3, 5, rng));
  }
  const auto sl2 = build_sl2();
  report(props::leibniz_matches_oracle(sl2, make_module(sl2, ModuleKind::adjoint), 3, 5, rng));
}

TEST_CASE("CE coboundary matches direct evaluation") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto h3 = build_h_n(3).algebra;
  for (auto kind : {ModuleKind::adjoint, ModuleKind::coadjoint, ModuleKind::trivial}) {
    report(props::ce_matches_oracle(h3, make_module(h3, kind), 3, 5, rng));
  }
}

TEST_CASE("complex matrices agree with the cochain-level coboundary") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto g = build_h_n(3).algebra;
  const GModule m = make_module(g, ModuleKind::adjoint);
  const LeibnizComplex cl(g, m);
  const CEComplex ce(g, m);
  for (std::size_t a = 0; a <= 3; ++a) {
    const auto f = oracle::random_tensor(a, g.dim(), m.dim(), rng);
    CHECK(cl.apply(static_cast<int>(a), to_codes(f, cl)) == to_codes(leibniz_coboundary(f, g, m), cl));
    const auto w = oracle::random_wedge(a, g.dim(), m.dim(), rng);
    CHECK(ce.apply(static_cast<int>(a), to_codes(w, ce)) == to_codes(ce_coboundary(w, g, m), ce));
  }
}

TEST_CASE("homology differential matches the oracle and squares to zero") {
  std::mt19937_64 rng(props::kDefaultSeed);
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_h_n(n).algebra;
    report(props::homology_checks(g, make_module(g, ModuleKind::adjoint), 4, 10, rng));
  }
  const auto sl2 = build_sl2();
  report(props::homology_checks(sl2, make_module(sl2, ModuleKind::coadjoint), 3, 10, rng));
}

TEST_CASE("Phi intertwines the coadjoint coboundary with d*") {
  std::mt19937_64 rng(props::kDefaultSeed);
  report(props::phi_intertwines(build_h_n(3).algebra, 3, 10, rng));
  report(props::phi_intertwines(build_so_n(4), 3, 5, rng));
}

TEST_CASE("skew-symmetric cochains map into the Leibniz complex as a chain map") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto g = build_h_n(3).algebra;
  const GModule m = make_module(g, ModuleKind::adjoint);
  for (std::size_t a = 0; a <= 3; ++a) {
    const auto w = oracle::random_wedge(a, g.dim(), m.dim(), rng);
    CHECK(to_tensor(ce_coboundary(w, g, m)) == leibniz_coboundary(to_tensor(w), g, m));
    CHECK(to_wedge(to_tensor(w)).value() == w);
  }
}

TEST_CASE("relative complex dimensions") {
  const auto g = build_h_n(2).algebra;
  auto cl = std::make_shared<LeibnizComplex>(g, make_module(g, ModuleKind::adjoint));
  const RelativeComplex rel(cl);
  // dim C^k_rel = dim CL^{k+2} - dim C^{k+2}_Lie
  const CEComplex ce(g, make_module(g, ModuleKind::adjoint));
  for (int k = 0; k <= 1; ++k) CHECK(rel.dimension(k) == cl->dimension(k + 2) - ce.dimension(k + 2));
}

TEST_CASE("cochain JSON round trip") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto f = oracle::random_tensor(2, 6, 6, rng);
  CHECK(tensor_cochain_from_json(cochain_to_json(f), 6, 6) == f);
  const auto w = oracle::random_wedge(3, 6, 1, rng);
  CHECK(wedge_cochain_from_json(cochain_to_json(w), 6, 1) == w);
}

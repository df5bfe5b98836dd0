#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "lcoh/cohomology.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/les.hpp"
#include "lcoh/verification.hpp"

using namespace lcoh;

namespace {

EngineOptions exact() {
  EngineOptions opt;
  opt.rank.mode = RankMode::exact;
  return opt;
}

std::vector<std::uint64_t> dims(const LieAlgebra& g, ModuleKind m, ComplexChoice c, int max_degree) {
  return cohomology_dims(g, m, c, max_degree, exact()).dims;
}

using V = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("Lie cohomology tables of h_3, so(3), so(4)") {
  const auto h3 = build_h_n(3).algebra;
  CHECK(dims(h3, ModuleKind::trivial, ComplexChoice::lie, 6) == V{1, 0, 0, 2, 0, 0, 1});
  CHECK(dims(h3, ModuleKind::adjoint, ComplexChoice::lie, 6) == V{0, 1, 1, 0, 1, 1, 0});
  CHECK(dims(h3, ModuleKind::coadjoint, ComplexChoice::lie, 6) == V{0, 1, 1, 0, 1, 1, 0});
  CHECK(dims(build_so_n(3), ModuleKind::trivial, ComplexChoice::lie, 3) == V{1, 0, 0, 1});
  CHECK(dims(build_so_n(4), ModuleKind::trivial, ComplexChoice::lie, 6) == V{1, 0, 0, 2, 0, 0, 1});
}

TEST_CASE("textbook examples") {
  // Whitehead: semisimple algebras have H^1 = H^2 = 0 with trivial coefficients.
  CHECK(dims(build_sl2(), ModuleKind::trivial, ComplexChoice::lie, 3) == V{1, 0, 0, 1});
  CHECK(dims(build_sl2(), ModuleKind::adjoint, ComplexChoice::lie, 3) == V{0, 0, 0, 0});
  CHECK(dims(build_sl2(), ModuleKind::adjoint, ComplexChoice::leibniz, 3) == V{0, 0, 0, 0});
  // Abelian: H^k(R^n; R) = binomial(n, k); HL^k = n^k.
  CHECK(dims(build_j_n(3), ModuleKind::trivial, ComplexChoice::lie, 3) == V{1, 3, 3, 1});
  CHECK(dims(build_j_n(2), ModuleKind::trivial, ComplexChoice::leibniz, 3) == V{1, 2, 4, 8});
}

TEST_CASE("HL^0 and HL^1 agree with the Lie groups") {
  for (const auto& g : {build_h_n(2).algebra, build_h_n(3).algebra, build_sl2(), build_so_n(4)}) {
    for (auto m : {ModuleKind::adjoint, ModuleKind::coadjoint, ModuleKind::trivial}) {
      const auto hl = dims(g, m, ComplexChoice::leibniz, 1);
      const auto lie = dims(g, m, ComplexChoice::lie, 1);
      CHECK(hl == lie);
    }
  }
}

TEST_CASE("HL(h_3; h_3) through degree 4 and HL(h_4; h_4) through degree 3") {
  CHECK(dims(build_h_n(3).algebra, ModuleKind::adjoint, ComplexChoice::leibniz, 4) == V{0, 1, 1, 1, 1});
  CHECK(dims(build_h_n(4).algebra, ModuleKind::adjoint, ComplexChoice::leibniz, 3) == V{0, 1, 1, 0});
}

TEST_CASE("relative groups of h_3") {
  const auto h3 = build_h_n(3).algebra;
  CHECK(dims(h3, ModuleKind::adjoint, ComplexChoice::cr, 3) == V{2, 0, 0, 1});
  CHECK(dims(h3, ModuleKind::adjoint, ComplexChoice::relative, 1)[0] == 0);
}

TEST_CASE("long exact sequences are exact") {
  const auto h3 = build_h_n(3).algebra;
  const LESReport rel = lie_to_leibniz_sequence(h3, make_module(h3, ModuleKind::adjoint), 4, exact());
  CHECK(rel.all_exact());
  REQUIRE(rel.nodes.size() >= 3);
  CHECK(rel.nodes[0].name == "H^2_Lie");
  CHECK(rel.nodes[1].name == "HL^2");
  CHECK(rel.nodes[2].name == "H^0_rel");
  CHECK(rel.nodes[2].dim == 0);
  CHECK(rel.maps[0].rank == 1);
  CHECK(rel.nodes.back().name == "H^5_Lie");

  const LESReport coad = lie_coadjoint_sequence(h3, 3, exact());
  CHECK(coad.all_exact());
  bool saw_hr3 = false;
  for (const auto& node : coad.nodes) saw_hr3 = saw_hr3 || node.name == "HR^3";
  CHECK(saw_hr3);

  const auto sl2 = build_sl2();
  CHECK(lie_to_leibniz_sequence(sl2, make_module(sl2, ModuleKind::trivial), 4, exact()).all_exact());
  CHECK(lie_coadjoint_sequence(build_h_n(2).algebra, 3, exact()).all_exact());
}

TEST_CASE("induced maps and chain-map checks") {
  const auto h3 = build_h_n(3).algebra;
  const GModule adj = make_module(h3, ModuleKind::adjoint);
  auto ce = std::make_shared<CEComplex>(h3, adj);
  auto cl = std::make_shared<LeibnizComplex>(h3, adj);
  CohomologyEngine source(ce, exact());
  CohomologyEngine target(cl, exact());
  const CochainMap skew = [&](int m, const CodeVector& v) { return skew_inclusion(*ce, *cl, m, v); };
  CHECK(induced_map_rank(source, 1, target, 1, skew) == 1);
  CHECK(induced_map_rank(source, 2, target, 2, skew) == 1);
  const CochainMap bad = [&](int, const CodeVector& v) { return v; };
  CHECK_THROWS_AS(check_chain_map(source, 1, target, 1, bad), NotAChainMap);
}

TEST_CASE("representatives are cocycles and not coboundaries") {
  const auto h3 = build_h_n(3).algebra;
  auto cl = std::make_shared<LeibnizComplex>(h3, make_module(h3, ModuleKind::adjoint));
  CohomologyEngine e(cl, exact());
  for (int k = 1; k <= 3; ++k) {
    const auto& reps = e.representatives(k);
    REQUIRE(reps.size() == 1);
    CHECK(e.is_cocycle(k, reps[0]));
    CHECK_FALSE(e.coboundary_witness(k, reps[0]).has_value());
  }
  const CodeVector w = {{cl->encode(std::vector<std::uint32_t>{3}, 4), Rational(1)}};
  const auto dw = cl->apply(1, w);
  const auto pre = e.coboundary_witness(2, dw);
  REQUIRE(pre.has_value());
  CHECK(cl->apply(1, *pre) == dw);
}

TEST_CASE("resource budget is enforced") {
  EngineOptions opt = exact();
  opt.max_codes = 1000;
  CHECK_THROWS_AS(cohomology_dims(build_h_n(3).algebra, ModuleKind::adjoint, ComplexChoice::leibniz, 4, opt),
                  ResourceLimit);
}

TEST_CASE("modular and exact engines agree on h_3") {
  EngineOptions mod;
  mod.rank.mode = RankMode::modular;
  const auto h3 = build_h_n(3).algebra;
  const auto a = cohomology_dims(h3, ModuleKind::adjoint, ComplexChoice::leibniz, 3, mod);
  CHECK(a.dims == dims(h3, ModuleKind::adjoint, ComplexChoice::leibniz, 3));
  for (const auto& r : a.ranks) CHECK(r.agreement);
}

#include <catch2/catch_amalgamated.hpp>

#include "lcoh/algebra_io.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/lie_algebra.hpp"
#include "properties.hpp"

using namespace lcoh;

namespace {

Rational sc(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) { return g.structure_constant(i, j, k); }

}  // namespace

TEST_CASE("h_n brackets follow the rotation and translation rules") {
  for (int n = 2; n <= 5; ++n) {
    const auto h = build_h_n(n);
    CHECK(h.algebra.dim() == static_cast<std::size_t>(n * (n - 1) / 2 + n));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          const auto a = alpha_index(n, i, j);
          const auto dk = partial_index(n, k);
          // [alpha_ij, d_k] = -delta_ik d_j + delta_jk d_i
          for (int m = 1; m <= n; ++m) {
            Rational expected = 0;
            if (i == k && m == j) expected -= 1;
            if (j == k && m == i) expected += 1;
            CHECK(sc(h.algebra, a, dk, partial_index(n, m)) == expected);
          }
        }
      }
    }
    CHECK(h.translations.is_ideal());
  }
}

TEST_CASE("so(3) is isomorphic to the cross product") {
  const auto g = build_so_n(3);
  // alpha_12, alpha_13, alpha_23: [alpha_12, alpha_13] = -alpha_23
  CHECK(sc(g, 0, 1, 2) == -1);
  CHECK(sc(g, 0, 2, 1) == 1);
  CHECK(sc(g, 1, 2, 0) == -1);
}

TEST_CASE("builtin algebras and modules satisfy the axioms") {
  const auto failures = props::algebra_axioms();
  CHECK(failures.empty());
  for (const auto& f : failures) UNSCOPED_INFO(f);
}

TEST_CASE("bracket cross-check against vector fields") {
  CHECK(props::bracket_cross_check().empty());
}

TEST_CASE("algebra files round trip") {
  const auto g = build_sl2();
  const auto back = parse_algebra(algebra_to_json(g));
  CHECK(back.dim() == 3);
  CHECK(back.table() == g.table());
}

TEST_CASE("malformed algebra files are rejected") {
  CHECK_THROWS_AS(parse_algebra("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"dim": -1})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"dim": 2, "brackets": [{"i": 1, "j": 0}]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"dim": 2, "brackets": [{"i": 0, "j": 5}]})"), ParseError);
  const char* non_jacobi = R"({"dim": 3, "brackets": [
      {"i": 0, "j": 1, "coeffs": [{"k": 0, "value": 1}]},
      {"i": 1, "j": 2, "coeffs": [{"k": 1, "value": "1"}]}]})";
  CHECK_THROWS_AS(parse_algebra(non_jacobi), JacobiViolation);
}

TEST_CASE("module invariants") {
  const auto h = build_h_n(3);
  CHECK(module_invariants(make_module(h.algebra, ModuleKind::adjoint)).empty());
  CHECK(module_invariants(make_module(h.algebra, ModuleKind::trivial)).size() == 1);
  const auto so3 = build_so_n(3);
  CHECK(module_invariants(make_module(so3, ModuleKind::adjoint)).empty());
  const auto adj = make_module(so3, ModuleKind::adjoint);
  CHECK(module_invariants(tensor_product(so3, adj, adj)).size() == 1);
  CHECK(module_invariants(exterior_power(so3, adj, 3)).size() == 1);
}

TEST_CASE("subalgebra embeddings are checked") {
  const auto h = build_h_n(3);
  CHECK_THROWS_AS(SubalgebraEmbedding(h.algebra, {0, 3}), NotASubalgebra);
  CHECK_FALSE(h.rotations.is_ideal());
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcoh/combinatorics.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/lie_algebra.hpp"
#include "lcoh/linalg.hpp"
#include "lcoh/rational.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace lcoh;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3) / 2);
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(-1) / 3) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("exact rank of small matrices") {
  const std::vector<DenseVector> d = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto m = SparseRationalMatrix::from_dense(d, 3);
  CHECK(rank_exact(m) == 2);
  CHECK(rank(m, RankMode::exact).rank == 2);
  CHECK(rank_exact(SparseRationalMatrix(4, 0)) == 0);
  CHECK(rank_exact(SparseRationalMatrix(0, 5)) == 0);
}

TEST_CASE("kernel vectors are annihilated") {
  const std::vector<DenseVector> d = {{1, -1, 0, 2}, {0, 1, 1, -1}, {1, 0, 1, 1}};
  const auto m = SparseRationalMatrix::from_dense(d, 4);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 4 - rank_exact(m));
  for (const auto& v : ker) {
    for (const auto& row : d) {
      Rational s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += row[j] * v[j];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("image membership returns a preimage") {
  const std::vector<DenseVector> d = {{1, 0}, {0, 2}, {1, 1}};
  const auto m = SparseRationalMatrix::from_dense(d, 2);
  const DenseVector in = {3, 4, 5};
  const DenseVector out = {1, 1, 0};
  const auto yes = in_image(m, in);
  REQUIRE(yes.member);
  CHECK(yes.witness.size() == 2);
  CHECK_FALSE(in_image(m, out).member);
}

TEST_CASE("rank modulo a prime sees characteristic") {
  const std::vector<DenseVector> d = {{1, 1}, {1, 6}};
  const auto m = SparseRationalMatrix::from_dense(d, 2);
  CHECK(rank_mod_p(m, 5).value() == 1);
  CHECK(rank_mod_p(m, 7).value() == 2);
  const std::vector<DenseVector> frac = {{Rational(1) / 5}};
  CHECK_FALSE(rank_mod_p(SparseRationalMatrix::from_dense(frac, 1), 5).has_value());
}

TEST_CASE("modular rank agrees with exact rank on random matrices") {
  std::mt19937_64 rng(props::kDefaultSeed);
  const auto failures = props::modular_vs_exact(200, rng);
  CHECK(failures.empty());
  for (const auto& f : failures) UNSCOPED_INFO(f);
}

TEST_CASE("modular certificates record distinct primes") {
  const std::vector<DenseVector> d = {{2, 3}, {4, 6}};
  RankOptions opt;
  opt.mode = RankMode::modular;
  opt.min_primes = 3;
  const auto cert = rank(SparseRationalMatrix::from_dense(d, 2), opt);
  CHECK(cert.rank == 1);
  CHECK(cert.method == RankMode::modular);
  CHECK(cert.primes_used.size() >= 3);
  for (auto p : cert.primes_used) CHECK(is_prime(p));
}

TEST_CASE("rank against the dense oracle on random integer matrices") {
  std::mt19937_64 rng(props::kDefaultSeed + 1);
  std::uniform_int_distribution<int> size(1, 12), val(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const int rows = size(rng), cols = size(rng);
    std::vector<DenseVector> d(rows, DenseVector(cols));
    for (auto& r : d)
      for (auto& e : r) e = val(rng);
    CHECK(rank_exact(SparseRationalMatrix::from_dense(d, cols)) == oracle::dense_rank(d));
  }
}

TEST_CASE("tuple encoding round trip and permutation signs") {
  const std::vector<std::uint32_t> t = {3, 0, 2, 5};
  std::vector<std::uint32_t> back;
  decode_tuple(encode_tuple(t, 6), 4, 6, back);
  CHECK(back == t);
  std::vector<std::uint32_t> s = {2, 0, 1};
  CHECK(sort_with_sign(s) == 1);
  CHECK(s == std::vector<std::uint32_t>{0, 1, 2});
  std::vector<std::uint32_t> odd = {1, 0};
  CHECK(sort_with_sign(odd) == -1);
  std::vector<std::uint32_t> rep = {1, 1};
  CHECK(sort_with_sign(rep) == 0);
  CHECK(combinations(5, 2).size() == 10);
}

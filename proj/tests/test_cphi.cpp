#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cphi/cphi.hpp"
#include "test_util.hpp"

using namespace cphi;

namespace {
const ExactRing Z{};
}

TEST_CASE("one color reproduces the partition numbers up to 300") {
  const auto t = cphi_direct(1, 300, Z);
  CHECK(t.series == partition_series(300));
}

TEST_CASE("tables start at 1 and count k*k objects of size one") {
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const auto t = cphi_direct(k, 4, Z);
    CHECK(t.series[0] == BigInt(1));
    CHECK(t.series[1] == BigInt(k * k));
  }
}

TEST_CASE("two colors start 1, 4") {
  const auto t = cphi_direct(2, 1, Z);
  CHECK(t.series == series_of(Z, {1, 4}));
}

TEST_CASE("direct, theta and unpruned agree exactly at small sizes") {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    for (int T = 0; T <= 12; ++T) {
      const auto direct = cphi_direct(k, T, Z);
      const auto theta = cphi_theta(k, T, Z);
      const auto brute = cphi_unpruned(k, T, Z);
      CHECK(direct.series == theta.series);
      CHECK(direct.series == brute.series);
    }
  }
}

TEST_CASE("direct and theta agree exactly up to degree 40") {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    const auto direct = cphi_direct(k, 40, Z);
    const auto theta = cphi_theta(k, 40, Z);
    CHECK(direct.series == theta.series);
  }
}

TEST_CASE("theta works in a modular ring as well") {
  const auto exact = cphi_theta(4, 30, Z);
  const auto modular = cphi_theta(4, 30, ModRing(11));
  CHECK(reduce_mod(exact.series, 11) == modular.series);
}

TEST_CASE("descent matches the reduced exact values") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const auto exact = cphi_direct(k, 30, Z);
      const auto modular = cphi_mod_descent(k, 30, p);
      CHECK(reduce_mod(exact.series, p) == modular.series);
    }
  }
}

TEST_CASE("descent with a single digit is the plain modular build") {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {{1, 2}, {2, 3}, {4, 5}, {6, 7}};
  for (const auto& [k, p] : cases) {
    CHECK(cphi_mod_descent(k, 15, p).series == cphi_direct(k, 15, ModRing(p)).series);
  }
}

TEST_CASE("seven colors mod five factor through the digits 2 and 1") {
  /* 7 = 2 + 1*5, so mod 5 the table equals the constant term of the
   * two-color product times the one-color product re-indexed by 5 */
  const int T = 20;
  const std::uint64_t p = 5;
  const ModRing ring(p);
  const ZWindow clip = window_bounds(7, T);

  const auto wide = [](std::uint64_t k, int t) {
    const ZWindow w = window_bounds(k, t);
    const std::int64_t reach = std::max<std::int64_t>(w.hi, -w.lo);
    return ZWindow{-reach, reach};
  };
  const auto low = build_base_product_clipped(2, T, ring, wide(2, T), FactorOrder::Forward);
  const auto high = build_base_product_clipped(1, T / 5, ring, wide(1, T / 5),
                                               FactorOrder::Forward);
  const auto lifted = substitute_powers(high, p, T, clip);
  const auto expected = constant_term(multiply(low, lifted, clip));

  CHECK(cphi_mod_descent(7, T, p).series == expected);
}

TEST_CASE("two colors vanish mod five on the class 5n+3") {
  const auto t = cphi_mod_descent(2, 8, 5);
  CHECK(t.series[3] == 0);
  CHECK(t.series[8] == 0);
}

TEST_CASE("one color mod five is the partition series mod five") {
  const auto t = cphi_mod_descent(1, 10, 5);
  CHECK(t.series == reduce_mod(partition_series(10), 5));
  CHECK(t.series[4] == 0);
  CHECK(t.series[9] == 0);
}

TEST_CASE("a thousand colors mod five collapse to the low digits") {
  /* 1002 = 2 + 3*125 + 625; at this truncation the high digits cannot reach
   * back to z^0, so the table must agree with an independent modular build
   * that multiplies all 1002-fold binomial factors directly */
  const auto descent = cphi_mod_descent(1002, 30, 5);
  const auto direct = cphi_direct(1002, 30, ModRing(5));
  CHECK(descent.series == direct.series);
}

TEST_CASE("more colors never count fewer objects") {
  auto prev = cphi_direct(1, 30, Z);
  CHECK(prev.series == partition_series(30));
  for (std::uint64_t k = 2; k <= 6; ++k) {
    const auto t = cphi_direct(k, 30, Z);
    for (int n = 0; n <= 30; ++n) CHECK(t.series[n] >= prev.series[n]);
    prev = t;
  }
}

TEST_CASE("method and color tags are recorded") {
  CHECK(cphi_direct(2, 3, Z).method == Method::Direct);
  CHECK(cphi_direct(2, 3, Z).colors == 2);
  CHECK(cphi_theta(2, 3, Z).method == Method::Theta);
  CHECK(cphi_unpruned(2, 3, Z).method == Method::Unpruned);
  CHECK(cphi_mod_descent(2, 3, 5).method == Method::Descent);
  CHECK(cphi_mod_descent(2, 3, 5).colors == 2);
  CHECK(to_string(Method::Direct) == "direct");
  CHECK(to_string(Method::Descent) == "descent");
  CHECK(to_string(Method::Theta) == "theta");
  CHECK(to_string(Method::Unpruned) == "unpruned");
}

TEST_CASE("zero colors are rejected by every method") {
  CHECK_THROWS_AS(cphi_direct(0, 5, Z), UsageError);
  CHECK_THROWS_AS(cphi_theta(0, 5, Z), UsageError);
  CHECK_THROWS_AS(cphi_unpruned(0, 5, Z), UsageError);
  CHECK_THROWS_AS(cphi_mod_descent(0, 5, 5), UsageError);
}

TEST_CASE("descent insists on a prime modulus") {
  CHECK_THROWS_AS(cphi_mod_descent(3, 10, 6), UsageError);
  CHECK_THROWS_AS(cphi_mod_descent(3, 10, 1), UsageError);
  CHECK_THROWS_AS(cphi_mod_descent(3, 10, 0), UsageError);
}

TEST_CASE("the brute-force oracle refuses sizes it cannot afford") {
  CHECK_THROWS_AS(cphi_unpruned(7, 5, Z), UsageError);
  CHECK_THROWS_AS(cphi_unpruned(2, 13, Z), UsageError);
  CHECK(cphi_unpruned(1, 4, Z).series == partition_series(4));
}

TEST_CASE("reducing an exact table keeps its tags") {
  const auto t = reduce_mod(cphi_direct(3, 10, Z), 7);
  CHECK(t.colors == 3);
  CHECK(t.method == Method::Direct);
  CHECK(t.series == cphi_direct(3, 10, ModRing(7)).series);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cphi/zwindow.hpp"
#include "test_util.hpp"

using namespace cphi;

namespace {

const ExactRing Z{};

/* Window wide enough that nothing is ever clipped: covers the mirror of
 * window_bounds, hence the full row support of the truncated product. */
ZWindow cover(std::uint64_t k, int T) {
  const ZWindow w = window_bounds(k, T);
  const std::int64_t reach = std::max<std::int64_t>(w.hi, -w.lo);
  return ZWindow{-reach, reach};
}

}  // namespace

TEST_CASE("cost curves are nondecreasing and drops are never dearer than raises") {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    const WindowBudget budget(k);
    unsigned __int128 prev_pos = 0, prev_neg = 0;
    for (std::uint64_t x = 1; x <= 200; ++x) {
      CHECK(budget.poscost(x) >= prev_pos);
      CHECK(budget.negcost(x) >= prev_neg);
      CHECK(budget.negcost(x) <= budget.poscost(x));
      prev_pos = budget.poscost(x);
      prev_neg = budget.negcost(x);
    }
  }
}

TEST_CASE("cost curves match their defining sums") {
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const WindowBudget budget(k);
    unsigned __int128 pos = 0, neg = 0;
    for (std::uint64_t i = 1; i <= 60; ++i) {
      pos += (i + k - 1) / k;  /* ceil(i/k) */
      neg += (i - 1) / k;
      CHECK(budget.poscost(i) == pos);
      CHECK(budget.negcost(i) == neg);
    }
  }
}

TEST_CASE("window bounds reproduce the worked examples") {
  CHECK(window_bounds(1, 0) == ZWindow{0, 1});
  CHECK(window_bounds(2, 3) == ZWindow{-2, 4});
}

TEST_CASE("every window contains zero") {
  for (std::uint64_t k : {1, 2, 3, 7, 40}) {
    for (int T : {0, 1, 5, 30}) {
      const ZWindow w = window_bounds(k, T);
      CHECK(w.lo <= 0);
      CHECK(w.hi >= 0);
    }
  }
}

TEST_CASE("zero colors are rejected") {
  CHECK_THROWS_AS(window_bounds(0, 5), UsageError);
  CHECK_THROWS_AS(build_base_product(0, 5, ExactRing{}), UsageError);
}

TEST_CASE("base product at T=0 keeps only the constant") {
  const auto s = build_base_product(1, 0, Z);
  CHECK(constant_term(s) == QSeries<ExactRing>::one(Z, 0));
  CHECK(window_bounds(1, 0) == ZWindow{0, 1});
  /* the free z^{-1} of (1+z^{-1}q^0) cannot return to z^0 at this budget,
   * and nothing ever lands on z^1, so only the z^0 row survives */
  CHECK(s.window() == ZWindow{0, 0});
  CHECK(z_coefficient(s, 1).is_zero());
  CHECK(z_coefficient(s, -1).is_zero());
}

TEST_CASE("one-color constant term is the partition series") {
  const auto s = build_base_product(1, 5, Z);
  CHECK(constant_term(s) == partition_series(5));
}

TEST_CASE("two-color constant term starts 1 + 4q") {
  const auto s = build_base_product(2, 1, Z);
  CHECK(constant_term(s) == series_of(Z, {1, 4}));
}

TEST_CASE("empty product has the one series as constant term") {
  const auto s = ZWindowSeries<ExactRing>::one(Z, 7);
  CHECK(constant_term(s) == QSeries<ExactRing>::one(Z, 7));
}

TEST_CASE("three colors at q^2 vanish mod 3") {
  const auto ct = constant_term(build_base_product(3, 2, Z));
  CHECK(ct[2] % 3 == 0);
}

TEST_CASE("z_coefficient at 0 is the constant term") {
  const auto s = build_base_product(2, 4, Z);
  CHECK(z_coefficient(s, 0) == constant_term(s));
}

TEST_CASE("rows outside the window read as zero") {
  const auto s = build_base_product(1, 3, Z);
  CHECK(z_coefficient(s, 100).is_zero());
  CHECK(z_coefficient(s, -100).is_zero());
}

TEST_CASE("row symmetry under inverting z") {
  /* z -> z^{-1} q^{-1} fixes the product, forcing B_m = q^m B_{-m} */
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const int T = 30;
    const auto s = build_base_product(k, T, Z);
    for (int m = 1; m <= 6; ++m) {
      CHECK(z_coefficient(s, m) == shifted(z_coefficient(s, -m), m));
    }
  }
}

TEST_CASE("one-color symmetry example at T=5") {
  const auto s = build_base_product(1, 5, Z);
  CHECK(z_coefficient(s, 1) == shifted(z_coefficient(s, -1), 1));
}

TEST_CASE("multiplying by the bivariate one is the identity") {
  const auto a = build_base_product(2, 6, Z);
  const auto one = ZWindowSeries<ExactRing>::one(Z, 6);
  const auto prod = multiply(a, one, a.window());
  CHECK(prod.window() == a.window());
  for (std::int64_t e = a.window().lo; e <= a.window().hi; ++e)
    CHECK(prod.row(e) == a.row(e));
}

TEST_CASE("exponents add under multiplication") {
  ZWindowSeries<ExactRing> a(Z, 1, ZWindow{0, 1});
  a.row_mut(1).set(1, BigInt(1)); /* z^1 q */
  ZWindowSeries<ExactRing> b(Z, 1, ZWindow{-1, 0});
  b.row_mut(-1).set(0, BigInt(1)); /* z^{-1} */
  const auto prod = multiply(a, b, ZWindow{0, 0});
  CHECK(prod.window() == ZWindow{0, 0});
  CHECK(prod.row(0) == QSeries<ExactRing>::monomial(Z, 1, 1, BigInt(1)));
}

TEST_CASE("mismatched bivariate operands are rejected") {
  const auto a = build_base_product(1, 3, Z);
  const auto b = build_base_product(1, 4, Z);
  CHECK_THROWS_AS(multiply(a, b, ZWindow{-1, 1}), UsageError);
  const auto am = build_base_product(1, 3, ModRing(5));
  const auto bm = build_base_product(1, 3, ModRing(7));
  CHECK_THROWS_AS(multiply(am, bm, ZWindow{-1, 1}), UsageError);
}

TEST_CASE("pruned and unpruned builds agree on the constant term") {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    for (int T = 0; T <= 12; ++T) {
      const std::int64_t span = static_cast<std::int64_t>(k) * T;
      const ZWindow full{-span, span};
      const auto pruned = build_base_product(k, T, Z);
      const auto unpruned =
          build_base_product_clipped(k, T, Z, full, FactorOrder::Forward);
      CHECK(constant_term(pruned) == constant_term(unpruned));
    }
  }
}

TEST_CASE("widening the clip beyond the pruning window changes nothing at z^0") {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    for (int T : {5, 9, 12}) {
      const ZWindow w = window_bounds(k, T);
      const ZWindow wider{w.lo - 3, w.hi + 3};
      const auto tight = build_base_product(k, T, Z);
      const auto loose = build_base_product_clipped(k, T, Z, wider, FactorOrder::Forward);
      CHECK(constant_term(tight) == constant_term(loose));
    }
  }
}

TEST_CASE("clipped product of partial builds keeps the constant term") {
  /* split the factor list in two, multiply the halves under the pruning
   * window, and compare with an unclipped multiplication */
  const std::uint64_t k = 2;
  const int T = 10;
  const ZWindow clip = window_bounds(k, T);
  const ZWindow wide = cover(k, T);

  auto first = ZWindowSeries<ExactRing>::one(Z, T);
  auto second = ZWindowSeries<ExactRing>::one(Z, T);
  for (int n = 0; n <= T; ++n) {
    auto& half = n <= T / 2 ? first : second;
    half = multiply_binomial_factor(half, +1, n + 1, k, wide);
    half = multiply_binomial_factor(half, -1, n, k, wide);
  }
  const auto clipped = multiply(first, second, clip);
  const auto unclipped = multiply(first, second, ZWindow{2 * wide.lo, 2 * wide.hi});
  CHECK(constant_term(clipped) == constant_term(unclipped));
  CHECK(constant_term(clipped) == constant_term(build_base_product(k, T, Z)));
}

TEST_CASE("extending the factor range beyond the truncation changes nothing") {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const int T = 8;
    const ZWindow w = window_bounds(k, T);
    auto extended = build_base_product(k, T, Z);
    for (int n = T + 1; n <= T + 5; ++n) {
      extended = multiply_binomial_factor(extended, +1, n + 1, k, w);
      extended = multiply_binomial_factor(extended, -1, n, k, w);
    }
    const auto plain = build_base_product(k, T, Z);
    for (std::int64_t e = w.lo; e <= w.hi; ++e)
      CHECK(extended.row(e) == plain.row(e));
  }
}

TEST_CASE("factor order does not matter on an uncut window") {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    for (int T : {0, 3, 7, 12}) {
      const ZWindow wide = cover(k, T);
      const auto fwd = build_base_product_clipped(k, T, Z, wide, FactorOrder::Forward);
      const auto rev = build_base_product_clipped(k, T, Z, wide, FactorOrder::Reversed);
      for (std::int64_t e = wide.lo; e <= wide.hi; ++e)
        CHECK(z_coefficient(fwd, e) == z_coefficient(rev, e));
    }
  }
}

TEST_CASE("factor order does not matter for the pruned constant term") {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    for (int T : {5, 12}) {
      const auto fwd = build_base_product(k, T, Z);
      const auto rev = build_base_product_clipped(k, T, Z, window_bounds(k, T),
                                                  FactorOrder::Reversed);
      CHECK(constant_term(fwd) == constant_term(rev));
    }
  }
}

TEST_CASE("modular build matches the reduced exact build everywhere") {
  for (std::uint64_t m : {2, 3, 5, 9}) {
    const std::uint64_t k = 2;
    const int T = 9;
    const auto exact = build_base_product(k, T, Z);
    const auto modular = build_base_product(k, T, ModRing(m));
    CHECK(exact.window() == modular.window());
    for (std::int64_t e = exact.window().lo; e <= exact.window().hi; ++e)
      CHECK(reduce_mod(exact.row(e), m) == modular.row(e));
  }
}

TEST_CASE("theta series lists the expected monomials at T=3") {
  /* exponent m carries q^{m(m+1)/2}: 1, zq, z^{-1}, z^2 q^3, z^{-2} q, z^{-3} q^3 */
  const auto th = theta_series(Z, 3, ZWindow{-10, 10});
  CHECK(th.window() == ZWindow{-3, 2});
  CHECK(th.row(0) == QSeries<ExactRing>::monomial(Z, 3, 0, BigInt(1)));
  CHECK(th.row(1) == QSeries<ExactRing>::monomial(Z, 3, 1, BigInt(1)));
  CHECK(th.row(-1) == QSeries<ExactRing>::monomial(Z, 3, 0, BigInt(1)));
  CHECK(th.row(2) == QSeries<ExactRing>::monomial(Z, 3, 3, BigInt(1)));
  CHECK(th.row(-2) == QSeries<ExactRing>::monomial(Z, 3, 1, BigInt(1)));
  CHECK(th.row(-3) == QSeries<ExactRing>::monomial(Z, 3, 3, BigInt(1)));
}

TEST_CASE("substituting powers scales both exponents") {
  const auto s = build_base_product(1, 2, Z);
  const auto scaled = substitute_powers(s, 3, 8, ZWindow{-12, 12});
  for (std::int64_t e = s.window().lo; e <= s.window().hi; ++e) {
    const auto& src = s.row(e);
    const auto& dst = scaled.row(3 * e);
    for (int d = 0; d <= 2; ++d) CHECK(dst[3 * d] == src[d]);
  }
  CHECK(scaled.row(1).is_zero());
  CHECK(scaled.row(2).is_zero());
}

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "cphi/zwindow.hpp"

namespace cphi {

/* How a table of cphi values was produced.  Direct builds the two-variable
 * product and reads off the z^0 row; Descent rewrites the product mod p
 * through its base-p digits; Theta goes through the triple-product rewrite;
 * Unpruned is the tiny brute-force cross-check. */
enum class Method { Direct, Descent, Theta, Unpruned };

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Descent: return "descent";
    case Method::Theta: return "theta";
    case Method::Unpruned: return "unpruned";
  }
  return "unknown";
}

/* cphi_k(0), ..., cphi_k(T) as the coefficients of `series`. */
template <typename Ring>
struct CphiTable {
  std::uint64_t colors;
  Method method;
  QSeries<Ring> series;
};

namespace detail {

template <typename Ring>
void check_table(const CphiTable<Ring>& t) {
  if (!(t.series[0] == t.series.ring().one()))
    throw std::runtime_error("internal error: cphi table must start at 1");
  if constexpr (!Ring::is_modular) {
    for (int n = 0; n <= t.series.trunc(); ++n)
      if (t.series[n] < 0)
        throw std::runtime_error("internal error: exact cphi values must be nonnegative");
  }
}

template <typename Ring>
QSeries<Ring> partition_series_in(const Ring& ring, int trunc) {
  if constexpr (Ring::is_modular)
    return reduce_mod(partition_series(trunc), ring.modulus());
  else
    return partition_series(trunc);
}

}  // namespace detail

/* Constant term of the k-colored product, which is the generating function
 * of the k-colored generalized Frobenius partition numbers. */
template <typename Ring>
CphiTable<Ring> cphi_direct(std::uint64_t colors, int trunc, Ring ring) {
  CphiTable<Ring> t{colors, Method::Direct,
                    constant_term(build_base_product(colors, trunc, std::move(ring)))};
  detail::check_table(t);
  return t;
}

/* Same values mod a prime p, computed through the base-p digits of k:
 * the k-th power of the product collapses to a product of digit factors in
 * (z^{p^i}, q^{p^i}), so the cost is polynomial in T and log_p(k).
 * Defined in descent.cpp. */
CphiTable<ModRing> cphi_mod_descent(std::uint64_t colors, int trunc, std::uint64_t p);

/* Triple-product route: the base product equals
 * (sum_m z^m q^{m(m+1)/2}) / prod(1-q^n), so the constant term of the k-th
 * power is CT(theta^k) times the k-th power of the partition series. */
template <typename Ring>
CphiTable<Ring> cphi_theta(std::uint64_t colors, int trunc, Ring ring) {
  if (colors == 0) throw UsageError("color count must be positive");
  const ZWindow clip = window_bounds(colors, trunc);
  const auto theta = theta_series(ring, trunc, clip);
  const auto ct = constant_term(pow_clipped(theta, colors, clip));
  CphiTable<Ring> t{colors, Method::Theta,
                    ct * pow(detail::partition_series_in(ring, trunc), colors)};
  detail::check_table(t);
  return t;
}

/* Brute force over the full reachable z-range with factors applied back to
 * front: no pruning, no shared evaluation order.  Deliberately restricted
 * to sizes where that is affordable. */
template <typename Ring>
CphiTable<Ring> cphi_unpruned(std::uint64_t colors, int trunc, Ring ring) {
  if (colors == 0) throw UsageError("color count must be positive");
  if (colors > 6 || trunc > 12)
    throw UsageError("unpruned method is limited to colors <= 6 and truncation <= 12");
  const std::int64_t span = static_cast<std::int64_t>(colors) * (trunc + 1);
  const ZWindow full{-span, span};
  CphiTable<Ring> t{colors, Method::Unpruned,
                    constant_term(build_base_product_clipped(colors, trunc, std::move(ring),
                                                             full, FactorOrder::Reversed))};
  detail::check_table(t);
  return t;
}

template <typename Ring>
CphiTable<ModRing> reduce_mod(const CphiTable<Ring>& t, std::uint64_t m) {
  if constexpr (Ring::is_modular)
    throw UsageError("table is already modular");
  else
    return CphiTable<ModRing>{t.colors, t.method, reduce_mod(t.series, m)};
}

}  // namespace cphi

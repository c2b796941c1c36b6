#include "cphi/cphi.hpp"
#include "cphi/numtheory.hpp"

namespace cphi {

namespace {

/* Everything the truncated base product can reach: its rows live in the
 * mirror of window_bounds, so a window symmetric in the larger bound holds
 * the complete product with nothing clipped. */
ZWindow support_cover(std::uint64_t colors, int trunc) {
  const ZWindow w = window_bounds(colors, trunc);
  const std::int64_t reach = std::max<std::int64_t>(w.hi, -w.lo);
  return ZWindow{-reach, reach};
}

}  // namespace

/* Values of cphi_k mod a prime p through the base-p digits of k.
 *
 * Since x -> x^p respects sums mod p, the k-th power of the base product
 * P(z,q) collapses digit by digit:
 *
 *     P^k  =  prod_i P(z^{p^i}, q^{p^i})^{k_i}   (mod p),   k = sum_i k_i p^i.
 *
 * Each digit factor is itself a k_i-colored base product, built exactly at
 * the reduced truncation floor(T / p^i) and then re-indexed by p^i; the
 * running product is clipped to window_bounds(k, T), which is sound for the
 * final z^0 extraction.  Cost is polynomial in T and log_p(k), never in k. */
CphiTable<ModRing> cphi_mod_descent(std::uint64_t colors, int trunc, std::uint64_t p) {
  if (colors == 0) throw UsageError("color count must be positive");
  if (!is_prime(p)) throw UsageError("descent requires a prime modulus");
  const ModRing ring(p);
  const ZWindow clip = window_bounds(colors, trunc);

  std::vector<std::uint64_t> digits;
  for (std::uint64_t rest = colors; rest; rest /= p) digits.push_back(rest % p);

  auto acc = ZWindowSeries<ModRing>::one(ring, trunc);
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) {
      const int t_i = static_cast<int>(static_cast<std::uint64_t>(trunc) / scale);
      const auto factor = build_base_product_clipped(digits[i], t_i, ring,
                                                     support_cover(digits[i], t_i),
                                                     FactorOrder::Forward);
      const auto lifted = substitute_powers(factor, scale, trunc, clip);
      acc = multiply(acc, lifted, clip);
    }
    if (i + 1 < digits.size()) scale *= p;
  }

  CphiTable<ModRing> t{colors, Method::Descent, constant_term(acc)};
  detail::check_table(t);
  return t;
}

}  // namespace cphi

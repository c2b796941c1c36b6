#include "cphi/zwindow.hpp"

namespace cphi {

namespace {

/* Largest x in [0, hi] with cost(x) <= budget; cost is nondecreasing. */
template <typename Cost>
std::uint64_t last_within(std::uint64_t hi, unsigned __int128 budget, Cost cost) {
  std::uint64_t lo = 0;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (cost(mid) <= budget)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

/* A row at z-degree -b must climb back through poscost(b) worth of q to
 * reach z^0, a row at +a must descend through negcost(a); either exceeding
 * the truncation means the row cannot touch the constant term. */
ZWindow window_bounds(std::uint64_t colors, int trunc) {
  if (trunc < 0) throw UsageError("truncation must be nonnegative");
  const WindowBudget budget(colors);
  const auto T = static_cast<unsigned __int128>(trunc);

  /* poscost(b) >= b bounds the reach below 0 by T; above 0 the first k
   * steps of negcost are free, after which each costs at least one. */
  const std::uint64_t below_hi = static_cast<std::uint64_t>(trunc);
  std::uint64_t above_hi = colors + static_cast<std::uint64_t>(trunc) + 1;
  if (above_hi < colors) above_hi = ~std::uint64_t(0); /* saturate on overflow */

  const std::uint64_t below =
      last_within(below_hi, T, [&](std::uint64_t b) { return budget.poscost(b); });
  const std::uint64_t above =
      last_within(above_hi, T, [&](std::uint64_t a) { return budget.negcost(a); });

  return ZWindow{-static_cast<std::int64_t>(below), static_cast<std::int64_t>(above)};
}

}  // namespace cphi

#include "cphi/qseries.hpp"

namespace cphi {

/* Euler's pentagonal-number recurrence:
 *   p(n) = sum_{j>=1} (-1)^{j+1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ]
 * Chosen as the reference oracle precisely because it shares nothing with
 * the two-variable product machinery it is used to check. */
QSeries<ExactRing> partition_series(int trunc) {
  QSeries<ExactRing> out(ExactRing{}, trunc);
  auto& p = out.mutable_coefficients();
  p[0] = 1;
  for (int n = 1; n <= trunc; ++n) {
    BigInt acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      if (j & 1)
        acc += p[n - g1];
      else
        acc -= p[n - g1];
      if (g2 <= n) {
        if (j & 1)
          acc += p[n - g2];
        else
          acc -= p[n - g2];
      }
    }
    p[n] = std::move(acc);
  }
  return out;
}

}  // namespace cphi

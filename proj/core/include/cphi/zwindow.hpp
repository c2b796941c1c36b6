#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cphi/numtheory.hpp"
#include "cphi/qseries.hpp"

namespace cphi {

/* Inclusive range of z-exponents retained during bivariate arithmetic.
 * Always contains 0 so the constant term survives every operation. */
struct ZWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t e) const { return e >= lo && e <= hi; }
  std::int64_t width() const { return hi - lo + 1; }

  friend bool operator==(const ZWindow&, const ZWindow&) = default;
};

/* Cost model behind the pruning window.  In the k-colored product
 *
 *     prod_{n>=0} (1 + z q^{n+1})^k (1 + z^{-1} q^n)^k
 *
 * the cheapest way to raise the total z-degree by +a is to take the k copies
 * of zq^1, then the k copies of zq^2, and so on; symmetrically the first k
 * unit drops are free (z^{-1}q^0) and later ones cost q^1, q^2, ...  Hence
 *
 *     poscost(a) = sum_{i=1..a} ceil(i/k),   negcost(b) = sum_{i=1..b} floor((i-1)/k)
 *
 * are lower bounds on the q-degree of any monomial with z-degree +a / -b. */
class WindowBudget {
public:
  explicit WindowBudget(std::uint64_t colors) : k_(colors) {
    if (k_ == 0) throw UsageError("color count must be positive");
  }

  std::uint64_t colors() const { return k_; }

  unsigned __int128 poscost(std::uint64_t a) const {
    const std::uint64_t q = a / k_, s = a % k_;
    /* full blocks of k terms each cost 1..q, plus s terms costing q+1 */
    return static_cast<unsigned __int128>(k_) * q * (q + 1) / 2 +
           static_cast<unsigned __int128>(s) * (q + 1);
  }

  unsigned __int128 negcost(std::uint64_t b) const {
    if (b == 0) return 0;
    const std::uint64_t q = (b - 1) / k_, s = (b - 1) % k_;
    return static_cast<unsigned __int128>(k_) * q * (q - 1) / 2 +
           static_cast<unsigned __int128>(s + 1) * q;
  }

private:
  std::uint64_t k_;
};

/* Largest window [ -b, +a ] with poscost(b) <= T and negcost(a) <= T: a
 * monomial outside it cannot return to z^0 within the q-budget, so clipping
 * to this window preserves the constant term exactly. */
ZWindow window_bounds(std::uint64_t colors, int trunc);

/* Bivariate truncated series: one QSeries row per z-exponent inside a
 * contiguous window.  Rows outside the window are implicitly zero (or have
 * been deliberately pruned by the cost argument above). */
template <typename Ring>
class ZWindowSeries {
public:
  ZWindowSeries(Ring ring, int trunc, ZWindow window)
      : ring_(std::move(ring)), trunc_(trunc), window_(normalized(window)) {
    check_dense_size(window_, trunc_);
    rows_.resize(static_cast<std::size_t>(window_.width()), QSeries<Ring>(ring_, trunc_));
  }

  /* z^0 -> 1, everything else zero; minimal one-row window. */
  static ZWindowSeries one(Ring ring, int trunc) {
    ZWindowSeries s(std::move(ring), trunc, ZWindow{0, 0});
    s.rows_[0].set(0, s.ring_.one());
    return s;
  }

  const Ring& ring() const { return ring_; }
  int trunc() const { return trunc_; }
  const ZWindow& window() const { return window_; }

  const QSeries<Ring>& row(std::int64_t e) const {
    if (!window_.contains(e)) throw UsageError("z-exponent outside window");
    return rows_[static_cast<std::size_t>(e - window_.lo)];
  }
  QSeries<Ring>& row_mut(std::int64_t e) {
    if (!window_.contains(e)) throw UsageError("z-exponent outside window");
    return rows_[static_cast<std::size_t>(e - window_.lo)];
  }

  /* Exponents of rows that hold at least one nonzero coefficient. */
  std::vector<std::int64_t> nonzero_rows() const {
    std::vector<std::int64_t> out;
    for (std::int64_t e = window_.lo; e <= window_.hi; ++e)
      if (!row(e).is_zero()) out.push_back(e);
    return out;
  }

  static constexpr std::int64_t kMaxDenseCells = std::int64_t(1) << 25;

private:
  static ZWindow normalized(ZWindow w) {
    if (w.lo > w.hi) throw UsageError("window bounds out of order");
    w.lo = std::min<std::int64_t>(w.lo, 0);
    w.hi = std::max<std::int64_t>(w.hi, 0);
    return w;
  }
  static void check_dense_size(const ZWindow& w, int trunc) {
    if (trunc < 0) throw UsageError("truncation must be nonnegative");
    if (w.width() > kMaxDenseCells / (trunc + 1))
      throw UsageError("window too large for the dense representation");
  }

  Ring ring_;
  int trunc_;
  ZWindow window_;
  std::vector<QSeries<Ring>> rows_;
};

template <typename Ring>
const QSeries<Ring>& constant_term(const ZWindowSeries<Ring>& s) {
  return s.row(0);
}

/* Row extraction that treats exponents outside the window as zero. */
template <typename Ring>
QSeries<Ring> z_coefficient(const ZWindowSeries<Ring>& s, std::int64_t m) {
  if (!s.window().contains(m)) return QSeries<Ring>(s.ring(), s.trunc());
  return s.row(m);
}

namespace detail {

template <typename Ring>
void require_compatible(const ZWindowSeries<Ring>& a, const ZWindowSeries<Ring>& b) {
  if (!(a.ring() == b.ring())) throw UsageError("series ring mismatch");
  if (a.trunc() != b.trunc()) throw UsageError("series truncation mismatch");
}

/* Result window of a product: reachable exponents intersected with the clip.
 * Exponents beyond the reach of the operands are identically zero, so the
 * intersection loses nothing the clip did not already discard. */
inline ZWindow product_window(const ZWindow& a, const ZWindow& b, const ZWindow& clip) {
  ZWindow w{std::max(clip.lo, a.lo + b.lo), std::min(clip.hi, a.hi + b.hi)};
  w.lo = std::min<std::int64_t>(w.lo, 0);
  w.hi = std::max<std::int64_t>(w.hi, 0);
  return w;
}

}  // namespace detail

/* Bivariate Cauchy product, rows clipped to `clip`.  Clipping is sound for
 * constant-term extraction whenever `clip` comes from window_bounds for the
 * factors still to be multiplied in. */
template <typename Ring>
ZWindowSeries<Ring> multiply(const ZWindowSeries<Ring>& a, const ZWindowSeries<Ring>& b,
                             const ZWindow& clip) {
  detail::require_compatible(a, b);
  const int T = a.trunc();
  ZWindowSeries<Ring> out(a.ring(), T, detail::product_window(a.window(), b.window(), clip));
  const ZWindow& w = out.window();
  const std::vector<std::int64_t> nza = a.nonzero_rows();
  const std::vector<std::int64_t> nzb = b.nonzero_rows();

  if constexpr (Ring::is_modular) {
    const ModRing& ring = a.ring();
    const std::uint64_t m = ring.modulus();
    /* one unreduced 64-bit accumulator row per output row; safe while the
     * worst-case term count times (m-1)^2 stays below 2^64 */
    const unsigned __int128 worst = static_cast<unsigned __int128>(m - 1) * (m - 1) *
                                    nza.size() * static_cast<std::uint64_t>(T + 1);
    if (worst <= ~static_cast<std::uint64_t>(0)) {
      std::vector<std::vector<std::uint64_t>> acc(static_cast<std::size_t>(w.width()));
      for (std::int64_t ea : nza) {
        const auto& ra = a.row(ea).coefficients();
        for (std::int64_t eb : nzb) {
          const std::int64_t e = ea + eb;
          if (!w.contains(e)) continue;
          auto& dest = acc[static_cast<std::size_t>(e - w.lo)];
          if (dest.empty()) dest.assign(static_cast<std::size_t>(T) + 1, 0);
          const auto& rb = b.row(eb).coefficients();
          for (int i = 0; i <= T; ++i) {
            const std::uint64_t ai = ra[i];
            if (!ai) continue;
            for (int j = 0; j + i <= T; ++j) dest[i + j] += ai * rb[j];
          }
        }
      }
      for (std::int64_t e = w.lo; e <= w.hi; ++e) {
        const auto& src = acc[static_cast<std::size_t>(e - w.lo)];
        if (src.empty()) continue;
        auto& dest = out.row_mut(e).mutable_coefficients();
        for (int n = 0; n <= T; ++n) dest[n] = ring.reduce(src[n]);
      }
    } else {
      for (std::int64_t ea : nza) {
        const auto& ra = a.row(ea);
        for (std::int64_t eb : nzb) {
          const std::int64_t e = ea + eb;
          if (!w.contains(e)) continue;
          auto& dest = out.row_mut(e).mutable_coefficients();
          const auto& rb = b.row(eb).coefficients();
          for (int i = 0; i <= T; ++i) {
            const std::uint64_t ai = ra[i];
            if (!ai) continue;
            for (int j = 0; j + i <= T; ++j)
              dest[i + j] = ring.reduce(dest[i + j] + ring.mul(ai, rb[j]));
          }
        }
      }
    }
  } else {
    for (std::int64_t ea : nza) {
      const auto& ra = a.row(ea);
      for (std::int64_t eb : nzb) {
        const std::int64_t e = ea + eb;
        if (!w.contains(e)) continue;
        auto& dest = out.row_mut(e).mutable_coefficients();
        const auto& rb = b.row(eb).coefficients();
        for (int i = 0; i <= T; ++i) {
          if (ra[i].is_zero()) continue;
          for (int j = 0; j + i <= T; ++j)
            if (!rb[j].is_zero()) dest[i + j] += ra[i] * rb[j];
        }
      }
    }
  }
  return out;
}

template <typename Ring>
ZWindowSeries<Ring> pow_clipped(const ZWindowSeries<Ring>& base, std::uint64_t e,
                                const ZWindow& clip) {
  ZWindowSeries<Ring> result = ZWindowSeries<Ring>::one(base.ring(), base.trunc());
  if (e == 0) return result;
  ZWindowSeries<Ring> sq = base;
  while (true) {
    if (e & 1) result = multiply(result, sq, clip);
    e >>= 1;
    if (!e) break;
    sq = multiply(sq, sq, clip);
  }
  return result;
}

/* z -> z^s, q -> q^s.  Rows whose scaled exponent leaves `clip` are dropped;
 * scaled q-degrees beyond new_trunc are dropped. */
template <typename Ring>
ZWindowSeries<Ring> substitute_powers(const ZWindowSeries<Ring>& a, std::uint64_t s,
                                      int new_trunc, const ZWindow& clip) {
  if (s == 0) throw UsageError("substitution exponent must be positive");
  const auto scaled = [&](std::int64_t e) -> __int128 {
    return static_cast<__int128>(e) * static_cast<__int128>(s);
  };
  ZWindow w{std::max<std::int64_t>(clip.lo, 0), std::min<std::int64_t>(clip.hi, 0)};
  for (std::int64_t e = a.window().lo; e <= a.window().hi; ++e) {
    const __int128 ne = scaled(e);
    if (ne < clip.lo || ne > clip.hi) continue;
    w.lo = std::min(w.lo, static_cast<std::int64_t>(ne));
    w.hi = std::max(w.hi, static_cast<std::int64_t>(ne));
  }
  ZWindowSeries<Ring> out(a.ring(), new_trunc, w);
  for (std::int64_t e = a.window().lo; e <= a.window().hi; ++e) {
    const __int128 ne = scaled(e);
    if (ne < w.lo || ne > w.hi) continue;
    const auto& src = a.row(e).coefficients();
    auto& dest = out.row_mut(static_cast<std::int64_t>(ne)).mutable_coefficients();
    for (int d = 0; d <= a.trunc(); ++d) {
      const std::int64_t nd = static_cast<std::int64_t>(d) * static_cast<std::int64_t>(s);
      if (nd > new_trunc) break;
      dest[static_cast<std::size_t>(nd)] = src[d];
    }
  }
  return out;
}

/* Multiplies by (1 + z^zsign q^qexp)^k, truncating and clipping as it goes.
 * Binomial term t contributes C(k,t) z^{zsign*t} q^{qexp*t}. */
template <typename Ring>
ZWindowSeries<Ring> multiply_binomial_factor(const ZWindowSeries<Ring>& src, int zsign,
                                             int qexp, std::uint64_t k, const ZWindow& clip) {
  if (zsign != 1 && zsign != -1) throw UsageError("z-exponent sign must be +1 or -1");
  if (qexp < 0) throw UsageError("q-exponent must be nonnegative");
  const int T = src.trunc();

  std::uint64_t t_max = k;
  if (qexp > 0) t_max = std::min<std::uint64_t>(t_max, static_cast<std::uint64_t>(T / qexp));
  /* beyond the combined window spans every destination row falls outside */
  t_max = std::min<std::uint64_t>(
      t_max, static_cast<std::uint64_t>(src.window().width() + clip.width()));

  ZWindow reach = src.window();
  if (zsign > 0)
    reach.hi += static_cast<std::int64_t>(t_max);
  else
    reach.lo -= static_cast<std::int64_t>(t_max);
  ZWindowSeries<Ring> out(src.ring(), T,
                          detail::product_window(reach, ZWindow{0, 0}, clip));

  const std::vector<BigInt> binom = binomial_row(k, t_max);
  std::vector<typename Ring::Value> coeff(binom.size());
  for (std::size_t t = 0; t < binom.size(); ++t) coeff[t] = src.ring().from_bigint(binom[t]);

  std::vector<char> nonzero(static_cast<std::size_t>(src.window().width()), 0);
  for (std::int64_t e = src.window().lo; e <= src.window().hi; ++e)
    nonzero[static_cast<std::size_t>(e - src.window().lo)] = !src.row(e).is_zero();

  const ZWindow& w = out.window();
  for (std::int64_t e = w.lo; e <= w.hi; ++e) {
    auto& dest = out.row_mut(e);
    for (std::uint64_t t = 0; t <= t_max; ++t) {
      const std::int64_t se = e - zsign * static_cast<std::int64_t>(t);
      if (!src.window().contains(se)) continue;
      if (!nonzero[static_cast<std::size_t>(se - src.window().lo)]) continue;
      const int shift = qexp * static_cast<int>(t);
      if (shift > T) break;
      detail::axpy_shifted(dest, coeff[t], src.row(se), shift);
    }
  }
  return out;
}

enum class FactorOrder { Forward, Reversed };

/* The k-colored two-variable product
 *
 *     prod_{n=0..T} (1 + z q^{n+1})^k (1 + z^{-1} q^n)^k
 *
 * truncated at q^T and clipped to `clip` after every factor.  Factors with
 * n > T are identities at this truncation, so the finite product is the
 * whole story.  Reversed order multiplies the same factors back to front;
 * it exists so tests can exercise a maximally different evaluation. */
template <typename Ring>
ZWindowSeries<Ring> build_base_product_clipped(std::uint64_t colors, int trunc, Ring ring,
                                               const ZWindow& clip, FactorOrder order) {
  if (colors == 0) throw UsageError("color count must be positive");
  std::vector<std::pair<int, int>> factors;  // (zsign, qexp)
  for (int n = 0; n <= trunc; ++n) {
    factors.emplace_back(+1, n + 1);
    factors.emplace_back(-1, n);
  }
  if (order == FactorOrder::Reversed) std::reverse(factors.begin(), factors.end());
  ZWindowSeries<Ring> prod = ZWindowSeries<Ring>::one(std::move(ring), trunc);
  for (const auto& [zsign, qexp] : factors)
    prod = multiply_binomial_factor(prod, zsign, qexp, colors, clip);
  return prod;
}

template <typename Ring>
ZWindowSeries<Ring> build_base_product(std::uint64_t colors, int trunc, Ring ring) {
  return build_base_product_clipped(colors, trunc, std::move(ring),
                                    window_bounds(colors, trunc), FactorOrder::Forward);
}

/* sum_m z^m q^{m(m+1)/2} restricted to `clip` and q-degree <= trunc. */
template <typename Ring>
ZWindowSeries<Ring> theta_series(Ring ring, int trunc, const ZWindow& clip) {
  const auto cost = [](std::int64_t m) -> std::int64_t { return m * (m + 1) / 2; };
  ZWindow w{0, 0};
  while (w.hi + 1 <= clip.hi && cost(w.hi + 1) <= trunc) ++w.hi;
  while (w.lo - 1 >= clip.lo && cost(w.lo - 1) <= trunc) --w.lo;
  ZWindowSeries<Ring> out(std::move(ring), trunc, w);
  for (std::int64_t m = w.lo; m <= w.hi; ++m)
    out.row_mut(m).set(static_cast<int>(cost(m)), out.ring().one());
  return out;
}

}  // namespace cphi

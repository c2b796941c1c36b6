#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cphi/errors.hpp"
#include "cphi/ring.hpp"

namespace cphi {

/* Truncated formal power series c_0 + c_1 q + ... + c_T q^T with
 * coefficients in Ring.  The truncation T is inclusive and every operation
 * silently discards degrees above it.  Operands of binary operations must
 * agree in both ring and truncation. */
template <typename Ring>
class QSeries {
public:
  using Value = typename Ring::Value;

  QSeries(Ring ring, int trunc)
      : ring_(std::move(ring)),
        trunc_(checked_trunc(trunc)),
        coeff_(static_cast<std::size_t>(trunc) + 1) {
    /* vector value-initializes, which is zero in both rings */
  }

  static QSeries one(Ring ring, int trunc) {
    QSeries s(std::move(ring), trunc);
    s.coeff_[0] = s.ring_.one();
    return s;
  }

  static QSeries monomial(Ring ring, int trunc, int degree, Value c) {
    QSeries s(std::move(ring), trunc);
    if (degree < 0) throw UsageError("monomial degree must be nonnegative");
    if (degree <= trunc) s.coeff_[static_cast<std::size_t>(degree)] = std::move(c);
    return s;
  }

  const Ring& ring() const { return ring_; }
  int trunc() const { return trunc_; }

  const Value& operator[](int n) const { return coeff_[static_cast<std::size_t>(n)]; }
  void set(int n, Value v) {
    if (n < 0 || n > trunc_) throw UsageError("coefficient index out of range");
    coeff_[static_cast<std::size_t>(n)] = std::move(v);
  }

  const std::vector<Value>& coefficients() const { return coeff_; }
  std::vector<Value>& mutable_coefficients() { return coeff_; }

  bool is_zero() const {
    for (const Value& c : coeff_)
      if (!Ring::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.ring_ == b.ring_ && a.trunc_ == b.trunc_ && a.coeff_ == b.coeff_;
  }

private:
  static int checked_trunc(int t) {
    if (t < 0) throw UsageError("truncation must be nonnegative");
    return t;
  }

  Ring ring_;
  int trunc_;
  std::vector<Value> coeff_;
};

namespace detail {

template <typename Ring>
void require_compatible(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  if (!(a.ring() == b.ring())) throw UsageError("series ring mismatch");
  if (a.trunc() != b.trunc()) throw UsageError("series truncation mismatch");
}

/* dest += c * q^shift * src, truncated.  c must already be reduced. */
inline void axpy_shifted(QSeries<ModRing>& dest, std::uint64_t c,
                         const QSeries<ModRing>& src, int shift) {
  if (c == 0) return;
  const ModRing& ring = dest.ring();
  const int T = dest.trunc();
  auto& d = dest.mutable_coefficients();
  const auto& s = src.coefficients();
  if (c == 1) {
    for (int i = 0; i + shift <= T; ++i)
      if (s[i]) d[i + shift] = ring.add(d[i + shift], s[i]);
  } else {
    /* c*s[i] <= (m-1)^2 and d < m, so the sum stays below 2^64 */
    for (int i = 0; i + shift <= T; ++i)
      if (s[i]) d[i + shift] = ring.reduce(d[i + shift] + c * s[i]);
  }
}

inline void axpy_shifted(QSeries<ExactRing>& dest, const BigInt& c,
                         const QSeries<ExactRing>& src, int shift) {
  if (c.is_zero()) return;
  const int T = dest.trunc();
  auto& d = dest.mutable_coefficients();
  const auto& s = src.coefficients();
  if (c == 1) {
    for (int i = 0; i + shift <= T; ++i)
      if (!s[i].is_zero()) d[i + shift] += s[i];
  } else {
    for (int i = 0; i + shift <= T; ++i)
      if (!s[i].is_zero()) d[i + shift] += c * s[i];
  }
}

}  // namespace detail

template <typename Ring>
QSeries<Ring> operator+(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  detail::require_compatible(a, b);
  QSeries<Ring> out(a.ring(), a.trunc());
  auto& c = out.mutable_coefficients();
  for (int n = 0; n <= a.trunc(); ++n) c[n] = a.ring().add(a[n], b[n]);
  return out;
}

/* Cauchy product truncated at q^T.  Schoolbook; series here stay far below
 * the sizes where subquadratic multiplication would pay off.  The modular
 * kernel accumulates unreduced 64-bit sums when (T+1)(m-1)^2 fits, which is
 * every modulus this library meets in practice. */
template <typename Ring>
QSeries<Ring> operator*(const QSeries<Ring>& a, const QSeries<Ring>& b) {
  detail::require_compatible(a, b);
  const int T = a.trunc();
  QSeries<Ring> out(a.ring(), T);
  auto& c = out.mutable_coefficients();

  if constexpr (Ring::is_modular) {
    const ModRing& ring = a.ring();
    const std::uint64_t m = ring.modulus();
    const auto& av = a.coefficients();
    const auto& bv = b.coefficients();
    const unsigned __int128 worst = static_cast<unsigned __int128>(m - 1) * (m - 1) *
                                    static_cast<std::uint64_t>(T + 1);
    if (worst <= ~static_cast<std::uint64_t>(0)) {
      std::vector<std::uint64_t> acc(static_cast<std::size_t>(T) + 1, 0);
      for (int i = 0; i <= T; ++i) {
        const std::uint64_t ai = av[i];
        if (!ai) continue;
        for (int j = 0; j + i <= T; ++j) acc[i + j] += ai * bv[j];
      }
      for (int n = 0; n <= T; ++n) c[n] = ring.reduce(acc[n]);
    } else {
      for (int n = 0; n <= T; ++n) {
        unsigned __int128 acc = 0;
        for (int i = 0; i <= n; ++i) acc += static_cast<unsigned __int128>(av[i]) * bv[n - i];
        c[n] = static_cast<std::uint64_t>(acc % m);
      }
    }
  } else {
    for (int i = 0; i <= T; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j + i <= T; ++j)
        if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
  }
  return out;
}

template <typename Ring>
QSeries<Ring> pow(const QSeries<Ring>& base, std::uint64_t e) {
  QSeries<Ring> result = QSeries<Ring>::one(base.ring(), base.trunc());
  if (e == 0) return result;
  QSeries<Ring> sq = base;
  while (true) {
    if (e & 1) result = result * sq;
    e >>= 1;
    if (!e) break;
    sq = sq * sq;
  }
  return result;
}

/* Maps an exact series into Z/m, coefficientwise canonical residues. */
inline QSeries<ModRing> reduce_mod(const QSeries<ExactRing>& a, std::uint64_t m) {
  ModRing ring(m);
  QSeries<ModRing> out(ring, a.trunc());
  auto& c = out.mutable_coefficients();
  for (int n = 0; n <= a.trunc(); ++n) c[n] = ring.from_bigint(a[n]);
  return out;
}

/* Prefix of a series at a lower truncation. */
template <typename Ring>
QSeries<Ring> truncated(const QSeries<Ring>& a, int new_trunc) {
  if (new_trunc > a.trunc()) throw UsageError("cannot extend a series by truncation");
  QSeries<Ring> out(a.ring(), new_trunc);
  auto& c = out.mutable_coefficients();
  for (int n = 0; n <= new_trunc; ++n) c[n] = a[n];
  return out;
}

/* Sum_n p(n) q^n by Euler's pentagonal-number recurrence; see partition.cpp. */
QSeries<ExactRing> partition_series(int trunc);

}  // namespace cphi

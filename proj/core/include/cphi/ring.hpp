#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "cphi/errors.hpp"

namespace cphi {

using BigInt = boost::multiprecision::cpp_int;

/* Coefficient ring policies.  Series and bivariate windows are templated on
 * one of these two types; the ring instance travels with every series so
 * mixed-modulus arithmetic is caught at the API boundary. */

/* Exact arbitrary-precision integers. */
struct ExactRing {
  using Value = BigInt;
  static constexpr bool is_modular = false;

  static Value zero() { return Value(); }
  static Value one() { return Value(1); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value from_int(long long v) { return Value(v); }
  static Value from_bigint(BigInt v) { return v; }
  static bool is_zero(const Value& v) { return v.is_zero(); }

  friend bool operator==(const ExactRing&, const ExactRing&) = default;
};

/* Integers mod m, canonical residues in [0, m).  The modulus is kept below
 * 2^32 so a single product of residues fits in 64 bits; reduction goes
 * through a precomputed Barrett reciprocal instead of hardware division,
 * which is what makes the dense kernels cheap. */
class ModRing {
public:
  using Value = std::uint64_t;
  static constexpr bool is_modular = true;
  static constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFull;

  explicit ModRing(std::uint64_t modulus) : m_(modulus) {
    if (m_ < 2) throw UsageError("modulus must be at least 2");
    if (m_ > kMaxModulus) throw UsageError("modulus must be smaller than 2^32");
    recip_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / m_);
  }

  std::uint64_t modulus() const { return m_; }

  /* Reduces any 64-bit value mod m.  The Barrett quotient underestimates
   * floor(x/m) by at most two, hence the correction loop. */
  Value reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * recip_) >> 64);
    std::uint64_t r = x - q * m_;
    while (r >= m_) r -= m_;
    return r;
  }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value add(Value a, Value b) const {
    std::uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + m_ - b; }
  Value mul(Value a, Value b) const { return reduce(a * b); }
  Value from_int(long long v) const {
    long long r = v % static_cast<long long>(m_);
    if (r < 0) r += static_cast<long long>(m_);
    return static_cast<Value>(r);
  }
  Value from_bigint(const BigInt& v) const {
    BigInt r = v % m_;
    if (r < 0) r += m_;
    return r.convert_to<std::uint64_t>();
  }
  static bool is_zero(Value v) { return v == 0; }

  friend bool operator==(const ModRing& a, const ModRing& b) { return a.m_ == b.m_; }

private:
  std::uint64_t m_;
  std::uint64_t recip_;
};

}  // namespace cphi

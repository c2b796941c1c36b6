#include "cphi/numtheory.hpp"

#include "cphi/errors.hpp"

namespace cphi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw UsageError("cannot factorize zero");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d <= n / d; d == 2 ? d = 3 : d += 2) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  /* extended gcd on signed 128-bit to dodge overflow near 2^64 */
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw UsageError("modular inverse requires coprime arguments");
  old_s %= static_cast<__int128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

CrtSolution crt_solve(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& residue_prime_pairs) {
  if (residue_prime_pairs.empty()) throw UsageError("need at least one congruence to solve");
  std::uint64_t x = 0, modulus = 1;
  for (const auto& [residue, prime] : residue_prime_pairs) {
    if (!is_prime(prime)) throw UsageError("CRT moduli must be prime");
    if (modulus % prime == 0) throw UsageError("CRT primes must be pairwise distinct");
    if (modulus > ~std::uint64_t(0) / prime) throw UsageError("CRT modulus overflows");
    /* Garner step: find x' = x + modulus*t matching the next residue */
    const std::uint64_t gap = (residue % prime + prime - x % prime) % prime;
    const std::uint64_t t = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(mod_inverse(modulus % prime, prime)) * gap % prime);
    x += modulus * t;
    modulus *= prime;
  }
  return CrtSolution{x, modulus};
}

std::vector<BigInt> binomial_row(std::uint64_t n, std::uint64_t t_max) {
  std::vector<BigInt> out(static_cast<std::size_t>(t_max) + 1);
  out[0] = 1;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    if (t > n) {
      out[t] = 0;
      continue;
    }
    out[t] = out[t - 1] * BigInt(n - t + 1) / BigInt(t);
  }
  return out;
}

}  // namespace cphi

#pragma once

#include <cstdint>
#include <vector>

#include "cphi/ring.hpp"

namespace cphi {

bool is_prime(std::uint64_t n);

/* (prime, exponent) pairs, ascending primes. */
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/* Inverse of a mod m; a and m must be coprime. */
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/* Simultaneous solution of x = residue_i (mod prime_i) for pairwise distinct
 * primes, returned as the canonical residue mod the product. */
struct CrtSolution {
  std::uint64_t value;
  std::uint64_t modulus;
};
CrtSolution crt_solve(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& residue_prime_pairs);

/* C(n, t) for t = 0..t_max as exact integers; n may be huge. */
std::vector<BigInt> binomial_row(std::uint64_t n, std::uint64_t t_max);

}  // namespace cphi

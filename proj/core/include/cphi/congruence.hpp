#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cphi/cphi.hpp"

namespace cphi {

/* The arithmetic progression family  cphi_{k0 + step*N}(p*n + r) = 0 (mod p)
 * for all N, n >= 0.  step == 0 encodes a single-k congruence. */
struct CongruenceFamily {
  std::uint64_t k0 = 1;
  std::uint64_t p = 2;
  std::uint64_t r = 1;
  std::uint64_t step = 0;
  std::string label;

  friend bool operator==(const CongruenceFamily&, const CongruenceFamily&) = default;
};

/* Checks the family parameters and fills in a display label. */
CongruenceFamily make_family(std::uint64_t k0, std::uint64_t p, std::uint64_t r,
                             std::uint64_t step);

/* A base congruence cphi_k(p*n + r) = 0 (mod p) lifts to every color count
 * k + p*N: mod p the (k + p*N)-th power of the base product collapses to
 * the k-th power times a product in (z^p, q^p), since x -> x^p is additive
 * mod p.  The returned family records that stride. */
CongruenceFamily lift_family(std::uint64_t k, std::uint64_t p, std::uint64_t r);

/* Simultaneous congruence classes produced by combining prime families with
 * pairwise distinct primes:  cphi_{M*N + k_residue}(M*n + n_residue) = 0
 * (mod M) with M the product of the member primes. */
struct CompositeCongruence {
  std::uint64_t k_residue = 0;
  std::uint64_t k_modulus = 1;
  std::uint64_t n_residue = 0;
  std::uint64_t n_modulus = 1;
  std::uint64_t modulus = 1;

  friend bool operator==(const CompositeCongruence&, const CompositeCongruence&) = default;
};

CompositeCongruence crt_combine(const std::vector<CongruenceFamily>& members);

struct Counterexample {
  std::uint64_t colors = 0;
  std::uint64_t n = 0;       /* evaluation point of cphi */
  std::uint64_t residue = 0; /* nonzero residue found there */
  std::uint64_t modulus = 0; /* prime it failed against */
};

/* Outcome of a bounded verification run.  A counterexample is only reported
 * after an independent recomputation (different method) reproduces it. */
struct Verdict {
  bool holds = true;
  std::int64_t checked_n_max = -1;
  std::int64_t checked_N_max = -1;
  std::optional<Counterexample> counterexample;
};

/* cphi_k(p*n + r) = 0 (mod p) for n = 0..n_max.  Method must be Direct or
 * Descent; the cross-check on failure uses the other one. */
Verdict verify_single(std::uint64_t k, std::uint64_t p, std::uint64_t r, std::int64_t n_max,
                      Method method = Method::Descent);

/* Members N = 0..N_max of a family, each checked for n = 0..n_max. */
Verdict verify_family(const CongruenceFamily& family, std::int64_t N_max, std::int64_t n_max,
                      Method method = Method::Descent);

/* Composite members k = M*N + k_residue checked against every prime factor
 * of M, N = 0..N_max, evaluation points M*n + n_residue for n = 0..n_max. */
Verdict verify_composite(const CompositeCongruence& c, std::int64_t N_max, std::int64_t n_max);

/* Scan floor: congruences that merely look true on a short prefix are not
 * worth reporting, so searches must look at least this far. */
constexpr std::int64_t kSearchScanFloor = 25;

struct SearchCandidate {
  std::uint64_t colors = 0;
  std::uint64_t r = 0;

  friend bool operator==(const SearchCandidate&, const SearchCandidate&) = default;
};

/* All residues r in (0, p) with cphi_k(p*n + r) = 0 (mod p) for every
 * n = 0..n_scan and k in [k_from, k_to].  Empirical evidence, not proof;
 * n_scan below the floor is rejected. */
std::vector<SearchCandidate> search(std::uint64_t p, std::uint64_t k_from, std::uint64_t k_to,
                                    std::int64_t n_scan);

/* One z^{p*j} row of the base product mod p, scanned on the residue class
 * p*n + r.  Rows with |p*j| beyond the pruning window carry no information
 * at this truncation and are flagged vacuous rather than counted as
 * evidence. */
struct DissectionRow {
  std::int64_t j = 0;
  std::int64_t z_exponent = 0;
  bool outside_window = false;
  bool vanishes = true;
  std::optional<std::pair<std::int64_t, std::uint64_t>> first_failure; /* (n, residue) */
};

/* The z^0 row reproduces the verify_single evidence.  The j != 0 rows are
 * the cross-terms a constant-term extraction couples with the z^{-p*j}
 * rows of a (z^p, q^p) cofactor; whether their vanishing is needed for the
 * lifting argument is left open here, so this op reports what is actually
 * true at the given truncation instead of assuming either answer. */
std::vector<DissectionRow> verify_dissection_ingredients(std::uint64_t k, std::uint64_t p,
                                                         std::uint64_t r, std::int64_t j_max,
                                                         std::int64_t n_max);

}  // namespace cphi

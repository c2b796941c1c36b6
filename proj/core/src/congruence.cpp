#include "cphi/congruence.hpp"

#include <sstream>

#include "cphi/numtheory.hpp"

namespace cphi {

namespace {

/* Truncations are bounded to keep index arithmetic and dense storage sane;
 * verification sweeps anywhere near this limit are not desk-scale anyway. */
constexpr std::int64_t kMaxTrunc = std::int64_t(1) << 26;

void check_hypothesis(std::uint64_t k, std::uint64_t p, std::uint64_t r) {
  if (k == 0) throw UsageError("color count must be positive");
  if (!is_prime(p)) throw UsageError("modulus must be prime");
  if (r == 0 || r >= p) throw UsageError("residue must satisfy 0 < r < p");
}

/* Truncation reaching evaluation point modulus*n_max + residue. */
int checked_trunc(std::uint64_t modulus, std::uint64_t residue, std::int64_t n_max) {
  const auto m = static_cast<std::int64_t>(modulus);
  const auto r = static_cast<std::int64_t>(residue);
  if (n_max > (kMaxTrunc - r) / m)
    throw UsageError("requested range needs an unreasonably large truncation");
  return static_cast<int>(m * n_max + r);
}

std::string family_label(std::uint64_t k0, std::uint64_t p, std::uint64_t r,
                         std::uint64_t step) {
  std::ostringstream os;
  if (step)
    os << "cphi_{" << k0 << "+" << step << "N}(" << p << "n+" << r << ") = 0 (mod " << p << ")";
  else
    os << "cphi_" << k0 << "(" << p << "n+" << r << ") = 0 (mod " << p << ")";
  return os.str();
}

/* Direct stays in the mod ring: its point is an independent evaluation
 * (factor-by-factor product), not exact integer arithmetic. */
QSeries<ModRing> table_mod(std::uint64_t k, int trunc, std::uint64_t p, Method method) {
  switch (method) {
    case Method::Direct:
      return cphi_direct(k, trunc, ModRing(p)).series;
    case Method::Descent:
      return cphi_mod_descent(k, trunc, p).series;
    default:
      throw UsageError("verification method must be direct or descent");
  }
}

/* A failure only becomes a Verdict witness once the other computation path
 * reproduces the residue at the same point. */
Counterexample confirmed_failure(std::uint64_t k, std::uint64_t p, std::uint64_t r,
                                 std::int64_t n, std::uint64_t residue, Method method) {
  const Method other = method == Method::Descent ? Method::Direct : Method::Descent;
  const int at = checked_trunc(p, r, n);
  const auto check = table_mod(k, at, p, other);
  if (check[at] != residue)
    throw std::runtime_error("internal error: methods disagree on a counterexample");
  return Counterexample{k, static_cast<std::uint64_t>(at), residue, p};
}

}  // namespace

CongruenceFamily make_family(std::uint64_t k0, std::uint64_t p, std::uint64_t r,
                             std::uint64_t step) {
  check_hypothesis(k0, p, r);
  if (step != 0 && step != p)
    throw UsageError("family step must be 0 (single congruence) or the prime itself");
  return CongruenceFamily{k0, p, r, step, family_label(k0, p, r, step)};
}

CongruenceFamily lift_family(std::uint64_t k, std::uint64_t p, std::uint64_t r) {
  return make_family(k, p, r, p);
}

CompositeCongruence crt_combine(const std::vector<CongruenceFamily>& members) {
  if (members.size() < 2) throw UsageError("combining needs at least two member families");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> k_pairs, n_pairs;
  for (const CongruenceFamily& f : members) {
    check_hypothesis(f.k0, f.p, f.r);
    if (f.step != f.p) throw UsageError("only lifted families (step = p) can be combined");
    k_pairs.emplace_back(f.k0 % f.p, f.p);
    n_pairs.emplace_back(f.r, f.p);
  }
  const CrtSolution k_sol = crt_solve(k_pairs); /* also rejects repeated primes */
  const CrtSolution n_sol = crt_solve(n_pairs);
  if (k_sol.modulus > ModRing::kMaxModulus)
    throw UsageError("combined modulus must be smaller than 2^32");
  return CompositeCongruence{k_sol.value, k_sol.modulus, n_sol.value, n_sol.modulus,
                             k_sol.modulus};
}

Verdict verify_single(std::uint64_t k, std::uint64_t p, std::uint64_t r, std::int64_t n_max,
                      Method method) {
  check_hypothesis(k, p, r);
  if (method != Method::Direct && method != Method::Descent)
    throw UsageError("verification method must be direct or descent");
  Verdict v;
  v.checked_N_max = 0;
  if (n_max < 0) return v; /* empty range holds vacuously */
  const int trunc = checked_trunc(p, r, n_max);
  const auto values = table_mod(k, trunc, p, method);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::uint64_t residue = values[static_cast<int>(p * n) + static_cast<int>(r)];
    if (residue != 0) {
      v.holds = false;
      v.checked_n_max = n;
      v.counterexample = confirmed_failure(k, p, r, n, residue, method);
      return v;
    }
  }
  v.checked_n_max = n_max;
  return v;
}

Verdict verify_family(const CongruenceFamily& family, std::int64_t N_max, std::int64_t n_max,
                      Method method) {
  check_hypothesis(family.k0, family.p, family.r);
  Verdict v;
  if (N_max < 0) return v;
  const std::int64_t last_member = family.step == 0 ? 0 : N_max;
  for (std::int64_t N = 0; N <= last_member; ++N) {
    const std::uint64_t k = family.k0 + family.step * static_cast<std::uint64_t>(N);
    Verdict single = verify_single(k, family.p, family.r, n_max, method);
    single.checked_N_max = N;
    if (!single.holds) return single;
    v = single;
  }
  return v;
}

Verdict verify_composite(const CompositeCongruence& c, std::int64_t N_max, std::int64_t n_max) {
  if (c.modulus < 2) throw UsageError("composite modulus must be at least 2");
  if (c.k_modulus != c.modulus || c.n_modulus != c.modulus)
    throw UsageError("composite residues must be stated mod the combined modulus");
  if (c.k_residue >= c.modulus || c.n_residue >= c.modulus)
    throw UsageError("composite residues must be canonical");
  std::vector<std::uint64_t> primes;
  for (const auto& [prime, exponent] : factorize(c.modulus)) {
    if (exponent != 1) throw UsageError("composite modulus must be squarefree");
    primes.push_back(prime);
  }
  for (const std::uint64_t p : primes)
    if (c.n_residue % p == 0)
      throw UsageError("composite evaluation class hits residue 0 mod a member prime");

  Verdict v;
  if (N_max < 0 || n_max < 0) return v; /* empty conjunction holds vacuously */
  const int trunc = checked_trunc(c.modulus, c.n_residue, n_max);
  for (std::int64_t N = 0; N <= N_max; ++N) {
    const std::uint64_t k = c.modulus * static_cast<std::uint64_t>(N) + c.k_residue;
    if (k == 0)
      throw UsageError("composite covers zero colors at N = 0; start verification at N = 1");
    std::vector<QSeries<ModRing>> tables;
    tables.reserve(primes.size());
    for (const std::uint64_t p : primes)
      tables.push_back(cphi_mod_descent(k, trunc, p).series);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const int at = static_cast<int>(c.modulus * static_cast<std::uint64_t>(n) + c.n_residue);
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t residue = tables[i][at];
        if (residue == 0) continue;
        const std::uint64_t p = primes[i];
        const auto check = cphi_direct(k, at, ModRing(p)).series;
        if (check[at] != residue)
          throw std::runtime_error("internal error: methods disagree on a counterexample");
        v.holds = false;
        v.checked_n_max = n;
        v.checked_N_max = N;
        v.counterexample = Counterexample{k, static_cast<std::uint64_t>(at), residue, p};
        return v;
      }
    }
    v.checked_n_max = n_max;
    v.checked_N_max = N;
  }
  return v;
}

std::vector<SearchCandidate> search(std::uint64_t p, std::uint64_t k_from, std::uint64_t k_to,
                                    std::int64_t n_scan) {
  if (!is_prime(p)) throw UsageError("modulus must be prime");
  if (n_scan < kSearchScanFloor)
    throw UsageError("scan depth below the evidence floor of 25");
  if (k_from == 0) throw UsageError("color count must be positive");
  std::vector<SearchCandidate> out;
  if (k_from > k_to) return out;
  const int trunc = checked_trunc(p, p - 1, n_scan);
  for (std::uint64_t k = k_from; k <= k_to; ++k) {
    const auto values = cphi_mod_descent(k, trunc, p).series;
    for (std::uint64_t r = 1; r < p; ++r) {
      bool vanishes = true;
      for (std::int64_t n = 0; n <= n_scan && vanishes; ++n)
        vanishes = values[static_cast<int>(p * static_cast<std::uint64_t>(n) + r)] == 0;
      if (vanishes) out.push_back(SearchCandidate{k, r});
    }
  }
  return out;
}

std::vector<DissectionRow> verify_dissection_ingredients(std::uint64_t k, std::uint64_t p,
                                                         std::uint64_t r, std::int64_t j_max,
                                                         std::int64_t n_max) {
  check_hypothesis(k, p, r);
  if (j_max < 0) throw UsageError("row range must be nonnegative");
  std::vector<DissectionRow> out;
  if (n_max < 0) return out;
  const int trunc = checked_trunc(p, r, n_max);
  const auto product = build_base_product(k, trunc, ModRing(p));
  for (std::int64_t j = -j_max; j <= j_max; ++j) {
    DissectionRow row;
    row.j = j;
    row.z_exponent = static_cast<std::int64_t>(p) * j;
    if (!product.window().contains(row.z_exponent)) {
      row.outside_window = true; /* nothing retained there: vacuously vanishing */
      out.push_back(row);
      continue;
    }
    const auto& series = product.row(row.z_exponent);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const std::uint64_t residue =
          series[static_cast<int>(p * static_cast<std::uint64_t>(n) + r)];
      if (residue != 0) {
        row.vanishes = false;
        row.first_failure = std::make_pair(n, residue);
        break;
      }
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace cphi

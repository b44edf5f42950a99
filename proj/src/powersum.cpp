#include "faulhaber/powersum.hpp"

#include <string>

#include "faulhaber/kernels.hpp"

namespace faulhaber {

PowerSumQuery::PowerSumQuery(std::uint64_t k, std::uint64_t n) : k_(k), n_(n) {
  if (k == 0) throw DomainError("k must be >= 1 (k = 0 is not supported)");
  if (n == 0) throw DomainError("n must be >= 1");
}

std::string_view to_string(PowerSumRoute route) {
  switch (route) {
    case PowerSumRoute::Brute: return "brute";
    case PowerSumRoute::Faulhaber: return "faulhaber";
    case PowerSumRoute::Recursive: return "recursive";
  }
  return "unknown";
}

PowerSumRoute parse_power_sum_route(std::string_view name) {
  if (name == "brute") return PowerSumRoute::Brute;
  if (name == "faulhaber") return PowerSumRoute::Faulhaber;
  if (name == "recursive") return PowerSumRoute::Recursive;
  throw DomainError("unknown route: " + std::string(name));
}

BigInt s_brute(const PowerSumQuery& q) {
  return *kernels::omp::power_sum(q.k(), q.n());
}

BigInt s_faulhaber(const PowerSumQuery& q, const BernoulliTable& table) {
  const std::uint64_t k = q.k();
  if (!table.covers(k)) {
    throw DomainError("Bernoulli table reaches B_" + std::to_string(table.max_index()) +
                      ", need B_" + std::to_string(k));
  }
  const BigInt base = from_u64(q.n()) + 1;

  Rational rhs;
  BigInt c = 1;  // C(k+1, j)
  for (std::uint64_t j = 0; j <= k; ++j) {
    if (!table[j].is_zero()) rhs += Rational(c * pow(base, k + 1 - j)) * table[j];
    c *= from_u64(k + 1 - j);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
  }
  Rational s = rhs / Rational(from_u64(k + 1));
  if (!s.is_integer()) {
    throw InconsistencyError("Faulhaber evaluation of S_" + std::to_string(k) + "(" +
                             std::to_string(q.n()) + ") is not an integer: " + s.str());
  }
  return s.num();
}

BigInt s_faulhaber(const PowerSumQuery& q) {
  return s_faulhaber(q, *BernoulliCache::global().get(q.k()));
}

std::vector<BigInt> s_recursive(std::uint64_t kmax, std::uint64_t n) {
  const PowerSumQuery q(kmax, n);
  const BigInt base = from_u64(q.n()) + 1;
  std::vector<BigInt> s;  // s[j-1] = S_j(n)
  s.reserve(kmax);
  BigInt base_pow = base;  // (n+1)^{k+1}, advanced each round
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    base_pow *= base;
    BigInt rhs = base_pow - base;
    BigInt c = k + 1;  // C(k+1, 1)
    for (std::uint64_t j = 1; j < k; ++j) {
      rhs -= c * s[j - 1];
      c *= from_u64(k + 1 - j);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    // c is now C(k+1, k) = k + 1.
    if (mpz_divisible_p(rhs.get_mpz_t(), c.get_mpz_t()) == 0) {
      throw InconsistencyError("recursive route: inexact division at k = " + std::to_string(k));
    }
    mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
    s.push_back(std::move(rhs));
  }
  return s;
}

BigInt s_mod(const PowerSumQuery& q, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  if (fits_u64(m)) {
    return from_u64(*kernels::omp::power_sum_mod_u64(q.k(), q.n(), to_u64(m)));
  }
  return *kernels::serial::power_sum_mod(q.k(), q.n(), m);
}

BigInt power_sum(const PowerSumQuery& q, PowerSumRoute route) {
  switch (route) {
    case PowerSumRoute::Brute: return s_brute(q);
    case PowerSumRoute::Faulhaber: return s_faulhaber(q);
    case PowerSumRoute::Recursive: return s_recursive(q.k(), q.n()).back();
  }
  throw DomainError("unknown route");
}

Average mu(const PowerSumQuery& q, PowerSumRoute route) {
  Rational value(power_sum(q, route), from_u64(q.n()));
  const bool integral = value.is_integer();
  return {std::move(value), integral};
}

Average mu(const PowerSumQuery& q) {
  const auto route = q.k() <= BernoulliCache::global().cap() ? PowerSumRoute::Faulhaber
                                                              : PowerSumRoute::Brute;
  return mu(q, route);
}

}  // namespace faulhaber

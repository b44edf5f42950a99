#include "faulhaber/integrality.hpp"

#include <string>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/primes.hpp"

namespace faulhaber {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::KOne: return "k=1";
    case Rule::OddK: return "odd-k";
    case Rule::EvenK: return "even-k";
  }
  return "unknown";
}

std::shared_ptr<const EvenKData> DenominatorCache::get(std::uint64_t k) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(k); it != entries_.end()) return it->second;
  }
  auto data = std::make_shared<EvenKData>();
  data->primes = vsc_primes(k);
  data->denominator = 1;
  for (auto p : data->primes) data->denominator *= from_u64(p);

  std::lock_guard lock(mutex_);
  return entries_.try_emplace(k, std::move(data)).first->second;
}

DenominatorCache& DenominatorCache::global() {
  static DenominatorCache cache;
  return cache;
}

namespace {

void require_positive(std::uint64_t k, const BigInt& n) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (n < 1) throw DomainError("n must be >= 1, got " + to_string(n));
}

Verdict decide_odd(std::uint64_t k, const BigInt& n) {
  if (k == 1) {
    if (mpz_odd_p(n.get_mpz_t()) != 0) return {true, Rule::KOne, NoObstruction{}};
    return {false, Rule::KOne, NEven{}};
  }
  if (mpz_fdiv_ui(n.get_mpz_t(), 4) == 2) return {false, Rule::OddK, NMod4IsTwo{}};
  return {true, Rule::OddK, NoObstruction{}};
}

Verdict decide_even(const BigInt& n, const EvenKData& data) {
  const BigInt g = gcd(n, data.denominator);
  if (g == 1) return {true, Rule::EvenK, NoObstruction{}};
  // g divides the square-free D_k, so it is exactly the product of the
  // shared primes.
  SharedPrimes shared;
  for (auto p : data.primes) {
    if (mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      shared.primes.push_back(p);
    }
  }
  return {false, Rule::EvenK, std::move(shared)};
}

}  // namespace

Verdict decide(std::uint64_t k, const BigInt& n, DenominatorCache& cache) {
  require_positive(k, n);
  if (k % 2 != 0) return decide_odd(k, n);
  return decide_even(n, *cache.get(k));
}

Verdict decide(std::uint64_t k, const BigInt& n) {
  return decide(k, n, DenominatorCache::global());
}

std::uint64_t prime_block_sum(std::uint64_t p, std::uint64_t k) {
  if (!is_prime_trial(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::uint64_t acc = 0;
  for (std::uint64_t m = 1; m <= p; ++m) acc = addmod_u64(acc, powmod_u64(m, k, p), p);
  return acc;
}

ResiduePrediction predict_residue(std::uint64_t k, const BigInt& n, std::uint64_t p) {
  if (k < 2 || k % 2 != 0) throw DomainError("residue prediction needs even k >= 2");
  if (n < 2) throw DomainError("residue prediction needs n >= 2");
  if (!is_prime_trial(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
    throw DomainError(std::to_string(p) + " does not divide " + to_string(n));
  }

  const BigInt prime = from_u64(p);
  ResiduePrediction out;
  out.prime = prime;
  for (const auto& f : factorize(n).factors) {
    if (f.prime == prime) out.exponent = f.exponent;
  }
  out.modulus = pow(prime, out.exponent);

  if (k % (p - 1) != 0) {
    out.predicted = 0;
  } else {
    out.predicted = mod_floor(-(n / prime), out.modulus);
  }
  return out;
}

namespace {

VerdictGrid grid_parallel(std::uint64_t kmax, std::uint64_t nmax) {
  if (kmax < 1 || nmax < 1) throw DomainError("grid bounds must be >= 1");
  VerdictGrid out;
  out.kmax = kmax;
  out.nmax = nmax;
  out.cells.resize(kmax * nmax);
  out.denominators.resize(kmax);

  std::vector<std::shared_ptr<const EvenKData>> even(kmax);
  for (std::uint64_t k = 2; k <= kmax; k += 2) {
    even[k - 1] = DenominatorCache::global().get(k);
    out.denominators[k - 1] = even[k - 1]->denominator;
  }

  const auto total = static_cast<std::int64_t>(kmax * nmax);
  auto fill = [&](std::int64_t idx) {
    const auto i = static_cast<std::uint64_t>(idx);
    const std::uint64_t k = i / nmax + 1;
    const BigInt n = from_u64(i % nmax + 1);
    out.cells[i] = k % 2 != 0 ? decide_odd(k, n) : decide_even(n, *even[k - 1]);
  };

#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) fill(idx);
  return out;
}

}  // namespace

VerdictGrid grid(std::uint64_t kmax, std::uint64_t nmax) { return grid_parallel(kmax, nmax); }

VerdictGrid grid_serial(std::uint64_t kmax, std::uint64_t nmax) {
  if (kmax < 1 || nmax < 1) throw DomainError("grid bounds must be >= 1");
  VerdictGrid out;
  out.kmax = kmax;
  out.nmax = nmax;
  out.denominators.resize(kmax);
  out.cells.reserve(kmax * nmax);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if (k % 2 == 0) out.denominators[k - 1] = vsc_denominator(k);
    for (std::uint64_t n = 1; n <= nmax; ++n) out.cells.push_back(decide(k, from_u64(n)));
  }
  return out;
}

}  // namespace faulhaber

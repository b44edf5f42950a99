#include "faulhaber/bernoulli.hpp"

#include <algorithm>
#include <string>

#include "faulhaber/primes.hpp"

namespace faulhaber {

std::string_view to_string(BernoulliRoute route) {
  switch (route) {
    case BernoulliRoute::Recursion: return "recursion";
    case BernoulliRoute::Egf: return "egf";
  }
  return "unknown";
}

BernoulliTable::BernoulliTable(BernoulliRoute route, std::vector<Rational> values)
    : route_(route), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("empty Bernoulli table");
}

const Rational& BernoulliTable::at(std::uint64_t k) const {
  if (!covers(k)) {
    throw DomainError("B_" + std::to_string(k) + " is beyond table index " +
                      std::to_string(max_index()));
  }
  return values_[k];
}

BernoulliTable bernoulli_recursive(std::uint64_t max_index) {
  std::vector<Rational> b;
  b.reserve(max_index + 1);
  b.emplace_back(1);
  for (std::uint64_t k = 1; k <= max_index; ++k) {
    // Walk the row C(k+1, j), j = 0..k-1, by the running product.
    Rational sum;
    BigInt c = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
      if (!b[j].is_zero()) sum += Rational(c) * b[j];
      c *= from_u64(k + 1 - j);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    b.push_back(-sum / Rational(from_u64(k + 1)));
  }
  return BernoulliTable(BernoulliRoute::Recursion, std::move(b));
}

namespace {

using Series = std::vector<Rational>;

// Quotient num/den truncated to `terms` coefficients. Leading zero
// coefficients shared by both series are cancelled first; den must then
// have a nonzero constant term.
Series divide_series(Series num, Series den, std::size_t terms) {
  std::size_t shift = 0;
  while (shift < num.size() && shift < den.size() && num[shift].is_zero() &&
         den[shift].is_zero()) {
    ++shift;
  }
  num.erase(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(shift));
  den.erase(den.begin(), den.begin() + static_cast<std::ptrdiff_t>(shift));
  if (den.empty() || den[0].is_zero()) throw DomainError("series quotient is not a power series");

  const Rational inv_lead = Rational(1) / den[0];
  Series q(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    Rational acc = n < num.size() ? num[n] : Rational();
    for (std::size_t i = 1; i <= n && i < den.size(); ++i) {
      if (!den[i].is_zero() && !q[n - i].is_zero()) acc -= den[i] * q[n - i];
    }
    q[n] = acc * inv_lead;
  }
  return q;
}

}  // namespace

BernoulliTable bernoulli_egf(std::uint64_t max_index) {
  const std::size_t terms = max_index + 1;

  // e^x - 1 through x^(K+1): coefficient of x^i is 1/i!.
  Series exp_minus_one(terms + 1);
  BigInt fact = 1;
  for (std::size_t i = 1; i <= terms; ++i) {
    fact *= static_cast<unsigned long>(i);
    exp_minus_one[i] = Rational(BigInt(1), fact);
  }
  Series x(2);
  x[1] = 1;

  Series q = divide_series(std::move(x), std::move(exp_minus_one), terms);

  std::vector<Rational> b;
  b.reserve(terms);
  BigInt k_fact = 1;
  for (std::size_t k = 0; k < terms; ++k) {
    if (k > 0) k_fact *= static_cast<unsigned long>(k);
    b.push_back(q[k] * Rational(k_fact));
  }
  return BernoulliTable(BernoulliRoute::Egf, std::move(b));
}

BigInt vsc_denominator(std::uint64_t k) {
  BigInt d = 1;
  for (auto p : vsc_primes(k)) d *= from_u64(p);
  return d;
}

RegularityReport is_regular(std::uint64_t p) {
  if (p < 5 || !is_prime_trial(p)) {
    throw DomainError("regularity is defined here for primes p >= 5, got " + std::to_string(p));
  }
  RegularityReport report;
  report.prime = p;
  auto table = BernoulliCache::global().get(p - 3);
  const BigInt prime = from_u64(p);
  for (std::uint64_t k = 2; k + 3 <= p; k += 2) {
    if (mpz_divisible_p((*table)[k].num().get_mpz_t(), prime.get_mpz_t()) != 0) {
      report.offending_indices.push_back(k);
    }
  }
  report.regular = report.offending_indices.empty();
  return report;
}

std::shared_ptr<const BernoulliTable> BernoulliCache::get(std::uint64_t k) {
  if (k > cap_) {
    throw DomainError("Bernoulli index " + std::to_string(k) + " exceeds table cap " +
                      std::to_string(cap_));
  }
  std::lock_guard lock(mutex_);
  if (!table_ || !table_->covers(k)) {
    // Grow at least geometrically.
    std::uint64_t target = table_ ? std::max(k, 2 * table_->max_index()) : std::max<std::uint64_t>(k, 64);
    if (target > cap_) target = cap_;
    table_ = std::make_shared<const BernoulliTable>(bernoulli_recursive(target));
  }
  return table_;
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace faulhaber

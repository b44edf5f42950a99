#include "faulhaber/exact.hpp"

#include <ostream>

namespace faulhaber {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("malformed integer literal: " + s);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw DomainError("malformed integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  BigInt value;
  if (value.set_str(s, 10) != 0) throw DomainError("malformed integer literal: " + s);
  return value;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

bool fits_u64(const BigInt& value) {
  return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& value) {
  if (!fits_u64(value)) throw DomainError("value does not fit in 64 bits: " + to_string(value));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

// --- Rational -------------------------------------------------------------

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) throw DomainError("zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const { return Rational(Canonical{}, -num_, den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

double Rational::approx() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational reduce(const BigInt& num, const BigInt& den) { return Rational(num, den); }

// --- integer primitives ---------------------------------------------------

BigInt binomial(std::uint64_t n, std::uint64_t j) {
  if (j > n) return 0;
  if (j > n - j) j = n - j;
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    // acc = C(n-j+i-1, i-1); multiplying by (n-j+i) and dividing by i gives C(n-j+i, i).
    acc *= from_u64(n - j + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt modpow(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  if (sgn(exp) < 0) throw DomainError("exponent must be nonnegative");
  BigInt result = mod_floor(1, m);
  BigInt b = mod_floor(base, m);
  const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  // Left-to-right binary method.
  for (auto i = bits; i-- > 0;) {
    result = result * result % m;
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = result * b % m;
  }
  return result;
}

BigInt modpow(const BigInt& base, std::uint64_t exp, const BigInt& m) {
  return modpow(base, from_u64(exp), m);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt pow(const BigInt& base, std::uint64_t exp) {
  if (exp > static_cast<std::uint64_t>(~0UL)) throw DomainError("exponent too large");
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace faulhaber

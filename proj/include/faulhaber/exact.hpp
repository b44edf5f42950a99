#pragma once

// Exact integer and rational arithmetic shared by every other module.
//
// BigInt is GMP's mpz_class. Rational is our own reduced fraction; it is
// canonical after every constructor (den > 0, gcd(|num|, den) = 1), so
// equality is plain field equality.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace faulhaber {

using BigInt = mpz_class;

/// Raised for inputs outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two routes that must agree do not, or when an identity
/// that must produce an integer does not. Always indicates a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

/// True iff value fits in std::uint64_t (and is nonnegative).
bool fits_u64(const BigInt& value);
std::uint64_t to_u64(const BigInt& value);
BigInt from_u64(std::uint64_t value);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

  /// Throws DomainError if den == 0.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" when den == 1, otherwise "num/den".
  std::string str() const;
  static Rational parse(std::string_view text);

  /// Nearest double; for display only.
  double approx() const;

 private:
  struct Canonical {};
  Rational(Canonical, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Canonical reduced fraction num/den. Throws DomainError if den == 0.
Rational reduce(const BigInt& num, const BigInt& den);

/// C(n, j) by the running product prod_{i=1..j} (n-j+i)/i with an exact
/// division at each step. Returns 0 for j > n.
BigInt binomial(std::uint64_t n, std::uint64_t j);

/// base^exp mod m in [0, m) by square-and-multiply. Throws DomainError for m < 1.
BigInt modpow(const BigInt& base, const BigInt& exp, const BigInt& m);
BigInt modpow(const BigInt& base, std::uint64_t exp, const BigInt& m);

/// Nonnegative residue of a mod m, m >= 1.
BigInt mod_floor(const BigInt& a, const BigInt& m);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, std::uint64_t exp);

// 64-bit helpers for the hot kernels. All require m >= 1.
__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a, b < m
  return a >= m - b ? a - (m - b) : a + b;
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod_u64(result, base, m);
    exp >>= 1U;
    if (exp != 0) base = mulmod_u64(base, base, m);
  }
  return result;
}

}  // namespace faulhaber

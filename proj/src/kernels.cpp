#include "faulhaber/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

namespace faulhaber::kernels {

namespace {

using u64 = std::uint64_t;

// Below 2^32 the products fit in 64 bits and the 128-bit division is avoided.
inline u64 powmod_small(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = result * base % m;
    exp >>= 1U;
    if (exp != 0) base = base * base % m;
  }
  return result;
}

inline u64 term_mod(u64 j, u64 k, u64 m) {
  return m <= (u64{1} << 32) ? powmod_small(j, k, m) : powmod_u64(j, k, m);
}

inline u64 chunk_count(u64 n) { return n / kChunk + (n % kChunk != 0 ? 1 : 0); }

inline void add_power(BigInt& acc, BigInt& scratch, u64 j, u64 k) {
  mpz_ui_pow_ui(scratch.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
  acc += scratch;
}

}  // namespace

namespace serial {

std::optional<BigInt> power_sum(u64 k, u64 n, Deadline deadline) {
  BigInt acc = 0;
  BigInt scratch;
  for (u64 j = 1; j <= n; ++j) {
    if (j % kChunk == 0 && deadline.expired()) return std::nullopt;
    add_power(acc, scratch, j, k);
  }
  return acc;
}

std::optional<BigInt> power_sum_mod(u64 k, u64 n, const BigInt& m, Deadline deadline) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  BigInt acc = 0;
  const BigInt exp = from_u64(k);
  for (u64 j = 1; j <= n; ++j) {
    if (j % kChunk == 0 && deadline.expired()) return std::nullopt;
    acc += modpow(from_u64(j), exp, m);
    if (acc >= m) acc -= m;
  }
  return acc;
}

std::optional<u64> power_sum_mod_u64(u64 k, u64 n, u64 m, Deadline deadline) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  u64 acc = 0;
  for (u64 j = 1; j <= n; ++j) {
    if (j % kChunk == 0 && deadline.expired()) return std::nullopt;
    acc = addmod_u64(acc, term_mod(j, k, m), m);
  }
  return acc;
}

}  // namespace serial

namespace omp {

std::optional<BigInt> power_sum(u64 k, u64 n, Deadline deadline) {
  const u64 chunks = chunk_count(n);
  // Chunks come from a shared counter; a cancelled run stops at once.
  std::atomic<u64> next{0};
  std::atomic<bool> cancelled{false};
  BigInt total = 0;

#pragma omp parallel
  {
    BigInt local = 0;
    BigInt scratch;
    for (u64 c; (c = next.fetch_add(1, std::memory_order_relaxed)) < chunks;) {
      if (cancelled.load(std::memory_order_relaxed)) break;
      if (deadline.expired()) {
        cancelled.store(true, std::memory_order_relaxed);
        break;
      }
      const u64 lo = c * kChunk + 1;
      const u64 hi = std::min(n, lo + kChunk - 1);
      for (u64 j = lo; j <= hi; ++j) add_power(local, scratch, j, k);
    }
#pragma omp critical(faulhaber_power_sum)
    total += local;
  }
  if (cancelled.load()) return std::nullopt;
  return total;
}

std::optional<u64> power_sum_mod_u64(u64 k, u64 n, u64 m, Deadline deadline) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  const u64 chunks = chunk_count(n);
  std::atomic<u64> next{0};
  std::atomic<bool> cancelled{false};
  u64 total = 0;

#pragma omp parallel
  {
    u64 local = 0;
    for (u64 c; (c = next.fetch_add(1, std::memory_order_relaxed)) < chunks;) {
      if (cancelled.load(std::memory_order_relaxed)) break;
      if (deadline.expired()) {
        cancelled.store(true, std::memory_order_relaxed);
        break;
      }
      const u64 lo = c * kChunk + 1;
      const u64 hi = std::min(n, lo + kChunk - 1);
      for (u64 j = lo; j <= hi; ++j) local = addmod_u64(local, term_mod(j, k, m), m);
    }
#pragma omp critical(faulhaber_power_sum_mod)
    total = addmod_u64(total, local, m);
  }
  if (cancelled.load()) return std::nullopt;
  return total;
}

}  // namespace omp

}  // namespace faulhaber::kernels

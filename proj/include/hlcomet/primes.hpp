#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace hlc {

/// Sieve-backed primality and smallest-prime-factor oracle on [0, limit].
///
/// Storage is odd-only: one bit per odd integer for primality and one
/// 32-bit smallest prime factor per odd integer (even numbers have spf 2).
/// A table is immutable once built and safe to share across threads.
class PrimeTable {
 public:
  /// 1 GiB; enough for limits around 5e8.
  static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;
  static constexpr std::uint64_t kMaxLimit = 0xFFFFFFFFull;

  /// Throws InvalidArgument for limit < 2 and ResourceLimitError when the
  /// estimated footprint exceeds `memory_budget` bytes or limit > kMaxLimit.
  static PrimeTable build(std::uint64_t limit,
                          std::size_t memory_budget = kDefaultMemoryBudget);

  /// Bytes a table with this limit would occupy (approximate, upper bound).
  static std::size_t estimated_bytes(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// RangeError if k > limit.
  bool is_prime(std::uint64_t k) const;

  /// Least prime dividing k, for 2 <= k <= limit. spf(p) == p for prime p.
  std::uint64_t smallest_prime_factor(std::uint64_t k) const;

  /// All primes <= limit, ascending. primes()[0] == 2.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  std::size_t prime_count() const noexcept { return primes_.size(); }

 private:
  PrimeTable() = default;

  bool odd_bit(std::uint64_t k) const noexcept {
    const std::uint64_t i = k >> 1;
    return (odd_bits_[i >> 6] >> (i & 63)) & 1u;
  }

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> odd_bits_;
  std::vector<std::uint32_t> odd_spf_;
  std::vector<std::uint32_t> primes_;
};

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization; primes strictly increasing, exponents >= 1.
/// The factorization of 1 is empty.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t value() const noexcept;
  bool divisible_by(std::uint64_t prime) const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Factor 1 <= n <= table.limit() via the spf map. n == 0 is InvalidArgument,
/// n > limit is RangeError (no silent trial-division fallback).
Factorization factorize(std::uint64_t n, const PrimeTable& table);

/// P_n = p_1 * ... * p_n. RangeError when the table holds fewer than n primes.
mpz_class nth_primorial(std::size_t n, const PrimeTable& table);

}  // namespace hlc

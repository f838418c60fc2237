#include "hlcomet/primes.hpp"

#include <string>

#include "hlcomet/errors.hpp"

namespace hlc {

std::size_t PrimeTable::estimated_bytes(std::uint64_t limit) {
  const std::uint64_t odd_slots = limit / 2 + 1;
  // Prime list: pi(x) < 1.26 x / ln x, bounded crudely by x / 4 for x >= 2.
  const std::uint64_t prime_slots = limit / 4 + 16;
  return static_cast<std::size_t>(odd_slots * sizeof(std::uint32_t) +
                                  (odd_slots / 64 + 1) * sizeof(std::uint64_t) +
                                  prime_slots * sizeof(std::uint32_t));
}

PrimeTable PrimeTable::build(std::uint64_t limit, std::size_t memory_budget) {
  if (limit < 2) {
    throw InvalidArgument("prime table limit must be >= 2, got " +
                          std::to_string(limit));
  }
  if (limit > kMaxLimit || estimated_bytes(limit) > memory_budget) {
    throw ResourceLimitError("prime table limit " + std::to_string(limit) +
                             " exceeds the memory budget of " +
                             std::to_string(memory_budget) + " bytes");
  }

  PrimeTable t;
  t.limit_ = limit;
  const std::uint64_t odd_slots = limit / 2 + 1;
  t.odd_spf_.assign(odd_slots, 0);

  // odd_spf_[i] describes 2i+1; zero means "no odd factor found yet".
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (t.odd_spf_[p >> 1] != 0) continue;
    for (std::uint64_t j = p * p; j <= limit; j += 2 * p) {
      if (t.odd_spf_[j >> 1] == 0) t.odd_spf_[j >> 1] = static_cast<std::uint32_t>(p);
    }
  }

  t.odd_bits_.assign(odd_slots / 64 + 1, 0);
  t.primes_.push_back(2);
  for (std::uint64_t i = 1; i < odd_slots; ++i) {
    const std::uint64_t k = 2 * i + 1;
    if (k > limit) break;
    if (t.odd_spf_[i] == 0) {
      t.odd_spf_[i] = static_cast<std::uint32_t>(k);
      t.odd_bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
      t.primes_.push_back(static_cast<std::uint32_t>(k));
    }
  }
  t.primes_.shrink_to_fit();
  return t;
}

bool PrimeTable::is_prime(std::uint64_t k) const {
  if (k > limit_) {
    throw RangeError("is_prime(" + std::to_string(k) + ") beyond table limit " +
                     std::to_string(limit_));
  }
  if (k < 2) return false;
  if ((k & 1) == 0) return k == 2;
  return odd_bit(k);
}

std::uint64_t PrimeTable::smallest_prime_factor(std::uint64_t k) const {
  if (k < 2 || k > limit_) {
    throw RangeError("smallest_prime_factor(" + std::to_string(k) +
                     ") outside [2, " + std::to_string(limit_) + "]");
  }
  if ((k & 1) == 0) return 2;
  return odd_spf_[k >> 1];
}

std::uint64_t Factorization::value() const noexcept {
  std::uint64_t v = 1;
  for (const auto& f : factors) {
    for (std::uint32_t e = 0; e < f.exponent; ++e) v *= f.prime;
  }
  return v;
}

bool Factorization::divisible_by(std::uint64_t prime) const noexcept {
  for (const auto& f : factors) {
    if (f.prime == prime) return true;
  }
  return false;
}

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("cannot factor 0");
  if (n > table.limit()) {
    throw RangeError("factorize(" + std::to_string(n) + ") beyond table limit " +
                     std::to_string(table.limit()));
  }
  Factorization out;
  while (n > 1) {
    const std::uint64_t p = table.smallest_prime_factor(n);
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  return out;
}

mpz_class nth_primorial(std::size_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("primorial index must be >= 1");
  const auto primes = table.primes();
  if (n > primes.size()) {
    throw RangeError("table up to " + std::to_string(table.limit()) + " holds only " +
                     std::to_string(primes.size()) + " primes; P_" +
                     std::to_string(n) + " requested");
  }
  mpz_class product = 1;
  for (std::size_t i = 0; i < n; ++i) product *= primes[i];
  return product;
}

}  // namespace hlc

#pragma once

// Reference implementations used only by the tests. Each one takes the
// slowest obvious route and shares no code with the library.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool trial_division_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

/// Plain vector<bool> Eratosthenes over every integer.
inline std::vector<bool> plain_sieve(std::uint64_t limit) {
  std::vector<bool> is(limit + 1, true);
  is[0] = false;
  if (limit >= 1) is[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!is[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) is[j] = false;
  }
  return is;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t totient_by_gcd(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

/// Ordered odd-prime pairs (p, q) with p + q = 2n, by trial division.
inline std::uint64_t goldbach_by_trial_division(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t p = 3; p < 2 * n; p += 2) {
    const std::uint64_t q = 2 * n - p;
    if ((q & 1) && trial_division_prime(p) && trial_division_prime(q)) ++c;
  }
  return c;
}

/// Sylvester factor from a trial-division factorization, exact.
inline mpq_class sylvester_by_trial_division(std::uint64_t n) {
  mpq_class v = 1;
  for (auto [p, e] : trial_factor(n)) {
    (void)e;
    if (p != 2) v *= mpq_class(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(p - 2));
  }
  v.canonicalize();
  return v;
}

/// Dirichlet convolution at n from full divisor sums: sum_{d | n} f(d) g(n/d).
template <typename F, typename G>
mpq_class dirichlet_at(std::uint64_t n, F&& f, G&& g) {
  mpq_class acc = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) acc += f(d) * g(n / d);
  }
  return acc;
}

}  // namespace oracle

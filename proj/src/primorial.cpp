#include "hlcomet/primorial.hpp"

#include <algorithm>
#include <string>

#include "hlcomet/errors.hpp"

namespace hlc {
namespace {

void require_primes(std::size_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("primorial index must be >= 1");
  if (table.prime_count() < n) {
    throw RangeError("table up to " + std::to_string(table.limit()) + " holds " +
                     std::to_string(table.prime_count()) + " primes; " + std::to_string(n) +
                     " needed");
  }
}

std::uint64_t exhaustive_primorial(std::size_t n, const PrimeTable& table) {
  require_primes(n, table);
  if (n > kExhaustivePrimorialIndex) {
    throw ResourceLimitError("exhaustive extremality scan is capped at P_" +
                             std::to_string(kExhaustivePrimorialIndex) + "; P_" +
                             std::to_string(n) + " requested");
  }
  const std::uint64_t p_n = nth_primorial(n, table).get_ui();
  if (p_n > table.limit()) {
    throw RangeError("P_" + std::to_string(n) + " = " + std::to_string(p_n) +
                     " exceeds table limit " + std::to_string(table.limit()));
  }
  return p_n;
}

// Scan m in [1, p_n - 1]; `fails(m)` reports a counterexample. Smallest m wins.
template <typename Fails>
std::optional<std::uint64_t> first_failure(std::uint64_t p_n, const ScanOptions& opts,
                                           Fails&& fails) {
  if (p_n < 2) return std::nullopt;
  auto parts = map_chunks(1, p_n - 1, opts, [&](std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t m = a; m <= b; ++m) {
      if (fails(m)) return std::optional<std::uint64_t>(m);
    }
    return std::optional<std::uint64_t>();
  });
  for (const auto& p : parts) {
    if (p) return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<PrimorialRecord> primorial_table(std::size_t n_max, const PrimeTable& table) {
  require_primes(n_max, table);
  const auto primes = table.primes();
  std::vector<PrimorialRecord> out;
  out.reserve(n_max);
  PrimorialRecord r{0, 1, 1, 1};
  for (std::size_t i = 0; i < n_max; ++i) {
    const unsigned long p = primes[i];
    r.index = i + 1;
    r.value *= p;
    r.phi_bar *= make_rational(static_cast<long>(p - 1), p);
    if (p != 2) r.sylvester *= make_rational(static_cast<long>(p - 1), p - 2);
    out.push_back(r);
  }
  return out;
}

ExtremalityVerdict check_phi_bar_minimality(std::size_t n, const PrimeTable& table,
                                            const ScanOptions& opts) {
  const std::uint64_t p_n = exhaustive_primorial(n, table);
  const Rational bound = phi_bar(p_n, table);
  ExtremalityVerdict v;
  v.index = n;
  v.primorial = p_n;
  v.checked = p_n - 1;
  v.counterexample =
      first_failure(p_n, opts, [&](std::uint64_t m) { return !(phi_bar(m, table) > bound); });
  v.pass = !v.counterexample;
  return v;
}

ExtremalityVerdict check_sylvester_maximality(std::size_t n, const PrimeTable& table,
                                              const ScanOptions& opts) {
  const std::uint64_t p_n = exhaustive_primorial(n, table);
  const Rational bound = sylvester(p_n, table);
  const std::uint64_t half = p_n / 2;  // P_n is even
  ExtremalityVerdict v;
  v.index = n;
  v.primorial = p_n;
  v.checked = p_n - 2;
  v.counterexample = first_failure(p_n, opts, [&](std::uint64_t m) {
    return m != half && !(sylvester(m, table) < bound);
  });
  v.half_equality = sylvester(half, table) == bound;
  v.pass = !v.counterexample && *v.half_equality;
  return v;
}

std::vector<LimitPoint> limit_diagnostics(std::size_t n_max, const PrimeTable& table) {
  require_primes(n_max, table);
  const auto primes = table.primes();
  std::vector<LimitPoint> out;
  out.reserve(n_max);
  long double phi = 1.0L;
  long double s = 1.0L;
  for (std::size_t i = 0; i < n_max; ++i) {
    const long double p = primes[i];
    phi *= (p - 1.0L) / p;
    if (primes[i] != 2) s *= (p - 1.0L) / (p - 2.0L);
    out.push_back({i + 1, static_cast<double>(phi), static_cast<double>(s)});
  }
  return out;
}

}  // namespace hlc

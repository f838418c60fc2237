#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hlcomet/arith.hpp"
#include "hlcomet/parallel.hpp"
#include "hlcomet/primes.hpp"

namespace hlc {

struct PrimorialRecord {
  std::size_t index = 0;  // n
  mpz_class value;        // P_n
  Rational phi_bar;       // prod_{i <= n} (1 - 1/p_i)
  Rational sylvester;     // prod_{2 <= i <= n} (p_i - 1)/(p_i - 2)
};

/// Records for n = 1 .. n_max, built incrementally.
std::vector<PrimorialRecord> primorial_table(std::size_t n_max, const PrimeTable& table);

/// Largest n for which the extremality checks scan every m < P_n (P_7 = 510510).
inline constexpr std::size_t kExhaustivePrimorialIndex = 7;

struct ExtremalityVerdict {
  std::size_t index = 0;                  // n
  std::uint64_t primorial = 0;            // P_n
  std::uint64_t checked = 0;              // m values compared
  bool pass = false;
  std::optional<std::uint64_t> counterexample;  // smallest failing m
  // Sylvester check only: S(P_n / 2) == S(P_n) exactly.
  std::optional<bool> half_equality;
};

/// phi_bar(m) > phi_bar(P_n) for every 1 <= m < P_n, exact rationals.
/// ResourceLimitError for n > kExhaustivePrimorialIndex; the table must reach P_n.
ExtremalityVerdict check_phi_bar_minimality(std::size_t n, const PrimeTable& table,
                                            const ScanOptions& opts = {});

/// S(m) < S(P_n) for every 1 <= m < P_n with 2m != P_n, plus the equality
/// S(P_n / 2) == S(P_n). Same limits as check_phi_bar_minimality.
ExtremalityVerdict check_sylvester_maximality(std::size_t n, const PrimeTable& table,
                                              const ScanOptions& opts = {});

struct LimitPoint {
  std::size_t index = 0;
  double phi_bar = 0;    // phi_bar(P_n)
  double sylvester = 0;  // S(P_n)
};

/// phi_bar(P_n) and S(P_n) for n = 1 .. n_max, accumulated in long double.
/// Exact values grow too large to carry past a few thousand primes.
std::vector<LimitPoint> limit_diagnostics(std::size_t n_max, const PrimeTable& table);

}  // namespace hlc

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hlcomet/parallel.hpp"
#include "hlcomet/primes.hpp"

namespace hlc {

/// Sylvester's constant 2 e^(-gamma), from his 1871 variant of the
/// Hardy-Littlewood estimate. Exposed for reference; nothing depends on it.
inline constexpr double kSylvesterConstant = 1.1229189671337703;

/// Truncated decimal of the twin prime constant used as an acceptance anchor.
inline constexpr double kTwinPrimeConstantReference = 0.6601618;

/// g(n) for n in [0, n_max]: the number of ORDERED pairs (p, q) of odd primes
/// with p + q = 2n. Entries below 3 are zero.
class GoldbachCounts {
 public:
  GoldbachCounts(std::uint64_t n_max, std::vector<std::uint32_t> counts)
      : n_max_(n_max), counts_(std::move(counts)) {}

  std::uint64_t n_max() const noexcept { return n_max_; }
  /// RangeError when n > n_max.
  std::uint32_t at(std::uint64_t n) const;
  const std::vector<std::uint32_t>& raw() const noexcept { return counts_; }

 private:
  std::uint64_t n_max_;
  std::vector<std::uint32_t> counts_;
};

/// Exact g(n) for all n <= n_max by one self-convolution of the odd-prime
/// indicator (odd-only indexing, number-theoretic transform). Requires
/// table.limit() >= 2 n_max.
GoldbachCounts goldbach_counts(std::uint64_t n_max, const PrimeTable& table);

/// Direct O(pi(2n)) count; the independent check for goldbach_counts.
std::uint64_t goldbach_brute(std::uint64_t n, const PrimeTable& table);

struct TwinPrimeConstant {
  std::size_t terms_used = 0;
  double value = 0;
  double lower = 0;  // enclosure of the infinite product
  double upper = 0;
};

/// prod over the first num_primes odd primes of (1 - 1/(p-1)^2).
/// The enclosure uses prod_{p > P}(1 - 1/(p-1)^2) >= 1 - 1/(P - 1).
TwinPrimeConstant twin_prime_constant(std::size_t num_primes, const PrimeTable& table);

/// Every partial product, index i holding the product over i + 1 odd primes.
std::vector<double> twin_prime_partial_products(std::size_t num_primes, const PrimeTable& table);

/// A sieve limit guaranteed to contain at least num_primes odd primes.
std::uint64_t sieve_limit_for_odd_primes(std::size_t num_primes);

/// Double-precision S(n) as a product of (p-1)/(p-2) over odd p | n.
double sylvester_approx(std::uint64_t n, const PrimeTable& table);

/// h(n) = 4 c n / (ln n)^2 * S(n), natural logarithm.
double hl_estimate(std::uint64_t n, double c, const PrimeTable& table);

/// G(n) = (ln n)^2 g(n) / (4 c n), natural logarithm.
double big_g(std::uint64_t n, std::uint64_t g_n, double c);

struct Violation {
  std::uint64_t n = 0;
  double sylvester = 0;
  double big_g = 0;
  bool near_tie = false;
};

struct CrossoverOptions {
  ScanOptions scan;
  double precision_guard = 1e-12;  // relative gap that triggers re-evaluation
};

struct CrossoverReport {
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  std::vector<Violation> violations;   // ascending n
  std::uint64_t near_ties = 0;         // points re-evaluated in extended precision
  std::uint64_t escalation_flips = 0;  // near ties where extended precision changed the verdict
  std::uint64_t unresolved = 0;        // near ties still inside the extended-precision noise

  std::optional<std::uint64_t> max_violation() const {
    if (violations.empty()) return std::nullopt;
    return violations.back().n;
  }
};

struct PointVerdict {
  bool violation = false;
  bool near_tie = false;
  bool flipped = false;
  bool unresolved = false;
  double sylvester = 0;
  double big_g = 0;
};

/// Decide S(n) >= G(n) at one point given g(n). A relative gap below `guard`
/// is settled with the exact S(n) and long double G(n).
PointVerdict check_crossover_point(std::uint64_t n, std::uint64_t g_n, double c,
                                   const PrimeTable& table, double guard = 1e-12);

/// Every n in [n_lo, n_hi] with S(n) >= G(n). Requires n_lo >= 3 and
/// table.limit() >= 2 n_hi; `counts` must cover n_hi.
CrossoverReport crossover_scan(std::uint64_t n_lo, std::uint64_t n_hi, double c,
                               const PrimeTable& table, const GoldbachCounts& counts,
                               const CrossoverOptions& opts = {});
CrossoverReport crossover_scan(std::uint64_t n_lo, std::uint64_t n_hi, double c,
                               const PrimeTable& table, const CrossoverOptions& opts = {});

struct CometRecord {
  std::uint64_t n = 0;
  std::uint32_t g = 0;
  double sylvester = 0;
  double big_g = 0;
  std::optional<double> phi_bar;
};

struct CometOptions {
  ScanOptions scan;
  std::uint64_t stride = 1;
  bool with_phi_bar = false;
};

/// Records for n = n_lo, n_lo + stride, ... <= n_hi, delivered to `sink` in
/// ascending n regardless of how workers finish.
void comet_emit(std::uint64_t n_lo, std::uint64_t n_hi, double c, const PrimeTable& table,
                const GoldbachCounts& counts, const CometOptions& opts,
                const std::function<void(const CometRecord&)>& sink);

std::vector<CometRecord> comet_records(std::uint64_t n_lo, std::uint64_t n_hi, double c,
                                       const PrimeTable& table, const GoldbachCounts& counts,
                                       const CometOptions& opts = {});

}  // namespace hlc

#include "hlcomet/comet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hlcomet/arith.hpp"
#include "hlcomet/errors.hpp"
#include "hlcomet/ntt.hpp"

namespace hlc {
namespace {

void require_table(std::uint64_t n_hi, const PrimeTable& table, const char* what) {
  if (n_hi > table.limit() / 2) {
    throw RangeError(std::string(what) + ": n = " + std::to_string(n_hi) +
                     " needs a prime table up to " + std::to_string(2 * n_hi) +
                     ", have " + std::to_string(table.limit()));
  }
}

long double to_long_double(const mpz_class& z) {
  return std::strtold(z.get_str().c_str(), nullptr);
}

constexpr long double kExtendedNoise = 1e-17L;

}  // namespace

std::uint32_t GoldbachCounts::at(std::uint64_t n) const {
  if (n > n_max_) {
    throw RangeError("g(" + std::to_string(n) + ") requested; counts cover n <= " +
                     std::to_string(n_max_));
  }
  return counts_[n];
}

GoldbachCounts goldbach_counts(std::uint64_t n_max, const PrimeTable& table) {
  require_table(n_max, table, "goldbach_counts");
  // Every count is at most n_max - 1 < kModulus, so the residue is the count.
  if (n_max >= ntt::kModulus) {
    throw ResourceLimitError("n_max too large for an exact single-modulus transform");
  }
  std::vector<std::uint32_t> g(n_max + 1, 0);
  if (n_max < 3) return GoldbachCounts(n_max, std::move(g));

  // Slot a stands for the odd number 2a + 1; (2a+1) + (2b+1) = 2n iff a + b = n - 1.
  // Odd primes up to 2n_max - 3 suffice.
  std::vector<std::uint32_t> odd_prime(n_max - 1, 0);
  for (std::uint64_t a = 1; a < odd_prime.size(); ++a) {
    odd_prime[a] = table.is_prime(2 * a + 1) ? 1u : 0u;
  }
  const auto conv = ntt::self_convolve(odd_prime, n_max);
  for (std::uint64_t n = 3; n <= n_max; ++n) g[n] = conv[n - 1];
  return GoldbachCounts(n_max, std::move(g));
}

std::uint64_t goldbach_brute(std::uint64_t n, const PrimeTable& table) {
  require_table(n, table, "goldbach_brute");
  const std::uint64_t two_n = 2 * n;
  std::uint64_t count = 0;
  for (std::uint32_t p : table.primes()) {
    if (p >= two_n) break;
    if (p == 2) continue;
    const std::uint64_t q = two_n - p;
    if ((q & 1) && table.is_prime(q)) ++count;
  }
  return count;
}

std::uint64_t sieve_limit_for_odd_primes(std::size_t num_primes) {
  // The (num_primes + 1)-th prime; p_k < k (ln k + ln ln k) for k >= 6.
  const double k = static_cast<double>(num_primes + 1);
  if (k < 6) return 20;
  return static_cast<std::uint64_t>(k * (std::log(k) + std::log(std::log(k)))) + 1;
}

std::vector<double> twin_prime_partial_products(std::size_t num_primes, const PrimeTable& table) {
  if (num_primes == 0) throw InvalidArgument("twin prime constant needs at least one term");
  const auto primes = table.primes();
  if (primes.size() < num_primes + 1) {
    throw RangeError("table up to " + std::to_string(table.limit()) + " has " +
                     std::to_string(primes.empty() ? 0 : primes.size() - 1) +
                     " odd primes; " + std::to_string(num_primes) + " requested");
  }
  std::vector<double> partial(num_primes);
  long double product = 1.0L;
  for (std::size_t i = 0; i < num_primes; ++i) {
    const long double pm1 = static_cast<long double>(primes[i + 1]) - 1.0L;
    product *= 1.0L - 1.0L / (pm1 * pm1);
    partial[i] = static_cast<double>(product);
  }
  return partial;
}

TwinPrimeConstant twin_prime_constant(std::size_t num_primes, const PrimeTable& table) {
  const auto partial = twin_prime_partial_products(num_primes, table);
  const double last_prime = table.primes()[num_primes];
  TwinPrimeConstant c;
  c.terms_used = num_primes;
  c.value = partial.back();
  // Rounding slack of 1e-12 relative on both ends.
  c.upper = c.value * (1.0 + 1e-12);
  c.lower = c.value * (1.0 - 1.0 / (last_prime - 1.0)) * (1.0 - 1e-12);
  return c;
}

double sylvester_approx(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("sylvester(0) is undefined");
  if (n > table.limit()) {
    throw RangeError("sylvester(" + std::to_string(n) + ") beyond table limit");
  }
  while ((n & 1) == 0) n >>= 1;
  double s = 1.0;
  while (n > 1) {
    const std::uint64_t p = table.smallest_prime_factor(n);
    do n /= p;
    while (n % p == 0);
    s *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
  }
  return s;
}

double hl_estimate(std::uint64_t n, double c, const PrimeTable& table) {
  if (n < 2) throw InvalidArgument("h(n) needs n >= 2");
  const double x = static_cast<double>(n);
  const double ln = std::log(x);
  return 4.0 * c * x / (ln * ln) * sylvester(n, table).get_d();
}

double big_g(std::uint64_t n, std::uint64_t g_n, double c) {
  if (n < 2) throw InvalidArgument("G(n) needs n >= 2");
  const double x = static_cast<double>(n);
  const double ln = std::log(x);
  return ln * ln * static_cast<double>(g_n) / (4.0 * c * x);
}

PointVerdict check_crossover_point(std::uint64_t n, std::uint64_t g_n, double c,
                                   const PrimeTable& table, double guard) {
  PointVerdict v;
  v.sylvester = sylvester_approx(n, table);
  v.big_g = big_g(n, g_n, c);
  v.violation = v.sylvester >= v.big_g;

  const double scale = std::max(v.sylvester, v.big_g);
  if (std::fabs(v.sylvester - v.big_g) >= guard * scale) return v;

  v.near_tie = true;
  const Rational exact = sylvester(n, table);
  const long double s_ext = to_long_double(exact.get_num()) / to_long_double(exact.get_den());
  const long double ln = std::log(static_cast<long double>(n));
  const long double g_ext =
      ln * ln * static_cast<long double>(g_n) / (4.0L * c * static_cast<long double>(n));
  const bool ext_violation = s_ext >= g_ext;
  v.flipped = ext_violation != v.violation;
  v.violation = ext_violation;
  v.unresolved = std::fabs(s_ext - g_ext) < kExtendedNoise * std::max(s_ext, g_ext);
  return v;
}

CrossoverReport crossover_scan(std::uint64_t n_lo, std::uint64_t n_hi, double c,
                               const PrimeTable& table, const GoldbachCounts& counts,
                               const CrossoverOptions& opts) {
  if (n_lo < 3) throw InvalidArgument("crossover scan starts at n >= 3");
  if (n_hi < n_lo) throw InvalidArgument("crossover scan needs n_lo <= n_hi");
  require_table(n_hi, table, "crossover_scan");
  if (counts.n_max() < n_hi) {
    throw RangeError("Goldbach counts cover n <= " + std::to_string(counts.n_max()) +
                     ", scan needs " + std::to_string(n_hi));
  }

  auto chunks = map_chunks(n_lo, n_hi, opts.scan, [&](std::uint64_t a, std::uint64_t b) {
    CrossoverReport part;
    for (std::uint64_t n = a; n <= b; ++n) {
      const PointVerdict v = check_crossover_point(n, counts.at(n), c, table, opts.precision_guard);
      part.near_ties += v.near_tie;
      part.escalation_flips += v.flipped;
      part.unresolved += v.unresolved;
      if (v.violation) part.violations.push_back({n, v.sylvester, v.big_g, v.near_tie});
    }
    return part;
  });

  CrossoverReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  for (auto& part : chunks) {
    report.near_ties += part.near_ties;
    report.escalation_flips += part.escalation_flips;
    report.unresolved += part.unresolved;
    report.violations.insert(report.violations.end(), part.violations.begin(),
                             part.violations.end());
  }
  return report;
}

CrossoverReport crossover_scan(std::uint64_t n_lo, std::uint64_t n_hi, double c,
                               const PrimeTable& table, const CrossoverOptions& opts) {
  require_table(n_hi, table, "crossover_scan");
  return crossover_scan(n_lo, n_hi, c, table, goldbach_counts(n_hi, table), opts);
}

void comet_emit(std::uint64_t n_lo, std::uint64_t n_hi, double c, const PrimeTable& table,
                const GoldbachCounts& counts, const CometOptions& opts,
                const std::function<void(const CometRecord&)>& sink) {
  if (n_lo < 3) throw InvalidArgument("comet records start at n >= 3");
  if (opts.stride == 0) throw InvalidArgument("stride must be >= 1");
  if (n_hi < n_lo) return;
  require_table(n_hi, table, "comet_emit");
  if (counts.n_max() < n_hi) {
    throw RangeError("Goldbach counts cover n <= " + std::to_string(counts.n_max()));
  }

  const std::uint64_t total = (n_hi - n_lo) / opts.stride + 1;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opts.scan.chunk_size);
  // Bound memory: at most threads * 4 chunks of records in flight.
  const std::uint64_t batch = chunk * resolve_threads(opts.scan.threads) * 4;

  for (std::uint64_t first = 0; first < total; first += batch) {
    const std::uint64_t last = std::min(total, first + batch) - 1;
    auto parts = map_chunks(first, last, opts.scan, [&](std::uint64_t a, std::uint64_t b) {
      std::vector<CometRecord> out;
      out.reserve(b - a + 1);
      for (std::uint64_t i = a; i <= b; ++i) {
        const std::uint64_t n = n_lo + i * opts.stride;
        CometRecord r;
        r.n = n;
        r.g = counts.at(n);
        r.sylvester = sylvester_approx(n, table);
        r.big_g = big_g(n, r.g, c);
        if (opts.with_phi_bar) r.phi_bar = phi_bar(n, table).get_d();
        out.push_back(r);
      }
      return out;
    });
    for (const auto& part : parts) {
      for (const auto& r : part) sink(r);
    }
  }
}

std::vector<CometRecord> comet_records(std::uint64_t n_lo, std::uint64_t n_hi, double c,
                                       const PrimeTable& table, const GoldbachCounts& counts,
                                       const CometOptions& opts) {
  std::vector<CometRecord> out;
  comet_emit(n_lo, n_hi, c, table, counts, opts, [&](const CometRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace hlc

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hlcomet/errors.hpp"
#include "hlcomet/primes.hpp"

namespace hlc {

/// Exact reduced fraction. GMP keeps results of +, -, *, / canonical as long
/// as every value is built through make_rational or from integers.
using Rational = mpq_class;

Rational make_rational(long numerator, unsigned long denominator);
Rational make_rational(const mpz_class& numerator, const mpz_class& denominator);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

bool is_canonical(const Rational& q);

/// A strongly multiplicative function, defined by its value on primes:
/// f(1) = 1, f(p^k) = f(p), f multiplicative.
class SmfSpec {
 public:
  using PrimeValueFn = std::function<std::optional<Rational>(std::uint64_t prime)>;

  SmfSpec(std::string name, PrimeValueFn prime_value)
      : name_(std::move(name)), prime_value_(std::move(prime_value)) {}

  /// S(p) = (p-1)/(p-2) for odd p, S(2) = 1.
  static SmfSpec sylvester();
  /// phi_bar(p) = (p-1)/p.
  static SmfSpec phi_bar();
  /// Finite table; primes missing from `values` are undefined.
  static SmfSpec from_values(std::string name, std::map<std::uint64_t, Rational> values);
  /// "sylvester" or "phibar" (also "phi_bar"). InvalidArgument otherwise.
  static SmfSpec by_name(std::string_view name);

  const std::string& name() const noexcept { return name_; }
  std::optional<Rational> try_at(std::uint64_t prime) const { return prime_value_(prime); }
  /// DomainError when f is undefined at `prime`.
  Rational at(std::uint64_t prime) const;

 private:
  std::string name_;
  PrimeValueFn prime_value_;
};

/// A multiplicative function given on prime powers (p, e). Entry (p, 0) is 1
/// unless set explicitly; an explicit (p, 0) != 1 makes the function
/// non-invertible.
class PrimePowerValueTable {
 public:
  void set(std::uint64_t prime, std::uint32_t exponent, Rational value);
  std::optional<Rational> get(std::uint64_t prime, std::uint32_t exponent) const;

  /// Tabulate a strongly multiplicative f at p^0 .. p^max_exponent.
  static PrimePowerValueTable from_smf(const SmfSpec& f, std::uint64_t prime,
                                       std::uint32_t max_exponent);

 private:
  std::map<std::pair<std::uint64_t, std::uint32_t>, Rational> entries_;
};

/// S(n) = prod over odd primes p | n of (p-1)/(p-2); S(2^k) = 1.
Rational sylvester(std::uint64_t n, const PrimeTable& table);

/// phi_bar(n) = prod over primes p | n of (p-1)/p = phi(n)/n.
Rational phi_bar(std::uint64_t n, const PrimeTable& table);

Rational smf_eval(const SmfSpec& f, std::uint64_t n, const PrimeTable& table);
Rational smf_eval(const SmfSpec& f, const Factorization& factors);

/// (f * g)(p^k) = f(p) + g(p) + (k-1) f(p) g(p) for k >= 1, and 1 at k = 0.
Rational convolve_prime_power(const SmfSpec& f, const SmfSpec& g, std::uint64_t prime,
                              std::uint32_t k);

/// Closed-form Dirichlet inverse at a prime power:
/// 1 (k = 0), -f(p) (k = 1), (-1)^k f(p) (f(p) - 1)^(k-1) (k >= 2).
Rational inverse_prime_power(const SmfSpec& f, std::uint64_t prime, std::uint32_t k);

/// Dirichlet inverse at p^k from the recurrence
///   f^-1(p^j) = -sum_{i=1..j} f(p^i) f^-1(p^(j-i)),
/// with no closed form involved. Works for any multiplicative f with f(1) = 1.
Rational dirichlet_inverse_oracle(const PrimePowerValueTable& values, std::uint64_t prime,
                                  std::uint32_t k);

/// Evaluate a multiplicative function at n from its prime-power values.
using PrimePowerFn = std::function<Rational(std::uint64_t prime, std::uint32_t exponent)>;
Rational evaluate_multiplicative(const PrimePowerFn& at_prime_power, std::uint64_t n,
                                 const PrimeTable& table);

/// Thrown by fiber_witnesses when a witness would pass the requested bound;
/// carries the witnesses produced so far.
class FiberRangeError : public RangeError {
 public:
  FiberRangeError(const std::string& what, std::vector<mpz_class> partial)
      : RangeError(what), partial_(std::move(partial)) {}
  const std::vector<mpz_class>& partial() const noexcept { return partial_; }
  bool partial_list() const noexcept { return !partial_.empty(); }

 private:
  std::vector<mpz_class> partial_;
};

/// `count` distinct integers n with f(n) = f(m), starting with m itself.
/// Witnesses are m * s for s ranging in increasing order over integers whose
/// prime factors all divide m; their factorization is known by construction,
/// so they are not bounded by the table. m must lie in [2, table.limit()].
/// With `max_witness` set, a witness above it raises FiberRangeError.
std::vector<mpz_class> fiber_witnesses(const SmfSpec& f, std::uint64_t m, std::size_t count,
                                       const PrimeTable& table,
                                       std::optional<mpz_class> max_witness = std::nullopt);

struct AccumulationWitness {
  std::uint64_t n;
  std::uint64_t prime;       // first odd prime p > n meeting the bound
  mpz_class witness;         // n * p
  Rational value_n;          // f(n)
  Rational value_witness;    // f(n * p), evaluated from the factorization of n * p
  Rational distance;         // |f(n * p) - f(n)|
};

/// Points of the range of f accumulate at f(n): finds the first odd prime
/// p > n with |f(n)| |f(p) - 1| < epsilon and f(p) != 1, and evaluates f(np)
/// from the factorization of np. RangeError if the table runs out of primes.
///
/// Construction tabulates |f(p) - 1| in double precision for every odd prime
/// of the table so repeated queries only pay for a linear double scan plus
/// exact confirmation of the candidate.
class AccumulationSearch {
 public:
  AccumulationSearch(SmfSpec f, const PrimeTable& table);

  AccumulationWitness find(std::uint64_t n, const Rational& epsilon) const;

 private:
  SmfSpec f_;
  const PrimeTable* table_;
  std::vector<double> deviation_;  // |f(p) - 1| for table.primes()[i], 0 for p = 2
};

AccumulationWitness accumulation_witness(const SmfSpec& f, std::uint64_t n,
                                         const Rational& epsilon, const PrimeTable& table);

}  // namespace hlc

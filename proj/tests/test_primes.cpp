#include "doctest.h"

#include <cmath>

#include "hlcomet/errors.hpp"
#include "hlcomet/primes.hpp"
#include "oracles.hpp"

using namespace hlc;

TEST_CASE("small tables flag the expected primes") {
  const auto t = PrimeTable::build(10);
  std::vector<std::uint32_t> primes(t.primes().begin(), t.primes().end());
  CHECK(primes == std::vector<std::uint32_t>{2, 3, 5, 7});
  for (std::uint64_t k = 0; k <= 10; ++k) {
    CHECK(t.is_prime(k) == (k == 2 || k == 3 || k == 5 || k == 7));
  }

  const auto t30 = PrimeTable::build(30);
  CHECK(t30.smallest_prime_factor(15) == 3);
  CHECK(t30.smallest_prime_factor(29) == 29);
  CHECK(t30.smallest_prime_factor(30) == 2);
}

TEST_CASE("build rejects bad limits") {
  CHECK_THROWS_AS(PrimeTable::build(0), InvalidArgument);
  CHECK_THROWS_AS(PrimeTable::build(1), InvalidArgument);
  CHECK_THROWS_AS(PrimeTable::build(1'000'000, 1024), ResourceLimitError);
  CHECK_THROWS_AS(PrimeTable::build(PrimeTable::kMaxLimit + 1), ResourceLimitError);
  CHECK_NOTHROW(PrimeTable::build(2));
}

TEST_CASE("prime count to 4e6 matches an independent sieve") {
  const auto t = PrimeTable::build(4'000'000);
  const auto ref = oracle::plain_sieve(4'000'000);
  std::size_t ref_count = 0;
  bool agree = true;
  for (std::uint64_t k = 0; k <= 4'000'000; ++k) {
    ref_count += ref[k];
    agree = agree && (t.is_prime(k) == ref[k]);
  }
  CHECK(agree);
  CHECK(ref_count == 283'146);
  CHECK(t.prime_count() == 283'146);
}

TEST_CASE("is_prime agrees with trial division and spf invariants hold") {
  const std::uint64_t limit = 200'000;
  const auto t = PrimeTable::build(limit);
  for (std::uint64_t k = 0; k <= limit; ++k) {
    REQUIRE(t.is_prime(k) == oracle::trial_division_prime(k));
    if (k < 2) continue;
    const auto spf = t.smallest_prime_factor(k);
    REQUIRE(k % spf == 0);
    REQUIRE(oracle::trial_division_prime(spf));
    REQUIRE((spf * spf <= k || spf == k));
    for (std::uint64_t d = 2; d < spf && d * d <= k; ++d) REQUIRE(k % d != 0);
  }
  CHECK_THROWS_AS(t.is_prime(limit + 1), RangeError);
  CHECK_THROWS_AS(t.smallest_prime_factor(1), RangeError);
}

TEST_CASE("factorize examples") {
  const auto t = PrimeTable::build(1'000'000);
  CHECK(factorize(12, t).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(30, t).factors == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
  CHECK(factorize(510510, t).factors ==
        std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}});
  CHECK(factorize(1, t).factors.empty());
  CHECK_THROWS_AS(factorize(0, t), InvalidArgument);
  CHECK_THROWS_AS(factorize(1'000'001, t), RangeError);
}

TEST_CASE("factorize recomposes every n up to 1e6") {
  const auto t = PrimeTable::build(1'000'000);
  for (std::uint64_t n = 2; n <= 1'000'000; ++n) {
    const auto f = factorize(n, t);
    REQUIRE(f.value() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      REQUIRE(f.factors[i].exponent >= 1);
      REQUIRE(t.is_prime(f.factors[i].prime));
      if (i) REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
  // Spot-check against the trial-division oracle.
  for (std::uint64_t n : {2ull, 97ull, 1024ull, 65536ull, 999'983ull, 720'720ull, 1'000'000ull}) {
    const auto f = factorize(n, t);
    const auto ref = oracle::trial_factor(n);
    REQUIRE(f.factors.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(f.factors[i].prime == ref[i].first);
      CHECK(f.factors[i].exponent == ref[i].second);
    }
  }
}

TEST_CASE("nth_primorial") {
  const auto t = PrimeTable::build(100);
  CHECK(nth_primorial(1, t) == 2);
  CHECK(nth_primorial(3, t) == 30);
  CHECK(nth_primorial(7, t) == 2 * 3 * 5 * 7 * 11 * 13 * 17);
  CHECK(nth_primorial(7, t) == 510510);
  mpz_class prev = 1;
  for (std::size_t n = 1; n <= t.prime_count(); ++n) {
    const mpz_class cur = nth_primorial(n, t);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK_THROWS_AS(nth_primorial(0, t), InvalidArgument);
  CHECK_THROWS_AS(nth_primorial(t.prime_count() + 1, t), RangeError);
}

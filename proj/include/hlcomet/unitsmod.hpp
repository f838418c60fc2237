#pragma once

#include <cstdint>
#include <vector>

#include "hlcomet/arith.hpp"
#include "hlcomet/primes.hpp"

namespace hlc {

struct UnitPairCount {
  std::uint64_t m = 0;
  std::uint64_t n_residue = 0;
  std::uint64_t count = 0;
};

/// s*_m(n) = #{(r, s) in (Z/m)* x (Z/m)* : r + s = n mod m} by enumeration.
/// O(m) with one gcd per unit. InvalidArgument for m < 2.
UnitPairCount unit_pairs_brute(std::uint64_t m, std::int64_t n);

/// Closed form m prod_{p | m, p | n} (1 - 1/p) prod_{p | m, p !| n} (1 - 2/p),
/// evaluated exactly. Applied to squarefree even m only; any other m is routed
/// to unit_pairs_brute. FormulaDomainError if the product is not an integer.
UnitPairCount unit_pairs_formula(std::uint64_t m, std::int64_t n, const PrimeTable& table);

bool is_squarefree_even(std::uint64_t m, const PrimeTable& table);

struct IdentityCheck {
  std::uint64_t m = 0;       // 2 q_1 ... q_t
  std::uint64_t d = 0;       // gcd(2n, m)
  mpz_class lhs;             // s*_m(2n)
  Rational sylvester_d;      // S(d)
  mpz_class s_m_2;           // s*_m(2)
  Rational rhs;              // S(d) s*_m(2)
  bool equal = false;
};

/// Compare s*_m(2n) with S(d) s*_m(2) for m = 2 q_1 ... q_t, d = gcd(2n, m).
/// The q_i must be distinct odd primes (any order); InvalidArgument otherwise.
IdentityCheck sylvester_identity_check(const std::vector<std::uint64_t>& odd_primes,
                                       std::uint64_t n, const PrimeTable& table);

}  // namespace hlc

#include "hlcomet/unitsmod.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hlcomet/errors.hpp"

namespace hlc {
namespace {

std::uint64_t reduce(std::int64_t n, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t r = n % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

}  // namespace

UnitPairCount unit_pairs_brute(std::uint64_t m, std::int64_t n) {
  if (m < 2) throw InvalidArgument("unit pair count needs m >= 2");
  const std::uint64_t target = reduce(n, m);
  std::uint64_t count = 0;
  for (std::uint64_t r = 1; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    const std::uint64_t s = (target + m - r) % m;
    if (std::gcd(s, m) == 1) ++count;
  }
  return {m, target, count};
}

bool is_squarefree_even(std::uint64_t m, const PrimeTable& table) {
  if (m < 2 || (m & 1)) return false;
  const auto f = factorize(m, table);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

UnitPairCount unit_pairs_formula(std::uint64_t m, std::int64_t n, const PrimeTable& table) {
  if (m < 2) throw InvalidArgument("unit pair count needs m >= 2");
  if (!is_squarefree_even(m, table)) return unit_pairs_brute(m, n);

  const std::uint64_t target = reduce(n, m);
  Rational value = Rational(mpz_class(static_cast<unsigned long>(m)));
  for (const auto& pp : factorize(m, table).factors) {
    const auto p = static_cast<long>(pp.prime);
    // p | n is read on the residue; target == 0 is divisible by every p.
    const bool divides = target % pp.prime == 0;
    value *= make_rational(divides ? p - 1 : p - 2, static_cast<unsigned long>(p));
  }
  if (value.get_den() != 1) {
    throw FormulaDomainError("unit-sum formula is not integral for m = " + std::to_string(m) +
                             ": " + to_string(value));
  }
  return {m, target, value.get_num().get_ui()};
}

IdentityCheck sylvester_identity_check(const std::vector<std::uint64_t>& odd_primes,
                                       std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("identity check needs n >= 1");
  std::vector<std::uint64_t> qs = odd_primes;
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw InvalidArgument("odd primes must be distinct");
  }
  std::uint64_t m = 2;
  for (std::uint64_t q : qs) {
    if (q > table.limit() || (q & 1) == 0 || !table.is_prime(q)) {
      throw InvalidArgument(std::to_string(q) + " is not an odd prime");
    }
    if (m > table.limit() / q) {
      throw RangeError("modulus 2*prod(q) exceeds table limit " + std::to_string(table.limit()));
    }
    m *= q;
  }

  IdentityCheck out;
  out.m = m;
  out.d = std::gcd((2 * n) % m, m);
  out.lhs = static_cast<unsigned long>(
      unit_pairs_formula(m, static_cast<std::int64_t>((2 * n) % m), table).count);
  out.sylvester_d = sylvester(out.d, table);
  out.s_m_2 = static_cast<unsigned long>(unit_pairs_formula(m, 2, table).count);
  out.rhs = out.sylvester_d * out.s_m_2;
  out.equal = out.rhs.get_den() == 1 && out.rhs.get_num() == out.lhs;
  return out;
}

}  // namespace hlc

#include "hlcomet/arith.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hlc {

Rational make_rational(long numerator, unsigned long denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational make_rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

// ---------------------------------------------------------------------------
// SmfSpec

SmfSpec SmfSpec::sylvester() {
  return SmfSpec("sylvester", [](std::uint64_t p) -> std::optional<Rational> {
    if (p == 2) return Rational(1);
    return make_rational(mpz_class(static_cast<unsigned long>(p - 1)),
                         mpz_class(static_cast<unsigned long>(p - 2)));
  });
}

SmfSpec SmfSpec::phi_bar() {
  return SmfSpec("phibar", [](std::uint64_t p) -> std::optional<Rational> {
    return make_rational(mpz_class(static_cast<unsigned long>(p - 1)),
                         mpz_class(static_cast<unsigned long>(p)));
  });
}

SmfSpec SmfSpec::from_values(std::string name, std::map<std::uint64_t, Rational> values) {
  return SmfSpec(std::move(name),
                 [values = std::move(values)](std::uint64_t p) -> std::optional<Rational> {
                   auto it = values.find(p);
                   if (it == values.end()) return std::nullopt;
                   return it->second;
                 });
}

SmfSpec SmfSpec::by_name(std::string_view name) {
  if (name == "sylvester" || name == "S") return sylvester();
  if (name == "phibar" || name == "phi_bar" || name == "phi-bar") return phi_bar();
  throw InvalidArgument("unknown function '" + std::string(name) +
                        "' (expected sylvester or phibar)");
}

Rational SmfSpec::at(std::uint64_t prime) const {
  auto v = prime_value_(prime);
  if (!v) {
    throw DomainError(name_ + " has no value at prime " + std::to_string(prime));
  }
  return *v;
}

// ---------------------------------------------------------------------------
// PrimePowerValueTable

void PrimePowerValueTable::set(std::uint64_t prime, std::uint32_t exponent, Rational value) {
  entries_[{prime, exponent}] = std::move(value);
}

std::optional<Rational> PrimePowerValueTable::get(std::uint64_t prime,
                                                  std::uint32_t exponent) const {
  auto it = entries_.find({prime, exponent});
  if (it != entries_.end()) return it->second;
  if (exponent == 0) return Rational(1);
  return std::nullopt;
}

PrimePowerValueTable PrimePowerValueTable::from_smf(const SmfSpec& f, std::uint64_t prime,
                                                    std::uint32_t max_exponent) {
  PrimePowerValueTable t;
  const Rational fp = f.at(prime);
  for (std::uint32_t e = 1; e <= max_exponent; ++e) t.set(prime, e, fp);
  return t;
}

// ---------------------------------------------------------------------------
// Evaluation

Rational smf_eval(const SmfSpec& f, const Factorization& factors) {
  Rational v = 1;
  for (const auto& pp : factors.factors) v *= f.at(pp.prime);
  return v;
}

Rational smf_eval(const SmfSpec& f, std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument(f.name() + "(0) is undefined");
  return smf_eval(f, factorize(n, table));
}

Rational sylvester(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("sylvester(0) is undefined");
  mpz_class num = 1;
  mpz_class den = 1;
  for (const auto& pp : factorize(n, table).factors) {
    if (pp.prime == 2) continue;
    num *= static_cast<unsigned long>(pp.prime - 1);
    den *= static_cast<unsigned long>(pp.prime - 2);
  }
  return make_rational(num, den);
}

Rational phi_bar(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("phi_bar(0) is undefined");
  mpz_class num = 1;
  mpz_class den = 1;
  for (const auto& pp : factorize(n, table).factors) {
    num *= static_cast<unsigned long>(pp.prime - 1);
    den *= static_cast<unsigned long>(pp.prime);
  }
  return make_rational(num, den);
}

Rational convolve_prime_power(const SmfSpec& f, const SmfSpec& g, std::uint64_t prime,
                              std::uint32_t k) {
  const Rational fp = f.at(prime);
  const Rational gp = g.at(prime);
  if (k == 0) return Rational(1);
  return Rational(fp + gp + Rational(k - 1) * fp * gp);
}

Rational inverse_prime_power(const SmfSpec& f, std::uint64_t prime, std::uint32_t k) {
  const Rational fp = f.at(prime);
  if (k == 0) return Rational(1);
  if (k == 1) return Rational(-fp);
  Rational base = fp - 1;
  mpq_class power = 1;
  for (std::uint32_t i = 1; i < k; ++i) power *= base;
  Rational v = fp * power;
  return (k % 2 == 0) ? v : Rational(-v);
}

Rational dirichlet_inverse_oracle(const PrimePowerValueTable& values, std::uint64_t prime,
                                  std::uint32_t k) {
  if (*values.get(prime, 0) != 1) {
    throw NotInvertibleError("f(1) != 1; recurrence requires a normalized multiplicative f");
  }
  std::vector<Rational> f(k + 1);
  for (std::uint32_t i = 1; i <= k; ++i) {
    auto v = values.get(prime, i);
    if (!v) {
      throw DomainError("no value for f(" + std::to_string(prime) + "^" + std::to_string(i) +
                        ")");
    }
    f[i] = *v;
  }
  std::vector<Rational> inv(k + 1);
  inv[0] = 1;
  for (std::uint32_t j = 1; j <= k; ++j) {
    Rational acc = 0;
    for (std::uint32_t i = 1; i <= j; ++i) acc += f[i] * inv[j - i];
    inv[j] = -acc;
  }
  return inv[k];
}

Rational evaluate_multiplicative(const PrimePowerFn& at_prime_power, std::uint64_t n,
                                 const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("multiplicative functions are undefined at 0");
  Rational v = 1;
  for (const auto& pp : factorize(n, table).factors) v *= at_prime_power(pp.prime, pp.exponent);
  return v;
}

// ---------------------------------------------------------------------------
// Fibers and accumulation points

std::vector<mpz_class> fiber_witnesses(const SmfSpec& f, std::uint64_t m, std::size_t count,
                                       const PrimeTable& table,
                                       std::optional<mpz_class> max_witness) {
  if (m < 2) throw InvalidArgument("fiber_witnesses needs m > 1");
  if (count == 0) throw InvalidArgument("fiber_witnesses needs count >= 1");
  const Factorization fm = factorize(m, table);
  (void)smf_eval(f, fm);  // f must be defined on the support of m

  std::vector<mpz_class> out;
  out.reserve(count);
  std::set<mpz_class> frontier{mpz_class(static_cast<unsigned long>(m))};
  while (out.size() < count) {
    mpz_class next = *frontier.begin();
    frontier.erase(frontier.begin());
    if (max_witness && next > *max_witness) {
      throw FiberRangeError("fiber witness " + next.get_str() + " exceeds bound " +
                                max_witness->get_str(),
                            std::move(out));
    }
    for (const auto& pp : fm.factors) {
      frontier.insert(next * static_cast<unsigned long>(pp.prime));
    }
    out.push_back(std::move(next));
  }
  return out;
}

AccumulationSearch::AccumulationSearch(SmfSpec f, const PrimeTable& table)
    : f_(std::move(f)), table_(&table) {
  const auto primes = table.primes();
  deviation_.resize(primes.size(), 0.0);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (auto fp = f_.try_at(primes[i])) deviation_[i] = std::fabs(Rational(*fp - 1).get_d());
  }
}

AccumulationWitness AccumulationSearch::find(std::uint64_t n, const Rational& epsilon) const {
  if (n == 0) throw InvalidArgument("accumulation witness needs n >= 1");
  if (sgn(epsilon) <= 0) throw InvalidArgument("epsilon must be positive");
  const Factorization fn = factorize(n, *table_);
  const Rational value_n = smf_eval(f_, fn);
  const Rational scale = abs(value_n);
  const double scale_d = scale.get_d();
  const double eps_d = epsilon.get_d();

  const auto primes = table_->primes();
  auto first = std::upper_bound(primes.begin(), primes.end(), n);
  for (auto it = first; it != primes.end(); ++it) {
    const std::uint64_t p = *it;
    if (p == 2) continue;
    const double dev_d = deviation_[static_cast<std::size_t>(it - primes.begin())];
    // Cheap reject; the exact comparison below decides every survivor.
    if (scale_d * dev_d > eps_d * (1.0 + 1e-9)) continue;
    const Rational dev = abs(f_.at(p) - 1);
    if (sgn(dev) == 0 || scale * dev >= epsilon) continue;

    Factorization fnp = fn;
    fnp.factors.push_back({p, 1});
    AccumulationWitness w{n, p, mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(p),
                          value_n, smf_eval(f_, fnp), 0};
    w.distance = abs(w.value_witness - w.value_n);
    return w;
  }
  throw RangeError("no odd prime p <= " + std::to_string(table_->limit()) +
                   " gives an accumulation witness for n = " + std::to_string(n));
}

AccumulationWitness accumulation_witness(const SmfSpec& f, std::uint64_t n,
                                         const Rational& epsilon, const PrimeTable& table) {
  return AccumulationSearch(f, table).find(n, epsilon);
}

}  // namespace hlc

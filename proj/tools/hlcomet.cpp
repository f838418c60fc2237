// hlcomet: Goldbach comet, Sylvester factor and strongly multiplicative
// function computations from the command line.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlcomet/arith.hpp"
#include "hlcomet/comet.hpp"
#include "hlcomet/csv.hpp"
#include "hlcomet/errors.hpp"
#include "hlcomet/primes.hpp"
#include "hlcomet/primorial.hpp"
#include "hlcomet/unitsmod.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct RunConfig {
  std::uint64_t sieve_limit = 4'000'200;
  std::uint64_t c_terms = 1'000'000;
  std::uint64_t chunk_size = 65'536;
  unsigned threads = 0;
  double precision_guard = 1e-12;
  std::string output_path = "-";
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void log(const RunConfig& cfg, const std::string& msg) {
  if (cfg.verbose) std::clog << "hlcomet: " << msg << '\n';
}

hlc::ScanOptions scan_options(const RunConfig& cfg) {
  return {cfg.chunk_size, cfg.threads};
}

// Owns the output stream; "-" is standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool is_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

hlc::PrimeTable build_table(const RunConfig& cfg) {
  log(cfg, "sieving to " + std::to_string(cfg.sieve_limit));
  return hlc::PrimeTable::build(cfg.sieve_limit);
}

hlc::TwinPrimeConstant compute_c(const RunConfig& cfg, std::uint64_t terms) {
  if (terms == 0) throw UsageError("--terms must be >= 1");
  const auto limit = hlc::sieve_limit_for_odd_primes(terms);
  log(cfg, "twin prime constant over " + std::to_string(terms) + " odd primes (sieve to " +
               std::to_string(limit) + ")");
  const auto table = hlc::PrimeTable::build(limit);
  return hlc::twin_prime_constant(terms, table);
}

void require_range(const RunConfig& cfg, std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3) throw UsageError("--min must be >= 3");
  if (hi < lo) throw UsageError("--max must be >= --min");
  if (hi > cfg.sieve_limit / 2) {
    throw UsageError("--max " + std::to_string(hi) + " needs --sieve-limit >= " +
                     std::to_string(2 * hi) + " (have " + std::to_string(cfg.sieve_limit) + ")");
  }
}

void write_provenance(std::ostream& out, const RunConfig& cfg, const hlc::TwinPrimeConstant& c) {
  out << "# hlcomet " << kVersion << '\n'
      << "# sieve_limit=" << cfg.sieve_limit << '\n'
      << "# c_terms=" << c.terms_used << '\n'
      << "# c=" << hlc::csv::format_double(c.value) << '\n'
      << "# threads=" << hlc::resolve_threads(cfg.threads) << '\n';
}

// ---------------------------------------------------------------------------

struct CometArgs {
  std::uint64_t min = 3;
  std::uint64_t max = 0;
  std::uint64_t stride = 1;
  bool phi_bar = false;
};

int run_comet(const RunConfig& cfg, const CometArgs& a) {
  require_range(cfg, a.min, a.max);
  if (a.stride == 0) throw UsageError("--stride must be >= 1");
  const auto table = build_table(cfg);
  const auto c = compute_c(cfg, cfg.c_terms);
  log(cfg, "Goldbach counts to " + std::to_string(a.max));
  const auto counts = hlc::goldbach_counts(a.max, table);

  Output out(cfg.output_path);
  auto& os = out.stream();
  write_provenance(os, cfg, c);
  hlc::csv::write_comet_header(os, a.phi_bar);
  hlc::CometOptions opts;
  opts.scan = scan_options(cfg);
  opts.stride = a.stride;
  opts.with_phi_bar = a.phi_bar;
  hlc::comet_emit(a.min, a.max, c.value, table, counts, opts,
                  [&](const hlc::CometRecord& r) { hlc::csv::write_comet_row(os, r); });
  os.flush();
  return kExitOk;
}

int run_crossover(const RunConfig& cfg, std::uint64_t lo, std::uint64_t hi) {
  require_range(cfg, lo, hi);
  const auto table = build_table(cfg);
  const auto c = compute_c(cfg, cfg.c_terms);
  log(cfg, "Goldbach counts to " + std::to_string(hi));
  const auto counts = hlc::goldbach_counts(hi, table);
  hlc::CrossoverOptions opts;
  opts.scan = scan_options(cfg);
  opts.precision_guard = cfg.precision_guard;
  const auto report = hlc::crossover_scan(lo, hi, c.value, table, counts, opts);

  {
    Output out(cfg.output_path);
    auto& os = out.stream();
    write_provenance(os, cfg, c);
    hlc::csv::write_violation_header(os);
    for (const auto& v : report.violations) hlc::csv::write_violation_row(os, v);
    os.flush();
  }
  const auto max_n = report.max_violation();
  std::cout << "violations=" << report.violations.size()
            << " max_violation_n=" << (max_n ? std::to_string(*max_n) : "none") << '\n';
  log(cfg, "near_ties=" + std::to_string(report.near_ties) +
               " escalation_flips=" + std::to_string(report.escalation_flips) +
               " unresolved=" + std::to_string(report.unresolved));
  if (report.unresolved != 0) {
    throw InvariantBreach(std::to_string(report.unresolved) +
                          " near ties could not be resolved in extended precision");
  }
  return kExitOk;
}

int run_constant(const RunConfig& cfg, std::uint64_t terms) {
  const auto c = compute_c(cfg, terms);
  std::cout << "c=" << hlc::csv::format_double(c.value) << " terms=" << c.terms_used
            << " lower=" << hlc::csv::format_double(c.lower)
            << " upper=" << hlc::csv::format_double(c.upper) << '\n';
  return kExitOk;
}

void require_prime(const hlc::PrimeTable& table, std::uint64_t p) {
  if (p > table.limit()) throw UsageError("--p exceeds --sieve-limit");
  if (!table.is_prime(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
}

struct PrimePowerArgs {
  std::string f;
  std::string g;
  std::uint64_t p = 0;
  std::uint32_t k = 0;
};

int run_convolve(const RunConfig& cfg, const PrimePowerArgs& a) {
  const auto f = hlc::SmfSpec::by_name(a.f);
  const auto g = hlc::SmfSpec::by_name(a.g);
  require_prime(build_table(cfg), a.p);
  std::cout << hlc::to_string(hlc::convolve_prime_power(f, g, a.p, a.k)) << '\n';
  return kExitOk;
}

int run_inverse(const RunConfig& cfg, const PrimePowerArgs& a) {
  const auto f = hlc::SmfSpec::by_name(a.f);
  require_prime(build_table(cfg), a.p);
  std::cout << hlc::to_string(hlc::inverse_prime_power(f, a.p, a.k)) << '\n';
  return kExitOk;
}

int run_units(const RunConfig& cfg, const std::vector<std::uint64_t>& primes, std::uint64_t n) {
  const auto r = hlc::sylvester_identity_check(primes, n, build_table(cfg));
  std::cout << "lhs=" << r.lhs.get_str() << " rhs=" << hlc::to_string(r.rhs)
            << " equal=" << (r.equal ? "true" : "false") << '\n';
  return kExitOk;
}

int run_primorial(const RunConfig& cfg, const std::string& check, std::size_t n) {
  const auto table = build_table(cfg);
  if (check == "limits") {
    Output out(cfg.output_path);
    auto& os = out.stream();
    os << "n,phi_bar,sylvester\n";
    for (const auto& pt : hlc::limit_diagnostics(n, table)) {
      os << pt.index << ',' << hlc::csv::format_double(pt.phi_bar) << ','
         << hlc::csv::format_double(pt.sylvester) << '\n';
    }
    return kExitOk;
  }
  const bool phi = check == "phi";
  const auto v = phi ? hlc::check_phi_bar_minimality(n, table, scan_options(cfg))
                     : hlc::check_sylvester_maximality(n, table, scan_options(cfg));
  const auto bound = phi ? hlc::phi_bar(v.primorial, table) : hlc::sylvester(v.primorial, table);
  std::cout << "check=" << check << " n=" << v.index << " primorial=" << v.primorial
            << " value=" << hlc::to_string(bound) << " checked=" << v.checked
            << " pass=" << (v.pass ? "true" : "false") << " counterexample="
            << (v.counterexample ? std::to_string(*v.counterexample) : "none");
  if (v.half_equality) std::cout << " half_equality=" << (*v.half_equality ? "true" : "false");
  std::cout << '\n';
  return kExitOk;
}

int run_fiber(const RunConfig& cfg, const std::string& name, std::uint64_t m, std::size_t count) {
  const auto f = hlc::SmfSpec::by_name(name);
  const auto table = build_table(cfg);
  const auto witnesses = hlc::fiber_witnesses(f, m, count, table);
  std::cout << "f=" << f.name() << " m=" << m
            << " value=" << hlc::to_string(hlc::smf_eval(f, m, table)) << " witnesses=";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    std::cout << (i ? "," : "") << witnesses[i].get_str();
  }
  std::cout << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  RunConfig cfg;

  CLI::App app{"Goldbach comet, Sylvester factor and strongly multiplicative functions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--sieve-limit", cfg.sieve_limit, "Prime table upper bound")
      ->envname("HLCOMET_SIEVE_LIMIT")
      ->check(CLI::Range(std::uint64_t{2}, hlc::PrimeTable::kMaxLimit));
  app.add_option("--c-terms", cfg.c_terms, "Odd primes in the twin prime constant product")
      ->envname("HLCOMET_C_TERMS")
      ->check(CLI::PositiveNumber);
  app.add_option("--chunk-size", cfg.chunk_size, "Scan chunk size per worker task")
      ->envname("HLCOMET_CHUNK_SIZE")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads (0: hardware concurrency)")
      ->envname("HLCOMET_THREADS");
  app.add_option("--precision-guard", cfg.precision_guard,
                 "Relative S/G gap that triggers extended-precision re-evaluation")
      ->envname("HLCOMET_PRECISION_GUARD")
      ->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", cfg.verbose, "Progress messages on stderr");

  CometArgs comet;
  auto* comet_cmd = app.add_subcommand("comet", "Emit n,g,sylvester,G CSV rows");
  comet_cmd->add_option("--min", comet.min, "First n (>= 3)")->required();
  comet_cmd->add_option("--max", comet.max, "Last n")->required();
  comet_cmd->add_option("--stride", comet.stride, "Emit every stride-th n");
  comet_cmd->add_flag("--phi-bar", comet.phi_bar, "Add a phi_bar column");
  comet_cmd->add_option("--out", cfg.output_path, "Output path, - for stdout");

  std::uint64_t cross_min = 0, cross_max = 0;
  auto* cross_cmd = app.add_subcommand("crossover", "List n with S(n) >= G(n)");
  cross_cmd->add_option("--min", cross_min)->required();
  cross_cmd->add_option("--max", cross_max)->required();
  cross_cmd->add_option("--out", cfg.output_path, "Violation CSV path, - for stdout");

  std::optional<std::uint64_t> terms;
  auto* const_cmd = app.add_subcommand("constant", "Twin prime constant partial product");
  const_cmd->add_option("--terms", terms, "Odd primes used (default: --c-terms)");

  PrimePowerArgs conv;
  auto* conv_cmd = app.add_subcommand("convolve", "(f * g)(p^k) for strongly multiplicative f, g");
  conv_cmd->add_option("--f", conv.f)->required();
  conv_cmd->add_option("--g", conv.g)->required();
  conv_cmd->add_option("--p", conv.p)->required();
  conv_cmd->add_option("--k", conv.k)->required();

  PrimePowerArgs inv;
  auto* inv_cmd = app.add_subcommand("inverse", "Dirichlet inverse f^-1(p^k)");
  inv_cmd->add_option("--f", inv.f)->required();
  inv_cmd->add_option("--p", inv.p)->required();
  inv_cmd->add_option("--k", inv.k)->required();

  std::vector<std::uint64_t> unit_primes;
  std::uint64_t unit_n = 0;
  auto* units_cmd = app.add_subcommand("units", "Check s*_m(2n) = S(d) s*_m(2), m = 2 q_1...q_t");
  units_cmd->add_option("--primes", unit_primes, "Distinct odd primes q_i")
      ->required()
      ->delimiter(',');
  units_cmd->add_option("--n", unit_n)->required();

  std::string check;
  std::size_t prim_n = 0;
  auto* prim_cmd = app.add_subcommand("primorial", "Primorial extremality checks and limits");
  prim_cmd->add_option("--check", check)
      ->required()
      ->check(CLI::IsMember({"phi", "sylvester", "limits"}));
  prim_cmd->add_option("--n", prim_n)->required()->check(CLI::PositiveNumber);
  prim_cmd->add_option("--out", cfg.output_path, "CSV path for --check limits");

  std::string fiber_f;
  std::uint64_t fiber_m = 0;
  std::size_t fiber_count = 10;
  auto* fiber_cmd = app.add_subcommand("fiber", "Distinct n with f(n) = f(m)");
  fiber_cmd->add_option("--f", fiber_f)->required();
  fiber_cmd->add_option("--m", fiber_m)->required();
  fiber_cmd->add_option("--count", fiber_count)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*comet_cmd) return run_comet(cfg, comet);
    if (*cross_cmd) return run_crossover(cfg, cross_min, cross_max);
    if (*const_cmd) return run_constant(cfg, terms.value_or(cfg.c_terms));
    if (*conv_cmd) return run_convolve(cfg, conv);
    if (*inv_cmd) return run_inverse(cfg, inv);
    if (*units_cmd) return run_units(cfg, unit_primes, unit_n);
    if (*prim_cmd) return run_primorial(cfg, check, prim_n);
    if (*fiber_cmd) return run_fiber(cfg, fiber_f, fiber_m, fiber_count);
  } catch (const InvariantBreach& e) {
    std::cerr << "hlcomet: invariant breach: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const UsageError& e) {
    std::cerr << "hlcomet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {  // InvalidArgument, RangeError, DomainError, ...
    std::cerr << "hlcomet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hlc::ResourceLimitError& e) {
    std::cerr << "hlcomet: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

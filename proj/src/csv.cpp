#include "hlcomet/csv.hpp"

#include <array>
#include <charconv>

namespace hlc::csv {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_comet_header(std::ostream& out, bool with_phi_bar) {
  out << "n,g,sylvester,G";
  if (with_phi_bar) out << ",phi_bar";
  out << '\n';
}

void write_comet_row(std::ostream& out, const CometRecord& r) {
  out << r.n << ',' << r.g << ',' << format_double(r.sylvester) << ','
      << format_double(r.big_g);
  if (r.phi_bar) out << ',' << format_double(*r.phi_bar);
  out << '\n';
}

void write_violation_header(std::ostream& out) { out << "n,sylvester,G,near_tie\n"; }

void write_violation_row(std::ostream& out, const Violation& v) {
  out << v.n << ',' << format_double(v.sylvester) << ',' << format_double(v.big_g) << ','
      << (v.near_tie ? 1 : 0) << '\n';
}

}  // namespace hlc::csv

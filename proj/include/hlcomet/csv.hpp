#pragma once

#include <ostream>
#include <string>

#include "hlcomet/comet.hpp"

namespace hlc::csv {

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double x);

void write_comet_header(std::ostream& out, bool with_phi_bar);
void write_comet_row(std::ostream& out, const CometRecord& r);

void write_violation_header(std::ostream& out);
void write_violation_row(std::ostream& out, const Violation& v);

}  // namespace hlc::csv

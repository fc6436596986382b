#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrisk {

// Entry point behind the qrisk binary. Returns the process exit code:
// 0 success, 1 validation or usage error, 2 when a calibration target is
// outside the attainable range.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Decimal fraction with an optional explicit '%' suffix: "0.05" and "5%"
// both mean five percent. Bare numbers are never reinterpreted as
// percentages; that ambiguity stays outside this codebase.
double parse_fraction(const std::string& text);

}  // namespace qrisk

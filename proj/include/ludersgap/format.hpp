#pragma once

#include <string>

#include "ludersgap/audit.hpp"
#include "ludersgap/repro.hpp"

namespace ludersgap {

// 12 significant digits, '.' decimal separator, no locale surprises.
std::string fmt_sig(double x);

// Comma-separated, header row, LF line endings, deterministic.
std::string to_csv(const ReproTable& t);
std::string to_csv(const std::vector<AuditRow>& rows);

// Numbers round-trip exactly through the emitted document.
std::string to_json(const ReproTable& t);
std::string to_json(const std::vector<AuditRow>& rows);

// Plain decimals plus the exact tokens pi, 2pi, pi/2, -pi/3, 3pi/4, 1/sqrt2.
double parse_param_token(const std::string& tok);

}  // namespace ludersgap

#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace ludersgap {

struct RunSpec {
  std::string command;                       // evaluate|sweep|maximize|reproduce|audit
  std::string scenario;                      // lgi|nci
  std::map<std::string, double> parameters;  // g1 g2 xi theta phi eps lam del, when given
  std::string rule = "luders";               // luders|vn
  std::string state = "001";                 // 001|100
  std::string output = "csv";                // csv|json
  std::string output_path;                   // empty => stdout

  std::string axis;                          // sweep: parameter to vary
  bool has_range = false;                    // sweep: explicit --from/--to given
  double from = 0.0, to = 0.0;
  int steps = 0;

  std::string target;                        // reproduce
  std::string objective;                     // maximize: k13|k23|k12|b31|b23|b12
  int points = 0;                            // maximize: grid density override
};

// Runs one parsed command; diagnostics to err, data to out (or output_path).
int execute(const RunSpec& s, std::ostream& out, std::ostream& err);

// Full argv front door.
int run_cli(int argc, const char* const* argv);

}  // namespace ludersgap

#pragma once

#include <string>
#include <vector>

namespace ludersgap {

// Closed-form-vs-simulation comparison for one published expression.
struct AuditRow {
  std::string form;                      // role name of the expression
  double max_dev_published = 0.0;        // worst |closed - simulated|, literal text
  double max_dev_corrected = 0.0;        // same with the minimal fixes applied
  std::vector<std::string> param_names;  // coordinates of worst_point
  std::vector<double> worst_point;       // argmax of the literal deviation
  bool pass = false;                     // max_dev_published < 1e-9
};

// Deterministic audit over `points_per_form` random parameter draws per row.
std::vector<AuditRow> run_audit(int points_per_form = 500);

}  // namespace ludersgap

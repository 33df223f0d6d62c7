#pragma once

#include <string>
#include <vector>

namespace ludersgap {

// One reproduced reference table / figure dataset, ready for CSV or JSON.
struct ReproTable {
  std::string target;
  std::vector<std::string> header;        // numeric column names
  std::vector<std::string> labels;        // row labels; empty => no label column
  std::vector<std::vector<double>> data;  // rectangular numeric cells
  bool ok = true;                         // every gated check passed
};

// target in {table1, table2, table4, fig1, fig2}.
ReproTable reproduce(const std::string& target);

}  // namespace ludersgap

#pragma once

#include <string>
#include <vector>

#include "kprimes/circle.hpp"
#include "kprimes/formula.hpp"

namespace kprimes {

/// One JSON object on a single line.
std::string to_json_line(const ExplicitFormulaReport& report);
std::string to_json_line(const BoundProbeReport& report);

/// n,k,Q,T,r_exact,main,secondary_re,secondary_im,residual,ratio_74,ratio_2,ratio_2log2,q_tail,zero_tail
std::string csv_header();
std::string to_csv_row(const ExplicitFormulaReport& report);

struct ColumnSummary {
  double max_abs = 0.0;
  double median_abs = 0.0;
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t failures = 0;
  ColumnSummary ratio_74;
  ColumnSummary ratio_2;
  ColumnSummary ratio_2log2;
  ColumnSummary residual;          // with the secondary term
  ColumnSummary residual_no_zeros; // r_exact - main
};

SweepSummary summarize(const std::vector<SweepRow>& rows);
std::string to_text(const SweepSummary& summary);

/// Median of |values| (mean of the middle pair for even sizes); 0 for an empty list.
double median_abs(std::vector<double> values);

}  // namespace kprimes

#include "kprimes/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace kprimes {
namespace {

using nlohmann::ordered_json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json config_json(const CircleConfig& cfg) {
  return {{"N", cfg.N}, {"Q", cfg.Q}, {"epsilon", cfg.epsilon}, {"quadrature_order", cfg.quadrature_order}};
}

ColumnSummary column(const std::vector<double>& values) {
  ColumnSummary out;
  for (const double v : values) out.max_abs = std::max(out.max_abs, std::abs(v));
  out.median_abs = median_abs(values);
  return out;
}

}  // namespace

std::string to_json_line(const ExplicitFormulaReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["Q"] = r.Q;
  j["T"] = r.T;
  j["r_exact"] = r.r_exact;
  j["main"] = r.main;
  j["singular_series"] = r.singular_series;
  j["secondary_re"] = r.secondary.real();
  j["secondary_im"] = r.secondary.imag();
  j["residual"] = r.residual;
  j["ratio_74"] = r.ratio_74;
  j["ratio_2"] = r.ratio_2;
  j["ratio_2log2"] = r.ratio_2log2;
  j["q_tail"] = r.q_tail;
  j["zero_tail"] = r.zero_tail;
  j["singular_series_log_tail"] = r.singular_series_log_tail;
  j["rounding_bound"] = r.rounding_bound;
  j["parity"] = r.parity;
  j["imaginary_ok"] = r.imaginary_ok;
  j["requested_Q"] = r.requested_Q;
  j["level_capped"] = r.level_capped;
  ordered_json per_q = ordered_json::array();
  for (const auto& [q, v] : r.per_q) per_q.push_back({{"q", q}, {"re", v.real()}, {"im", v.imag()}});
  j["per_q"] = per_q;
  j["warnings"] = r.warnings;
  return j.dump();
}

std::string to_json_line(const BoundProbeReport& r) {
  ordered_json j;
  j["probe"] = r.probe;
  j["config"] = config_json(r.config);
  j["measured"] = r.measured;
  j["bound"] = r.bound;
  j["bound_expression"] = r.bound_expression;
  j["ratio"] = r.ratio;
  j["sample"] = r.sample;
  ordered_json extras = ordered_json::object();
  for (const auto& [name, value] : r.extras) extras[name] = value;
  j["extras"] = extras;
  return j.dump();
}

std::string csv_header() {
  return "n,k,Q,T,r_exact,main,secondary_re,secondary_im,residual,ratio_74,ratio_2,ratio_2log2,q_tail,zero_tail";
}

std::string to_csv_row(const ExplicitFormulaReport& r) {
  std::string row = std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.Q) + "," + num(r.T);
  for (const double v : {r.r_exact, r.main, r.secondary.real(), r.secondary.imag(), r.residual, r.ratio_74,
                         r.ratio_2, r.ratio_2log2, r.q_tail, r.zero_tail}) {
    row += "," + num(v);
  }
  return row;
}

double median_abs(std::vector<double> values) {
  if (values.empty()) return 0.0;
  for (auto& v : values) v = std::abs(v);
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary out;
  out.rows = rows.size();
  std::vector<double> r74, r2, r2l2, res, res0;
  for (const auto& row : rows) {
    if (!row.report) {
      ++out.failures;
      continue;
    }
    const auto& r = *row.report;
    r74.push_back(r.ratio_74);
    r2.push_back(r.ratio_2);
    r2l2.push_back(r.ratio_2log2);
    res.push_back(r.residual);
    res0.push_back(r.r_exact - r.main);
  }
  out.ratio_74 = column(r74);
  out.ratio_2 = column(r2);
  out.ratio_2log2 = column(r2l2);
  out.residual = column(res);
  out.residual_no_zeros = column(res0);
  return out;
}

std::string to_text(const SweepSummary& s) {
  std::string out = "rows=" + std::to_string(s.rows) + " failures=" + std::to_string(s.failures);
  auto add = [&](const char* name, const ColumnSummary& c) {
    out += std::string(" ") + name + ".max=" + num(c.max_abs) + " " + name + ".median=" + num(c.median_abs);
  };
  add("ratio_74", s.ratio_74);
  add("ratio_2", s.ratio_2);
  add("ratio_2log2", s.ratio_2log2);
  add("residual", s.residual);
  add("residual_without_secondary", s.residual_no_zeros);
  return out;
}

}  // namespace kprimes

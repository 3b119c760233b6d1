#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kprimes/arithmetic.hpp"
#include "kprimes/circle.hpp"
#include "kprimes/convolution.hpp"
#include "kprimes/errors.hpp"
#include "kprimes/farey.hpp"
#include "kprimes/formula.hpp"
#include "kprimes/lfunc.hpp"
#include "kprimes/report_io.hpp"
#include "kprimes/singular_series.hpp"
#include "kprimes/zero_io.hpp"
#include "kprimes/zero_store.hpp"

namespace kprimes::cli {
namespace {

struct RunConfig {
  std::string zero_dir = "zeros";
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 1;

  // zeros
  bool zeta = false;
  std::int64_t q1 = 0;
  std::string chi;
  std::int64_t all_q = 0;
  double height = 100.0;
  std::string path;

  // report / sweep / single computations
  std::int64_t n = 0;
  int k = 5;
  std::int64_t Q = 0;
  std::int64_t n_from = 0;
  std::int64_t n_to = -1;
  std::string parity = "all";
  bool compute_zeros = false;
  std::int64_t p_max = 1'000'000;

  // probes
  std::int64_t N = 100;
  std::int64_t level = 5;
  int samples = 17;
  double eta = 0.0;
  std::int64_t ell = 1;
  std::int64_t arc_q = 1;
  std::int64_t arc_a = 1;
  int order = 16;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return kValidation;
    case ErrorKind::dependency: return kDependency;
    case ErrorKind::precision: return kPrecision;
    case ErrorKind::range: return kRange;
    case ErrorKind::incomplete: return kIncomplete;
  }
  return kFailure;
}

ZeroKey key_from(const RunConfig& cfg) {
  if (cfg.zeta || cfg.q1 == 1) return ZeroKey::zeta();
  if (cfg.q1 < 1) throw ValidationError("name a zero list with --zeta or --q1/--chi");
  return parse_zero_key("q=" + std::to_string(cfg.q1) + " chi=" + cfg.chi);
}

CircleConfig circle_from(const RunConfig& cfg) {
  CircleConfig c;
  c.N = cfg.N;
  c.Q = cfg.level;
  c.threads = cfg.threads;
  c.quadrature_order = cfg.order;
  c.validate();
  return c;
}

SieveTables sieve_for(const CircleConfig& c) { return build_sieve(std::max<std::int64_t>(2, c.truncation())); }

void check_k_scope(int k) {
  if (k < 5) {
    throw ValidationError("k = " + std::to_string(k) +
                          " is outside the explicit formula's scope: it holds for k >= 5 "
                          "(R_k and the singular series remain available via `rk` and `singular`)");
  }
}

void print_report(const ExplicitFormulaReport& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    out << csv_header() << '\n' << to_csv_row(r) << '\n';
  } else {
    out << to_json_line(r) << '\n';
  }
}

int cmd_zeros_compute(const RunConfig& cfg, std::ostream& out) {
  ZeroStore store(cfg.zero_dir);
  ZeroSearchOptions opts;
  if (cfg.all_q > 0) {
    const auto keys = store.ensure(cfg.all_q, cfg.height, opts, cfg.threads);
    out << "computed " << keys.size() << " zero lists for squarefree conductors <= " << cfg.all_q
        << " to height " << format_ordinate(cfg.height) << " in " << cfg.zero_dir << '\n';
    return kOk;
  }
  const ZeroKey key = key_from(cfg);
  ZeroList zeros = l_zeros(key.character(), cfg.height, opts);
  const auto count = zeros.ordinates.size();
  if (!cfg.path.empty()) {
    export_zeros(zeros, cfg.path);
    out << "wrote " << cfg.path;
  } else {
    store.put(std::move(zeros));
    out << "wrote " << (std::filesystem::path(cfg.zero_dir) / key.filename()).string();
  }
  out << " (" << key.describe() << ", " << count << " ordinates up to " << format_ordinate(cfg.height) << ")\n";
  return kOk;
}

int cmd_zeros_import(const RunConfig& cfg, std::ostream& out) {
  ZeroList zeros = import_zeros(cfg.path);
  const auto check = validate_zero_list(zeros);
  if (!check.ok()) {
    throw PrecisionError("imported zeros for " + zeros.key.describe() + " failed validation (ordered=" +
                         std::to_string(check.ordered) + " bracketed=" + std::to_string(check.bracketed) +
                         " small=" + std::to_string(check.small_value) + " count=" + std::to_string(check.count_ok) +
                         ")");
  }
  const ZeroKey key = zeros.key;
  const auto count = zeros.ordinates.size();
  ZeroStore store(cfg.zero_dir);
  store.put(std::move(zeros));
  out << "imported " << count << " ordinates for " << key.describe() << " into "
      << (std::filesystem::path(cfg.zero_dir) / key.filename()).string() << '\n';
  return kOk;
}

int cmd_zeros_export(const RunConfig& cfg, std::ostream& out) {
  const ZeroStore store(cfg.zero_dir);
  const ZeroList& zeros = store.at(key_from(cfg));
  if (cfg.path.empty() || cfg.path == "-") {
    write_zeros(out, zeros);
  } else {
    export_zeros(zeros, cfg.path);
    out << "wrote " << cfg.path << " (" << zeros.ordinates.size() << " ordinates)\n";
  }
  return kOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  check_k_scope(cfg.k);
  if (cfg.n < 1) throw ValidationError("--n must be >= 1");
  if (cfg.n > kDefaultSieveMax) throw RangeError("n = " + std::to_string(cfg.n) + " exceeds the sieve limit");
  ZeroStore store(cfg.zero_dir);
  if (cfg.compute_zeros) {
    const std::int64_t Q = cfg.Q > 0 ? cfg.Q : CircleConfig::canonical_level(cfg.n);
    store.ensure(Q, cfg.height, {}, cfg.threads);
  }
  FormulaOptions options;
  options.p_max = cfg.p_max;
  options.threads = cfg.threads;
  print_report(explicit_formula_report(cfg.n, cfg.k, cfg.Q, cfg.height, store, options), cfg, out);
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_k_scope(cfg.k);
  if (cfg.Q < 1) throw ValidationError("--Q must be >= 1 for a sweep");
  std::vector<std::int64_t> ns;
  for (std::int64_t n = std::max<std::int64_t>(cfg.n_from, 1); n <= cfg.n_to; ++n) {
    if (cfg.parity == "odd" && n % 2 == 0) continue;
    if (cfg.parity == "even" && n % 2 != 0) continue;
    ns.push_back(n);
  }
  out << csv_header() << '\n';
  if (ns.empty()) {
    err << to_text(SweepSummary{}) << '\n';
    return kOk;
  }
  if (ns.back() > kDefaultSieveMax) throw RangeError("n range exceeds the sieve limit");
  ZeroStore store(cfg.zero_dir);
  if (cfg.compute_zeros) store.ensure(cfg.Q, cfg.height, {}, cfg.threads);
  FormulaOptions options;
  options.p_max = cfg.p_max;
  options.threads = cfg.threads;
  const ExplicitFormulaEngine engine(cfg.k, ns.back(), store, options);
  const auto rows = engine.sweep(ns, cfg.Q, cfg.height);
  int code = kOk;
  for (const auto& row : rows) {
    if (row.report) {
      out << to_csv_row(*row.report) << '\n';
    } else {
      err << "n=" << row.n << ": " << row.error << '\n';
      if (code == kOk) code = row.error_kind ? exit_code_for(*row.error_kind) : kFailure;
    }
  }
  err << to_text(summarize(rows)) << '\n';
  return code;
}

int cmd_rk(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k < 1) throw ValidationError("--k must be >= 1");
  if (cfg.n < 0) throw ValidationError("--n must be >= 0");
  const auto tables = build_sieve(std::max<std::int64_t>(cfg.n, 2));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rk_exact(cfg.n, cfg.k, tables));
  out << "R_" << cfg.k << "(" << cfg.n << ") = " << buf << '\n';
  return kOk;
}

int cmd_singular(const RunConfig& cfg, std::ostream& out) {
  const auto euler = singular_series_euler(cfg.n, cfg.k, cfg.p_max);
  char buf[256];
  std::snprintf(buf, sizeof buf, "euler p_max=%lld value=%.17g log_tail_bound=%.3g\n",
                static_cast<long long>(cfg.p_max), euler.value, euler.log_tail_bound);
  out << buf;
  if (cfg.Q > 0) {
    const auto tables = build_sieve(std::max<std::int64_t>(cfg.Q, 2));
    const auto ram = singular_series_ramanujan(cfg.n, cfg.k, cfg.Q, tables);
    std::snprintf(buf, sizeof buf, "ramanujan Q=%lld value=%.17g tail_bound=%.3g C_k=%g\n",
                  static_cast<long long>(cfg.Q), ram.value, ram.tail_bound, ram.tail_constant);
    out << buf;
  }
  return kOk;
}

int cmd_probe_farey(const RunConfig& cfg, std::ostream& out) {
  const auto arcs = farey_arcs(cfg.level);
  const auto check = check_farey_cover(arcs, cfg.level);
  out << "Q=" << cfg.level << " arcs=" << arcs.size() << ": cover " << (check.cover ? "OK" : "FAILED")
      << ", disjoint " << (check.disjoint ? "OK" : "FAILED") << ", total length "
      << (check.total_length_one ? "1" : "not 1") << ", xi bounds " << (check.xi_bounds ? "OK" : "FAILED");
  if (!check.detail.empty()) out << " (" << check.detail << ")";
  out << '\n';
  return check.ok() ? kOk : kFailure;
}

int cmd_probe(const std::string& name, const RunConfig& cfg, std::ostream& out) {
  if (name == "farey") return cmd_probe_farey(cfg, out);
  if (name == "v-bound") {
    for (const auto& r : v_bound_scan(cfg.N, cfg.samples, cfg.seed)) out << to_json_line(r) << '\n';
    return kOk;
  }
  const CircleConfig circle = circle_from(cfg);
  if (name == "main-term") {
    for (const auto& arc : farey_arcs(circle.Q)) {
      if (arc.q == cfg.arc_q && arc.a == cfg.arc_a) {
        out << to_json_line(main_term_arc_integral(cfg.ell, cfg.k, circle, arc)) << '\n';
        return kOk;
      }
    }
    throw ValidationError("no Farey arc " + std::to_string(cfg.arc_a) + "/" + std::to_string(cfg.arc_q) +
                          " at level " + std::to_string(circle.Q));
  }
  const auto tables = sieve_for(circle);
  if (name == "mean-square") {
    for (const auto& r : mean_square_probe(circle, tables)) out << to_json_line(r) << '\n';
  } else if (name == "max-residual") {
    out << to_json_line(max_residual_probe(circle, cfg.samples, tables)) << '\n';
  } else if (name == "linnik") {
    const ZeroStore store(cfg.zero_dir);
    const ZeroKey key = key_from(cfg);
    const DirichletCharacter chi = key.character();
    const ZeroList& zeros = store.at(key, cfg.height);
    const ZeroList& conj = store.at(ZeroKey::of(chi.conjugate()), cfg.height);
    out << to_json_line(linnik_probe(chi, cfg.eta, circle, zeros, conj, cfg.height, tables)) << '\n';
  } else if (name == "parseval") {
    const auto p = parseval_check(circle, tables);
    char buf[160];
    std::snprintf(buf, sizeof buf, "parseval N=%lld Q=%lld quadrature=%.15g exact=%.15g relative_error=%.3g\n",
                  static_cast<long long>(circle.N), static_cast<long long>(circle.Q), p.quadrature, p.exact,
                  p.relative_error);
    out << buf;
  } else if (name == "decomposition") {
    const auto d = decomposition_check(cfg.n, cfg.k, circle, tables);
    char buf[200];
    std::snprintf(buf, sizeof buf, "decomposition n=%lld k=%d N=%lld integral=%.15g%+.3gi expected=%.15g relative_error=%.3g\n",
                  static_cast<long long>(cfg.n), cfg.k, static_cast<long long>(circle.N), d.integral.real(),
                  d.integral.imag(), d.expected, d.relative_error);
    out << buf;
  } else {
    throw ValidationError("unknown probe '" + name + "'");
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Explicit formula for sums of k primes: zeros, reports, probes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--zero-dir", cfg.zero_dir, "Zero store directory")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampling probes")->capture_default_str();

  auto* zeros = app.add_subcommand("zeros", "Compute, import or export zero lists");
  zeros->require_subcommand(1);
  auto add_key = [&](CLI::App* sub) {
    sub->add_flag("--zeta", cfg.zeta, "The Riemann zeta function");
    sub->add_option("--q1", cfg.q1, "Conductor of a primitive character");
    sub->add_option("--chi", cfg.chi, "Exponent vector e1,e2,... of the character");
  };
  auto* zc = zeros->add_subcommand("compute", "Compute zeros up to a height");
  add_key(zc);
  zc->add_option("--all-q", cfg.all_q, "Every primitive character of squarefree conductor <= this");
  zc->add_option("--height,-T", cfg.height, "Height T")->capture_default_str();
  zc->add_option("--out", cfg.path, "Write to this file instead of the store");
  auto* zi = zeros->add_subcommand("import", "Import a zero file into the store");
  zi->add_option("path", cfg.path, "Zero file")->required();
  auto* ze = zeros->add_subcommand("export", "Export a stored zero list");
  add_key(ze);
  ze->add_option("--out", cfg.path, "Output file (stdout if omitted)");

  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("--k,-k", cfg.k, "Number of primes")->capture_default_str();
    sub->add_option("--T,-T,--height", cfg.height, "Zero height T")->capture_default_str();
    sub->add_option("--p-max", cfg.p_max, "Euler product cutoff")->capture_default_str();
    sub->add_flag("--compute-zeros", cfg.compute_zeros, "Compute missing zero lists first");
  };
  auto* report = app.add_subcommand("report", "Explicit-formula report for one n");
  report->add_option("--n,-n", cfg.n, "n")->required();
  report->add_option("--Q,-Q", cfg.Q, "Modulus cutoff (default floor(sqrt(n)/2), capped by zero data)");
  report->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_formula(report);

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over a range of n; summary on stderr");
  sweep->add_option("--from", cfg.n_from, "First n")->required();
  sweep->add_option("--to", cfg.n_to, "Last n")->required();
  sweep->add_option("--parity", cfg.parity, "odd, even or all")->check(CLI::IsMember({"odd", "even", "all"}))->capture_default_str();
  sweep->add_option("--Q,-Q", cfg.Q, "Modulus cutoff")->required();
  add_formula(sweep);

  auto* rk = app.add_subcommand("rk", "R_k(n) by convolution");
  rk->add_option("--n,-n", cfg.n, "n")->required();
  rk->add_option("--k,-k", cfg.k, "k")->required();

  auto* singular = app.add_subcommand("singular", "Singular series, Euler product and Ramanujan series");
  singular->add_option("--n,-n", cfg.n, "n")->required();
  singular->add_option("--k,-k", cfg.k, "k")->required();
  singular->add_option("--p-max", cfg.p_max, "Euler product cutoff")->capture_default_str();
  singular->add_option("--Q,-Q", cfg.Q, "Ramanujan series cutoff (0 to skip)");

  auto* probe = app.add_subcommand("probe", "Empirical probes of the circle-method estimates");
  probe->require_subcommand(1);
  auto add_circle = [&](CLI::App* sub) {
    sub->add_option("-N", cfg.N, "Smoothing parameter N")->capture_default_str();
    sub->add_option("-Q,--Q", cfg.level, "Farey level Q")->capture_default_str();
    sub->add_option("--order", cfg.order, "Gauss-Legendre points per panel")->capture_default_str();
  };
  auto* pf = probe->add_subcommand("farey", "Exact cover and disjointness of the Farey arcs");
  pf->add_option("-Q,--Q", cfg.level, "Farey level Q")->capture_default_str();
  auto* pms = probe->add_subcommand("mean-square", "Mean-square probes");
  add_circle(pms);
  auto* pmr = probe->add_subcommand("max-residual", "Empirical S*(Q)");
  add_circle(pmr);
  pmr->add_option("--samples", cfg.samples, "Samples per arc")->capture_default_str();
  auto* pl = probe->add_subcommand("linnik", "Zero-sum explicit formula for W(chi, eta, z)");
  add_circle(pl);
  add_key(pl);
  pl->add_option("--eta", cfg.eta, "eta")->capture_default_str();
  pl->add_option("-T,--height", cfg.height, "Zero height T")->capture_default_str();
  auto* pmt = probe->add_subcommand("main-term", "Arc integral of e(-l eta)/z^k");
  add_circle(pmt);
  pmt->add_option("--ell", cfg.ell, "l")->capture_default_str();
  pmt->add_option("-k,--k", cfg.k, "k")->capture_default_str();
  pmt->add_option("--q", cfg.arc_q, "Arc denominator")->capture_default_str();
  pmt->add_option("--a", cfg.arc_a, "Arc numerator")->capture_default_str();
  auto* pv = probe->add_subcommand("v-bound", "Random scan of V(eta) against 1/z and min(N, 1/|eta|)");
  pv->add_option("-N", cfg.N, "N")->capture_default_str();
  pv->add_option("--samples", cfg.samples, "Samples")->capture_default_str();
  auto* pp = probe->add_subcommand("parseval", "Integral of |S~|^2 over the Farey cover");
  add_circle(pp);
  auto* pd = probe->add_subcommand("decomposition", "Integral of S~^k e(-n alpha) against e^{-n/N} R_k(n)");
  add_circle(pd);
  pd->add_option("--n,-n", cfg.n, "n")->required();
  pd->add_option("-k,--k", cfg.k, "k")->capture_default_str();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (zc->parsed()) return cmd_zeros_compute(cfg, out);
    if (zi->parsed()) return cmd_zeros_import(cfg, out);
    if (ze->parsed()) return cmd_zeros_export(cfg, out);
    if (report->parsed()) return cmd_report(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
    if (rk->parsed()) return cmd_rk(cfg, out);
    if (singular->parsed()) return cmd_singular(cfg, out);
    for (auto* sub : probe->get_subcommands()) {
      if (sub->parsed()) return cmd_probe(sub->get_name(), cfg, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace kprimes::cli

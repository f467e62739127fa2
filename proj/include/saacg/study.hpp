#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "saacg/bounds.hpp"
#include "saacg/common.hpp"
#include "saacg/composite.hpp"
#include "saacg/cond_grad.hpp"
#include "saacg/svg.hpp"

namespace saacg {

/// Configuration of one convergence-rate study.
struct StudyConfig {
  PdeKind kind = PdeKind::AffineLinear;
  int n = 64;                  // mesh cells per direction
  int M = 100;                 // KL addends
  double corr_len = 1.0;
  double amplitude = 0.04;
  double kappa_floor = 0.1;
  ProblemData data;            // beta, bounds, y_d, b
  int N_ref = 8192;
  std::vector<int> N_grid;
  int replications = 40;
  std::uint64_t base_seed = 0;
  SolverConfig solver;                    // per-replication solver budget
  SolverConfig reference_solver{1e-10, 500, LineSearch::Auto};
  std::string output_dir;

  void validate() const {
    require(n >= 1 && M >= 1 && N_ref >= 1, "StudyConfig: invalid sizes");
    require(replications >= 1, "StudyConfig: replications must be >= 1");
    require(!N_grid.empty(), "StudyConfig: empty N grid");
    for (std::size_t i = 0; i + 1 < N_grid.size(); ++i)
      require(N_grid[i] < N_grid[i + 1], "StudyConfig: N grid must be increasing");
    require(N_ref > N_grid.back(), "StudyConfig: N_ref must exceed max(N_grid)");
    data.validate(kind);
  }
};

struct ReplicationRow {
  int N = 0;
  int rep = 0;
  double obj_gap = 0.0;   // G_ref(u_N) - theta_ref
  double l1_dist = 0.0;   // area-weighted L1 distance to u_ref
  double ref_gap = 0.0;   // gap of the reference problem at u_N
  double saa_value = 0.0; // converged SAA objective of this replication
  bool ok = true;
  std::string status = "ok";
};

struct SummaryRow {
  int N = 0;
  double mean_obj_gap = 0, se_obj_gap = 0;
  double mean_l1 = 0, se_l1 = 0;
  double mean_gap = 0, se_gap = 0;
  double mean_value_dev = 0;  // mean |theta_hat_N - theta_ref|
};

struct StudyReport {
  std::vector<ReplicationRow> rows;
  std::vector<SummaryRow> summary;
  RateFit rate_obj_gap, rate_l1, rate_gap;
  double ref_value = 0.0;
  double bang_bang_fraction = 0.0;
  bool valid = true;
};

/// Reference problem, its converged control and objective value.
struct Reference {
  CompositeProblem problem;
  ControlField u_ref;
  double value = 0.0;
};

namespace detail {

inline std::uint64_t replication_seed(std::uint64_t base, int N, int rep) {
  return mix64(mix64(mix64(base) ^ static_cast<std::uint64_t>(N)) ^
               static_cast<std::uint64_t>(rep));
}

inline std::uint64_t reference_seed(std::uint64_t base) {
  return mix64(base ^ 0x7265666572656e63ull);  // keyed off the base seed
}

}  // namespace detail

/// Fraction of cells within tol of one of the bang-bang-off levels
/// {lower, 0, upper}.
inline double bang_bang_off_fraction(const ControlField& u, double lower,
                                     double upper, double tol = 1e-6) {
  int hits = 0;
  for (Eigen::Index i = 0; i < u.values.size(); ++i) {
    const double v = u.values[i];
    if (std::abs(v) <= tol || std::abs(v - lower) <= tol ||
        std::abs(v - upper) <= tol)
      ++hits;
  }
  return u.values.size() ? static_cast<double>(hits) / u.values.size() : 0.0;
}

inline ControlField zero_control(const Mesh& mesh) {
  return ControlField{Eigen::VectorXd::Zero(mesh.cell_count())};
}

/// Builds the QMC reference problem and solves it from the zero control.
inline Reference build_reference(const StudyConfig& cfg) {
  cfg.validate();
  const Mesh mesh = build_mesh(cfg.n);
  const KLFieldSpec spec =
      default_kl_spec(cfg.M, cfg.corr_len, cfg.amplitude, cfg.kappa_floor);
  SampleSet refs =
      qmc_samples(spec, cfg.N_ref, detail::reference_seed(cfg.base_seed));
  CompositeProblem problem(cfg.kind, cfg.data, spec, std::move(refs), mesh);
  SolveTrace trace;
  try {
    trace = solve(problem, zero_control(mesh), cfg.reference_solver);
  } catch (const StagnationError& e) {
    throw SolverError(std::string("build_reference: solver stagnated after ") +
                      std::to_string(e.trace.iterations()) + " iterations");
  }
  Reference ref{std::move(problem), trace.final_u, 0.0};
  ref.value = ref.problem.objective(ref.u_ref);
  return ref;
}

/// Solves one i.i.d. SAA replication and measures it against the reference.
inline ReplicationRow run_replication(const StudyConfig& cfg,
                                      const Reference& ref, int N, int rep) {
  ReplicationRow row;
  row.N = N;
  row.rep = rep;
  try {
    const SampleSet draws = iid_samples(
        ref.problem.field_spec(), N, detail::replication_seed(cfg.base_seed, N, rep));
    CompositeProblem saa(cfg.kind, cfg.data, ref.problem.field_spec(), draws,
                         ref.problem.mesh());
    const SolveTrace trace = solve(saa, zero_control(ref.problem.mesh()), cfg.solver);
    const ControlField& u = trace.final_u;
    row.saa_value = trace.objectives.back();
    row.obj_gap = ref.problem.objective(u) - ref.value;
    row.l1_dist = ref.problem.mesh().cell_area *
                  (u.values - ref.u_ref.values).cwiseAbs().sum();
    row.ref_gap = ref.problem.gap(u).gap;
  } catch (const std::exception& e) {
    row.ok = false;
    row.status = std::string("failed(N=") + std::to_string(N) +
                 ",rep=" + std::to_string(rep) + "): " + e.what();
  }
  return row;
}

namespace detail {

inline void mean_se(const std::vector<double>& xs, double& mean, double& se) {
  mean = 0.0;
  se = 0.0;
  if (xs.empty()) return;
  for (double x : xs) mean += x;
  mean /= xs.size();
  if (xs.size() < 2) return;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= (xs.size() - 1);
  se = std::sqrt(var / xs.size());
}

inline std::vector<SummaryRow> summarize(const std::vector<ReplicationRow>& rows,
                                         const std::vector<int>& grid,
                                         double ref_value) {
  std::vector<SummaryRow> out;
  for (int N : grid) {
    std::vector<double> og, l1, gp, dv;
    for (const auto& r : rows) {
      if (r.N != N || !r.ok) continue;
      og.push_back(r.obj_gap);
      l1.push_back(r.l1_dist);
      gp.push_back(r.ref_gap);
      dv.push_back(std::abs(r.saa_value - ref_value));
    }
    SummaryRow s;
    s.N = N;
    mean_se(og, s.mean_obj_gap, s.se_obj_gap);
    mean_se(l1, s.mean_l1, s.se_l1);
    mean_se(gp, s.mean_gap, s.se_gap);
    double se_unused;
    mean_se(dv, s.mean_value_dev, se_unused);
    out.push_back(s);
  }
  return out;
}

inline RateFit fit_metric(const std::vector<SummaryRow>& summary,
                          double SummaryRow::* field) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : summary)
    pts.emplace_back(s.N, std::max(s.*field, 1e-16));
  return fit_rate(pts);
}

inline std::vector<std::pair<double, double>> metric_points(
    const std::vector<SummaryRow>& summary, double SummaryRow::* field) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : summary)
    pts.emplace_back(s.N, std::max(s.*field, 1e-16));
  return pts;
}

}  // namespace detail

inline void save_raw_csv(const std::vector<ReplicationRow>& rows,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_raw_csv: cannot open " + path);
  out << "N,rep,obj_gap,l1_dist,ref_gap,status\n";
  out.precision(17);
  for (const auto& r : rows)
    out << r.N << "," << r.rep << "," << r.obj_gap << "," << r.l1_dist << ","
        << r.ref_gap << "," << (r.ok ? "ok" : "failed") << "\n";
}

inline std::vector<ReplicationRow> load_raw_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_raw_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "N,rep,obj_gap,l1_dist,ref_gap,status")
    throw Error("load_raw_csv: bad header in " + path);
  std::vector<ReplicationRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ReplicationRow r;
    std::getline(ls, tok, ',');
    r.N = std::stoi(tok);
    std::getline(ls, tok, ',');
    r.rep = std::stoi(tok);
    std::getline(ls, tok, ',');
    r.obj_gap = std::stod(tok);
    std::getline(ls, tok, ',');
    r.l1_dist = std::stod(tok);
    std::getline(ls, tok, ',');
    r.ref_gap = std::stod(tok);
    std::getline(ls, tok, ',');
    r.ok = tok == "ok";
    r.status = tok;
    rows.push_back(r);
  }
  return rows;
}

inline void save_summary_csv(const std::vector<SummaryRow>& summary,
                             const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_summary_csv: cannot open " + path);
  out << "N,mean_obj_gap,se_obj_gap,mean_l1,se_l1,mean_gap,se_gap\n";
  out.precision(17);
  for (const auto& s : summary)
    out << s.N << "," << s.mean_obj_gap << "," << s.se_obj_gap << ","
        << s.mean_l1 << "," << s.se_l1 << "," << s.mean_gap << "," << s.se_gap
        << "\n";
}

inline void save_rates_csv(const StudyReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_rates_csv: cannot open " + path);
  out << "metric,slope,intercept,r2\n";
  out.precision(17);
  const auto line = [&](const char* name, const RateFit& f) {
    out << name << "," << f.slope << "," << f.intercept << "," << f.r_squared
        << "\n";
  };
  line("obj_gap", report.rate_obj_gap);
  line("l1_dist", report.rate_l1);
  line("ref_gap", report.rate_gap);
}

inline void save_control_csv(const ControlField& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_control_csv: cannot open " + path);
  out << "cell,value\n";
  out.precision(17);
  for (Eigen::Index i = 0; i < u.values.size(); ++i)
    out << i << "," << u.values[i] << "\n";
}

/// Regenerates summary, rates and plots from raw replication rows.
inline StudyReport report_from_rows(std::vector<ReplicationRow> rows,
                                    const std::vector<int>& grid,
                                    double ref_value = 0.0) {
  StudyReport report;
  report.rows = std::move(rows);
  report.ref_value = ref_value;
  report.summary = detail::summarize(report.rows, grid, ref_value);
  report.rate_obj_gap = detail::fit_metric(report.summary, &SummaryRow::mean_obj_gap);
  report.rate_l1 = detail::fit_metric(report.summary, &SummaryRow::mean_l1);
  report.rate_gap = detail::fit_metric(report.summary, &SummaryRow::mean_gap);
  for (int N : grid) {
    int total = 0, failed = 0;
    for (const auto& r : report.rows)
      if (r.N == N) {
        ++total;
        if (!r.ok) ++failed;
      }
    if (total > 0 && failed * 5 > total) report.valid = false;
  }
  return report;
}

inline void persist_report(const StudyReport& report,
                           const std::vector<int>& grid,
                           const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  save_raw_csv(report.rows, dir + "/raw.csv");
  save_summary_csv(report.summary, dir + "/summary.csv");
  save_rates_csv(report, dir + "/rates.csv");
  save_loglog_svg(detail::metric_points(report.summary, &SummaryRow::mean_obj_gap),
                  report.rate_obj_gap, "mean objective gap", dir + "/rate_obj_gap.svg");
  save_loglog_svg(detail::metric_points(report.summary, &SummaryRow::mean_l1),
                  report.rate_l1, "mean L1 distance", dir + "/rate_l1_dist.svg");
  save_loglog_svg(detail::metric_points(report.summary, &SummaryRow::mean_gap),
                  report.rate_gap, "mean reference gap", dir + "/rate_ref_gap.svg");
  std::ofstream grid_out(dir + "/grid.csv");
  grid_out << "N\n";
  for (int N : grid) grid_out << N << "\n";
}

/// Runs the full study: reference solve, all (N, rep) replications in fixed
/// order, aggregation and (optionally) persistence.
inline StudyReport run_study(const StudyConfig& cfg) {
  cfg.validate();
  Reference ref = build_reference(cfg);

  std::vector<ReplicationRow> rows;
  rows.reserve(cfg.N_grid.size() * cfg.replications);
  for (int N : cfg.N_grid)
    for (int rep = 0; rep < cfg.replications; ++rep)
      rows.push_back(run_replication(cfg, ref, N, rep));

  StudyReport report = report_from_rows(std::move(rows), cfg.N_grid, ref.value);
  report.bang_bang_fraction =
      bang_bang_off_fraction(ref.u_ref, cfg.data.lower, cfg.data.upper);

  if (!cfg.output_dir.empty()) {
    persist_report(report, cfg.N_grid, cfg.output_dir);
    save_control_csv(ref.u_ref, cfg.output_dir + "/control_ref.csv");
    save_control_heatmap_svg(ref.problem.mesh(), ref.u_ref,
                             cfg.output_dir + "/control_ref.svg",
                             cfg.data.lower, cfg.data.upper);
    std::ofstream meta(cfg.output_dir + "/reference.csv");
    meta.precision(17);
    meta << "ref_value,bang_bang_fraction\n"
         << report.ref_value << "," << report.bang_bang_fraction << "\n";
  }
  return report;
}

}  // namespace saacg

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "saacg/cond_grad.hpp"

namespace saacg {
namespace {

CompositeProblem make_problem(PdeKind kind, int n, int N, std::uint64_t seed,
                              double beta = -1.0) {
  const Mesh mesh = build_mesh(n);
  const KLFieldSpec spec = default_kl_spec(10, 1.0, 0.25, 0.1);
  ProblemData d = reference_problem_data(kind);
  if (beta >= 0.0) d.beta = beta;
  return CompositeProblem(kind, d, spec, iid_samples(spec, N, seed), mesh);
}

ControlField zeros(const CompositeProblem& p) {
  return ControlField{Eigen::VectorXd::Zero(p.mesh().cell_count())};
}

TEST(Solve, ReturnsImmediatelyAtCriticalPoint) {
  const Mesh mesh = build_mesh(6);
  const KLFieldSpec spec = default_kl_spec(4, 1.0, 0.25, 0.1);
  ProblemData d = reference_problem_data(PdeKind::AffineLinear);
  d.y_d = [](double, double) { return 0.0; };  // u = 0 is optimal
  const CompositeProblem p(PdeKind::AffineLinear, d, spec,
                           iid_samples(spec, 2, 1), mesh);
  const SolveTrace trace = solve(p, ControlField{Eigen::VectorXd::Zero(mesh.cell_count())});
  EXPECT_EQ(trace.status, SolveStatus::GapMet);
  EXPECT_EQ(trace.iterations(), 1);
  EXPECT_LE(trace.gaps[0], 1e-10);
}

TEST(Solve, AffineToyConvergesAndIsMonotone) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 8, 4, 11, 0.0075);
  SolverConfig cfg;
  cfg.gap_tol = 1e-6;
  cfg.max_iters = 500;
  const SolveTrace trace = solve(p, zeros(p), cfg);
  double min_gap = 1e300;
  for (std::size_t k = 0; k < trace.gaps.size(); ++k) {
    min_gap = std::min(min_gap, trace.gaps[k]);
    if (k > 0) EXPECT_LE(trace.objectives[k], trace.objectives[k - 1] + 1e-12);
  }
  EXPECT_LE(min_gap, 1e-6);
  EXPECT_TRUE(p.feasible(trace.final_u));
}

TEST(Solve, BilinearArmijoIsMonotone) {
  const CompositeProblem p = make_problem(PdeKind::Bilinear, 8, 3, 13);
  SolverConfig cfg;
  cfg.gap_tol = 1e-8;
  cfg.max_iters = 60;
  const SolveTrace trace = solve(p, zeros(p), cfg);
  for (std::size_t k = 1; k < trace.objectives.size(); ++k)
    EXPECT_LE(trace.objectives[k], trace.objectives[k - 1] + 1e-12);
  EXPECT_TRUE(p.feasible(trace.final_u));
}

TEST(Solve, DeterministicTraces) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 8, 3, 17);
  SolverConfig cfg;
  cfg.max_iters = 20;
  const SolveTrace a = solve(p, zeros(p), cfg);
  const SolveTrace b = solve(p, zeros(p), cfg);
  ASSERT_EQ(a.iterations(), b.iterations());
  for (int k = 0; k < a.iterations(); ++k) {
    EXPECT_EQ(a.objectives[k], b.objectives[k]);
    EXPECT_EQ(a.gaps[k], b.gaps[k]);
  }
  EXPECT_TRUE(a.final_u.values == b.final_u.values);
}

TEST(Solve, RejectsInfeasibleStart) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 6, 2, 19);
  ControlField u0 = zeros(p);
  u0.values[0] = 5.0;
  EXPECT_THROW(solve(p, u0), InvalidArgument);
}

TEST(Solve, IterCapStatus) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 8, 2, 23, 0.0);
  SolverConfig cfg;
  cfg.gap_tol = 1e-15;
  cfg.max_iters = 3;
  const SolveTrace trace = solve(p, zeros(p), cfg);
  EXPECT_EQ(trace.status, SolveStatus::IterCap);
  EXPECT_EQ(trace.iterations(), 3);
}

TEST(ExactLinesearch, ZeroDirectionGivesZeroStep) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 6, 2, 29);
  const ControlField u = zeros(p);
  EXPECT_EQ(exact_linesearch_quadratic(p, u, zeros(p)), 0.0);
}

TEST(ExactLinesearch, PureQuadraticMatchesClosedForm) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 8, 2, 31, 0.0);
  const ControlField u = zeros(p);
  const GapCertificate cert = p.gap(u);
  ControlField d;
  d.values = cert.minimizer.values - u.values;
  const double a = p.direction_curvature(d);
  const double b = p.control_inner(p.gradient(u), d);
  const double expected = std::clamp(-b / a, 0.0, 1.0);
  const double s = exact_linesearch_quadratic(p, u, d);
  EXPECT_NEAR(s, expected, 1e-9);
}

TEST(ExactLinesearch, MatchesDenseGridScan) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 8, 2, 37, 0.0075);
  std::mt19937_64 rng(38);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ControlField u, v;
  u.values.resize(p.mesh().cell_count());
  v.values.resize(p.mesh().cell_count());
  for (Eigen::Index i = 0; i < u.values.size(); ++i) {
    u.values[i] = dist(rng);
    v.values[i] = dist(rng);
  }
  ControlField d{v.values - u.values};
  const double a = p.direction_curvature(d);
  const double b = p.control_inner(p.gradient(u), d);
  auto phi = [&](double s) {
    return 0.5 * a * s * s + b * s + p.psi(ControlField{u.values + s * d.values});
  };
  const double s = exact_linesearch_quadratic(p, u, d);
  double best = 1e300;
  const int steps = 1000000;
  for (int i = 0; i <= steps; ++i) best = std::min(best, phi(double(i) / steps));
  EXPECT_LE(phi(s), best + 1e-9);
}

TEST(SolveTrace, CsvSerialization) {
  const CompositeProblem p = make_problem(PdeKind::AffineLinear, 6, 2, 41);
  SolverConfig cfg;
  cfg.max_iters = 5;
  const SolveTrace trace = solve(p, zeros(p), cfg);
  const std::string path =
      (std::filesystem::temp_directory_path() / "saacg_trace.csv").string();
  trace.save_csv(path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "iteration,objective,gap");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  EXPECT_EQ(rows, trace.iterations());
  std::remove(path.c_str());
}

}  // namespace
}  // namespace saacg

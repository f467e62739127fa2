#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "saacg/pde.hpp"
#include "saacg/sampling.hpp"

namespace saacg {
namespace {

ProblemData test_data(PdeKind kind) {
  ProblemData d = reference_problem_data(kind);
  return d;
}

Eigen::VectorXd unit_kappa(const Mesh& m) {
  return Eigen::VectorXd::Ones(m.cell_count());
}

ControlField random_control(const Mesh& m, double lo, double hi,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  ControlField u;
  u.values.resize(m.cell_count());
  for (int t = 0; t < m.cell_count(); ++t) u.values[t] = dist(rng);
  return u;
}

TEST(SolveState, AffineZeroControlGivesZeroState) {
  const Mesh m = build_mesh(8);
  const ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  const StateField y = solve_state(PdeKind::AffineLinear, m, unit_kappa(m), u,
                                   test_data(PdeKind::AffineLinear));
  EXPECT_EQ(y.values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(SolveState, BilinearZeroControlIsPureDiffusion) {
  const Mesh m = build_mesh(8);
  const ProblemData d = test_data(PdeKind::Bilinear);
  const ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  const StateField y = solve_state(PdeKind::Bilinear, m, unit_kappa(m), u, d);

  const SparseOperator A = assemble_stiffness(m, unit_kappa(m));
  const SparseOperator M = assemble_mass_p1(m);
  const Eigen::VectorXd rhs =
      restrict_interior(m, M * interpolate_nodes(m, d.b));
  const Eigen::VectorXd ref = extend_zero(m, solve_spd(A, rhs));
  EXPECT_NEAR((y.values - ref).cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(SolveState, BoundaryTraceExactlyZero) {
  const Mesh m = build_mesh(10);
  for (PdeKind kind : {PdeKind::AffineLinear, PdeKind::Bilinear}) {
    const ProblemData d = test_data(kind);
    const ControlField u = random_control(m, std::max(0.0, d.lower), d.upper, 3);
    const StateField y = solve_state(kind, m, unit_kappa(m), u, d);
    for (int k = 0; k < m.node_count(); ++k)
      if (m.boundary_mask[k]) EXPECT_EQ(y.values[k], 0.0);
  }
}

// Maximum-principle spot check: a larger reaction coefficient damps the
// state for a nonnegative source.
TEST(SolveState, BilinearMonotoneDamping) {
  const Mesh m = build_mesh(8);
  ProblemData d = test_data(PdeKind::Bilinear);
  d.b = [](double, double) { return 1.0; };
  const SparseOperator M = assemble_mass_p1(m);
  const ControlField u1{Eigen::VectorXd::Constant(m.cell_count(), 0.2)};
  const ControlField u2{Eigen::VectorXd::Constant(m.cell_count(), 1.0)};
  const StateField y1 = solve_state(PdeKind::Bilinear, m, unit_kappa(m), u1, d);
  const StateField y2 = solve_state(PdeKind::Bilinear, m, unit_kappa(m), u2, d);
  const double n1 = std::sqrt(y1.values.dot(M * y1.values));
  const double n2 = std::sqrt(y2.values.dot(M * y2.values));
  EXPECT_LE(n2, n1 + 1e-14);
}

TEST(Objective, ZeroTargetZeroControlAffine) {
  const Mesh m = build_mesh(8);
  ProblemData d = test_data(PdeKind::AffineLinear);
  d.y_d = [](double, double) { return 0.0; };
  const ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  EXPECT_EQ(objective_sample(PdeKind::AffineLinear, m, unit_kappa(m), u, d), 0.0);
}

TEST(Objective, AlwaysNonnegative) {
  const Mesh m = build_mesh(6);
  for (PdeKind kind : {PdeKind::AffineLinear, PdeKind::Bilinear}) {
    const ProblemData d = test_data(kind);
    const ControlField u = random_control(m, std::max(0.0, d.lower), d.upper, 17);
    EXPECT_GE(objective_sample(kind, m, unit_kappa(m), u, d), 0.0);
  }
}

TEST(Gradient, StationaryAtTargetState) {
  const Mesh m = build_mesh(8);
  ProblemData d = test_data(PdeKind::AffineLinear);
  d.y_d = [](double, double) { return 0.0; };  // state of u = 0
  const ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  const ControlField g =
      gradient_sample(PdeKind::AffineLinear, m, unit_kappa(m), u, d);
  EXPECT_EQ(g.values.cwiseAbs().maxCoeff(), 0.0);
}

// Central finite-difference oracle over a logarithmic step sweep; the
// adjoint gradient must match the best step to 1e-6 relative.
double fd_relative_mismatch(PdeKind kind, const Mesh& m,
                            const Eigen::VectorXd& kappa,
                            const ControlField& u, const ControlField& du,
                            const ProblemData& d) {
  ControlField g = gradient_sample(kind, m, kappa, u, d);
  const double directional = m.cell_area * g.values.dot(du.values);
  double best = 1e300;
  for (double h : {1e-3, 3e-4, 1e-4, 3e-5, 1e-5, 3e-6, 1e-6}) {
    const ControlField up{u.values + h * du.values};
    const ControlField dn{u.values - h * du.values};
    const double fd = (objective_sample(kind, m, kappa, up, d) -
                       objective_sample(kind, m, kappa, dn, d)) /
                      (2.0 * h);
    best = std::min(best, std::abs(fd - directional) / std::abs(directional));
  }
  return best;
}

TEST(Gradient, FiniteDifferenceAffine) {
  const Mesh m = build_mesh(16);
  const ProblemData d = test_data(PdeKind::AffineLinear);
  const KLFieldSpec spec = default_kl_spec(10, 1.0, 0.25, 0.1);
  const Eigen::VectorXd kappa =
      evaluate_kappa(spec, iid_samples(spec, 1, 2).samples[0], m);
  const ControlField u = random_control(m, -0.8, 0.8, 5);
  const ControlField du = random_control(m, -1.0, 1.0, 6);
  EXPECT_LE(fd_relative_mismatch(PdeKind::AffineLinear, m, kappa, u, du, d), 1e-6);
}

TEST(Gradient, FiniteDifferenceBilinear) {
  const Mesh m = build_mesh(16);
  const ProblemData d = test_data(PdeKind::Bilinear);
  const KLFieldSpec spec = default_kl_spec(10, 1.0, 0.25, 0.1);
  const Eigen::VectorXd kappa =
      evaluate_kappa(spec, iid_samples(spec, 1, 3).samples[0], m);
  const ControlField u = random_control(m, 0.2, 0.8, 7);
  const ControlField du = random_control(m, -1.0, 1.0, 8);
  EXPECT_LE(fd_relative_mismatch(PdeKind::Bilinear, m, kappa, u, du, d), 1e-6);
}

// With y_d = 0 and b >= 0 both state and adjoint are nonnegative, so the
// bilinear gradient -p*y is entrywise nonpositive.
TEST(Gradient, BilinearSignPattern) {
  const Mesh m = build_mesh(8);
  ProblemData d = test_data(PdeKind::Bilinear);
  d.y_d = [](double, double) { return 0.0; };
  d.b = [](double, double) { return 1.0; };
  const ControlField u{Eigen::VectorXd::Constant(m.cell_count(), 0.5)};
  const ControlField g =
      gradient_sample(PdeKind::Bilinear, m, unit_kappa(m), u, d);
  // the adjoint solves (A+R)p = M y with y >= 0, so p >= 0 and g <= 0
  EXPECT_LE(g.values.maxCoeff(), 1e-14);
}

TEST(SolveState, AffineStateIsLinearInControl) {
  const Mesh m = build_mesh(10);
  const ProblemData d = test_data(PdeKind::AffineLinear);
  const ControlField u1 = random_control(m, -1.0, 1.0, 21);
  const ControlField u2 = random_control(m, -1.0, 1.0, 22);
  const double a = 0.7, b = -0.4;
  const ControlField mix{a * u1.values + b * u2.values};
  const StateField y1 = solve_state(PdeKind::AffineLinear, m, unit_kappa(m), u1, d);
  const StateField y2 = solve_state(PdeKind::AffineLinear, m, unit_kappa(m), u2, d);
  const StateField ym = solve_state(PdeKind::AffineLinear, m, unit_kappa(m), mix, d);
  const Eigen::VectorXd lin = a * y1.values + b * y2.values;
  EXPECT_LE((ym.values - lin).norm(), 1e-12 * std::max(1.0, lin.norm()));
}

TEST(Objective, ConvexAlongSegmentsAffine) {
  const Mesh m = build_mesh(8);
  const ProblemData d = test_data(PdeKind::AffineLinear);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const ControlField u1 = random_control(m, -1.0, 1.0, rng());
    const ControlField u2 = random_control(m, -1.0, 1.0, rng());
    const ControlField mid{0.5 * (u1.values + u2.values)};
    const double jm =
        objective_sample(PdeKind::AffineLinear, m, unit_kappa(m), mid, d);
    const double j1 =
        objective_sample(PdeKind::AffineLinear, m, unit_kappa(m), u1, d);
    const double j2 =
        objective_sample(PdeKind::AffineLinear, m, unit_kappa(m), u2, d);
    EXPECT_LE(jm, 0.5 * (j1 + j2) + 1e-12);
  }
}

TEST(SolveState, RejectsNegativeBilinearControl) {
  const Mesh m = build_mesh(4);
  const ProblemData d = test_data(PdeKind::Bilinear);
  ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  u.values[0] = -0.5;
  EXPECT_THROW(solve_state(PdeKind::Bilinear, m, unit_kappa(m), u, d), ModelError);
}

}  // namespace
}  // namespace saacg

#include <gtest/gtest.h>

#include <cmath>

#include "saacg/fem.hpp"
#include "saacg/mesh.hpp"

namespace saacg {
namespace {

TEST(Mesh, SmallestMesh) {
  const Mesh m = build_mesh(1);
  EXPECT_EQ(m.node_count(), 4);
  EXPECT_EQ(m.cell_count(), 2);
  for (char b : m.boundary_mask) EXPECT_TRUE(b);
  EXPECT_EQ(m.interior_count(), 0);
}

TEST(Mesh, CountsN2) {
  const Mesh m = build_mesh(2);
  EXPECT_EQ(m.node_count(), 9);
  EXPECT_EQ(m.cell_count(), 8);
  ASSERT_EQ(m.interior_count(), 1);
  const auto& p = m.nodes[m.interior_nodes[0]];
  EXPECT_DOUBLE_EQ(p.x(), 0.5);
  EXPECT_DOUBLE_EQ(p.y(), 0.5);
}

TEST(Mesh, CountsN64) {
  const Mesh m = build_mesh(64);
  EXPECT_EQ(m.node_count(), 4225);
  EXPECT_EQ(m.cell_count(), 8192);
}

TEST(Mesh, AllCellsCounterclockwise) {
  const Mesh m = build_mesh(5);
  for (int t = 0; t < m.cell_count(); ++t) {
    EXPECT_GT(signed_area(m, t), 0.0);
    EXPECT_NEAR(signed_area(m, t), m.cell_area, 1e-16);
  }
}

TEST(Mesh, BoundaryFlagsMatchCoordinates) {
  const Mesh m = build_mesh(7);
  for (int k = 0; k < m.node_count(); ++k) {
    const bool on_bd = m.nodes[k].x() == 0.0 || m.nodes[k].x() == 1.0 ||
                       m.nodes[k].y() == 0.0 || m.nodes[k].y() == 1.0;
    EXPECT_EQ(static_cast<bool>(m.boundary_mask[k]), on_bd);
  }
}

TEST(Mesh, RejectsZeroCells) { EXPECT_THROW(build_mesh(0), InvalidArgument); }

TEST(Stiffness, CenterNodeDiagonalIsFour) {
  const Mesh m = build_mesh(2);
  const Eigen::VectorXd kappa = Eigen::VectorXd::Ones(m.cell_count());
  const SparseOperator A = assemble_stiffness(m, kappa);
  ASSERT_EQ(A.rows(), 1);
  EXPECT_NEAR(A.coeff(0, 0), 4.0, 1e-14);
}

TEST(Stiffness, ScalesLinearlyInKappa) {
  const Mesh m = build_mesh(6);
  Eigen::VectorXd kappa(m.cell_count());
  for (int t = 0; t < m.cell_count(); ++t) kappa[t] = 0.5 + 0.1 * (t % 7);
  const SparseOperator A1 = assemble_stiffness(m, kappa);
  const SparseOperator A2 = assemble_stiffness(m, Eigen::VectorXd(3.0 * kappa));
  const SparseOperator diff = (A2 - SparseOperator(3.0 * A1)).pruned();
  EXPECT_NEAR(diff.coeffs().size() ? diff.coeffs().cwiseAbs().maxCoeff() : 0.0,
              0.0, 1e-13);
}

TEST(Stiffness, SymmetricToMachinePrecision) {
  const Mesh m = build_mesh(9);
  Eigen::VectorXd kappa(m.cell_count());
  for (int t = 0; t < m.cell_count(); ++t) kappa[t] = 1.0 + 0.3 * std::sin(1.0 + t);
  const SparseOperator A = assemble_stiffness(m, kappa);
  const SparseOperator asym = SparseOperator(A - SparseOperator(A.transpose()));
  const double max_entry = Eigen::VectorXd(A.coeffs()).cwiseAbs().maxCoeff();
  double max_asym = 0.0;
  for (int k = 0; k < asym.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(asym, k); it; ++it)
      max_asym = std::max(max_asym, std::abs(it.value()));
  EXPECT_LE(max_asym, 1e-14 * max_entry);
}

TEST(Stiffness, RejectsNonpositiveCoefficient) {
  const Mesh m = build_mesh(3);
  Eigen::VectorXd kappa = Eigen::VectorXd::Ones(m.cell_count());
  kappa[4] = 0.0;
  EXPECT_THROW(assemble_stiffness(m, kappa), ModelError);
}

TEST(Mass, RowSumsGiveUnitDomainArea) {
  const Mesh m = build_mesh(11);
  const SparseOperator M = assemble_mass_p1(m);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m.node_count());
  EXPECT_NEAR(ones.dot(M * ones), 1.0, 1e-14);
}

TEST(Mixed, ConstantControlEqualsP1LoadOfOne) {
  const Mesh m = build_mesh(5);
  const SparseOperator B = assemble_mixed_p0_p1(m);
  const SparseOperator M = assemble_mass_p1(m);
  const Eigen::VectorXd lhs = B * Eigen::VectorXd::Ones(m.cell_count());
  const Eigen::VectorXd rhs = M * Eigen::VectorXd::Ones(m.node_count());
  EXPECT_NEAR((lhs - rhs).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(Reaction, ZeroControlIsZeroOperator) {
  const Mesh m = build_mesh(4);
  const ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  const SparseOperator R = assemble_reaction(m, u);
  EXPECT_EQ(R.nonZeros(), 0);
}

TEST(Reaction, RejectsNegativeControl) {
  const Mesh m = build_mesh(4);
  ControlField u{Eigen::VectorXd::Zero(m.cell_count())};
  u.values[3] = -0.1;
  EXPECT_THROW(assemble_reaction(m, u), ModelError);
}

TEST(SolveSpd, ZeroRhsGivesZero) {
  const Mesh m = build_mesh(8);
  const SparseOperator A =
      assemble_stiffness(m, Eigen::VectorXd::Ones(m.cell_count()));
  const Eigen::VectorXd x = solve_spd(A, Eigen::VectorXd::Zero(A.rows()));
  EXPECT_EQ(x.cwiseAbs().maxCoeff(), 0.0);
}

TEST(SolveSpd, DiagonalSystem) {
  SparseOperator A(3, 3);
  A.insert(0, 0) = 2.0;
  A.insert(1, 1) = 4.0;
  A.insert(2, 2) = 8.0;
  A.makeCompressed();
  Eigen::VectorXd rhs(3);
  rhs << 2.0, 2.0, 2.0;
  const Eigen::VectorXd x = solve_spd(A, rhs);
  EXPECT_NEAR(x[0], 1.0, 1e-14);
  EXPECT_NEAR(x[1], 0.5, 1e-14);
  EXPECT_NEAR(x[2], 0.25, 1e-14);
}

// Manufactured Poisson problem: y = sin(pi x) sin(pi y), f = 2 pi^2 y,
// kappa = 1. Discrete L2 error measured with the edge-midpoint rule.
double manufactured_l2_error(int n) {
  const double pi = std::acos(-1.0);
  auto exact = [pi](double x, double y) {
    return std::sin(pi * x) * std::sin(pi * y);
  };
  const Mesh m = build_mesh(n);
  const SparseOperator A =
      assemble_stiffness(m, Eigen::VectorXd::Ones(m.cell_count()));
  const SparseOperator M = assemble_mass_p1(m);
  Eigen::VectorXd f(m.node_count());
  for (int k = 0; k < m.node_count(); ++k)
    f[k] = 2.0 * pi * pi * exact(m.nodes[k].x(), m.nodes[k].y());
  const Eigen::VectorXd y_int = solve_spd(A, restrict_interior(m, M * f));
  const Eigen::VectorXd y = extend_zero(m, y_int);

  double err2 = 0.0;
  for (int t = 0; t < m.cell_count(); ++t) {
    const auto& cl = m.cells[t];
    for (int e = 0; e < 3; ++e) {
      const int a = cl[e], b = cl[(e + 1) % 3];
      const Eigen::Vector2d mid = 0.5 * (m.nodes[a] + m.nodes[b]);
      const double yh = 0.5 * (y[a] + y[b]);
      const double d = yh - exact(mid.x(), mid.y());
      err2 += m.cell_area / 3.0 * d * d;
    }
  }
  return std::sqrt(err2);
}

TEST(SolveSpd, ManufacturedSolutionSecondOrder) {
  double prev = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int n = 8 << i;
    const double err = manufactured_l2_error(n);
    if (i > 0) {
      const double ratio = prev / err;
      EXPECT_GE(ratio, 3.6) << "n=" << n;
      EXPECT_LE(ratio, 4.4) << "n=" << n;
    }
    prev = err;
  }
}

TEST(SolveSpd, ResidualContract) {
  const Mesh m = build_mesh(16);
  const SparseOperator A =
      assemble_stiffness(m, Eigen::VectorXd::Ones(m.cell_count()));
  Eigen::VectorXd rhs(A.rows());
  for (int i = 0; i < rhs.size(); ++i) rhs[i] = std::cos(0.1 * i);
  const Eigen::VectorXd x = solve_spd(A, rhs);
  EXPECT_LE((A * x - rhs).norm() / rhs.norm(), 1e-12);
}

}  // namespace
}  // namespace saacg

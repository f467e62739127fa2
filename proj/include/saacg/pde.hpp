#pragma once

#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "saacg/common.hpp"
#include "saacg/fem.hpp"
#include "saacg/mesh.hpp"

namespace saacg {

/// How the control enters the elliptic PDE.
enum class PdeKind {
  AffineLinear,  // control is the right-hand-side source, b = 0
  Bilinear,      // control is a reaction coefficient, source b from data
};

/// Desired state, source, L1 weight and box bounds of one problem instance.
struct ProblemData {
  std::function<double(double, double)> y_d;
  std::function<double(double, double)> b;
  double beta = 0.0;
  double lower = -1.0;
  double upper = 1.0;

  void validate(PdeKind kind) const {
    require(beta >= 0.0, "ProblemData: beta must be nonnegative");
    require(lower <= upper, "ProblemData: bounds out of order");
    if (kind == PdeKind::AffineLinear)
      require(lower <= 0.0 && 0.0 <= upper,
              "ProblemData: affine-linear bounds must bracket 0");
    else
      require(lower >= 0.0, "ProblemData: bilinear lower bound must be >= 0");
  }
};

/// Benchmark problem data for the two models; used as CLI defaults.
inline ProblemData reference_problem_data(PdeKind kind) {
  ProblemData d;
  const double pi = std::acos(-1.0);
  d.y_d = [pi](double x1, double x2) {
    return std::sin(2 * pi * x1) * std::sin(2 * pi * x2) * std::exp(2 * x1) / 6.0;
  };
  d.b = [pi](double x1, double x2) {
    return 10.0 * std::sin(2 * pi * x1 - x2) * std::cos(2 * pi * x2);
  };
  if (kind == PdeKind::AffineLinear) {
    d.beta = 0.0075;
    d.lower = -1.0;
    d.upper = 1.0;
  } else {
    d.beta = 0.00055;
    d.lower = 0.0;
    d.upper = 1.0;
  }
  return d;
}

/// Nodal interpolation of a scalar function.
inline Eigen::VectorXd interpolate_nodes(
    const Mesh& mesh, const std::function<double(double, double)>& f) {
  Eigen::VectorXd v(mesh.node_count());
  for (int k = 0; k < mesh.node_count(); ++k)
    v[k] = f(mesh.nodes[k].x(), mesh.nodes[k].y());
  return v;
}

namespace detail {

inline Eigen::VectorXd state_rhs_interior(PdeKind kind, const Mesh& mesh,
                                          const ControlField& u,
                                          const ProblemData& data) {
  if (kind == PdeKind::AffineLinear) {
    const SparseOperator B = assemble_mixed_p0_p1(mesh);
    return restrict_interior(mesh, B * u.values);
  }
  const SparseOperator M = assemble_mass_p1(mesh);
  return restrict_interior(mesh, M * interpolate_nodes(mesh, data.b));
}

inline SparseOperator state_operator(PdeKind kind, const Mesh& mesh,
                                     const Eigen::VectorXd& kappa_cell,
                                     const ControlField& u) {
  SparseOperator A = assemble_stiffness(mesh, kappa_cell);
  if (kind == PdeKind::Bilinear) A += assemble_reaction(mesh, u);
  return A;
}

}  // namespace detail

/// Solves the state equation for one parameter realization.
inline StateField solve_state(PdeKind kind, const Mesh& mesh,
                              const Eigen::VectorXd& kappa_cell,
                              const ControlField& u, const ProblemData& data) {
  require(u.values.size() == mesh.cell_count(), "solve_state: control size mismatch");
  const SparseOperator A = detail::state_operator(kind, mesh, kappa_cell, u);
  const Eigen::VectorXd rhs = detail::state_rhs_interior(kind, mesh, u, data);
  return StateField{extend_zero(mesh, solve_spd(A, rhs))};
}

/// Tracking misfit (1/2) ||y(u) - y_d||^2 in the discrete L2 norm.
inline double objective_sample(PdeKind kind, const Mesh& mesh,
                               const Eigen::VectorXd& kappa_cell,
                               const ControlField& u, const ProblemData& data) {
  const StateField y = solve_state(kind, mesh, kappa_cell, u, data);
  const Eigen::VectorXd diff = y.values - interpolate_nodes(mesh, data.y_d);
  const SparseOperator M = assemble_mass_p1(mesh);
  return 0.5 * diff.dot(M * diff);
}

/// Exact gradient of the discrete per-sample objective with respect to the
/// per-cell control, expressed as an L2 function (per-cell averages).
///
/// Affine-linear: solve the adjoint A p = M (y - y_d); the gradient on a
/// cell is the cell average of p. Bilinear: solve (A + R_u) p = M (y - y_d);
/// the gradient is minus the cell average of p*y, with the P1 product
/// integrated exactly.
inline ControlField gradient_sample(PdeKind kind, const Mesh& mesh,
                                    const Eigen::VectorXd& kappa_cell,
                                    const ControlField& u,
                                    const ProblemData& data) {
  const SparseOperator A = detail::state_operator(kind, mesh, kappa_cell, u);
  const SpdSolver solver(A);
  const Eigen::VectorXd rhs = detail::state_rhs_interior(kind, mesh, u, data);
  const Eigen::VectorXd y_full = extend_zero(mesh, solver.solve(rhs));
  const SparseOperator M = assemble_mass_p1(mesh);
  const Eigen::VectorXd diff = y_full - interpolate_nodes(mesh, data.y_d);
  const Eigen::VectorXd p_full =
      extend_zero(mesh, solver.solve(restrict_interior(mesh, M * diff)));

  ControlField g;
  g.values.resize(mesh.cell_count());
  if (kind == PdeKind::AffineLinear) {
    for (int t = 0; t < mesh.cell_count(); ++t) {
      const auto& cl = mesh.cells[t];
      g.values[t] = (p_full[cl[0]] + p_full[cl[1]] + p_full[cl[2]]) / 3.0;
    }
  } else {
    // int_T p y = (|T|/12) * (sum_i p_i y_i + (sum_i p_i)(sum_i y_i))
    for (int t = 0; t < mesh.cell_count(); ++t) {
      const auto& cl = mesh.cells[t];
      double dot = 0.0, sp = 0.0, sy = 0.0;
      for (int i = 0; i < 3; ++i) {
        dot += p_full[cl[i]] * y_full[cl[i]];
        sp += p_full[cl[i]];
        sy += y_full[cl[i]];
      }
      g.values[t] = -(dot + sp * sy) / 12.0;
    }
  }
  return g;
}

}  // namespace saacg

#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "saacg/common.hpp"
#include "saacg/mesh.hpp"

namespace saacg {

using SparseOperator = Eigen::SparseMatrix<double>;

namespace detail {

/// Gradients of the three P1 basis functions on a triangle, times area.
/// grad phi_i = (b_i, c_i) / (2A) with the usual cyclic edge coefficients.
inline void p1_coefficients(const Mesh& m, int cell, double b[3], double c[3],
                            double& area) {
  const auto& cl = m.cells[cell];
  const auto& p0 = m.nodes[cl[0]];
  const auto& p1 = m.nodes[cl[1]];
  const auto& p2 = m.nodes[cl[2]];
  b[0] = p1.y() - p2.y();
  b[1] = p2.y() - p0.y();
  b[2] = p0.y() - p1.y();
  c[0] = p2.x() - p1.x();
  c[1] = p0.x() - p2.x();
  c[2] = p1.x() - p0.x();
  area = signed_area(m, cell);
}

}  // namespace detail

/// Stiffness matrix sum_T kappa_T int_T grad phi_i . grad phi_j, reduced to
/// interior nodes (Dirichlet rows/columns eliminated).
inline SparseOperator assemble_stiffness(const Mesh& mesh,
                                         const Eigen::VectorXd& kappa_cell) {
  require(kappa_cell.size() == mesh.cell_count(),
          "assemble_stiffness: kappa size mismatch");
  if ((kappa_cell.array() <= 0.0).any())
    throw ModelError("assemble_stiffness: diffusion coefficient must be positive");
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(mesh.cell_count()) * 9);
  double b[3], c[3], area;
  for (int t = 0; t < mesh.cell_count(); ++t) {
    detail::p1_coefficients(mesh, t, b, c, area);
    const double w = kappa_cell[t] / (4.0 * area);
    const auto& cl = mesh.cells[t];
    for (int i = 0; i < 3; ++i) {
      const int ri = mesh.interior_index[cl[i]];
      if (ri < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const int rj = mesh.interior_index[cl[j]];
        if (rj < 0) continue;
        trips.emplace_back(ri, rj, w * (b[i] * b[j] + c[i] * c[j]));
      }
    }
  }
  SparseOperator A(mesh.interior_count(), mesh.interior_count());
  A.setFromTriplets(trips.begin(), trips.end());
  return A;
}

/// P1 mass matrix over all nodes (no boundary elimination); used for the
/// tracking objective and adjoint right-hand sides.
inline SparseOperator assemble_mass_p1(const Mesh& mesh) {
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(mesh.cell_count()) * 9);
  for (int t = 0; t < mesh.cell_count(); ++t) {
    const double a12 = signed_area(mesh, t) / 12.0;
    const auto& cl = mesh.cells[t];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        trips.emplace_back(cl[i], cl[j], a12 * (i == j ? 2.0 : 1.0));
  }
  SparseOperator M(mesh.node_count(), mesh.node_count());
  M.setFromTriplets(trips.begin(), trips.end());
  return M;
}

/// Mixed P0-to-P1 mass: column `cell` holds int_cell phi_i = area/3 at the
/// three vertices. Maps a per-cell control to a P1 load vector (all nodes).
inline SparseOperator assemble_mixed_p0_p1(const Mesh& mesh) {
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(mesh.cell_count()) * 3);
  for (int t = 0; t < mesh.cell_count(); ++t) {
    const double a3 = signed_area(mesh, t) / 3.0;
    const auto& cl = mesh.cells[t];
    for (int i = 0; i < 3; ++i) trips.emplace_back(cl[i], t, a3);
  }
  SparseOperator B(mesh.node_count(), mesh.cell_count());
  B.setFromTriplets(trips.begin(), trips.end());
  return B;
}

/// Reaction matrix sum_T u_T int_T phi_i phi_j over interior nodes.
/// Bilinear-model admissibility requires u >= 0 cellwise.
inline SparseOperator assemble_reaction(const Mesh& mesh,
                                        const ControlField& u) {
  require(u.values.size() == mesh.cell_count(),
          "assemble_reaction: control size mismatch");
  if ((u.values.array() < 0.0).any())
    throw ModelError("assemble_reaction: bilinear control must be nonnegative");
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(mesh.cell_count()) * 9);
  for (int t = 0; t < mesh.cell_count(); ++t) {
    const double w = u.values[t] * signed_area(mesh, t) / 12.0;
    if (w == 0.0) continue;
    const auto& cl = mesh.cells[t];
    for (int i = 0; i < 3; ++i) {
      const int ri = mesh.interior_index[cl[i]];
      if (ri < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const int rj = mesh.interior_index[cl[j]];
        if (rj < 0) continue;
        trips.emplace_back(ri, rj, w * (i == j ? 2.0 : 1.0));
      }
    }
  }
  SparseOperator R(mesh.interior_count(), mesh.interior_count());
  R.setFromTriplets(trips.begin(), trips.end());
  return R;
}

/// Sparse Cholesky factorization of an SPD operator, reusable across
/// right-hand sides. Falls back to conjugate gradients if the
/// factorization fails.
class SpdSolver {
 public:
  explicit SpdSolver(const SparseOperator& A) : matrix_(A) {
    llt_ = std::make_unique<Eigen::SimplicialLLT<SparseOperator>>();
    llt_->compute(matrix_);
    if (llt_->info() != Eigen::Success) llt_.reset();
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd x;
    if (llt_) {
      x = llt_->solve(rhs);
    } else {
      Eigen::ConjugateGradient<SparseOperator, Eigen::Lower | Eigen::Upper> cg;
      cg.setTolerance(1e-14);
      cg.setMaxIterations(10 * matrix_.rows());
      cg.compute(matrix_);
      x = cg.solve(rhs);
      if (cg.info() != Eigen::Success)
        throw SolverError("SpdSolver: CG did not converge, residual " +
                          std::to_string(cg.error()));
    }
    const double rn = rhs.norm();
    if (rn > 0.0) {
      const double rel = (matrix_ * x - rhs).norm() / rn;
      if (rel > 1e-12)
        throw SolverError("SpdSolver: relative residual " + std::to_string(rel));
    }
    return x;
  }

 private:
  SparseOperator matrix_;
  std::unique_ptr<Eigen::SimplicialLLT<SparseOperator>> llt_;
};

inline Eigen::VectorXd solve_spd(const SparseOperator& A,
                                 const Eigen::VectorXd& rhs) {
  return SpdSolver(A).solve(rhs);
}

/// Restrict a full-node vector to interior nodes.
inline Eigen::VectorXd restrict_interior(const Mesh& mesh,
                                         const Eigen::VectorXd& full) {
  Eigen::VectorXd r(mesh.interior_count());
  for (int k = 0; k < mesh.interior_count(); ++k)
    r[k] = full[mesh.interior_nodes[k]];
  return r;
}

/// Extend an interior vector to all nodes with zero boundary trace.
inline Eigen::VectorXd extend_zero(const Mesh& mesh,
                                   const Eigen::VectorXd& interior) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(mesh.node_count());
  for (int k = 0; k < mesh.interior_count(); ++k)
    full[mesh.interior_nodes[k]] = interior[k];
  return full;
}

}  // namespace saacg

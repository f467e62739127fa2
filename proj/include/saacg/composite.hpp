#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "saacg/common.hpp"
#include "saacg/fem.hpp"
#include "saacg/kl_field.hpp"
#include "saacg/mesh.hpp"
#include "saacg/parallel.hpp"
#include "saacg/pde.hpp"
#include "saacg/sampling.hpp"

namespace saacg {

/// Gap functional value together with the witnessing LMO point.
struct GapCertificate {
  double gap = 0.0;
  double inner_term = 0.0;  // <grad, u - v>_{L2}
  double psi_diff = 0.0;    // psi(u) - psi(v)
  ControlField minimizer;   // the LMO point v
};

/// Per-cell linear minimization oracle: minimizes g*v + beta*|v| over
/// [lower, upper]. The objective is piecewise linear, so one of {lower, 0,
/// upper} is optimal; ties prefer 0, then lower, then upper.
inline ControlField lmo(const ControlField& grad, double beta, double lower,
                        double upper) {
  require(lower <= 0.0 && 0.0 <= upper, "lmo: bounds must bracket 0");
  require(beta >= 0.0, "lmo: beta must be nonnegative");
  ControlField v;
  v.values.resize(grad.values.size());
  for (Eigen::Index i = 0; i < grad.values.size(); ++i) {
    const double g = grad.values[i];
    double best_score = 0.0;  // candidate v = 0
    double best_v = 0.0;
    const double score_l = g * lower + beta * std::abs(lower);
    if (score_l < best_score) {
      best_score = score_l;
      best_v = lower;
    }
    const double score_u = g * upper + beta * std::abs(upper);
    if (score_u < best_score) {
      best_score = score_u;
      best_v = upper;
    }
    v.values[i] = best_v;
  }
  return v;
}

/// One SAA instance: PDE kind, problem data, random field, sample set and
/// mesh, with per-sample operators precomputed. For the affine-linear model
/// the per-sample stiffness factorizations are cached once, so repeated
/// objective/gradient evaluations cost only triangular solves.
class CompositeProblem {
 public:
  CompositeProblem(PdeKind kind, ProblemData data, KLFieldSpec spec,
                   SampleSet samples, Mesh mesh)
      : kind_(kind),
        data_(std::move(data)),
        spec_(std::move(spec)),
        samples_(std::move(samples)),
        mesh_(std::move(mesh)) {
    data_.validate(kind_);
    require(samples_.M == spec_.M, "CompositeProblem: sample dimension mismatch");
    require(samples_.count() >= 1, "CompositeProblem: empty sample set");

    mass_full_ = assemble_mass_p1(mesh_);
    mixed_ = assemble_mixed_p0_p1(mesh_);
    yd_nodes_ = interpolate_nodes(mesh_, data_.y_d);
    if (kind_ == PdeKind::Bilinear)
      b_rhs_int_ = restrict_interior(mesh_, mass_full_ * interpolate_nodes(mesh_, data_.b));

    const int N = samples_.count();
    kappa_.resize(N);
    stiffness_.resize(N);
    if (kind_ == PdeKind::AffineLinear) factors_.resize(N);
    parallel_for(N, [&](std::size_t i) {
      kappa_[i] = evaluate_kappa(spec_, samples_.samples[i], mesh_);
      stiffness_[i] = assemble_stiffness(mesh_, kappa_[i]);
      if (kind_ == PdeKind::AffineLinear)
        factors_[i] = std::make_shared<SpdSolver>(stiffness_[i]);
    });
  }

  PdeKind kind() const { return kind_; }
  const ProblemData& data() const { return data_; }
  const KLFieldSpec& field_spec() const { return spec_; }
  const SampleSet& samples() const { return samples_; }
  const Mesh& mesh() const { return mesh_; }
  int sample_count() const { return samples_.count(); }

  bool feasible(const ControlField& u) const {
    if (u.values.size() != mesh_.cell_count()) return false;
    return (u.values.array() >= data_.lower).all() &&
           (u.values.array() <= data_.upper).all();
  }

  /// Composite L1 term: beta * sum_cells area * |u_cell|.
  double psi(const ControlField& u) const {
    return data_.beta * mesh_.cell_area * u.values.cwiseAbs().sum();
  }

  /// Smooth SAA term (1/N) sum_i J(y_i(u)); no indicator, no L1 term.
  double smooth_value(const ControlField& u) const {
    check_control(u);
    const int N = sample_count();
    std::vector<double> vals(N);
    parallel_for(N, [&](std::size_t i) { vals[i] = sample_objective(i, u); });
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += vals[i];
    return sum / N;
  }

  /// Full SAA objective including the composite term; +inf outside the box.
  double objective(const ControlField& u) const {
    check_control(u);
    if (!feasible(u)) return std::numeric_limits<double>::infinity();
    return smooth_value(u) + psi(u);
  }

  /// Gradient of the smooth SAA term as an L2 function (per-cell averages).
  ControlField gradient(const ControlField& u) const {
    check_control(u);
    const int N = sample_count();
    std::vector<ControlField> grads(N);
    parallel_for(N, [&](std::size_t i) { grads[i] = sample_gradient(i, u); });
    ControlField g;
    g.values = Eigen::VectorXd::Zero(mesh_.cell_count());
    for (int i = 0; i < N; ++i) g.values += grads[i].values;
    g.values /= N;
    return g;
  }

  struct SmoothEval {
    double value = 0.0;  // smooth SAA term only
    ControlField grad;
  };

  /// Smooth value and gradient in one pass; each sample's state solve is
  /// shared between the two.
  SmoothEval evaluate_smooth(const ControlField& u) const {
    check_control(u);
    const int N = sample_count();
    std::vector<double> vals(N);
    std::vector<ControlField> grads(N);
    parallel_for(N, [&](std::size_t i) {
      std::shared_ptr<SpdSolver> factor;
      const Eigen::VectorXd y_full =
          extend_zero(mesh_, solve_sample_state(static_cast<int>(i), u, &factor));
      const Eigen::VectorXd diff = y_full - yd_nodes_;
      const Eigen::VectorXd m_diff = mass_full_ * diff;
      vals[i] = 0.5 * diff.dot(m_diff);
      const Eigen::VectorXd p_full =
          extend_zero(mesh_, factor->solve(restrict_interior(mesh_, m_diff)));
      grads[i] = cell_gradient(y_full, p_full);
    });
    SmoothEval ev;
    ev.grad.values = Eigen::VectorXd::Zero(mesh_.cell_count());
    for (int i = 0; i < N; ++i) {
      ev.value += vals[i];
      ev.grad.values += grads[i].values;
    }
    ev.value /= N;
    ev.grad.values /= N;
    return ev;
  }

  /// Gap certificate at u: v = lmo(grad), gap = <grad, u-v> + psi(u)-psi(v).
  GapCertificate gap(const ControlField& u) const {
    return gap_with_gradient(u, gradient(u));
  }

  GapCertificate gap_with_gradient(const ControlField& u,
                                   const ControlField& grad) const {
    GapCertificate cert;
    cert.minimizer = lmo(grad, data_.beta, data_.lower, data_.upper);
    cert.inner_term =
        mesh_.cell_area * grad.values.dot(u.values - cert.minimizer.values);
    cert.psi_diff = psi(u) - psi(cert.minimizer);
    cert.gap = cert.inner_term + cert.psi_diff;
    return cert;
  }

  /// L2 inner product of two control fields.
  double control_inner(const ControlField& a, const ControlField& b) const {
    return mesh_.cell_area * a.values.dot(b.values);
  }

  /// Curvature of the smooth term along direction d for the affine-linear
  /// model: a = (1/N) sum_i || y_i(d) ||_M^2, so that
  /// F(u + s d) = F(u) + s <grad(u), d> + (a/2) s^2 exactly.
  double direction_curvature(const ControlField& d) const {
    require(kind_ == PdeKind::AffineLinear,
            "direction_curvature: affine-linear model only");
    check_control(d);
    const Eigen::VectorXd rhs_int = restrict_interior(mesh_, mixed_ * d.values);
    const int N = sample_count();
    std::vector<double> vals(N);
    parallel_for(N, [&](std::size_t i) {
      const Eigen::VectorXd y = extend_zero(mesh_, factors_[i]->solve(rhs_int));
      vals[i] = y.dot(mass_full_ * y);
    });
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += vals[i];
    return sum / N;
  }

 private:
  void check_control(const ControlField& u) const {
    require(u.values.size() == mesh_.cell_count(),
            "CompositeProblem: control size mismatch");
  }

  Eigen::VectorXd solve_sample_state(int i, const ControlField& u,
                                     std::shared_ptr<SpdSolver>* factor_out) const {
    if (kind_ == PdeKind::AffineLinear) {
      if (factor_out) *factor_out = factors_[i];
      const Eigen::VectorXd rhs = restrict_interior(mesh_, mixed_ * u.values);
      return factors_[i]->solve(rhs);
    }
    SparseOperator A = stiffness_[i];
    A += assemble_reaction(mesh_, u);
    auto factor = std::make_shared<SpdSolver>(A);
    if (factor_out) *factor_out = factor;
    return factor->solve(b_rhs_int_);
  }

  double sample_objective(int i, const ControlField& u) const {
    const Eigen::VectorXd y = extend_zero(mesh_, solve_sample_state(i, u, nullptr));
    const Eigen::VectorXd diff = y - yd_nodes_;
    return 0.5 * diff.dot(mass_full_ * diff);
  }

  ControlField sample_gradient(int i, const ControlField& u) const {
    std::shared_ptr<SpdSolver> factor;
    const Eigen::VectorXd y_full =
        extend_zero(mesh_, solve_sample_state(i, u, &factor));
    const Eigen::VectorXd diff = y_full - yd_nodes_;
    const Eigen::VectorXd p_full = extend_zero(
        mesh_, factor->solve(restrict_interior(mesh_, mass_full_ * diff)));
    return cell_gradient(y_full, p_full);
  }

  ControlField cell_gradient(const Eigen::VectorXd& y_full,
                             const Eigen::VectorXd& p_full) const {
    ControlField g;
    g.values.resize(mesh_.cell_count());
    if (kind_ == PdeKind::AffineLinear) {
      for (int t = 0; t < mesh_.cell_count(); ++t) {
        const auto& cl = mesh_.cells[t];
        g.values[t] = (p_full[cl[0]] + p_full[cl[1]] + p_full[cl[2]]) / 3.0;
      }
    } else {
      for (int t = 0; t < mesh_.cell_count(); ++t) {
        const auto& cl = mesh_.cells[t];
        double dot = 0.0, sp = 0.0, sy = 0.0;
        for (int i3 = 0; i3 < 3; ++i3) {
          dot += p_full[cl[i3]] * y_full[cl[i3]];
          sp += p_full[cl[i3]];
          sy += y_full[cl[i3]];
        }
        g.values[t] = -(dot + sp * sy) / 12.0;
      }
    }
    return g;
  }

  PdeKind kind_;
  ProblemData data_;
  KLFieldSpec spec_;
  SampleSet samples_;
  Mesh mesh_;

  SparseOperator mass_full_;
  SparseOperator mixed_;
  Eigen::VectorXd yd_nodes_;
  Eigen::VectorXd b_rhs_int_;
  std::vector<Eigen::VectorXd> kappa_;
  std::vector<SparseOperator> stiffness_;
  std::vector<std::shared_ptr<SpdSolver>> factors_;  // affine-linear only
};

inline double saa_objective(const CompositeProblem& p, const ControlField& u) {
  return p.objective(u);
}

inline ControlField saa_gradient(const CompositeProblem& p, const ControlField& u) {
  return p.gradient(u);
}

inline GapCertificate gap(const CompositeProblem& p, const ControlField& u) {
  return p.gap(u);
}

}  // namespace saacg

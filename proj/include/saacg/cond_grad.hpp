#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "saacg/common.hpp"
#include "saacg/composite.hpp"

namespace saacg {

enum class LineSearch {
  Auto,    // Exact for the affine-linear model, Armijo for the bilinear one
  Exact,   // 1D search on the exactly-quadratic-plus-convex total
  Armijo,  // backtracking with c = 1e-4, shrink = 0.5, s0 = 1
};

struct SolverConfig {
  double gap_tol = 1e-10;
  int max_iters = 100;
  LineSearch line_search = LineSearch::Auto;
  double armijo_c = 1e-4;
  double armijo_shrink = 0.5;

  void validate() const {
    require(gap_tol > 0.0, "SolverConfig: gap_tol must be positive");
    require(max_iters >= 1, "SolverConfig: max_iters must be >= 1");
  }
};

enum class SolveStatus { GapMet, IterCap };

struct SolveTrace {
  std::vector<double> objectives;  // composite objective per recorded iterate
  std::vector<double> gaps;        // gap value per recorded iterate
  ControlField final_u;
  SolveStatus status = SolveStatus::IterCap;

  int iterations() const { return static_cast<int>(gaps.size()); }

  void save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("SolveTrace: cannot open " + path);
    out << "iteration,objective,gap\n";
    out.precision(17);
    for (std::size_t k = 0; k < gaps.size(); ++k)
      out << k << "," << objectives[k] << "," << gaps[k] << "\n";
  }
};

/// Thrown when backtracking cannot find any decrease; carries the partial
/// trace for diagnostics.
class StagnationError : public SolverError {
 public:
  StagnationError(const std::string& msg, SolveTrace trace)
      : SolverError(msg), trace(std::move(trace)) {}
  SolveTrace trace;
};

namespace detail {

/// Golden-section minimization of a convex function on [0,1], refined to an
/// interval of width 1e-12.
template <typename F>
double golden_section(F phi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = phi(x1), f2 = phi(x2);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = phi(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = phi(x2);
    }
  }
  double best_s = 0.5 * (lo + hi);
  double best_f = phi(best_s);
  for (double s : {0.0, 1.0}) {
    const double f = phi(s);
    if (f < best_f) {
      best_f = f;
      best_s = s;
    }
  }
  return best_s;
}

inline ControlField clamp_box(const ControlField& u, double lo, double hi) {
  ControlField r;
  r.values = u.values.cwiseMax(lo).cwiseMin(hi);
  return r;
}

}  // namespace detail

/// Exact step for the affine-linear model. Along u + s d the smooth SAA term
/// is the quadratic (a/2) s^2 + b s + const with a >= 0, and psi(u + s d) is
/// convex in s, so the total is convex on [0,1].
inline double exact_linesearch_quadratic(const CompositeProblem& p,
                                         const ControlField& u,
                                         const ControlField& d,
                                         double slope_hint = std::nan("")) {
  if (d.values.size() == 0 || d.values.isZero(0.0)) return 0.0;
  const double a = p.direction_curvature(d);
  if (a < -1e-12)
    throw ModelError("exact_linesearch_quadratic: negative curvature");
  const double b =
      std::isnan(slope_hint) ? p.control_inner(p.gradient(u), d) : slope_hint;
  const double beta = p.data().beta;
  const double area = p.mesh().cell_area;
  const auto& uv = u.values;
  const auto& dv = d.values;
  auto phi = [&](double s) {
    double l1 = 0.0;
    for (Eigen::Index i = 0; i < uv.size(); ++i) l1 += std::abs(uv[i] + s * dv[i]);
    return 0.5 * a * s * s + b * s + beta * area * l1;
  };
  return detail::golden_section(phi);
}

/// Conditional-gradient method on the discrete composite SAA problem,
/// stopping when the gap certificate falls below cfg.gap_tol.
inline SolveTrace solve(const CompositeProblem& p, const ControlField& u0,
                        const SolverConfig& cfg = {}) {
  cfg.validate();
  require(p.feasible(u0), "solve: infeasible starting control");

  LineSearch search = cfg.line_search;
  if (search == LineSearch::Auto)
    search = p.kind() == PdeKind::AffineLinear ? LineSearch::Exact
                                               : LineSearch::Armijo;
  if (search == LineSearch::Exact && p.kind() != PdeKind::AffineLinear)
    throw InvalidArgument("solve: exact line search requires the affine-linear model");

  SolveTrace trace;
  ControlField u = u0;
  const double lo = p.data().lower, hi = p.data().upper;

  for (int k = 0; k < cfg.max_iters; ++k) {
    const auto ev = p.evaluate_smooth(u);
    const GapCertificate cert = p.gap_with_gradient(u, ev.grad);
    const double obj = ev.value + p.psi(u);
    trace.objectives.push_back(obj);
    trace.gaps.push_back(cert.gap);
    if (cert.gap <= cfg.gap_tol) {
      trace.status = SolveStatus::GapMet;
      break;
    }
    if (k + 1 == cfg.max_iters) {
      trace.status = SolveStatus::IterCap;
      break;
    }

    ControlField d;
    d.values = cert.minimizer.values - u.values;

    double step = 0.0;
    if (search == LineSearch::Exact) {
      const double slope = p.control_inner(ev.grad, d);
      step = exact_linesearch_quadratic(p, u, d, slope);
      u = detail::clamp_box(ControlField{u.values + step * d.values}, lo, hi);
    } else {
      // composite Armijo: the linearized decrease at s is -s * gap
      double s = 1.0;
      bool accepted = false;
      for (int trial = 0; trial < 50; ++trial) {
        const ControlField cand =
            detail::clamp_box(ControlField{u.values + s * d.values}, lo, hi);
        const double cand_obj = p.smooth_value(cand) + p.psi(cand);
        if (cand_obj <= obj - cfg.armijo_c * s * cert.gap) {
          u = cand;
          accepted = true;
          break;
        }
        s *= cfg.armijo_shrink;
      }
      if (!accepted) {
        trace.final_u = u;
        throw StagnationError("solve: Armijo found no decrease after 50 halvings",
                              trace);
      }
    }
  }
  trace.final_u = u;
  return trace;
}

}  // namespace saacg

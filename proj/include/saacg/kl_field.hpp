#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "saacg/common.hpp"
#include "saacg/mesh.hpp"

namespace saacg {

/// One 1D eigenpair of the exponential covariance exp(-|x-x'|/l) on (0,1),
/// written on the shifted interval [-1/2, 1/2]. Cosine modes solve
/// c = w tan(w/2), sine modes solve w = -c tan(w/2), with c = 1/l.
struct Kl1dMode {
  double omega = 0.0;
  double lambda = 0.0;
  bool cosine = true;
  double norm = 1.0;  // L2 normalization constant

  double eval(double x) const {
    const double t = omega * (x - 0.5);
    return (cosine ? std::cos(t) : std::sin(t)) / norm;
  }
  double sup_abs() const { return 1.0 / norm; }
};

/// One 2D tensor-product term of the truncated expansion.
struct KlTerm {
  double lambda = 0.0;
  int ix = 0;  // index into the 1D mode table, x direction
  int iy = 0;
};

/// Truncated Karhunen-Loeve description of the random diffusion field
///   kappa(xi)(x) = mean + amplitude * sum_j sqrt(lambda_j) phi_j(x) xi_j.
struct KLFieldSpec {
  double mean = 1.0;
  double amplitude = 0.04;
  double kappa_floor = 0.1;
  double correlation_length = 1.0;
  int M = 0;
  std::vector<Kl1dMode> modes1d;
  std::vector<KlTerm> terms;  // sorted by descending lambda, |terms| = M

  double eigenvalue(int j) const { return terms[j].lambda; }

  double eval_phi(int j, const Eigen::Vector2d& x) const {
    const KlTerm& t = terms[j];
    return modes1d[t.ix].eval(x.x()) * modes1d[t.iy].eval(x.y());
  }

  double sup_phi(int j) const {
    const KlTerm& t = terms[j];
    return modes1d[t.ix].sup_abs() * modes1d[t.iy].sup_abs();
  }
};

namespace detail {

/// Bisection root of f on [lo, hi] assuming a sign change; 1e-12 accuracy.
template <typename F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw SolverError("kl bisection: no sign change in bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// First `count` 1D eigenpairs, eigenvalues descending (omega ascending).
inline std::vector<Kl1dMode> kl_1d_modes(int count, double corr_len) {
  const double c = 1.0 / corr_len;
  std::vector<Kl1dMode> modes;
  modes.reserve(count);
  const double pi = std::acos(-1.0);
  const double eps = 1e-9;
  for (int k = 0; modes.size() < static_cast<std::size_t>(count); ++k) {
    // one root per interval (k pi, (k+1) pi), alternating mode families
    const double lo = k * pi + eps;
    const double hi = (k + 1) * pi - eps;
    Kl1dMode m;
    if (k % 2 == 0) {
      m.cosine = true;
      m.omega = bisect([c](double w) { return c - w * std::tan(0.5 * w); }, lo, hi);
      m.norm = std::sqrt(0.5 + std::sin(m.omega) / (2.0 * m.omega));
    } else {
      m.cosine = false;
      m.omega = bisect([c](double w) { return w + c * std::tan(0.5 * w); }, lo, hi);
      m.norm = std::sqrt(0.5 - std::sin(m.omega) / (2.0 * m.omega));
    }
    m.lambda = 2.0 * c / (m.omega * m.omega + c * c);
    modes.push_back(m);
  }
  return modes;
}

}  // namespace detail

/// Builds the spec from separable exponential-covariance eigenpairs on the
/// unit square: 1D modes tensorized, globally sorted descending, top M kept.
/// The mean is chosen so kappa >= kappa_floor for every xi in [-3,3]^M.
inline KLFieldSpec default_kl_spec(int M, double corr_len, double amplitude,
                                   double kappa_floor) {
  require(M >= 1, "default_kl_spec: M must be >= 1");
  require(corr_len > 0.0, "default_kl_spec: correlation length must be positive");
  require(kappa_floor > 0.0, "default_kl_spec: kappa_floor must be positive");
  require(amplitude >= 0.0, "default_kl_spec: amplitude must be nonnegative");

  KLFieldSpec spec;
  spec.M = M;
  spec.amplitude = amplitude;
  spec.kappa_floor = kappa_floor;
  spec.correlation_length = corr_len;

  // enough 1D modes that the top-M tensor products are covered
  const int m1 = std::max(4, static_cast<int>(std::ceil(std::sqrt(4.0 * M))) + 2);
  spec.modes1d = detail::kl_1d_modes(m1, corr_len);

  std::vector<KlTerm> all;
  all.reserve(static_cast<std::size_t>(m1) * m1);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m1; ++j)
      all.push_back({spec.modes1d[i].lambda * spec.modes1d[j].lambda, i, j});
  std::stable_sort(all.begin(), all.end(),
                   [](const KlTerm& a, const KlTerm& b) { return a.lambda > b.lambda; });
  spec.terms.assign(all.begin(), all.begin() + M);

  double worst = 0.0;
  for (int j = 0; j < M; ++j)
    worst += std::sqrt(spec.terms[j].lambda) * spec.sup_phi(j);
  spec.mean = kappa_floor + 3.0 * amplitude * worst;
  return spec;
}

/// Per-cell diffusion coefficient, evaluated at cell centroids.
inline Eigen::VectorXd evaluate_kappa(const KLFieldSpec& spec,
                                      const Eigen::VectorXd& xi,
                                      const Mesh& mesh) {
  require(xi.size() == spec.M, "evaluate_kappa: sample dimension mismatch");
  Eigen::VectorXd kappa(mesh.cell_count());
  std::vector<double> sqrt_lambda(spec.M);
  for (int j = 0; j < spec.M; ++j) sqrt_lambda[j] = std::sqrt(spec.terms[j].lambda);
  for (int t = 0; t < mesh.cell_count(); ++t) {
    const Eigen::Vector2d c = mesh.centroid(t);
    double v = spec.mean;
    for (int j = 0; j < spec.M; ++j)
      v += spec.amplitude * sqrt_lambda[j] * spec.eval_phi(j, c) * xi[j];
    kappa[t] = v;
  }
  if ((kappa.array() < spec.kappa_floor - 1e-12).any())
    throw Error("evaluate_kappa: coefficient fell below the guaranteed floor");
  return kappa;
}

}  // namespace saacg

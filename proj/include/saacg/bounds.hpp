#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "saacg/common.hpp"

namespace saacg {

/// Constants entering the theoretical sample-size estimate.
struct BoundInputs {
  double r_ad = 1.0;  // diameter of the feasible set, L2 units
  double tau = 1.0;   // sub-Gaussian constant of the gradient integrand
  double L = 1.0;     // Lipschitz constant of the gradient integrand
  std::function<double(double)> covering;  // nu -> covering number (>= 1)

  void validate() const {
    require(r_ad > 0.0 && tau > 0.0 && L > 0.0,
            "BoundInputs: constants must be positive");
    require(static_cast<bool>(covering), "BoundInputs: covering model required");
  }
};

/// Result of a log-log least-squares fit.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Sample size guaranteeing an epsilon-accurate gap expectation:
/// N >= (12 r^2 tau^2 / eps^2) * covering(eps / (4 r L)).
inline long long sample_size_bound(const BoundInputs& inp, double eps) {
  inp.validate();
  require(eps > 0.0, "sample_size_bound: eps must be positive");
  const double nu = eps / (4.0 * inp.r_ad * inp.L);
  const double cover = inp.covering(nu);
  require(cover >= 1.0, "sample_size_bound: covering number must be >= 1");
  const double raw =
      12.0 * inp.r_ad * inp.r_ad * inp.tau * inp.tau / (eps * eps) * cover;
  const long long n = static_cast<long long>(std::ceil(raw));
  return n < 1 ? 1 : n;
}

/// Ordinary least squares of log(value) on log(N); the slope is the
/// empirical convergence rate.
inline RateFit fit_rate(const std::vector<std::pair<double, double>>& points) {
  require(points.size() >= 3, "fit_rate: need at least 3 points");
  const int n = static_cast<int>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [N, value] : points) {
    require(N > 0.0, "fit_rate: sample sizes must be positive");
    require(value > 0.0, "fit_rate: values must be positive");
    const double x = std::log(N);
    const double y = std::log(value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double det = n * sxx - sx * sx;
  require(std::abs(det) > 1e-300, "fit_rate: sample sizes must be distinct");
  RateFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (const auto& [N, value] : points) {
    const double r = std::log(value) - (fit.intercept + fit.slope * std::log(N));
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return fit;
}

}  // namespace saacg

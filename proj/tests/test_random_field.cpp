#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "saacg/kl_field.hpp"
#include "saacg/mesh.hpp"

namespace saacg {
namespace {

TEST(KlSpec, SingleTermPositivity) {
  const KLFieldSpec spec = default_kl_spec(1, 1.0, 0.25, 0.1);
  ASSERT_EQ(spec.M, 1);
  EXPECT_GT(spec.terms[0].lambda, 0.0);
  // worst-case fluctuation at xi = -3 stays above the floor by construction
  EXPECT_GE(spec.mean - 3.0 * spec.amplitude * std::sqrt(spec.terms[0].lambda) *
                           spec.sup_phi(0),
            spec.kappa_floor - 1e-14);
}

TEST(KlSpec, ZeroAmplitudeIsDeterministic) {
  const KLFieldSpec spec = default_kl_spec(5, 1.0, 0.0, 0.1);
  const Mesh m = build_mesh(4);
  const Eigen::VectorXd kappa =
      evaluate_kappa(spec, Eigen::VectorXd::Constant(5, 2.5), m);
  for (int t = 0; t < m.cell_count(); ++t)
    EXPECT_DOUBLE_EQ(kappa[t], spec.mean);
}

TEST(KlSpec, HundredAddendsSortedDescending) {
  const KLFieldSpec spec = default_kl_spec(100, 1.0, 0.25, 0.1);
  ASSERT_EQ(static_cast<int>(spec.terms.size()), 100);
  for (int j = 0; j + 1 < 100; ++j)
    EXPECT_GE(spec.terms[j].lambda, spec.terms[j + 1].lambda);
  EXPECT_GT(spec.terms[99].lambda, 0.0);
}

TEST(KlSpec, OneDimensionalModesSolveTranscendentalEquations) {
  const KLFieldSpec spec = default_kl_spec(10, 0.7, 0.25, 0.1);
  const double c = 1.0 / 0.7;
  for (const auto& mode : spec.modes1d) {
    const double w = mode.omega;
    if (mode.cosine)
      EXPECT_NEAR(c - w * std::tan(0.5 * w), 0.0, 1e-8 * (1.0 + w * w));
    else
      EXPECT_NEAR(w + c * std::tan(0.5 * w), 0.0, 1e-8 * (1.0 + w * w));
    EXPECT_NEAR(mode.lambda, 2.0 * c / (w * w + c * c), 1e-14);
  }
}

TEST(KlSpec, ModesAreL2Normalized) {
  const KLFieldSpec spec = default_kl_spec(6, 1.3, 0.25, 0.1);
  const int q = 20000;
  for (const auto& mode : spec.modes1d) {
    double s = 0.0;
    for (int i = 0; i < q; ++i) {
      const double x = (i + 0.5) / q;
      s += mode.eval(x) * mode.eval(x) / q;
    }
    EXPECT_NEAR(s, 1.0, 1e-6);
  }
}

TEST(EvaluateKappa, ZeroSampleGivesMean) {
  const KLFieldSpec spec = default_kl_spec(20, 1.0, 0.25, 0.1);
  const Mesh m = build_mesh(8);
  const Eigen::VectorXd kappa =
      evaluate_kappa(spec, Eigen::VectorXd::Zero(20), m);
  for (int t = 0; t < m.cell_count(); ++t)
    EXPECT_DOUBLE_EQ(kappa[t], spec.mean);
}

TEST(EvaluateKappa, FluctuationReflectsUnderNegation) {
  const KLFieldSpec spec = default_kl_spec(12, 1.0, 0.25, 0.1);
  const Mesh m = build_mesh(6);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  Eigen::VectorXd xi(12);
  for (int j = 0; j < 12; ++j) xi[j] = box(rng);
  const Eigen::VectorXd kp = evaluate_kappa(spec, xi, m);
  const Eigen::VectorXd kn = evaluate_kappa(spec, Eigen::VectorXd(-xi), m);
  for (int t = 0; t < m.cell_count(); ++t)
    EXPECT_NEAR(kp[t] - spec.mean, -(kn[t] - spec.mean), 1e-13);
}

TEST(EvaluateKappa, AffineInXi) {
  const KLFieldSpec spec = default_kl_spec(8, 1.0, 0.25, 0.1);
  const Mesh m = build_mesh(5);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  Eigen::VectorXd x1(8), x2(8);
  for (int j = 0; j < 8; ++j) {
    x1[j] = box(rng);
    x2[j] = box(rng);
  }
  const double alpha = 0.3;
  const Eigen::VectorXd mix =
      evaluate_kappa(spec, Eigen::VectorXd(alpha * x1 + (1 - alpha) * x2), m);
  const Eigen::VectorXd k1 = evaluate_kappa(spec, x1, m);
  const Eigen::VectorXd k2 = evaluate_kappa(spec, x2, m);
  for (int t = 0; t < m.cell_count(); ++t)
    EXPECT_NEAR(mix[t], alpha * k1[t] + (1 - alpha) * k2[t], 1e-14);
}

TEST(EvaluateKappa, RandomizedFloorSweep) {
  const KLFieldSpec spec = default_kl_spec(30, 1.0, 0.25, 0.1);
  const Mesh m = build_mesh(8);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::VectorXd xi(30);
    for (int j = 0; j < 30; ++j) xi[j] = box(rng);
    const Eigen::VectorXd kappa = evaluate_kappa(spec, xi, m);
    EXPECT_GE(kappa.minCoeff(), spec.kappa_floor - 1e-12);
  }
}

TEST(KlSpec, RejectsBadInputs) {
  EXPECT_THROW(default_kl_spec(0, 1.0, 0.25, 0.1), InvalidArgument);
  EXPECT_THROW(default_kl_spec(3, 0.0, 0.25, 0.1), InvalidArgument);
  EXPECT_THROW(default_kl_spec(3, 1.0, 0.25, 0.0), InvalidArgument);
}

}  // namespace
}  // namespace saacg

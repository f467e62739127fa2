#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "saacg/sampling.hpp"

namespace saacg {
namespace {

// Numerical CDF of the truncated normal on [-3,3] by composite Simpson
// quadrature of the density; independent of the inverse-CDF implementation.
double truncnorm_cdf_oracle(double x) {
  auto density = [](double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::acos(-1.0));
  };
  const int steps = 20000;  // even
  const double a = -3.0;
  auto simpson = [&](double b) {
    if (b <= a) return 0.0;
    const double h = (b - a) / steps;
    double s = density(a) + density(b);
    for (int i = 1; i < steps; ++i)
      s += density(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  return simpson(x) / simpson(3.0);
}

TEST(TruncNorm, MedianIsZero) {
  EXPECT_NEAR(truncnorm_inverse_cdf(0.5), 0.0, 1e-14);
}

TEST(TruncNorm, MatchesQuadratureOracleAtOne) {
  const double p = truncnorm_cdf_oracle(1.0);
  EXPECT_NEAR(truncnorm_inverse_cdf(p), 1.0, 1e-9);
}

TEST(TruncNorm, MatchesQuadratureOracleOnSweep) {
  for (double x : {-2.5, -1.7, -0.4, 0.9, 2.2, 2.9}) {
    const double p = truncnorm_cdf_oracle(x);
    EXPECT_NEAR(truncnorm_inverse_cdf(p), x, 1e-8) << "x=" << x;
  }
}

TEST(TruncNorm, Antisymmetric) {
  for (double p : {0.001, 0.06, 0.21, 0.37, 0.49}) {
    EXPECT_NEAR(truncnorm_inverse_cdf(p) + truncnorm_inverse_cdf(1.0 - p), 0.0,
                1e-10);
  }
}

TEST(TruncNorm, MonotoneAndBounded) {
  double prev = -4.0;
  for (int i = 1; i < 200; ++i) {
    const double x = truncnorm_inverse_cdf(i / 200.0);
    EXPECT_GT(x, prev);
    EXPECT_LE(std::abs(x), 3.0);
    prev = x;
  }
}

TEST(TruncNorm, RejectsOutOfRange) {
  EXPECT_THROW(truncnorm_inverse_cdf(0.0), InvalidArgument);
  EXPECT_THROW(truncnorm_inverse_cdf(1.0), InvalidArgument);
  EXPECT_THROW(truncnorm_inverse_cdf(-0.1), InvalidArgument);
}

TEST(Sobol, CanonicalFirstPointsWithoutScrambling) {
  // frozen oracle: first unscrambled points of the 3D sequence after the
  // all-zeros index is dropped
  const double expected[7][3] = {
      {0.5, 0.5, 0.5},     {0.75, 0.25, 0.25},   {0.25, 0.75, 0.75},
      {0.375, 0.375, 0.625}, {0.875, 0.875, 0.125}, {0.625, 0.125, 0.875},
      {0.125, 0.625, 0.375}};
  SobolEngine engine(3, 0, /*scramble=*/false);
  for (int i = 0; i < 7; ++i) {
    const auto pt = engine.next();
    for (int d = 0; d < 3; ++d)
      EXPECT_NEAR(pt[d], expected[i][d], 0x1.0p-32) << "i=" << i << " d=" << d;
  }
}

TEST(Sobol, DimensionLimit) {
  EXPECT_NO_THROW(SobolEngine(128, 1));
  EXPECT_THROW(SobolEngine(129, 1), InvalidArgument);
}

TEST(IidSamples, DeterministicAndInBox) {
  const KLFieldSpec spec = default_kl_spec(10, 1.0, 0.25, 0.1);
  const SampleSet a = iid_samples(spec, 50, 42);
  const SampleSet b = iid_samples(spec, 50, 42);
  ASSERT_EQ(a.count(), 50);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(a.samples[i] == b.samples[i]);
    EXPECT_LE(a.samples[i].cwiseAbs().maxCoeff(), 3.0);
  }
  const SampleSet c = iid_samples(spec, 50, 43);
  EXPECT_FALSE(a.samples[0] == c.samples[0]);
}

TEST(QmcSamples, DeterministicAndInBox) {
  const KLFieldSpec spec = default_kl_spec(25, 1.0, 0.25, 0.1);
  const SampleSet a = qmc_samples(spec, 64, 7);
  const SampleSet b = qmc_samples(spec, 64, 7);
  for (int i = 0; i < 64; ++i) {
    EXPECT_TRUE(a.samples[i] == b.samples[i]);
    EXPECT_LE(a.samples[i].cwiseAbs().maxCoeff(), 3.0);
  }
}

TEST(QmcSamples, CoordinateMeansNearZeroAtReferenceScale) {
  const KLFieldSpec spec = default_kl_spec(100, 1.0, 0.25, 0.1);
  const SampleSet set = qmc_samples(spec, 8192, 3);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(100);
  for (const auto& xi : set.samples) mean += xi;
  mean /= set.count();
  EXPECT_LE(mean.cwiseAbs().maxCoeff(), 0.02);
}

TEST(SampleSet, CsvRoundTrip) {
  const KLFieldSpec spec = default_kl_spec(6, 1.0, 0.25, 0.1);
  const SampleSet set = qmc_samples(spec, 17, 99);
  const std::string path =
      (std::filesystem::temp_directory_path() / "saacg_samples.csv").string();
  save_samples_csv(set, path);
  const SampleSet loaded = load_samples_csv(path);
  ASSERT_EQ(loaded.M, set.M);
  ASSERT_EQ(loaded.count(), set.count());
  EXPECT_EQ(loaded.provenance.kind, SampleProvenance::Kind::Qmc);
  EXPECT_EQ(loaded.provenance.seed, 99u);
  for (int i = 0; i < set.count(); ++i)
    EXPECT_TRUE(loaded.samples[i] == set.samples[i]);
  std::remove(path.c_str());
}

TEST(IidSamples, EmpiricalMomentsReasonable) {
  const KLFieldSpec spec = default_kl_spec(3, 1.0, 0.25, 0.1);
  const SampleSet set = iid_samples(spec, 20000, 5);
  double mean = 0.0, var = 0.0;
  for (const auto& xi : set.samples) mean += xi[0];
  mean /= set.count();
  for (const auto& xi : set.samples) var += (xi[0] - mean) * (xi[0] - mean);
  var /= set.count() - 1;
  EXPECT_NEAR(mean, 0.0, 0.03);
  // variance of the standard normal truncated to +-3 sigma
  EXPECT_NEAR(var, 0.9733, 0.02);
}

}  // namespace
}  // namespace saacg

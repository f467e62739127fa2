#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "saacg/common.hpp"
#include "saacg/kl_field.hpp"
#include "saacg/sobol_directions.hpp"

namespace saacg {

namespace detail {

/// splitmix64 finalizer; the basis of the counter-based generator.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Keyed counter hash -> uniform double in (0,1).
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t h = mix64(mix64(seed) ^ counter);
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal CDF.
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Standard normal inverse CDF: Acklam's rational approximation refined by
/// one Halley step on the CDF residual.
inline double norm_inv_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement
  const double e = norm_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::acos(-1.0)) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

}  // namespace detail

/// Inverse CDF of the standard normal conditioned on [-3, 3].
inline double truncnorm_inverse_cdf(double p) {
  require(p > 0.0 && p < 1.0, "truncnorm_inverse_cdf: p must be in (0,1)");
  const double lo = detail::norm_cdf(-3.0);
  const double hi = detail::norm_cdf(3.0);
  const double q = lo + p * (hi - lo);
  double x = detail::norm_inv_cdf(q);
  if (x < -3.0) x = -3.0;
  if (x > 3.0) x = 3.0;
  return x;
}

/// Provenance of a sample set; enough to regenerate it bit for bit.
struct SampleProvenance {
  enum class Kind { Iid, Qmc } kind = Kind::Iid;
  std::uint64_t seed = 0;

  std::string describe() const {
    return (kind == Kind::Iid ? std::string("iid:") : std::string("qmc:")) +
           std::to_string(seed);
  }
};

/// Ordered, immutable collection of parameter draws xi in [-3,3]^M.
struct SampleSet {
  int M = 0;
  std::vector<Eigen::VectorXd> samples;
  SampleProvenance provenance;

  int count() const { return static_cast<int>(samples.size()); }
};

/// Gray-code Sobol sequence with an optional per-dimension digital shift.
/// Index 0 (the all-zeros point) is dropped.
class SobolEngine {
 public:
  SobolEngine(int dim, std::uint64_t scramble_seed, bool scramble = true)
      : dim_(dim), state_(dim, 0), shift_(dim, 0), index_(0) {
    require(dim >= 1, "SobolEngine: dimension must be >= 1");
    if (dim > detail::kSobolMaxDim)
      throw InvalidArgument("SobolEngine: dimension exceeds direction-number table (" +
                            std::to_string(detail::kSobolMaxDim) + ")");
    if (scramble)
      for (int d = 0; d < dim; ++d)
        shift_[d] = static_cast<std::uint32_t>(
            detail::mix64(detail::mix64(scramble_seed) ^ static_cast<std::uint64_t>(d)));
  }

  /// Next point, entries strictly inside (0,1).
  std::vector<double> next() {
    ++index_;  // first emitted point is sequence index 1
    const int bit = lowest_zero_bit(index_ - 1);
    for (int d = 0; d < dim_; ++d)
      state_[d] ^= detail::kSobolDirections[d][bit];
    std::vector<double> pt(dim_);
    for (int d = 0; d < dim_; ++d)
      pt[d] = (static_cast<double>(state_[d] ^ shift_[d]) + 0.5) * 0x1.0p-32;
    return pt;
  }

 private:
  static int lowest_zero_bit(std::uint64_t v) {
    int b = 0;
    while (v & 1ull) {
      v >>= 1;
      ++b;
    }
    return b;
  }

  int dim_;
  std::vector<std::uint32_t> state_;
  std::vector<std::uint32_t> shift_;
  std::uint64_t index_;
};

/// Independent draws via a counter-based generator and inverse transform.
inline SampleSet iid_samples(const KLFieldSpec& spec, int count,
                             std::uint64_t seed) {
  require(count >= 1, "iid_samples: count must be >= 1");
  SampleSet set;
  set.M = spec.M;
  set.provenance = {SampleProvenance::Kind::Iid, seed};
  set.samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd xi(spec.M);
    for (int j = 0; j < spec.M; ++j) {
      const std::uint64_t counter =
          static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(spec.M) + j;
      xi[j] = truncnorm_inverse_cdf(detail::counter_uniform(seed, counter));
    }
    set.samples.push_back(std::move(xi));
  }
  return set;
}

/// Digitally shifted Sobol points mapped through the truncated-normal
/// inverse CDF.
inline SampleSet qmc_samples(const KLFieldSpec& spec, int count,
                             std::uint64_t scramble_seed) {
  require(count >= 1, "qmc_samples: count must be >= 1");
  SampleSet set;
  set.M = spec.M;
  set.provenance = {SampleProvenance::Kind::Qmc, scramble_seed};
  set.samples.reserve(count);
  SobolEngine engine(spec.M, scramble_seed);
  for (int i = 0; i < count; ++i) {
    const std::vector<double> pt = engine.next();
    Eigen::VectorXd xi(spec.M);
    for (int j = 0; j < spec.M; ++j) xi[j] = truncnorm_inverse_cdf(pt[j]);
    set.samples.push_back(std::move(xi));
  }
  return set;
}

/// CSV cache: header line `M,count,provenance`, then one row per sample
/// with full double precision.
inline void save_samples_csv(const SampleSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_samples_csv: cannot open " + path);
  out << set.M << "," << set.count() << "," << set.provenance.describe() << "\n";
  out.precision(17);
  for (const auto& xi : set.samples) {
    for (int j = 0; j < set.M; ++j) out << (j ? "," : "") << xi[j];
    out << "\n";
  }
}

inline SampleSet load_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_samples_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("load_samples_csv: empty file");
  SampleSet set;
  {
    std::istringstream hs(line);
    std::string m_str, count_str, prov;
    std::getline(hs, m_str, ',');
    std::getline(hs, count_str, ',');
    std::getline(hs, prov, ',');
    set.M = std::stoi(m_str);
    const int count = std::stoi(count_str);
    set.samples.reserve(count);
    const auto colon = prov.find(':');
    if (colon == std::string::npos)
      throw Error("load_samples_csv: malformed provenance");
    set.provenance.kind = prov.substr(0, colon) == "qmc"
                              ? SampleProvenance::Kind::Qmc
                              : SampleProvenance::Kind::Iid;
    set.provenance.seed = std::stoull(prov.substr(colon + 1));
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Eigen::VectorXd xi(set.M);
    std::istringstream ls(line);
    std::string tok;
    for (int j = 0; j < set.M; ++j) {
      if (!std::getline(ls, tok, ','))
        throw Error("load_samples_csv: truncated row");
      xi[j] = std::stod(tok);
    }
    set.samples.push_back(std::move(xi));
  }
  return set;
}

}  // namespace saacg

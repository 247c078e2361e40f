#pragma once

// Monte Carlo statistics of Jones evaluations on random braid words.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "jwrep/errors.hpp"
#include "jwrep/jones.hpp"
#include "jwrep/parallel.hpp"
#include "jwrep/random.hpp"

namespace jwrep {

struct WeightSum {
  double sum = 0.0;         // direct sum of w_lambda^2 over Lambda_n^{(2,r)}
  double closed_form = 0.0; // r / (4 sin^2(2 pi / r))
};

inline WeightSum weight_sum_sq(int n, const HeckeParams& p) {
  if (p.k != 2)
    throw DomainError("weight sums use the k=2 theory");
  WeightSum ws;
  for (const auto& lam : enumerate_diagrams(n, p)) {
    double w = weight(lam, p);
    ws.sum += w * w;
  }
  const double s = std::sin(2.0 * std::numbers::pi / p.r);
  ws.closed_form = p.r / (4.0 * s * s);
  return ws;
}

enum class SampleFilter { All, KnotsOnly };

inline const char* to_string(SampleFilter f) { return f == SampleFilter::All ? "all" : "knots"; }

struct SampleConfig {
  int n = 6;
  int r = 5;
  int chirality = 1;
  std::size_t word_length = 300;
  std::size_t sample_count = 20000;
  std::uint64_t seed = 1;
  SampleFilter filter = SampleFilter::All;
  unsigned threads = 1;

  void validate() const {
    if (n < 2)
      throw DomainError("sampling needs at least two strands");
    if (word_length < 1 || sample_count < 1)
      throw DomainError("word length and sample count must be positive");
    HeckeParams(2, r, chirality);
  }
};

struct Moments {
  cplx mean;        // E[J]
  cplx mean_sq;     // E[J^2]
  double abs2 = 0;  // E[|J|^2]
  double abs4 = 0;  // E[|J|^4]
};

/// Standard errors of the sample moments estimated from the samples themselves.
struct MomentErrors {
  double mean = 0;
  double mean_sq = 0;
  double abs2 = 0;
  double abs4 = 0;
};

struct EmpiricalDistribution {
  SampleConfig config;
  std::vector<cplx> samples;
  Moments moments;
  MomentErrors errors;
  std::uint64_t attempts = 0; // words drawn, including rejected ones

  static Moments compute_moments(const std::vector<cplx>& xs) {
    Moments m;
    for (const auto& z : xs) {
      const double a2 = std::norm(z);
      m.mean += z;
      m.mean_sq += z * z;
      m.abs2 += a2;
      m.abs4 += a2 * a2;
    }
    const double N = static_cast<double>(xs.size());
    m.mean /= N;
    m.mean_sq /= N;
    m.abs2 /= N;
    m.abs4 /= N;
    return m;
  }

  static MomentErrors compute_errors(const std::vector<cplx>& xs, const Moments& m) {
    MomentErrors e;
    const double N = static_cast<double>(xs.size());
    if (xs.size() < 2)
      return e;
    double v1 = 0, v2 = 0, v3 = 0, v4 = 0;
    for (const auto& z : xs) {
      const double a2 = std::norm(z);
      v1 += std::norm(z - m.mean);
      v2 += std::norm(z * z - m.mean_sq);
      v3 += (a2 - m.abs2) * (a2 - m.abs2);
      v4 += (a2 * a2 - m.abs4) * (a2 * a2 - m.abs4);
    }
    e.mean = std::sqrt(v1 / (N - 1) / N);
    e.mean_sq = std::sqrt(v2 / (N - 1) / N);
    e.abs2 = std::sqrt(v3 / (N - 1) / N);
    e.abs4 = std::sqrt(v4 / (N - 1) / N);
    return e;
  }

  static EmpiricalDistribution from_samples(std::vector<cplx> xs, SampleConfig cfg = {}) {
    EmpiricalDistribution d;
    d.config = cfg;
    d.samples = std::move(xs);
    d.moments = compute_moments(d.samples);
    d.errors = compute_errors(d.samples, d.moments);
    d.attempts = d.samples.size();
    return d;
  }
};

/// Draws sample_count words uniformly from the 2(n-1)-letter alphabet and
/// evaluates J on each. Sample i, attempt a uses the stream (seed, i, a), so
/// output is identical for every thread count. With KnotsOnly, words whose
/// closure is not a knot are redrawn; a sample that is still rejected after
/// 64 n^2 attempts raises ResourceError.
inline EmpiricalDistribution sample_distribution(const SampleConfig& cfg) {
  cfg.validate();
  JonesEvaluator jones(cfg.n, HeckeParams(2, cfg.r, cfg.chirality));
  const std::uint64_t cap = 64ULL * cfg.n * cfg.n;
  std::vector<cplx> samples(cfg.sample_count);
  std::vector<std::uint64_t> tries(cfg.sample_count, 0);
  parallel_for(cfg.sample_count, cfg.threads, [&](std::size_t i) {
    for (std::uint64_t a = 0;; ++a) {
      if (a == cap)
        throw ResourceError("knot filter starved: a sample was rejected " + std::to_string(cap) +
                            " times (n=" + std::to_string(cfg.n) + ", length=" + std::to_string(cfg.word_length) +
                            "; parity forces an even permutation when length is even)");
      CounterRng rng(cfg.seed, i, a);
      BraidWord w = random_word(cfg.n, cfg.word_length, rng);
      if (cfg.filter == SampleFilter::KnotsOnly && !closure_data(w).is_knot())
        continue;
      samples[i] = jones.value(w);
      tries[i] = a + 1;
      return;
    }
  });
  EmpiricalDistribution d = EmpiricalDistribution::from_samples(std::move(samples), cfg);
  d.attempts = 0;
  for (auto t : tries)
    d.attempts += t;
  return d;
}

/// Counts in bins x bins cells covering [-4 sqrt(sigma), 4 sqrt(sigma)]^2,
/// indexed [ix][iy]. Samples outside the square are dropped.
struct Histogram2D {
  double lo = 0, hi = 0;
  int bins = 0;
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t dropped = 0;

  double center(int i) const { return lo + (i + 0.5) * (hi - lo) / bins; }
};

inline Histogram2D histogram(const EmpiricalDistribution& d, double sigma, int bins = 101) {
  Histogram2D h;
  h.bins = bins;
  h.hi = 4.0 * std::sqrt(sigma);
  h.lo = -h.hi;
  h.counts.assign(bins, std::vector<std::uint64_t>(bins, 0));
  const double width = (h.hi - h.lo) / bins;
  for (const auto& z : d.samples) {
    const double fx = (z.real() - h.lo) / width;
    const double fy = (z.imag() - h.lo) / width;
    if (fx < 0 || fy < 0 || fx >= bins || fy >= bins) {
      ++h.dropped;
      continue;
    }
    ++h.counts[static_cast<int>(fx)][static_cast<int>(fy)];
  }
  return h;
}

/// Moment comparison against the circular complex Gaussian with E|z|^2 = sigma.
/// z-scores use the standard errors of the sample moments under that
/// Gaussian: Var J = sigma, Var J^2 = 2 sigma^2, Var |J|^2 = sigma^2,
/// Var |J|^4 = 20 sigma^4.
struct GaussianReport {
  double sigma = 0;
  std::size_t count = 0;
  Moments moments;
  double se_mean = 0, se_mean_sq = 0, se_abs2 = 0, se_abs4 = 0;
  double z_mean = 0;     // |E J| / se (nonnegative)
  double z_mean_sq = 0;  // |E J^2| / se
  double z_abs2 = 0;     // (E|J|^2 - sigma) / se
  double z_abs4 = 0;     // (E|J|^4 - 2 sigma^2) / se
  double kurtosis_ratio = 0; // E|J|^4 / (E|J|^2)^2, 2 for the Gaussian
  double threshold = 3.0;
  bool pass = false;
};

inline GaussianReport gaussian_compare(const EmpiricalDistribution& d, double sigma) {
  if (!(sigma > 0))
    throw DomainError("sigma must be positive");
  GaussianReport g;
  g.sigma = sigma;
  g.count = d.samples.size();
  g.moments = d.moments;
  const double rootN = std::sqrt(static_cast<double>(g.count));
  g.se_mean = std::sqrt(sigma) / rootN;
  g.se_mean_sq = std::sqrt(2.0) * sigma / rootN;
  g.se_abs2 = sigma / rootN;
  g.se_abs4 = std::sqrt(20.0) * sigma * sigma / rootN;
  g.z_mean = std::abs(d.moments.mean) / g.se_mean;
  g.z_mean_sq = std::abs(d.moments.mean_sq) / g.se_mean_sq;
  g.z_abs2 = (d.moments.abs2 - sigma) / g.se_abs2;
  g.z_abs4 = (d.moments.abs4 - 2.0 * sigma * sigma) / g.se_abs4;
  g.kurtosis_ratio = d.moments.abs2 > 0 ? d.moments.abs4 / (d.moments.abs2 * d.moments.abs2)
                                        : std::numeric_limits<double>::quiet_NaN();
  g.pass = g.z_mean <= g.threshold && g.z_mean_sq <= g.threshold && std::abs(g.z_abs2) <= g.threshold &&
           std::abs(g.z_abs4) <= g.threshold;
  return g;
}

} // namespace jwrep

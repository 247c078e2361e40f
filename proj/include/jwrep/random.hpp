#pragma once

// Counter-based random streams. Every draw is a pure function of
// (seed, stream, substream, position), so results do not depend on how work
// is split across threads.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "jwrep/braid.hpp"

namespace jwrep {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0)
      : state_(mix64(mix64(mix64(seed) ^ stream) ^ (substream * 0xd1b54a32d192ed03ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * n) >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (one value per call).
  double normal() {
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::uint64_t state_;
};

/// Uniform word over the 2(n-1) letters sigma_i^{+-1}, unreduced.
inline BraidWord random_word(int strands, std::size_t length, CounterRng& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  const std::uint64_t alphabet = 2 * static_cast<std::uint64_t>(strands - 1);
  for (std::size_t i = 0; i < length; ++i) {
    auto x = static_cast<int>(rng.below(alphabet));
    letters.push_back({x / 2 + 1, (x % 2) ? -1 : 1});
  }
  return BraidWord(strands, std::move(letters));
}

/// Haar-distributed special unitary d x d matrix (QR of a Ginibre matrix
/// with the R-diagonal phases removed, then the determinant phase divided out).
inline Eigen::MatrixXcd haar_special_unitary(int d, CounterRng& rng) {
  Eigen::MatrixXcd z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      z(i, j) = std::complex<double>(rng.normal(), rng.normal()) / std::sqrt(2.0);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    std::complex<double> rjj = r(j, j);
    double mag = std::abs(rjj);
    if (mag > 0)
      q.col(j) *= rjj / mag;
  }
  std::complex<double> det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / d);
  return q;
}

} // namespace jwrep

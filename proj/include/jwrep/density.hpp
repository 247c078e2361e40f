#pragma once

// Word images of bounded length in a sector: projective distance, covering
// radius estimates against Haar-random targets, and nearest-word search.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_set>
#include <vector>

#include <Eigen/Eigenvalues>

#include "jwrep/braid.hpp"
#include "jwrep/errors.hpp"
#include "jwrep/hecke.hpp"
#include "jwrep/parallel.hpp"
#include "jwrep/random.hpp"

namespace jwrep {

namespace detail {

/// 2 sin(w/4), w the shortest arc of the unit circle holding every phase.
/// This is min over |mu| = 1 of max_j |e^{i phase_j} - mu|.
inline double arc_distance(std::vector<double>& phases) {
  if (phases.size() <= 1)
    return 0.0;
  std::sort(phases.begin(), phases.end());
  double gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i)
    gap = std::max(gap, phases[i] - phases[i - 1]);
  const double width = std::max(0.0, 2.0 * std::numbers::pi - gap);
  return 2.0 * std::sin(width / 4.0);
}

/// Projective distance between unitary U and V given as column-major d x d
/// arrays. No unitarity checks.
inline double projective_distance_raw(const cplx* u, const cplx* v, int d) {
  if (d == 1)
    return 0.0;
  if (d == 2) {
    // W = V^dagger U, eigenvalues from trace and determinant.
    auto vc = [&](int i, int j) { return std::conj(v[j * 2 + i]); };
    auto uu = [&](int i, int j) { return u[j * 2 + i]; };
    cplx w00 = vc(0, 0) * uu(0, 0) + vc(1, 0) * uu(1, 0);
    cplx w01 = vc(0, 0) * uu(0, 1) + vc(1, 0) * uu(1, 1);
    cplx w10 = vc(0, 1) * uu(0, 0) + vc(1, 1) * uu(1, 0);
    cplx w11 = vc(0, 1) * uu(0, 1) + vc(1, 1) * uu(1, 1);
    // |l1 - l2| = 2 sin(dphi / 2) for unit eigenvalues; this form of the
    // discriminant avoids cancellation when W is close to a scalar.
    cplx diff = w00 - w11;
    double half_gap = 0.5 * std::sqrt(std::abs(diff * diff + 4.0 * w01 * w10));
    double dphi = 2.0 * std::asin(std::min(1.0, half_gap));
    return 2.0 * std::sin(dphi / 4.0);
  }
  Eigen::Map<const ComplexMatrix> U(u, d, d), V(v, d, d);
  ComplexMatrix W = V.adjoint() * U;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(W, false);
  std::vector<double> phases(d);
  for (int i = 0; i < d; ++i)
    phases[i] = std::arg(es.eigenvalues()(i));
  return arc_distance(phases);
}

inline double unitarity_defect(const ComplexMatrix& m) {
  return (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
}

} // namespace detail

/// min over unit scalars mu of the operator norm of U - mu V, computed exactly
/// from the eigenphases of V^dagger U.
inline double projective_distance(const ComplexMatrix& U, const ComplexMatrix& V) {
  if (U.rows() != U.cols() || V.rows() != V.cols() || U.rows() != V.rows())
    throw DomainError("projective distance needs square matrices of equal size");
  if (detail::unitarity_defect(U) > 1e-8 || detail::unitarity_defect(V) > 1e-8)
    throw DomainError("projective distance needs unitary inputs");
  ComplexMatrix u = U, v = V; // contiguous column-major copies
  return detail::projective_distance_raw(u.data(), v.data(), static_cast<int>(U.rows()));
}

/// All distinct word images of length <= max_len, up to scalars, enumerated
/// breadth-first in shortlex order. Each image keeps the first word reaching
/// it, so the stored word is the shortlex-least one (at key resolution 1e-6).
class WordNet {
public:
  static constexpr int kMaxDim = 6;
  static constexpr int kMaxLength = 14;
  static constexpr std::size_t kDefaultBudget = 4'000'000;
  static constexpr double kResolution = 1e-6;

  WordNet(const Sector& s, int max_len, std::size_t budget = kDefaultBudget)
      : strands_(s.strands()), dim_(s.dim()), max_len_(max_len) {
    if (dim_ > kMaxDim)
      throw DomainError("sector dimension " + std::to_string(dim_) + " exceeds the enumeration limit " +
                        std::to_string(kMaxDim));
    if (max_len < 0 || max_len > kMaxLength)
      throw DomainError("word length bound must lie in [0, " + std::to_string(kMaxLength) + "]");
    const int d = dim_;
    const std::size_t dd = static_cast<std::size_t>(d) * d;
    std::vector<ComplexMatrix> letters;
    for (int i = 1; i < strands_; ++i)
      for (int e : {1, -1}) {
        letters_.push_back({i, e});
        letters.push_back(e > 0 ? s.generator(i) : ComplexMatrix(s.generator(i).adjoint()));
      }

    std::unordered_set<std::string> seen;
    auto push = [&](const ComplexMatrix& m, std::int64_t parent, int letter) {
      if (!seen.insert(key(m)).second)
        return;
      if (parent_.size() >= budget)
        throw ResourceError("word enumeration exceeded the budget of " + std::to_string(budget) +
                            " distinct images at length " + std::to_string(level_start_.size() - 1));
      data_.insert(data_.end(), m.data(), m.data() + dd);
      parent_.push_back(parent);
      letter_.push_back(static_cast<std::int8_t>(letter));
    };

    level_start_.push_back(0);
    push(ComplexMatrix::Identity(d, d), -1, -1);
    level_start_.push_back(parent_.size());
    ComplexMatrix next(d, d);
    for (int l = 1; l <= max_len; ++l) {
      const std::size_t begin = level_start_[l - 1], end = level_start_[l];
      for (std::size_t idx = begin; idx < end; ++idx) {
        for (std::size_t a = 0; a < letters.size(); ++a) {
          next.noalias() = image(idx) * letters[a];
          push(next, static_cast<std::int64_t>(idx), static_cast<int>(a));
        }
      }
      level_start_.push_back(parent_.size());
    }
  }

  int strands() const { return strands_; }
  int dim() const { return dim_; }
  int max_length() const { return max_len_; }
  std::size_t size() const { return parent_.size(); }
  /// Elements [0, end_of_level(l)) are the images of words of length <= l.
  std::size_t end_of_level(int l) const { return level_start_.at(l + 1); }

  Eigen::Map<const ComplexMatrix> image(std::size_t idx) const {
    return {data_.data() + idx * dim_ * dim_, dim_, dim_};
  }
  const cplx* raw(std::size_t idx) const { return data_.data() + idx * dim_ * dim_; }

  BraidWord word(std::size_t idx) const {
    std::vector<Letter> out;
    for (std::int64_t i = static_cast<std::int64_t>(idx); parent_[i] >= 0; i = parent_[i])
      out.push_back(letters_[letter_[i]]);
    std::reverse(out.begin(), out.end());
    return BraidWord(strands_, out);
  }

private:
  // Phase-normalized image rounded to the key resolution.
  std::string key(const ComplexMatrix& m) const {
    const double thresh = 0.5 / std::sqrt(static_cast<double>(dim_));
    cplx phase = 1.0;
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (std::abs(m.data()[i]) >= thresh) {
        phase = std::conj(m.data()[i]) / std::abs(m.data()[i]);
        break;
      }
    std::string k;
    k.reserve(m.size() * 2 * sizeof(std::int64_t));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const cplx z = m.data()[i] * phase;
      for (double part : {z.real(), z.imag()}) {
        std::int64_t v = std::llround(part / kResolution);
        k.append(reinterpret_cast<const char*>(&v), sizeof v);
      }
    }
    return k;
  }

  int strands_, dim_, max_len_;
  std::vector<Letter> letters_;
  std::vector<cplx> data_;
  std::vector<std::int64_t> parent_;
  std::vector<std::int8_t> letter_;
  std::vector<std::size_t> level_start_;
};

/// i-th seeded Haar special-unitary target of dimension d.
inline ComplexMatrix net_target(int d, std::uint64_t seed, std::size_t i) {
  CounterRng rng(seed, i, 0);
  return haar_special_unitary(d, rng);
}

struct NetReport {
  Partition diagram;
  int k = 0, r = 0, chirality = 1;
  int dim = 0;
  std::size_t targets = 0;
  std::uint64_t seed = 0;
  std::vector<double> epsilon;      // epsilon[l] for l = 0..max_len
  std::vector<std::size_t> images;  // distinct images of length <= l
  // Least-squares fit l = slope * log^2(1/eps) + intercept over l >= 1.
  double slope = 0, intercept = 0;
  std::size_t fit_points = 0;
};

inline void fit_growth(NetReport& rep) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t l = 1; l < rep.epsilon.size(); ++l) {
    const double e = rep.epsilon[l];
    if (!(e > 0))
      continue;
    const double x = std::pow(std::log(1.0 / e), 2);
    sx += x;
    sy += static_cast<double>(l);
    sxx += x * x;
    sxy += x * static_cast<double>(l);
    ++m;
  }
  rep.fit_points = m;
  const double den = m * sxx - sx * sx;
  if (m < 2 || std::abs(den) < 1e-300)
    return;
  rep.slope = (m * sxy - sx * sy) / den;
  rep.intercept = (sy - rep.slope * sx) / m;
}

/// Covering-radius estimates eps(l), l = 0..max_len: the maximum over the
/// seeded targets of the distance to the nearest word image of length <= l.
inline NetReport covering_profile(const WordNet& net, const Sector& s, std::size_t targets, std::uint64_t seed,
                                  unsigned threads = 1) {
  if (targets < 1)
    throw DomainError("covering radius needs at least one target");
  const int d = net.dim();
  const int L = net.max_length();
  std::vector<std::vector<double>> best(targets, std::vector<double>(L + 1));
  parallel_for(targets, threads, [&](std::size_t t) {
    ComplexMatrix target = net_target(d, seed, t);
    double m = std::numeric_limits<double>::infinity();
    std::size_t idx = 0;
    for (int l = 0; l <= L; ++l) {
      for (const std::size_t end = net.end_of_level(l); idx < end; ++idx)
        m = std::min(m, detail::projective_distance_raw(target.data(), net.raw(idx), d));
      best[t][l] = m;
    }
  });
  NetReport rep;
  rep.diagram = s.shape();
  rep.k = s.params().k;
  rep.r = s.params().r;
  rep.chirality = s.params().chirality;
  rep.dim = d;
  rep.targets = targets;
  rep.seed = seed;
  rep.epsilon.assign(L + 1, 0.0);
  for (int l = 0; l <= L; ++l) {
    for (std::size_t t = 0; t < targets; ++t)
      rep.epsilon[l] = std::max(rep.epsilon[l], best[t][l]);
    rep.images.push_back(net.end_of_level(l));
  }
  fit_growth(rep);
  return rep;
}

inline NetReport covering_profile(const Sector& s, int max_len, std::size_t targets, std::uint64_t seed,
                                  unsigned threads = 1) {
  WordNet net(s, max_len);
  return covering_profile(net, s, targets, seed, threads);
}

inline double covering_radius(const Sector& s, int l, std::size_t targets, std::uint64_t seed) {
  return covering_profile(s, l, targets, seed).epsilon.back();
}

struct NearestWord {
  BraidWord word;
  double dist = 0;
};

/// Scans the net in shortlex order; a later word replaces the current best
/// only if it is closer by more than 1e-12.
inline NearestWord nearest_word(const WordNet& net, const ComplexMatrix& target) {
  if (target.rows() != net.dim() || target.cols() != net.dim())
    throw DomainError("target dimension does not match the sector");
  if (detail::unitarity_defect(target) > 1e-8)
    throw DomainError("target must be unitary");
  ComplexMatrix t = target;
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double dist = detail::projective_distance_raw(t.data(), net.raw(i), net.dim());
    if (dist < best - 1e-12) {
      best = dist;
      arg = i;
    }
  }
  return {net.word(arg), best};
}

inline NearestWord nearest_word(const Sector& s, const ComplexMatrix& target, int max_len) {
  return nearest_word(WordNet(s, max_len), target);
}

} // namespace jwrep

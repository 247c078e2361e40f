#pragma once

// Jones polynomial of a braid closure at q = exp(+-2 pi i / r) as a weighted
// sum of sector traces, and an independent Kauffman-bracket state sum.

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

#include "jwrep/braid.hpp"
#include "jwrep/diagrams.hpp"
#include "jwrep/errors.hpp"
#include "jwrep/hecke.hpp"

namespace jwrep {

struct ClosureData {
  int exponent_sum = 0;
  std::vector<int> permutation; // 0-based image of each strand position
  int components = 0;

  bool is_knot() const { return components == 1; }
};

/// Exponent sum, image in S_n (sigma_i -> (i, i+1)) and number of link components.
inline ClosureData closure_data(const BraidWord& w) {
  ClosureData c;
  const int n = w.strands();
  c.exponent_sum = w.exponent_sum();
  c.permutation.resize(n);
  std::iota(c.permutation.begin(), c.permutation.end(), 0);
  for (const auto& l : w.letters())
    std::swap(c.permutation[l.index - 1], c.permutation[l.index]);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    ++c.components;
    for (int j = i; !seen[j]; j = c.permutation[j])
      seen[j] = true;
  }
  return c;
}

/// w_lambda = [lambda_1 - lambda_2 + 1] / [2].
inline double weight(const Partition& lambda, const HeckeParams& p) {
  if (lambda.num_rows() > 2)
    throw DomainError("weights are defined for diagrams with at most two rows");
  return quantum_integer(lambda.row(0) - lambda.row(1) + 1, p.r) / quantum_integer(2, p.r);
}

struct SectorTrace {
  Partition diagram;
  int dim = 0;
  double weight = 0.0;
  cplx trace;
};

struct JonesEvaluation {
  cplx value;
  int strands = 0;
  int exponent_sum = 0;
  int r = 0;
  int chirality = 1;
  int phase = 0;  // m = r(n-1+e) - 3e mod 2r
  cplx tn_value;  // q^{m/2} sum_lambda w_lambda tr
  std::vector<SectorTrace> sectors;
};

inline int mod_positive(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

/// All sectors of Lambda_n^{(k,r)}, built once.
class SectorFamily {
public:
  SectorFamily(int n, const HeckeParams& p) : n_(n), params_(p) {
    for (const auto& lam : enumerate_diagrams(n, p))
      sectors_.push_back(build_sector(lam, p));
  }

  int strands() const { return n_; }
  const HeckeParams& params() const { return params_; }
  const std::vector<Sector>& sectors() const { return sectors_; }

private:
  int n_;
  HeckeParams params_;
  std::vector<Sector> sectors_;
};

/// Thread-safe cache keyed by (n, k, r, chirality). Entries are immutable.
class SectorCache {
public:
  std::shared_ptr<const SectorFamily> get(int n, const HeckeParams& p) {
    auto key = std::make_tuple(n, p.k, p.r, p.chirality);
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    auto fam = std::make_shared<const SectorFamily>(n, p);
    cache_.emplace(key, fam);
    return fam;
  }

  static SectorCache& global() {
    static SectorCache cache;
    return cache;
  }

private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int, int>, std::shared_ptr<const SectorFamily>> cache_;
};

/// Weighted-trace evaluator for a fixed strand count and k = 2 theory.
class JonesEvaluator {
public:
  JonesEvaluator(int n, const HeckeParams& p) : family_(SectorCache::global().get(n, p)) {
    if (p.k != 2)
      throw DomainError("Jones evaluation uses the k=2 theory");
    for (const auto& s : family_->sectors())
      weights_.push_back(weight(s.shape(), p));
  }

  int strands() const { return family_->strands(); }
  const HeckeParams& params() const { return family_->params(); }

  JonesEvaluation evaluate(const BraidWord& w) const {
    if (w.strands() != strands())
      throw DomainError("word strand count does not match the evaluator");
    const HeckeParams& p = params();
    JonesEvaluation ev;
    ev.strands = strands();
    ev.exponent_sum = w.exponent_sum();
    ev.r = p.r;
    ev.chirality = p.chirality;
    cplx sum = 0.0;
    const auto& sectors = family_->sectors();
    for (std::size_t i = 0; i < sectors.size(); ++i) {
      cplx tr = word_trace(sectors[i], w);
      sum += weights_[i] * tr;
      ev.sectors.push_back({sectors[i].shape(), sectors[i].dim(), weights_[i], tr});
    }
    const int e = ev.exponent_sum;
    const int n = ev.strands;
    const double sign = ((n - 1 + e) % 2 == 0) ? 1.0 : -1.0;
    ev.value = sign * std::pow(p.q_half(), -3 * e) * sum;
    ev.phase = mod_positive(static_cast<long long>(p.r) * (n - 1 + e) - 3LL * e, 2LL * p.r);
    ev.tn_value = std::pow(p.q_half(), ev.phase) * sum;
    return ev;
  }

  cplx value(const BraidWord& w) const { return evaluate(w).value; }

private:
  std::shared_ptr<const SectorFamily> family_;
  std::vector<double> weights_;
};

inline JonesEvaluation jones_eval(const BraidWord& w, const HeckeParams& p) {
  return JonesEvaluator(w.strands(), p).evaluate(w);
}

/// Kauffman bracket of the closed braid diagram, normalized by (-A)^{-3e}.
/// The variable A and the smoothing orientation are chosen once at
/// construction: the first candidate (A^4 = q^{-1} roots first, then A^4 = q)
/// reproducing the weighted-trace values of sigma_1 and sigma_1^2 in B_2 wins.
class KauffmanOracle {
public:
  static constexpr std::size_t kMaxCrossings = 24;

  explicit KauffmanOracle(const HeckeParams& p) {
    HeckeParams p2(2, p.r, p.chirality);
    const cplx target1 = jones_eval(BraidWord(2, {{1, 1}}), p2).value;
    const cplx target2 = jones_eval(BraidWord(2, {{1, 1}, {1, 1}}), p2).value;
    const cplx q = p.q();
    for (cplx base : {1.0 / q, q}) {
      cplx root = std::polar(1.0, std::arg(base) / 4.0);
      for (int j = 0; j < 4; ++j) {
        cplx a = root * std::pow(cplx(0.0, 1.0), j);
        for (bool vertical_a : {true, false}) {
          a_ = a;
          vertical_is_a_ = vertical_a;
          if (std::abs(evaluate(BraidWord(2, {{1, 1}})) - target1) < 1e-9 &&
              std::abs(evaluate(BraidWord(2, {{1, 1}, {1, 1}})) - target2) < 1e-9) {
            a_power_ = (base == q) ? 1 : -1;
            return;
          }
        }
      }
    }
    throw StructuralError("no bracket variable reproduces the B_2 calibration values");
  }

  cplx A() const { return a_; }
  bool vertical_smoothing_is_a() const { return vertical_is_a_; }
  /// +1 when the calibrated A satisfies A^4 = q, -1 when A^4 = q^{-1}.
  int a_fourth_power_sign() const { return a_power_; }

  cplx evaluate(const BraidWord& w) const {
    const std::size_t c = w.length();
    if (c > kMaxCrossings)
      throw ResourceError("state sum over " + std::to_string(c) + " crossings exceeds the budget of " +
                          std::to_string(kMaxCrossings));
    const int n = w.strands();
    const cplx delta = -a_ * a_ - 1.0 / (a_ * a_);
    if (c == 0)
      return std::pow(delta, n - 1);

    const int nodes = static_cast<int>(c) * n;
    std::vector<int> parent(nodes);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    int components = 0;
    auto unite = [&](int x, int y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[x] = y;
        --components;
      }
    };
    // Piece t runs from crossing t to crossing t+1 (cyclically).
    auto id = [n](std::size_t t, int pos) { return static_cast<int>(t) * n + pos; };

    std::vector<cplx> delta_pow(nodes + 1, 1.0);
    for (int i = 1; i <= nodes; ++i)
      delta_pow[i] = delta_pow[i - 1] * delta;

    cplx total = 0.0;
    const std::uint64_t states = 1ULL << c;
    for (std::uint64_t mask = 0; mask < states; ++mask) {
      std::iota(parent.begin(), parent.end(), 0);
      components = nodes;
      int a_minus_b = 0;
      for (std::size_t t = 0; t < c; ++t) {
        const Letter& l = w.letters()[t];
        const std::size_t in = (t + c - 1) % c;
        const bool vertical = (mask >> t) & 1ULL;
        const bool a_smoothing = (vertical == vertical_is_a_) == (l.exponent > 0);
        a_minus_b += a_smoothing ? 1 : -1;
        for (int pos = 0; pos < n; ++pos)
          if (pos != l.index - 1 && pos != l.index)
            unite(id(in, pos), id(t, pos));
        const int i0 = l.index - 1;
        if (vertical) {
          unite(id(in, i0), id(t, i0));
          unite(id(in, i0 + 1), id(t, i0 + 1));
        } else {
          unite(id(in, i0), id(in, i0 + 1));
          unite(id(t, i0), id(t, i0 + 1));
        }
      }
      total += std::pow(a_, a_minus_b) * delta_pow[components - 1];
    }
    return std::pow(-a_, -3 * w.exponent_sum()) * total;
  }

private:
  cplx a_;
  bool vertical_is_a_ = true;
  int a_power_ = -1;
};

inline cplx kauffman_oracle(const BraidWord& w, const HeckeParams& p) { return KauffmanOracle(p).evaluate(w); }

} // namespace jwrep

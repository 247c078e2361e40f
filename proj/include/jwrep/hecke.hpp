#pragma once

// Unitary Jones-Wenzl sectors: projector images of the Hecke generators on
// the admissible-tableau basis and the braid generators q - (1+q) e_i.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jwrep/braid.hpp"
#include "jwrep/diagrams.hpp"
#include "jwrep/errors.hpp"

namespace jwrep {

using ComplexMatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// [m] = sin(m pi / r) / sin(pi / r), the real value of the quantum integer
/// on the branch q^{1/2} = exp(+-pi i / r).
inline double quantum_integer(int m, int r) {
  if (r < 2)
    throw DomainError("quantum_integer needs r >= 2");
  if (m % r == 0)
    return 0.0;
  return std::sin(m * std::numbers::pi / r) / std::sin(std::numbers::pi / r);
}

struct ProjectorEntries {
  double alpha = 0.0;
  double beta = 0.0;
};

/// alpha_{t,i} and beta_{t,i}. When s_i(t) is not an admissible tableau the
/// block is 1x1, beta is 0 and alpha is rounded to exactly 0 or 1.
inline ProjectorEntries projector_entries(const StandardTableau& t, int i, const HeckeParams& p) {
  if (!is_admissible_tableau(t, p))
    throw DomainError("tableau is not admissible");
  if (i < 1 || i >= t.size())
    throw DomainError("projector index out of range");
  const int d = axial_distance(t, i, i + 1);
  const double qd = quantum_integer(d, p.r);
  auto swapped = adjacent_swap(t, i);
  const bool paired = swapped && is_admissible_tableau(*swapped, p);

  if (!swapped) {
    // Same row gives d = -1, same column d = +1.
    return {d > 0 ? 1.0 : 0.0, 0.0};
  }
  if (std::abs(qd) < 1e-12)
    throw NumericalDegeneracy("[d] vanishes at d=" + std::to_string(d) + ", r=" + std::to_string(p.r));
  double alpha = quantum_integer(d + 1, p.r) / (quantum_integer(2, p.r) * qd);
  if (!paired) {
    if (std::abs(alpha) < 1e-10)
      return {0.0, 0.0};
    if (std::abs(alpha - 1.0) < 1e-10)
      return {1.0, 0.0};
    throw StructuralError("unpaired basis vector with alpha=" + std::to_string(alpha));
  }
  if (alpha < -1e-10 || alpha > 1.0 + 1e-10)
    throw StructuralError("alpha outside [0,1] for an admissible swap: " + std::to_string(alpha));
  alpha = std::clamp(alpha, 0.0, 1.0);
  return {alpha, std::sqrt(alpha * (1.0 - alpha))};
}

/// Sparse column view of a generator with at most two nonzeros per column.
struct SparseColumns {
  struct Entry {
    int row;
    cplx value;
  };
  std::vector<std::vector<Entry>> cols;

  static SparseColumns from_dense(const ComplexMatrix& m) {
    SparseColumns s;
    s.cols.resize(m.cols());
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (m(i, j) != cplx(0.0, 0.0))
          s.cols[j].push_back({i, m(i, j)});
    return s;
  }

  /// out = in * this
  void right_multiply(const ComplexMatrix& in, ComplexMatrix& out) const {
    out.resize(in.rows(), in.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto col = out.col(j);
      col.setZero();
      for (const auto& e : cols[j])
        col += in.col(e.row) * e.value;
    }
  }
};

/// An irreducible sector rho_lambda with its ordered tableau basis.
class Sector {
public:
  const HeckeParams& params() const { return params_; }
  const Partition& shape() const { return shape_; }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int strands() const { return shape_.size(); }
  cplx q() const { return params_.q(); }

  /// pi(e_i), i in 1..n-1.
  const ComplexMatrix& projector(int i) const { return projectors_.at(i - 1); }
  /// rho(sigma_i), i in 1..n-1.
  const ComplexMatrix& generator(int i) const { return generators_.at(i - 1); }
  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }
  const std::vector<ComplexMatrix>& generators() const { return generators_; }

  const SparseColumns& sparse_generator(int i, int exponent) const {
    return exponent > 0 ? sparse_gen_.at(i - 1) : sparse_inv_.at(i - 1);
  }

  std::optional<int> index_of(const StandardTableau& t) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t);
    if (it == basis_.end() || !(*it == t))
      return std::nullopt;
    return static_cast<int>(it - basis_.begin());
  }

private:
  friend Sector build_sector(const Partition&, const HeckeParams&);
  explicit Sector(const HeckeParams& p) : params_(p) {}

  HeckeParams params_;
  Partition shape_;
  std::vector<StandardTableau> basis_;
  std::vector<ComplexMatrix> projectors_;
  std::vector<ComplexMatrix> generators_;
  std::vector<SparseColumns> sparse_gen_;
  std::vector<SparseColumns> sparse_inv_;
};

inline Sector build_sector(const Partition& lambda, const HeckeParams& p) {
  if (lambda.empty())
    throw DomainError("sector of the empty diagram");
  if (!is_admissible_diagram(lambda, p))
    throw DomainError("diagram " + lambda.to_string() + " is not (" + std::to_string(p.k) + "," +
                      std::to_string(p.r) + ")-admissible");
  Sector s(p);
  s.shape_ = lambda;
  s.basis_ = enumerate_admissible_tableaux(lambda, p);
  const int d = s.dim();
  const int n = lambda.size();
  const cplx q = p.q();
  for (int i = 1; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
      const auto& t = s.basis_[a];
      ProjectorEntries pe = projector_entries(t, i, p);
      e(a, a) = pe.alpha;
      if (pe.beta > 0.0) {
        auto b = s.index_of(*adjacent_swap(t, i));
        if (!b)
          throw StructuralError("admissible swap missing from basis");
        e(*b, a) = pe.beta;
      }
    }
    ComplexMatrix g = q * ComplexMatrix::Identity(d, d) - (1.0 + q) * e;
    s.sparse_gen_.push_back(SparseColumns::from_dense(g));
    s.sparse_inv_.push_back(SparseColumns::from_dense(g.adjoint()));
    s.projectors_.push_back(std::move(e));
    s.generators_.push_back(std::move(g));
  }
  return s;
}

struct RelationReport {
  double hermitian = 0;   // max |P - P^dagger|
  double idempotent = 0;  // max |P^2 - P|
  double temperley = 0;   // max |(e_i e_j e_i - e_i/[2]^2) - (e_j e_i e_j - e_j/[2]^2)|, |i-j| = 1
  double far_commute = 0; // max |[e_i, e_j]|, |i-j| >= 2
  double generator = 0;   // max |G - (q - (1+q) P)|
  double unitarity = 0;   // max |G G^dagger - I|
  double braid = 0;       // max |G_i G_j G_i - G_j G_i G_j|, |i-j| = 1

  double algebraic() const { return std::max({hermitian, idempotent, temperley, unitarity, braid}); }
  bool pass(double relation_tol = 1e-10, double exact_tol = 1e-12) const {
    return algebraic() <= relation_tol && far_commute <= exact_tol && generator <= exact_tol;
  }
};

/// Frobenius-norm defects of the Hecke, unitarity and braid relations.
inline RelationReport relation_report(const Sector& s) {
  RelationReport rep;
  const int d = s.dim();
  const int m = static_cast<int>(s.projectors().size());
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  const double c = 1.0 / std::pow(quantum_integer(2, s.params().r), 2);
  const cplx q = s.q();
  for (int i = 0; i < m; ++i) {
    const auto& P = s.projectors()[i];
    const auto& G = s.generators()[i];
    rep.hermitian = std::max(rep.hermitian, (P - P.adjoint()).norm());
    rep.idempotent = std::max(rep.idempotent, (P * P - P).norm());
    rep.generator = std::max(rep.generator, (G - (q * I - (1.0 + q) * P)).norm());
    rep.unitarity = std::max(rep.unitarity, (G * G.adjoint() - I).norm());
    for (int j = i + 1; j < m; ++j) {
      const auto& Q = s.projectors()[j];
      if (j == i + 1) {
        const auto& H = s.generators()[j];
        rep.temperley = std::max(rep.temperley, ((P * Q * P - c * P) - (Q * P * Q - c * Q)).norm());
        rep.braid = std::max(rep.braid, (G * H * G - H * G * H).norm());
      } else {
        rep.far_commute = std::max(rep.far_commute, (P * Q - Q * P).norm());
      }
    }
  }
  return rep;
}

/// Left-to-right product of generator images; inverses are adjoints.
inline ComplexMatrix evaluate_word(const Sector& s, const BraidWord& w) {
  if (w.strands() != s.strands())
    throw DomainError("word on " + std::to_string(w.strands()) + " strands evaluated in a sector on " +
                      std::to_string(s.strands()));
  ComplexMatrix acc = ComplexMatrix::Identity(s.dim(), s.dim());
  ComplexMatrix tmp;
  for (const auto& l : w.letters()) {
    s.sparse_generator(l.index, l.exponent).right_multiply(acc, tmp);
    acc.swap(tmp);
  }
  return acc;
}

/// Trace of evaluate_word.
inline cplx word_trace(const Sector& s, const BraidWord& w) { return evaluate_word(s, w).trace(); }

struct SpectrumReport {
  double defect = 0.0;              // max distance of an eigenvalue to {-1, q}
  bool both_present = true;         // every generator has both -1 and q
  bool only_q = true;               // every eigenvalue of every generator is near q
};

inline SpectrumReport spectrum_report(const Sector& s, double presence_tol = 1e-6) {
  SpectrumReport rep;
  const cplx q = s.q();
  for (const auto& g : s.generators()) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(g, false);
    bool has_minus = false;
    bool has_q = false;
    for (int j = 0; j < es.eigenvalues().size(); ++j) {
      cplx ev = es.eigenvalues()(j);
      double dm = std::abs(ev + 1.0);
      double dq = std::abs(ev - q);
      rep.defect = std::max(rep.defect, std::min(dm, dq));
      has_minus |= dm < presence_tol;
      has_q |= dq < presence_tol;
      if (dq >= presence_tol)
        rep.only_q = false;
    }
    rep.both_present &= has_minus && has_q;
  }
  return rep;
}

inline double spectrum_defect(const Sector& s) { return spectrum_report(s).defect; }

/// b-th exterior power of a square matrix in the basis of increasing index
/// subsets (lexicographic).
inline ComplexMatrix exterior_power(const ComplexMatrix& m, int b) {
  const int d = static_cast<int>(m.rows());
  if (b < 0 || b > d)
    throw DomainError("exterior power degree out of range");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == b) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  const int D = static_cast<int>(subsets.size());
  ComplexMatrix out(D, D);
  ComplexMatrix minor(b, b);
  for (int I = 0; I < D; ++I)
    for (int J = 0; J < D; ++J) {
      if (b == 0) {
        out(I, J) = 1.0;
        continue;
      }
      for (int x = 0; x < b; ++x)
        for (int y = 0; y < b; ++y)
          minor(x, y) = m(subsets[I][x], subsets[J][y]);
      out(I, J) = minor.determinant();
    }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i)
    c = c * (n - k + i) / i;
  return c;
}

/// A hook [a+1, 1^b] with b >= 1; a+1 columns and b+1 rows.
struct HookShape {
  int a = 0;
  int b = 0;
};

inline std::optional<HookShape> as_hook(const Partition& h) {
  if (h.num_rows() < 2 || h.row(1) != 1)
    return std::nullopt;
  return HookShape{h.row(0) - 1, static_cast<int>(h.num_rows()) - 1};
}

struct HookEquivalenceReport {
  int case_number = 1;   // 1: a+b < r-1, 2: a+b = r-1
  int dim_hook = 0;
  int dim_reference = 0; // C(burau_dim, b)
  int burau_dim = 0;
  double defect = 0.0;
};

/// Compares |tr| of the hook sector against the b-th exterior power of the
/// (2,r) Burau sector [a+b, 1] on the same strand count. The Burau sector has
/// dimension a+b when a+b < r-1 and a+b-1 when a+b = r-1 (its last
/// truncation [a+b] is then inadmissible).
inline HookEquivalenceReport hook_equivalence_report(const Partition& h, const HeckeParams& p,
                                                     const std::vector<BraidWord>& words) {
  auto hook = as_hook(h);
  if (!hook)
    throw DomainError(h.to_string() + " is not a hook");
  const int ab = hook->a + hook->b;
  HookEquivalenceReport rep;
  if (ab < p.r - 1)
    rep.case_number = 1;
  else if (ab == p.r - 1)
    rep.case_number = 2;
  else
    throw DomainError("hook with a+b > r-1");

  Sector hs = build_sector(h, p);
  Sector burau = build_sector(Partition{ab, 1}, HeckeParams(2, p.r, p.chirality));
  rep.dim_hook = hs.dim();
  rep.burau_dim = burau.dim();
  rep.dim_reference = static_cast<int>(binomial(burau.dim(), hook->b));
  if (rep.dim_hook != rep.dim_reference)
    throw StructuralError("hook sector " + h.to_string() + " has dimension " + std::to_string(rep.dim_hook) +
                          " but the exterior power has " + std::to_string(rep.dim_reference));
  for (const auto& w : words) {
    cplx th = word_trace(hs, w);
    cplx tr = exterior_power(evaluate_word(burau, w), hook->b).trace();
    rep.defect = std::max(rep.defect, std::abs(std::abs(th) - std::abs(tr)));
  }
  return rep;
}

inline double hook_equivalence_defect(const Partition& h, const HeckeParams& p, const std::vector<BraidWord>& words) {
  return hook_equivalence_report(h, p, words).defect;
}

} // namespace jwrep

#pragma once

// Fibonacci theory at r = 5: state-space dimensions of {0,2}-labeled surfaces
// and the two-dimensional representation of the four-holed sphere.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "jwrep/density.hpp"
#include "jwrep/errors.hpp"
#include "jwrep/hecke.hpp"

namespace jwrep {

struct LabeledSurface {
  int genus = 0;
  int m = 0;  // boundary circles labeled 0
  int n2 = 0; // boundary circles labeled 2

  void validate() const {
    if (genus < 0 || m < 0 || n2 < 0)
      throw DomainError("surface genus and boundary counts must be nonnegative");
  }
};

/// 5^{(g-1)/2} (phi^{g+n-1} + (-1)^{g-1} psi^{g+n-1}), rounded. The m labels
/// do not enter.
inline long long space_dim(const LabeledSurface& s) {
  s.validate();
  const double root5 = std::sqrt(5.0);
  const double phi = (1.0 + root5) / 2.0, psi = (1.0 - root5) / 2.0;
  const int h = s.genus + s.n2 - 1;
  const double sign = (s.genus % 2 == 1) ? 1.0 : -1.0;
  const double x = std::pow(5.0, (s.genus - 1) / 2.0) * (std::pow(phi, h) + sign * std::pow(psi, h));
  if (!(std::abs(x) < 9.0e15))
    throw ResourceError("dimension exceeds exact double range");
  const double rounded = std::round(x);
  if (std::abs(x - rounded) > 1e-9 * std::max(1.0, std::abs(x)))
    throw NumericalDegeneracy("dimension formula is not integral: " + std::to_string(x));
  return static_cast<long long>(rounded);
}

inline long long space_dim(int genus, int m, int n2) { return space_dim(LabeledSurface{genus, m, n2}); }

/// Three-holed sphere with labels a, b, c in {0, 2}.
inline int pants_dim(int a, int b, int c) {
  for (int x : {a, b, c})
    if (x != 0 && x != 2)
      throw DomainError("labels must be 0 or 2");
  return a + b + c == 2 ? 0 : 1;
}

/// Sum over the label a of the new boundary pair after cutting along a
/// separating curve: one side keeps genus g1 and (m1, n1) of the original
/// boundary circles, the other side keeps the rest.
inline long long cut_separating(const LabeledSurface& s, int g1, int m1, int n1) {
  s.validate();
  if (g1 < 0 || g1 > s.genus || m1 < 0 || m1 > s.m || n1 < 0 || n1 > s.n2)
    throw DomainError("cut pattern does not fit the surface");
  const int g2 = s.genus - g1, m2 = s.m - m1, n2 = s.n2 - n1;
  return space_dim(g1, m1 + 1, n1) * space_dim(g2, m2 + 1, n2) + space_dim(g1, m1, n1 + 1) * space_dim(g2, m2, n2 + 1);
}

/// Cutting a non-separating curve lowers the genus by one and adds two
/// boundary circles carrying the same label.
inline long long cut_nonseparating(const LabeledSurface& s) {
  s.validate();
  if (s.genus < 1)
    throw DomainError("a genus-zero surface has no non-separating curve");
  return space_dim(s.genus - 1, s.m + 2, s.n2) + space_dim(s.genus - 1, s.m, s.n2 + 2);
}

struct FibRep04 {
  ComplexMatrix sigma1;
  ComplexMatrix fusion;
  ComplexMatrix sigma2;
  ComplexMatrix sign_variant; // alternate sign pattern, not unitary
};

/// sigma1 = diag(e^{4 pi i/5}, -e^{2 pi i/5}); fusion [[c, d], [d, -c]] with
/// c = (sqrt5 - 1)/2, d = sqrt(c); sigma2 = fusion sigma1 fusion.
inline FibRep04 build_rep04() {
  using std::numbers::pi;
  FibRep04 rep;
  const double c = (std::sqrt(5.0) - 1.0) / 2.0;
  const double d = std::sqrt(c);
  rep.sigma1 = ComplexMatrix::Zero(2, 2);
  rep.sigma1(0, 0) = std::polar(1.0, 4.0 * pi / 5.0);
  rep.sigma1(1, 1) = -std::polar(1.0, 2.0 * pi / 5.0);
  rep.fusion.resize(2, 2);
  rep.fusion << c, d, d, -c;
  rep.sign_variant.resize(2, 2);
  rep.sign_variant << c, -d, -d, c;
  rep.sigma2 = rep.fusion * rep.sigma1 * rep.fusion;
  return rep;
}

inline double braid_relation_defect(const FibRep04& rep) {
  return (rep.sigma1 * rep.sigma2 * rep.sigma1 - rep.sigma2 * rep.sigma1 * rep.sigma2).norm();
}

inline double involution_defect(const ComplexMatrix& f) {
  const auto I = ComplexMatrix::Identity(f.rows(), f.cols());
  return std::max((f * f - I).norm(), (f.adjoint() * f - I).norm());
}

struct PowerScan {
  std::optional<int> first_return; // least p with dist(U^p, I) < tol
  int closest_power = 0;           // argmin of dist(U^p, I) over 1..bound
  double closest_distance = 0;
};

inline PowerScan scan_powers(const ComplexMatrix& U, int bound, double tol) {
  if (bound < 1)
    throw DomainError("power bound must be positive");
  if (U.rows() != U.cols() || detail::unitarity_defect(U) > 1e-8)
    throw DomainError("power scan needs a unitary matrix");
  const int d = static_cast<int>(U.rows());
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  ComplexMatrix P = I, next(d, d);
  PowerScan scan;
  scan.closest_distance = std::numeric_limits<double>::infinity();
  for (int p = 1; p <= bound; ++p) {
    next.noalias() = P * U;
    P.swap(next);
    const double dist = detail::projective_distance_raw(P.data(), I.data(), d);
    if (dist < scan.closest_distance) {
      scan.closest_distance = dist;
      scan.closest_power = p;
    }
    if (dist < tol && !scan.first_return)
      scan.first_return = p;
  }
  return scan;
}

/// True iff no power U^p with 1 <= p <= bound lies within projective
/// distance tol of the identity.
inline bool infinite_projective_order(const ComplexMatrix& U, int bound, double tol = 1e-3) {
  return !scan_powers(U, bound, tol).first_return.has_value();
}

/// Exact projective order from the eigenvalue ratio of a 2 x 2 unitary, if
/// that ratio is a root of unity of order <= max_order (to 1e-9).
inline std::optional<int> projective_order_2x2(const ComplexMatrix& U, int max_order = 1000) {
  if (U.rows() != 2 || U.cols() != 2)
    throw DomainError("projective order needs a 2 x 2 matrix");
  Eigen::ComplexEigenSolver<ComplexMatrix> es(U, false);
  const cplx ratio = es.eigenvalues()(0) / es.eigenvalues()(1);
  cplx pw = 1.0;
  for (int p = 1; p <= max_order; ++p) {
    pw *= ratio;
    if (std::abs(pw - 1.0) < 1e-9)
      return p;
  }
  return std::nullopt;
}

} // namespace jwrep

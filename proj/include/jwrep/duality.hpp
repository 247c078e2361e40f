#pragma once

// Rank-level duality: r-tiles, r-conjugation of diagrams and tableaux, the
// signed-permutation intertwiner J, pairing type, and the closed-image
// classifier built on top of them.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "jwrep/diagrams.hpp"
#include "jwrep/errors.hpp"
#include "jwrep/hecke.hpp"

namespace jwrep {

/// k x (r-k) matrix of naturals, rows and columns non-increasing, entries in
/// any row or column differing by at most one.
class RTile {
public:
  RTile(int rows, int cols) : rows_(rows), cols_(cols), t_(rows, std::vector<int>(cols, 0)) {}

  explicit RTile(std::vector<std::vector<int>> entries) : t_(std::move(entries)) {
    rows_ = static_cast<int>(t_.size());
    cols_ = rows_ ? static_cast<int>(t_[0].size()) : 0;
    for (const auto& row : t_)
      if (static_cast<int>(row.size()) != cols_)
        throw DomainError("ragged tile");
    if (!valid())
      throw DomainError("matrix violates the r-tile conditions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return t_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return t_; }

  bool valid() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (t_[i][j] < 0)
          return false;
        if (j + 1 < cols_ && t_[i][j + 1] > t_[i][j])
          return false;
        if (i + 1 < rows_ && t_[i + 1][j] > t_[i][j])
          return false;
      }
    for (int i = 0; i < rows_ && cols_ > 0; ++i)
      if (t_[i][0] - t_[i][cols_ - 1] > 1)
        return false;
    for (int j = 0; j < cols_ && rows_ > 0; ++j)
      if (t_[0][j] - t_[rows_ - 1][j] > 1)
        return false;
    return true;
  }

  RTile transpose() const {
    RTile out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        out.t_[j][i] = t_[i][j];
    return out;
  }

  /// Drops all-zero rows and columns (they sit at the bottom and right).
  RTile trimmed() const {
    int r = 0;
    int c = 0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (t_[i][j] != 0) {
          r = std::max(r, i + 1);
          c = std::max(c, j + 1);
        }
    RTile out(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        out.t_[i][j] = t_[i][j];
    return out;
  }

  /// Sum of the strictly lower-triangular entries t_ij, i > j.
  int lower_sum() const {
    int s = 0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < std::min(i, cols_); ++j)
        s += t_[i][j];
    return s;
  }

  friend bool operator==(const RTile&, const RTile&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<int>> t_;
};

/// t_ij = floor((lambda_i + l - j) / l), l = r - k, 1-based i, j.
inline RTile tile_of(const Partition& lambda, const HeckeParams& p) {
  if (!is_admissible_diagram(lambda, p))
    throw DomainError("diagram " + lambda.to_string() + " is not admissible");
  const int l = p.level();
  std::vector<std::vector<int>> t(p.k, std::vector<int>(l, 0));
  for (int i = 0; i < p.k; ++i)
    for (int j = 1; j <= l; ++j)
      t[i][j - 1] = (lambda.row(i) + l - j) / l;
  return RTile(std::move(t));
}

/// Row sums of a tile.
inline Partition diagram_of(const RTile& tile) {
  std::vector<int> rows;
  for (const auto& row : tile.entries()) {
    int s = 0;
    for (int x : row)
      s += x;
    rows.push_back(s);
  }
  return Partition(std::move(rows));
}

inline bool is_r_symmetric(const Partition& lambda, const HeckeParams& p) {
  RTile t = tile_of(lambda, p).trimmed();
  return t == t.transpose();
}

struct RConjugate {
  Partition diagram;   // lives in the dual theory (r-k, r)
  bool symmetric = false;
};

inline RConjugate r_conjugate(const Partition& lambda, const HeckeParams& p) {
  RTile t = tile_of(lambda, p);
  RTile tt = t.trimmed();
  return {diagram_of(t.transpose()), tt == tt.transpose()};
}

/// The tableau of shape lambda*_r whose every prefix shape is the r-conjugate
/// of the corresponding prefix shape of t. Admissible in p.dual().
inline StandardTableau conjugate_tableau(const StandardTableau& t, const HeckeParams& p) {
  if (!is_admissible_tableau(t, p))
    throw DomainError("tableau is not admissible");
  std::vector<int> seq;
  Partition prev;
  for (int m = 1; m <= t.size(); ++m) {
    Partition cur = r_conjugate(t.prefix_shape(m), p).diagram;
    int added = -1;
    for (std::size_t i = 0; i < std::max(cur.num_rows(), prev.num_rows()); ++i) {
      int diff = cur.row(i) - prev.row(i);
      if (diff == 0)
        continue;
      if (diff != 1 || added != -1)
        throw StructuralError("conjugate prefix shapes do not grow by one box");
      added = static_cast<int>(i);
    }
    if (added == -1)
      throw StructuralError("conjugate prefix shapes do not grow by one box");
    seq.push_back(added);
    prev = std::move(cur);
  }
  return StandardTableau::from_row_sequence(seq);
}

/// The column-filled tableau of shape lambda: 1..n written down each column
/// in turn, left to right.
inline StandardTableau vertical_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.num_rows());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].resize(lambda.row(i));
  int next = 1;
  for (int c = 0; c < lambda.row(0); ++c)
    for (int r = 0; r < lambda.column(c); ++r)
      rows[r][c] = next++;
  return StandardTableau::from_rows(rows);
}

/// Parity of the permutation entry-of-t0-at-box -> entry-of-t-at-box.
inline int tableau_sign(const StandardTableau& t) {
  StandardTableau t0 = vertical_tableau(t.shape());
  const int n = t.size();
  std::vector<int> perm(n + 1, 0);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
      perm[t0.rows()[r][c]] = t.rows()[r][c];
  std::vector<bool> seen(n + 1, false);
  int transpositions = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 ? -1 : 1;
}

/// J: V_lambda -> V_{lambda*}, J v_t = sign(t) v_{t*}, as a real signed
/// permutation matrix (rows index the dual basis).
inline Eigen::MatrixXd duality_matrix(const Partition& lambda, const HeckeParams& p) {
  auto basis = enumerate_admissible_tableaux(lambda, p);
  RConjugate rc = r_conjugate(lambda, p);
  auto dual_basis = enumerate_admissible_tableaux(rc.diagram, p.dual());
  if (basis.size() != dual_basis.size())
    throw StructuralError("r-conjugate sectors differ in dimension");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(static_cast<int>(dual_basis.size()), static_cast<int>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    StandardTableau ts = conjugate_tableau(basis[a], p);
    auto it = std::lower_bound(dual_basis.begin(), dual_basis.end(), ts);
    if (it == dual_basis.end() || !(*it == ts))
      throw StructuralError("conjugate tableau not admissible in the dual theory");
    J(static_cast<int>(it - dual_basis.begin()), static_cast<int>(a)) = tableau_sign(basis[a]);
  }
  return J;
}

/// max_i || rho_{lambda*}(sigma_i) J - J (-q) conj(rho_lambda(sigma_i)) ||_F
inline double verify_duality(const Partition& lambda, const HeckeParams& p) {
  Sector s = build_sector(lambda, p);
  Sector ds = build_sector(r_conjugate(lambda, p).diagram, p.dual());
  ComplexMatrix J = duality_matrix(lambda, p).cast<cplx>();
  const cplx chi = -p.q();
  double defect = 0.0;
  for (int i = 1; i < s.strands(); ++i) {
    ComplexMatrix lhs = ds.generator(i) * J;
    ComplexMatrix rhs = J * (chi * s.generator(i).conjugate());
    defect = std::max(defect, (lhs - rhs).norm());
  }
  return defect;
}

enum class PairingType { Orthogonal, Symplectic, None };

inline const char* to_string(PairingType t) {
  switch (t) {
  case PairingType::Orthogonal: return "Orthogonal";
  case PairingType::Symplectic: return "Symplectic";
  case PairingType::None: return "None";
  }
  return "None";
}

inline PairingType pairing_type(const Partition& lambda, const HeckeParams& p) {
  RTile t = tile_of(lambda, p);
  RTile tt = t.trimmed();
  if (!(tt == tt.transpose()))
    return PairingType::None;
  return t.lower_sum() % 2 ? PairingType::Symplectic : PairingType::Orthogonal;
}

/// For an r-symmetric diagram the two bases coincide and J is an
/// endomorphism of V_lambda: +1 if J^T = J, -1 if J^T = -J, empty otherwise.
inline std::optional<int> duality_symmetry_sign(const Partition& lambda, const HeckeParams& p) {
  if (!r_conjugate(lambda, p).symmetric)
    return std::nullopt;
  if (enumerate_admissible_tableaux(lambda, p) != enumerate_admissible_tableaux(lambda, p.dual()))
    throw StructuralError("r-symmetric diagram with different bases in dual theories");
  Eigen::MatrixXd J = duality_matrix(lambda, p);
  if (J.transpose() == J)
    return 1;
  if (J.transpose() == -J)
    return -1;
  return std::nullopt;
}

enum class ImageFamily { TrivialType, SU, Spin, Sp, FiniteExcluded };

inline const char* to_string(ImageFamily f) {
  switch (f) {
  case ImageFamily::TrivialType: return "TrivialType";
  case ImageFamily::SU: return "SU";
  case ImageFamily::Spin: return "Spin";
  case ImageFamily::Sp: return "Sp";
  case ImageFamily::FiniteExcluded: return "FiniteExcluded";
  }
  return "";
}

struct ImageClassification {
  ImageFamily family = ImageFamily::TrivialType;
  int group_rank = 0;      // N of SU(N) / Spin(N) / Sp(N)
  int weight_index = 0;    // fundamental weight index, 0 when not applicable
  long long dimension = 0; // sector dimension
  PairingType pairing = PairingType::None;
  std::string excluded_reason;
};

/// Predicted identity component (universal cover) of the closed image of
/// rho_lambda. Labels only; no group is constructed.
inline ImageClassification classify_image(const Partition& lambda, const HeckeParams& p, int n) {
  if (lambda.size() != n)
    throw DomainError("diagram " + lambda.to_string() + " does not have " + std::to_string(n) + " boxes");
  ImageClassification c;
  c.dimension = sector_dimension(lambda, p);
  c.pairing = pairing_type(lambda, p);

  if (lambda.is_row() || lambda.is_column() || p.k == p.r - 1) {
    c.family = ImageFamily::TrivialType;
    return c;
  }
  if (p.r == 3 || p.r == 4 || p.r == 6) {
    c.family = ImageFamily::FiniteExcluded;
    c.excluded_reason = "image finite at r=" + std::to_string(p.r);
    return c;
  }
  if (p.r == 10 && (lambda == Partition{2, 1} || lambda == Partition{2, 2})) {
    c.family = ImageFamily::FiniteExcluded;
    c.excluded_reason = lambda == Partition{2, 2} ? "r=10, [2,2]: identity component trivial"
                                                 : "r=10, [2,1]: finite image";
    return c;
  }
  if (auto hook = as_hook(lambda)) {
    // The exterior-power model has Burau rank a+b, dropping to a+b-1 when a+b = r-1.
    int rank = hook->a + hook->b;
    if (rank == p.r - 1)
      rank -= 1;
    c.family = ImageFamily::SU;
    c.group_rank = rank;
    c.weight_index = hook->b;
    return c;
  }
  c.group_rank = static_cast<int>(c.dimension);
  c.weight_index = 1;
  switch (c.pairing) {
  case PairingType::None: c.family = ImageFamily::SU; break;
  case PairingType::Orthogonal: c.family = ImageFamily::Spin; break;
  case PairingType::Symplectic: c.family = ImageFamily::Sp; break;
  }
  return c;
}

} // namespace jwrep

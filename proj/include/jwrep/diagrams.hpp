#pragma once

// Young diagrams, standard tableaux and (k,r)-admissibility.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <compare>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jwrep/errors.hpp"

namespace jwrep {

/// A partition of n stored as its nonzero rows. Trailing zero rows passed to
/// the constructor are dropped, so [2,1,0] == [2,1].
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0)
      rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 0)
        throw DomainError("partition rows must be nonnegative");
      if (i > 0 && rows_[i] > rows_[i - 1])
        throw DomainError("partition rows must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

  std::span<const int> rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }

  /// Row length, zero past the last nonzero row.
  int row(std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }

  int size() const {
    int n = 0;
    for (int x : rows_)
      n += x;
    return n;
  }

  bool empty() const { return rows_.empty(); }

  /// Number of boxes in column c (0-based).
  int column(int c) const {
    int h = 0;
    for (int x : rows_)
      if (x > c)
        ++h;
    return h;
  }

  Partition transpose() const {
    std::vector<int> t;
    for (int c = 0; c < row(0); ++c)
      t.push_back(column(c));
    return Partition(std::move(t));
  }

  bool is_row() const { return rows_.size() <= 1; }
  bool is_column() const { return row(0) <= 1; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(rows_[i]);
    }
    return s + "]";
  }

  /// Parses the bracketed syntax "[3,2,1]"; whitespace is ignored.
  static Partition parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw DomainError("diagram must look like [3,2,1]: '" + std::string(text) + "'");
    std::vector<int> rows;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t next = body.find(',', pos);
      std::string tok = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw DomainError("bad diagram row '" + tok + "'");
      rows.push_back(std::stoi(tok));
      if (next == std::string::npos)
        break;
      pos = next + 1;
      if (pos == body.size())
        throw DomainError("trailing comma in diagram");
    }
    return Partition(std::move(rows));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> rows_;
};

/// Theory parameters: row bound k, root order r, and q = exp(chirality * 2 pi i / r).
struct HeckeParams {
  int k = 2;
  int r = 5;
  int chirality = 1;

  HeckeParams(int k_, int r_, int chirality_ = 1) : k(k_), r(r_), chirality(chirality_) {
    if (k < 1)
      throw DomainError("k must be positive");
    if (r < k + 1)
      throw DomainError("r must be at least k+1");
    if (chirality != 1 && chirality != -1)
      throw DomainError("chirality must be +1 or -1");
  }

  int level() const { return r - k; }

  std::complex<double> q() const {
    return std::polar(1.0, chirality * 2.0 * std::numbers::pi / r);
  }

  /// The fixed square-root branch q^{1/2} = exp(chirality * pi i / r).
  std::complex<double> q_half() const {
    return std::polar(1.0, chirality * std::numbers::pi / r);
  }

  /// Parameters of the rank-level dual theory (r-k, r).
  HeckeParams dual() const { return HeckeParams(r - k, r, chirality); }

  friend bool operator==(const HeckeParams&, const HeckeParams&) = default;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A standard filling of a Young diagram by 1..n. Internally keyed by the
/// row sequence (row of entry 1, ..., row of entry n), which also defines the
/// global basis order.
class StandardTableau {
public:
  /// Builds from rows of entries; throws DomainError if not standard.
  static StandardTableau from_rows(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& r : rows)
      n += static_cast<int>(r.size());
    std::vector<int> seq(n, -1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty())
        throw DomainError("tableau rows must be nonempty");
      if (i > 0 && rows[i].size() > rows[i - 1].size())
        throw DomainError("tableau rows must be weakly decreasing in length");
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        int e = rows[i][j];
        if (e < 1 || e > n || seq[e - 1] != -1)
          throw DomainError("tableau entries must be exactly 1..n");
        seq[e - 1] = static_cast<int>(i);
        if (j > 0 && rows[i][j - 1] >= e)
          throw DomainError("tableau rows must increase");
        if (i > 0 && rows[i - 1][j] >= e)
          throw DomainError("tableau columns must increase");
      }
    }
    return from_row_sequence(seq);
  }

  /// Entry m (1-based) is placed at the end of row seq[m-1]; throws if the
  /// sequence is not a lattice word (some prefix is not a diagram).
  static StandardTableau from_row_sequence(std::span<const int> seq) {
    StandardTableau t;
    t.seq_.assign(seq.begin(), seq.end());
    std::vector<int> lengths;
    for (std::size_t m = 0; m < seq.size(); ++m) {
      int row = seq[m];
      if (row < 0 || row > static_cast<int>(lengths.size()))
        throw DomainError("row sequence skips a row");
      if (row == static_cast<int>(lengths.size())) {
        lengths.push_back(0);
        t.rows_.emplace_back();
      }
      if (row > 0 && lengths[row - 1] <= lengths[row])
        throw DomainError("row sequence is not standard");
      t.cells_.push_back({row, lengths[row]});
      t.rows_[row].push_back(static_cast<int>(m) + 1);
      ++lengths[row];
    }
    t.shape_ = Partition(lengths);
    return t;
  }

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& row_sequence() const { return seq_; }

  bool contains(int entry) const { return entry >= 1 && entry <= size(); }

  Cell cell_of(int entry) const {
    if (!contains(entry))
      throw DomainError("entry " + std::to_string(entry) + " not in tableau");
    return cells_[entry - 1];
  }

  /// Shape of the sub-tableau holding entries 1..m.
  Partition prefix_shape(int m) const {
    std::vector<int> lengths;
    for (int i = 0; i < m; ++i) {
      int row = seq_[i];
      if (row >= static_cast<int>(lengths.size()))
        lengths.resize(row + 1, 0);
      ++lengths[row];
    }
    return Partition(std::move(lengths));
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.seq_ == b.seq_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.seq_ <=> b.seq_; }

private:
  StandardTableau() = default;

  Partition shape_;
  std::vector<int> seq_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> rows_;
};

/// At most k rows and lambda_1 - lambda_k <= r - k, rows padded with zeros.
inline bool is_admissible_diagram(const Partition& lambda, const HeckeParams& p) {
  if (static_cast<int>(lambda.num_rows()) > p.k)
    return false;
  return lambda.row(0) - lambda.row(static_cast<std::size_t>(p.k - 1)) <= p.r - p.k;
}

/// Every prefix shape (entries 1..m, m = 0..n) is an admissible diagram.
inline bool is_admissible_tableau(const StandardTableau& t, const HeckeParams& p) {
  std::vector<int> lengths;
  for (int m = 0; m < t.size(); ++m) {
    int row = t.row_sequence()[m];
    if (row >= static_cast<int>(lengths.size()))
      lengths.resize(row + 1, 0);
    ++lengths[row];
    if (!is_admissible_diagram(Partition(lengths), p))
      return false;
  }
  return true;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0)
    return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

// Depth-first walk over Bratteli paths ending at lambda. Calls visit(seq)
// for every admissible row sequence; rows are tried in increasing order so
// visits happen in basis order.
template <class Visit>
void walk_admissible_paths(const Partition& lambda, const HeckeParams& p, Visit&& visit) {
  const int n = lambda.size();
  const int rows = static_cast<int>(lambda.num_rows());
  std::vector<int> lengths(rows, 0);
  std::vector<int> seq;
  seq.reserve(n);
  auto rec = [&](auto&& self, int m) -> void {
    if (m == n) {
      visit(std::as_const(seq));
      return;
    }
    for (int j = 0; j < rows; ++j) {
      if (lengths[j] >= lambda.row(j))
        continue;
      if (j > 0 && lengths[j - 1] <= lengths[j])
        continue;
      ++lengths[j];
      if (is_admissible_diagram(Partition(lengths), p)) {
        seq.push_back(j);
        self(self, m + 1);
        seq.pop_back();
      }
      --lengths[j];
    }
  };
  rec(rec, 0);
}

} // namespace detail

/// Admissible partitions of n, lexicographically descending ([4,1] before [3,2]).
inline std::vector<Partition> enumerate_diagrams(int n, const HeckeParams& p) {
  if (n < 1)
    throw DomainError("enumerate_diagrams requires n >= 1");
  std::vector<Partition> all;
  std::vector<int> cur;
  detail::partitions_rec(n, n, p.k, cur, all);
  std::vector<Partition> out;
  for (auto& lam : all)
    if (is_admissible_diagram(lam, p))
      out.push_back(std::move(lam));
  return out;
}

/// All admissible standard tableaux of shape lambda, ordered lexicographically
/// by row sequence.
inline std::vector<StandardTableau> enumerate_admissible_tableaux(const Partition& lambda,
                                                                  const HeckeParams& p) {
  if (!is_admissible_diagram(lambda, p))
    throw DomainError("diagram " + lambda.to_string() + " is not admissible");
  std::vector<StandardTableau> out;
  detail::walk_admissible_paths(lambda, p, [&](const std::vector<int>& seq) {
    out.push_back(StandardTableau::from_row_sequence(seq));
  });
  return out;
}

/// (c1 - c2) - (r1 - r2) for the cells holding m1 and m2.
inline int axial_distance(const StandardTableau& t, int m1, int m2) {
  Cell a = t.cell_of(m1);
  Cell b = t.cell_of(m2);
  return (a.col - b.col) - (a.row - b.row);
}

/// s_i(t): interchange entries i and i+1. Empty when the result is not standard.
inline std::optional<StandardTableau> adjacent_swap(const StandardTableau& t, int i) {
  if (i < 1 || i >= t.size())
    throw DomainError("swap index out of range");
  Cell a = t.cell_of(i);
  Cell b = t.cell_of(i + 1);
  // i and i+1 are adjacent in a row or column exactly when the swap breaks standardness.
  if (a.row == b.row || a.col == b.col)
    return std::nullopt;
  std::vector<int> seq = t.row_sequence();
  std::swap(seq[i - 1], seq[i]);
  return StandardTableau::from_row_sequence(seq);
}

/// Admissible diagrams obtained by removing one corner of lambda, ordered by
/// the row of the removed corner.
inline std::vector<Partition> bratteli_children(const Partition& lambda, const HeckeParams& p) {
  if (lambda.empty())
    throw DomainError("empty diagram has no children");
  std::vector<Partition> out;
  auto rows = lambda.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 < rows.size() && rows[i + 1] == rows[i])
      continue;
    std::vector<int> child(rows.begin(), rows.end());
    --child[i];
    Partition mu(std::move(child));
    if (is_admissible_diagram(mu, p))
      out.push_back(std::move(mu));
  }
  return out;
}

/// Dimension of the sector: the number of admissible tableaux of shape lambda.
inline long long sector_dimension(const Partition& lambda, const HeckeParams& p) {
  if (!is_admissible_diagram(lambda, p))
    throw DomainError("diagram " + lambda.to_string() + " is not admissible");
  long long count = 0;
  detail::walk_admissible_paths(lambda, p, [&](const std::vector<int>&) { ++count; });
  return count;
}

} // namespace jwrep

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "jwrep/diagrams.hpp"

using namespace jwrep;

namespace {

long long fib(int k) {
  // F_{-1} = 1, F_0 = 0, F_1 = F_2 = 1.
  if (k == -1)
    return 1;
  long long a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

long long hook_length_count(const Partition& lam) {
  // n! / prod(hooks), accumulated as exact rational steps.
  const int n = lam.size();
  std::vector<int> hooks;
  for (std::size_t i = 0; i < lam.num_rows(); ++i)
    for (int j = 0; j < lam.row(i); ++j)
      hooks.push_back((lam.row(i) - j - 1) + (lam.column(j) - static_cast<int>(i) - 1) + 1);
  long double v = 1;
  for (int i = 2; i <= n; ++i)
    v *= i;
  for (int h : hooks)
    v /= h;
  return std::llround(v);
}

} // namespace

TEST(Partition, TrimsTrailingZerosAndParses) {
  EXPECT_EQ(Partition({3, 2, 0, 0}), Partition({3, 2}));
  EXPECT_EQ(Partition({3, 2}).size(), 5);
  EXPECT_EQ(Partition::parse("[3, 2,1]"), Partition({3, 2, 1}));
  EXPECT_EQ(Partition::parse("[]"), Partition());
  EXPECT_EQ(Partition({4, 1}).to_string(), "[4,1]");
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition::parse("3,2"), DomainError);
  EXPECT_THROW(Partition::parse("[3,,2]"), DomainError);
  EXPECT_EQ(Partition({3, 1}).transpose(), Partition({2, 1, 1}));
}

TEST(HeckeParams, RootOfUnity) {
  for (int r : {3, 5, 7, 12})
    for (int c : {1, -1}) {
      HeckeParams p(2, r, c);
      EXPECT_LT(std::abs(std::pow(p.q(), r) - 1.0), 1e-12);
      EXPECT_GT(std::abs(p.q() - 1.0), 1e-3);
    }
  EXPECT_THROW(HeckeParams(3, 3), DomainError);
  EXPECT_THROW(HeckeParams(2, 5, 0), DomainError);
}

TEST(Admissibility, Examples) {
  EXPECT_TRUE(is_admissible_diagram(Partition({3, 2}), HeckeParams(2, 5)));
  EXPECT_FALSE(is_admissible_diagram(Partition({4}), HeckeParams(2, 5)));
  EXPECT_TRUE(is_admissible_diagram(Partition({2, 2, 2}), HeckeParams(3, 7)));
  EXPECT_FALSE(is_admissible_diagram(Partition({1, 1, 1}), HeckeParams(2, 5)));
}

TEST(EnumerateDiagrams, Examples) {
  EXPECT_EQ(enumerate_diagrams(5, HeckeParams(2, 5)), (std::vector<Partition>{{4, 1}, {3, 2}}));
  EXPECT_EQ(enumerate_diagrams(2, HeckeParams(2, 5)), (std::vector<Partition>{{2}, {1, 1}}));
  auto six = enumerate_diagrams(6, HeckeParams(3, 7));
  EXPECT_NE(std::find(six.begin(), six.end(), Partition({3, 2, 1})), six.end());
  EXPECT_THROW(enumerate_diagrams(0, HeckeParams(2, 5)), DomainError);
}

TEST(EnumerateDiagrams, DescendingLexAndComplete) {
  for (int k : {2, 3})
    for (int r : {5, 7, 9})
      for (int n = 1; n <= 9; ++n) {
        if (r < k + 1)
          continue;
        HeckeParams p(k, r);
        auto ds = enumerate_diagrams(n, p);
        for (std::size_t i = 1; i < ds.size(); ++i)
          EXPECT_TRUE(std::lexicographical_compare(ds[i].rows().begin(), ds[i].rows().end(), ds[i - 1].rows().begin(),
                                                   ds[i - 1].rows().end()));
        // Brute force over compositions bounded by n.
        std::set<std::vector<int>> expect;
        std::vector<int> rows(k, 0);
        std::function<void(int, int, int)> rec = [&](int idx, int left, int cap) {
          if (idx == k) {
            if (left == 0) {
              Partition lam(rows);
              if (is_admissible_diagram(lam, p))
                expect.insert({lam.rows().begin(), lam.rows().end()});
            }
            return;
          }
          for (int v = std::min(left, cap); v >= 0; --v) {
            rows[idx] = v;
            rec(idx + 1, left - v, v);
          }
        };
        rec(0, n, n);
        std::set<std::vector<int>> got;
        for (const auto& d : ds)
          got.insert({d.rows().begin(), d.rows().end()});
        EXPECT_EQ(got, expect) << "n=" << n << " k=" << k << " r=" << r;
      }
}

TEST(Tableaux, Examples) {
  auto t21 = enumerate_admissible_tableaux(Partition({2, 1}), HeckeParams(2, 5));
  ASSERT_EQ(t21.size(), 2u);
  EXPECT_EQ(t21[0].rows(), (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(t21[1].rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));

  auto t41 = enumerate_admissible_tableaux(Partition({4, 1}), HeckeParams(2, 5));
  ASSERT_EQ(t41.size(), 3u);
  for (const auto& t : t41)
    EXPECT_NE(t.rows()[1][0], 5);
  EXPECT_EQ(enumerate_admissible_tableaux(Partition({3, 2}), HeckeParams(2, 5)).size(), 5u);
  EXPECT_THROW(enumerate_admissible_tableaux(Partition({4}), HeckeParams(2, 5)), DomainError);
}

TEST(Tableaux, OrderedByRowSequenceAndStandard) {
  HeckeParams p(3, 8);
  for (const auto& lam : enumerate_diagrams(7, p)) {
    auto ts = enumerate_admissible_tableaux(lam, p);
    for (std::size_t i = 1; i < ts.size(); ++i)
      EXPECT_LT(ts[i - 1].row_sequence(), ts[i].row_sequence());
    for (const auto& t : ts) {
      EXPECT_TRUE(is_admissible_tableau(t, p));
      EXPECT_EQ(t.shape(), lam);
    }
  }
}

TEST(AxialDistance, Examples) {
  auto t = StandardTableau::from_rows({{1, 2}, {3}});
  EXPECT_EQ(axial_distance(t, 1, 2), -1);
  EXPECT_EQ(axial_distance(t, 2, 3), 2);
  auto col = StandardTableau::from_rows({{1}, {2}});
  EXPECT_EQ(axial_distance(col, 1, 2), 1);
  EXPECT_THROW(axial_distance(t, 1, 4), DomainError);
}

TEST(AdjacentSwap, ExamplesAndInvolution) {
  auto t = StandardTableau::from_rows({{1, 2}, {3}});
  auto s = adjacent_swap(t, 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_FALSE(adjacent_swap(t, 1));

  HeckeParams big(3, 12);
  for (const auto& lam : enumerate_diagrams(6, big))
    for (const auto& u : enumerate_admissible_tableaux(lam, big))
      for (int i = 1; i < u.size(); ++i)
        if (auto v = adjacent_swap(u, i)) {
          EXPECT_EQ(*adjacent_swap(*v, i), u);
          EXPECT_EQ(axial_distance(*v, i, i + 1), -axial_distance(u, i, i + 1));
        }
}

TEST(Bratteli, Examples) {
  EXPECT_EQ(bratteli_children(Partition({4, 1}), HeckeParams(2, 5)), (std::vector<Partition>{{3, 1}}));
  auto c21 = bratteli_children(Partition({2, 1}), HeckeParams(2, 5));
  EXPECT_EQ(std::set<Partition>(c21.begin(), c21.end()), (std::set<Partition>{{1, 1}, {2}}));
  EXPECT_EQ(bratteli_children(Partition({1}), HeckeParams(2, 5)), (std::vector<Partition>{Partition()}));
}

TEST(SectorDimension, PublishedValues) {
  EXPECT_EQ(sector_dimension(Partition({3, 2}), HeckeParams(2, 5)), 5);
  EXPECT_EQ(sector_dimension(Partition({2, 2, 1}), HeckeParams(3, 5)), 5);
  EXPECT_EQ(sector_dimension(Partition({3, 2, 1}), HeckeParams(3, 7)), 16);
  // Six-box table at r = 7, each diagram in the theory with k = its row count.
  EXPECT_EQ(sector_dimension(Partition({4, 2}), HeckeParams(2, 7)), 9);
  EXPECT_EQ(sector_dimension(Partition({3, 3}), HeckeParams(2, 7)), 5);
  EXPECT_EQ(sector_dimension(Partition({2, 2, 2}), HeckeParams(3, 7)), 5);
  EXPECT_EQ(sector_dimension(Partition({2, 2, 1, 1}), HeckeParams(4, 7)), 9);
  // Seven boxes.
  EXPECT_EQ(sector_dimension(Partition({5, 2}), HeckeParams(2, 7)), 14);
  EXPECT_EQ(sector_dimension(Partition({4, 3}), HeckeParams(2, 7)), 14);
  EXPECT_EQ(sector_dimension(Partition({4, 2, 1}), HeckeParams(3, 7)), 35);
  EXPECT_EQ(sector_dimension(Partition({3, 2, 2}), HeckeParams(3, 7)), 21);
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(sector_dimension(Partition({n}), HeckeParams(2, n + 2)), 1);
}

TEST(SectorDimension, TwoRowFibonacciAtFive) {
  HeckeParams p(2, 5);
  for (int m = 0; m <= 8; ++m)
    for (int l = m; l <= m + 3 && l + m <= 16; ++l) {
      if (l == 0)
        continue;
      long long expect = l == m ? fib(2 * m - 1) : l == m + 1 ? fib(2 * m + 1) : fib(2 * m + 2);
      EXPECT_EQ(sector_dimension(Partition({l, m}), p), expect) << "[" << l << "," << m << "]";
    }
}

TEST(SectorDimension, HookLengthWhenUnconstrained) {
  // With r - k >= n no truncation is ever inadmissible.
  for (int k : {2, 3})
    for (int n = 1; n <= 9; ++n) {
      HeckeParams p(k, n + k);
      for (const auto& lam : enumerate_diagrams(n, p))
        EXPECT_EQ(sector_dimension(lam, p), hook_length_count(lam)) << lam.to_string();
    }
}

TEST(SectorDimension, BratteliAdditivity) {
  for (int k : {2, 3, 4})
    for (int r = k + 1; r <= 12; ++r) {
      HeckeParams p(k, r);
      for (int n = 2; n <= 9; ++n)
        for (const auto& lam : enumerate_diagrams(n, p)) {
          long long sum = 0;
          for (const auto& mu : bratteli_children(lam, p))
            sum += sector_dimension(mu, p);
          EXPECT_EQ(sector_dimension(lam, p), sum) << lam.to_string() << " k=" << k << " r=" << r;
          EXPECT_EQ(static_cast<long long>(enumerate_admissible_tableaux(lam, p).size()), sum);
        }
    }
}

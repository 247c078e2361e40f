#include <gtest/gtest.h>

#include "jwrep/duality.hpp"
#include "jwrep/random.hpp"

using namespace jwrep;

namespace {

using Grid = std::vector<std::vector<int>>;

bool trivial_type(const Partition& lam, const HeckeParams& p) {
  return lam.is_row() || lam.is_column() || p.k == p.r - 1;
}

} // namespace

TEST(Tile, Examples) {
  EXPECT_EQ(tile_of(Partition({3, 2}), HeckeParams(2, 5)).entries(), (Grid{{1, 1, 1}, {1, 1, 0}}));
  EXPECT_EQ(tile_of(Partition(), HeckeParams(2, 5)).entries(), (Grid{{0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(tile_of(Partition({2, 1}), HeckeParams(2, 5)).entries(), (Grid{{1, 1, 0}, {1, 0, 0}}));
  EXPECT_THROW(RTile(Grid{{2, 0}}), DomainError);
  EXPECT_THROW(RTile(Grid{{0, 1}}), DomainError);
}

TEST(RConjugate, Examples) {
  auto a = r_conjugate(Partition({3, 2}), HeckeParams(2, 5));
  EXPECT_EQ(a.diagram, Partition({2, 2, 1}));
  EXPECT_FALSE(a.symmetric);
  auto b = r_conjugate(Partition({2, 1}), HeckeParams(2, 5));
  EXPECT_EQ(b.diagram, Partition({2, 1}));
  EXPECT_TRUE(b.symmetric);
  auto c = r_conjugate(Partition({3, 2, 1}), HeckeParams(3, 7));
  EXPECT_EQ(c.diagram, Partition({3, 2, 1}));
  EXPECT_TRUE(c.symmetric);
}

TEST(Tile, RoundTripAndTranspose) {
  for (int r = 3; r <= 12; ++r)
    for (int k = 1; k < r; ++k) {
      HeckeParams p(k, r);
      for (int n = 1; n <= 9; ++n)
        for (const auto& lam : enumerate_diagrams(n, p)) {
          RTile t = tile_of(lam, p);
          EXPECT_EQ(diagram_of(t), lam);
          RConjugate c = r_conjugate(lam, p);
          ASSERT_TRUE(is_admissible_diagram(c.diagram, p.dual())) << lam.to_string();
          EXPECT_EQ(r_conjugate(c.diagram, p.dual()).diagram, lam);
          EXPECT_EQ(tile_of(c.diagram, p.dual()).trimmed(), t.transpose().trimmed());
          if (n <= 8) {
            const long long d = sector_dimension(lam, p);
            EXPECT_EQ(d, sector_dimension(c.diagram, p.dual()));
            if (c.symmetric && !trivial_type(lam, p))
              EXPECT_EQ(d % 2, 0) << lam.to_string() << " r=" << r;
          }
        }
    }
}

TEST(ConjugateTableau, SwapsAndInvolution) {
  HeckeParams p(2, 5);
  auto ts = enumerate_admissible_tableaux(Partition({2, 1}), p);
  EXPECT_EQ(conjugate_tableau(ts[0], p), ts[1]);
  EXPECT_EQ(conjugate_tableau(ts[1], p), ts[0]);

  auto a = enumerate_admissible_tableaux(Partition({3, 2}), p);
  auto b = enumerate_admissible_tableaux(Partition({2, 2, 1}), p.dual());
  ASSERT_EQ(a.size(), 5u);
  ASSERT_EQ(b.size(), 5u);
  std::set<std::vector<int>> images;
  for (const auto& t : a) {
    StandardTableau c = conjugate_tableau(t, p);
    EXPECT_EQ(c.shape(), Partition({2, 2, 1}));
    EXPECT_EQ(conjugate_tableau(c, p.dual()), t);
    images.insert(c.row_sequence());
  }
  EXPECT_EQ(images.size(), 5u);
}

TEST(DualityMatrix, Examples) {
  HeckeParams p(2, 5);
  Eigen::MatrixXd J = duality_matrix(Partition({2, 1}), p);
  Eigen::MatrixXd expect(2, 2);
  expect << 0, 1, -1, 0;
  EXPECT_TRUE(J == expect || J == -expect) << J;
  Eigen::MatrixXd J5 = duality_matrix(Partition({3, 2}), p);
  EXPECT_EQ(J5.rows(), 5);
  EXPECT_TRUE(J5 * J5.transpose() == Eigen::MatrixXd::Identity(5, 5));
  EXPECT_EQ(J5.cwiseAbs().sum(), 5.0);
}

TEST(VerifyDuality, Examples) {
  EXPECT_LT(verify_duality(Partition({2, 1}), HeckeParams(2, 5)), 1e-10);
  EXPECT_LT(verify_duality(Partition({3, 2}), HeckeParams(2, 5)), 1e-10);
  for (int n = 2; n <= 5; ++n)
    EXPECT_LT(verify_duality(Partition({n}), HeckeParams(2, 7)), 1e-14);
}

TEST(VerifyDuality, AllSmallSectors) {
  for (int r = 3; r <= 10; ++r)
    for (int k = 1; k < r; ++k) {
      HeckeParams p(k, r);
      for (int n = 2; n <= 6; ++n)
        for (const auto& lam : enumerate_diagrams(n, p))
          EXPECT_LT(verify_duality(lam, p), 1e-10) << lam.to_string() << " k=" << k << " r=" << r;
    }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing_type(Partition({2, 1}), HeckeParams(2, 5)), PairingType::Symplectic);
  EXPECT_EQ(pairing_type(Partition({3, 2, 1}), HeckeParams(3, 7)), PairingType::Orthogonal);
  EXPECT_EQ(pairing_type(Partition({3, 2}), HeckeParams(2, 5)), PairingType::None);
  EXPECT_EQ(duality_symmetry_sign(Partition({2, 1}), HeckeParams(2, 5)), -1);
  EXPECT_EQ(duality_symmetry_sign(Partition({3, 2, 1}), HeckeParams(3, 7)), 1);
  EXPECT_FALSE(duality_symmetry_sign(Partition({3, 2}), HeckeParams(2, 5)));
}

TEST(Pairing, SymmetrySignMatchesParity) {
  int symmetric = 0;
  for (int r = 4; r <= 10; ++r)
    for (int k = 1; k < r; ++k) {
      HeckeParams p(k, r);
      for (int n = 2; n <= 7; ++n)
        for (const auto& lam : enumerate_diagrams(n, p)) {
          PairingType pt = pairing_type(lam, p);
          auto sign = duality_symmetry_sign(lam, p);
          if (pt == PairingType::None) {
            EXPECT_FALSE(sign);
            continue;
          }
          ++symmetric;
          ASSERT_TRUE(sign) << lam.to_string();
          EXPECT_EQ(*sign, pt == PairingType::Symplectic ? -1 : 1) << lam.to_string() << " k=" << k << " r=" << r;
        }
    }
  EXPECT_GT(symmetric, 20);
}

TEST(Classify, Examples) {
  for (int m = 2; m <= 5; ++m) {
    auto c = classify_image(Partition({m, 1}), HeckeParams(2, m + 5), m + 1);
    EXPECT_EQ(c.family, ImageFamily::SU);
    EXPECT_EQ(c.group_rank, m);
    EXPECT_EQ(c.weight_index, 1);
  }
  auto s = classify_image(Partition({3, 2, 1}), HeckeParams(3, 7), 6);
  EXPECT_EQ(s.family, ImageFamily::Spin);
  EXPECT_EQ(s.group_rank, 16);
  EXPECT_EQ(classify_image(Partition({2, 2}), HeckeParams(2, 10), 4).family, ImageFamily::FiniteExcluded);
  EXPECT_EQ(classify_image(Partition({2, 1}), HeckeParams(2, 10), 3).family, ImageFamily::FiniteExcluded);
  EXPECT_EQ(classify_image(Partition({3}), HeckeParams(2, 5), 3).family, ImageFamily::TrivialType);
  EXPECT_EQ(classify_image(Partition({2, 1}), HeckeParams(2, 3), 3).family, ImageFamily::TrivialType);
  EXPECT_EQ(classify_image(Partition({2, 2}), HeckeParams(2, 6), 4).family, ImageFamily::FiniteExcluded);
  EXPECT_EQ(classify_image(Partition({2, 1}), HeckeParams(2, 5), 3).family, ImageFamily::SU);
  EXPECT_EQ(classify_image(Partition({3, 2}), HeckeParams(2, 5), 5).group_rank, 5);
  EXPECT_THROW(classify_image(Partition({3, 2}), HeckeParams(2, 5), 4), DomainError);
}

TEST(Classify, LabelsCarryConsistentData) {
  for (int r : {5, 7, 8, 9, 11})
    for (int k = 2; k <= 3 && k < r - 1; ++k) {
      HeckeParams p(k, r);
      for (int n = 3; n <= 7; ++n)
        for (const auto& lam : enumerate_diagrams(n, p)) {
          auto c = classify_image(lam, p, n);
          if (c.family == ImageFamily::Spin || c.family == ImageFamily::Sp) {
            EXPECT_TRUE(r_conjugate(lam, p).symmetric);
            EXPECT_EQ(c.group_rank, c.dimension);
          }
          if (c.family == ImageFamily::SU && !as_hook(lam))
            EXPECT_EQ(c.group_rank, c.dimension);
        }
    }
}

TEST(TraceSeparation, DistinctSectorsOfEqualDimension) {
  for (int k : {2, 3})
    for (int r : {5, 7, 8}) {
      HeckeParams p(k, r);
      for (int n = 3; n <= 7; ++n) {
        auto ds = enumerate_diagrams(n, p);
        std::vector<BraidWord> words;
        for (int i = 0; i < 500; ++i) {
          CounterRng rng(2024 + n, i);
          words.push_back(random_word(n, 1 + rng.below(12), rng));
        }
        for (std::size_t a = 0; a < ds.size(); ++a)
          for (std::size_t b = a + 1; b < ds.size(); ++b) {
            if (trivial_type(ds[a], p) || trivial_type(ds[b], p))
              continue;
            if (sector_dimension(ds[a], p) != sector_dimension(ds[b], p))
              continue;
            if (p.k == p.r - p.k && r_conjugate(ds[a], p).diagram == ds[b])
              continue;
            // Transposes satisfy sigma -> -q sigma^{-1}, which preserves |trace| word by word.
            if (ds[a].transpose() == ds[b])
              continue;
            Sector sa = build_sector(ds[a], p), sb = build_sector(ds[b], p);
            bool separated = false;
            for (const auto& w : words)
              if (std::abs(std::abs(word_trace(sa, w)) - std::abs(word_trace(sb, w))) > 1e-4) {
                separated = true;
                break;
              }
            EXPECT_TRUE(separated) << ds[a].to_string() << " vs " << ds[b].to_string() << " k=" << k << " r=" << r;
          }
      }
    }
}

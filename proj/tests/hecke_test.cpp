#include <gtest/gtest.h>

#include "jwrep/hecke.hpp"
#include "jwrep/random.hpp"

using namespace jwrep;

namespace {

std::vector<BraidWord> words(int n, int count, int max_len, std::uint64_t seed) {
  std::vector<BraidWord> out;
  for (int i = 0; i < count; ++i) {
    CounterRng rng(seed, i);
    out.push_back(random_word(n, 1 + rng.below(max_len), rng));
  }
  return out;
}

double off(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

} // namespace

TEST(QuantumInteger, Values) {
  EXPECT_DOUBLE_EQ(quantum_integer(1, 5), 1.0);
  EXPECT_EQ(quantum_integer(5, 5), 0.0);
  EXPECT_NEAR(quantum_integer(2, 5), 1.6180339887, 1e-10);
  for (int r : {5, 7, 12})
    for (int m = 1; m < 2 * r; ++m) {
      EXPECT_NEAR(quantum_integer(-m, r), -quantum_integer(m, r), 1e-14);
      // [m] = (q^{m/2} - q^{-m/2}) / (q^{1/2} - q^{-1/2}) at q^{1/2} = e^{pi i/r}.
      cplx h = std::polar(1.0, std::numbers::pi / r);
      cplx v = (std::pow(h, m) - std::pow(h, -m)) / (h - 1.0 / h);
      EXPECT_NEAR(quantum_integer(m, r), v.real(), 1e-12);
      EXPECT_NEAR(v.imag(), 0.0, 1e-12);
    }
}

TEST(ProjectorEntries, Examples) {
  HeckeParams p(2, 5);
  auto a = projector_entries(StandardTableau::from_rows({{1, 2}, {3}}), 2, p);
  EXPECT_NEAR(a.alpha, 0.6180339887, 1e-10);
  EXPECT_NEAR(a.beta, 0.4858682718, 1e-10);
  auto b = projector_entries(StandardTableau::from_rows({{1, 3}, {2}}), 2, p);
  EXPECT_NEAR(b.alpha, 0.3819660113, 1e-10);
  EXPECT_NEAR(b.beta, a.beta, 1e-14);
  auto c = projector_entries(StandardTableau::from_rows({{1, 2}, {3}}), 1, p);
  EXPECT_EQ(c.alpha, 0.0);
  EXPECT_EQ(c.beta, 0.0);
  auto d = projector_entries(StandardTableau::from_rows({{1, 3}, {2}}), 1, p);
  EXPECT_EQ(d.alpha, 1.0);
  EXPECT_THROW(projector_entries(StandardTableau::from_rows({{1, 2}, {3}}), 3, p), DomainError);
}

TEST(BuildSector, SmallSectors) {
  HeckeParams p(2, 5);
  Sector row = build_sector(Partition({2}), p);
  ASSERT_EQ(row.dim(), 1);
  EXPECT_LT(std::abs(row.generator(1)(0, 0) - p.q()), 1e-12);
  Sector col = build_sector(Partition({1, 1}), p);
  EXPECT_LT(std::abs(col.generator(1)(0, 0) + 1.0), 1e-12);
  Sector s21 = build_sector(Partition({2, 1}), p);
  ASSERT_EQ(s21.dim(), 2);
  EXPECT_NEAR(std::abs(s21.generator(2)(1, 0)), std::abs(1.0 + p.q()) * 0.4858682718, 1e-10);
  EXPECT_NEAR(std::abs(s21.generator(2)(0, 1)), std::abs(1.0 + p.q()) * 0.4858682718, 1e-10);
  EXPECT_THROW(build_sector(Partition({4}), p), DomainError);
  EXPECT_THROW(build_sector(Partition(), p), DomainError);
}

TEST(BuildSector, RelationsHoldAcrossTheories) {
  for (int k : {2, 3})
    for (int r : {5, 7, 8, 12})
      for (int n = 2; n <= 6; ++n) {
        HeckeParams p(k, r);
        for (const auto& lam : enumerate_diagrams(n, p)) {
          Sector s = build_sector(lam, p);
          RelationReport rep = relation_report(s);
          EXPECT_TRUE(rep.pass()) << lam.to_string() << " k=" << k << " r=" << r << " defect " << rep.algebraic();
          EXPECT_EQ(s.dim(), sector_dimension(lam, p));
        }
      }
}

TEST(BuildSector, ChiralityConjugates) {
  for (const auto& lam : enumerate_diagrams(5, HeckeParams(2, 7))) {
    Sector a = build_sector(lam, HeckeParams(2, 7, 1));
    Sector b = build_sector(lam, HeckeParams(2, 7, -1));
    for (int i = 1; i < lam.size(); ++i)
      EXPECT_LT(off(a.generator(i).conjugate(), b.generator(i)), 1e-12);
  }
}

TEST(EvaluateWord, Basics) {
  HeckeParams p(2, 5);
  Sector s = build_sector(Partition({3, 2}), p);
  EXPECT_LT(off(evaluate_word(s, BraidWord(5, {})), ComplexMatrix::Identity(5, 5)), 1e-15);
  for (int i = 1; i < 5; ++i)
    EXPECT_LT(off(evaluate_word(s, BraidWord(5, {{i, 1}, {i, -1}})), ComplexMatrix::Identity(5, 5)), 1e-12);
  ComplexMatrix w = evaluate_word(s, BraidWord::parse(5, "1 -2 3"));
  ComplexMatrix expect = s.generator(1) * s.generator(2).adjoint() * s.generator(3);
  EXPECT_LT(off(w, expect), 1e-12);
  EXPECT_THROW(evaluate_word(s, BraidWord(4, {})), DomainError);
}

TEST(Spectrum, Examples) {
  HeckeParams p(2, 5);
  auto r21 = spectrum_report(build_sector(Partition({2, 1}), p));
  EXPECT_LT(r21.defect, 1e-8);
  EXPECT_TRUE(r21.both_present);
  auto r3 = spectrum_report(build_sector(Partition({3}), p));
  EXPECT_LT(r3.defect, 1e-8);
  EXPECT_TRUE(r3.only_q);
  EXPECT_LT(spectrum_defect(build_sector(Partition({3, 2}), p)), 1e-8);
}

TEST(Spectrum, TwoEigenvaluesInNonTrivialSectors) {
  for (int k : {2, 3})
    for (int r : {5, 7, 9})
      for (int n = 3; n <= 6; ++n) {
        HeckeParams p(k, r);
        for (const auto& lam : enumerate_diagrams(n, p)) {
          Sector s = build_sector(lam, p);
          auto rep = spectrum_report(s);
          EXPECT_LT(rep.defect, 1e-8);
          if (s.dim() >= 2)
            EXPECT_TRUE(rep.both_present) << lam.to_string() << " r=" << r;
        }
      }
}

TEST(Restriction, CharactersSplitOverChildren) {
  // Generators 1..n-2 never move entry n, so the trace of any word in B_{n-1}
  // is the sum of the child traces.
  for (int k : {2, 3})
    for (int r : {5, 7}) {
      HeckeParams p(k, r);
      for (int n = 3; n <= 7; ++n)
        for (const auto& lam : enumerate_diagrams(n, p)) {
          Sector s = build_sector(lam, p);
          auto kids = bratteli_children(lam, p);
          std::vector<Sector> ks;
          for (const auto& mu : kids)
            ks.push_back(build_sector(mu, p));
          for (const auto& w : words(n - 1, 10, 8, 77 + n)) {
            cplx sum = 0.0;
            for (const auto& c : ks)
              sum += word_trace(c, w);
            EXPECT_LT(std::abs(word_trace(s, w.widen(n)) - sum), 1e-10);
          }
        }
    }
}

TEST(ExteriorPower, DimensionsAndMultiplicativity) {
  ComplexMatrix a = ComplexMatrix::Random(4, 4), b = ComplexMatrix::Random(4, 4);
  for (int m = 0; m <= 4; ++m) {
    EXPECT_EQ(exterior_power(a, m).rows(), binomial(4, m));
    EXPECT_LT(off(exterior_power(a * b, m), exterior_power(a, m) * exterior_power(b, m)), 1e-10);
  }
  EXPECT_NEAR(std::abs(exterior_power(a, 4)(0, 0) - a.determinant()), 0.0, 1e-12);
}

TEST(HookEquivalence, BurauItself) {
  for (int m : {2, 3, 4}) {
    HeckeParams p(2, m + 4);
    auto rep = hook_equivalence_report(Partition({m, 1}), p, words(m + 1, 30, 10, 5));
    EXPECT_EQ(rep.case_number, 1);
    EXPECT_LT(rep.defect, 1e-12);
  }
}

TEST(HookEquivalence, SecondExteriorPower) {
  for (int r : {7, 8, 9}) {
    HeckeParams p(3, r);
    auto rep = hook_equivalence_report(Partition({2, 1, 1}), p, words(4, 50, 10, 11));
    EXPECT_EQ(rep.dim_hook, 3);
    EXPECT_LT(rep.defect, 1e-8);
  }
}

TEST(HookEquivalence, BoundaryCase) {
  auto rep = hook_equivalence_report(Partition({4, 1}), HeckeParams(2, 5), words(5, 50, 10, 3));
  EXPECT_EQ(rep.case_number, 2);
  EXPECT_EQ(rep.dim_hook, 3);
  EXPECT_EQ(rep.dim_reference, 3);
  EXPECT_LT(rep.defect, 1e-8);
  auto rep2 = hook_equivalence_report(Partition({3, 1, 1}), HeckeParams(3, 5), words(5, 50, 10, 4));
  EXPECT_EQ(rep2.case_number, 2);
  EXPECT_EQ(rep2.dim_hook, rep2.dim_reference);
  EXPECT_LT(rep2.defect, 1e-8);
  EXPECT_THROW(hook_equivalence_report(Partition({3, 2}), HeckeParams(2, 5), {}), DomainError);
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "smz/qsym.hpp"
#include "smz/zeta.hpp"

using namespace smz;

namespace {

std::vector<QSym> basis_upto(int w) {
  std::vector<QSym> out;
  for (int n = 1; n <= w; ++n)
    for (const auto& c : compositions_of(n)) {
      out.push_back(monomial(c));
      out.push_back(essential(c));
      out.push_back(fundamental(c));
    }
  return out;
}

// Hand-expanded quasi-shuffle, independent of the library product.
std::map<Composition, long> stuffle(const Composition& a, const Composition& b) {
  if (a.empty()) return {{b, 1}};
  if (b.empty()) return {{a, 1}};
  std::map<Composition, long> out;
  Composition ar(a.begin() + 1, a.end()), br(b.begin() + 1, b.end());
  auto prepend = [&](int x, const std::map<Composition, long>& m) {
    for (const auto& [c, k] : m) {
      Composition d{x};
      d.insert(d.end(), c.begin(), c.end());
      out[d] += k;
    }
  };
  prepend(a[0], stuffle(ar, b));
  prepend(b[0], stuffle(a, br));
  prepend(a[0] + b[0], stuffle(ar, br));
  return out;
}

}  // namespace

TEST(Compositions, CountsAndNeighbours) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(compositions_of(n).size(), 1u << (n - 1));
  EXPECT_EQ(coarsenings({1, 2, 3}).size(), 4u);
  EXPECT_EQ(refinements({3}).size(), 4u);
  EXPECT_EQ(str({2, 1}), "[2,1]");
}

TEST(QSym, ParseAndPrint) {
  QSym x = parse_qsym("M[2,1] - 2 M[3] + M[]");
  EXPECT_EQ(x.str(), "M[] + M[2,1] - 2 M[3]");
  EXPECT_EQ(parse_qsym("E[1,1]"), monomial({1, 1}) + monomial({2}));
  EXPECT_EQ(parse_qsym("F[2]"), monomial({2}) + monomial({1, 1}));
  EXPECT_EQ(parse_qsym("F[1,1]"), monomial({1, 1}));
  EXPECT_EQ(parse_qsym("F[2,1]"), monomial({2, 1}) + monomial({1, 1, 1}));
  EXPECT_THROW(parse_qsym("M[2,"), std::invalid_argument);
  EXPECT_EQ(x.to_json()["M"][0][0], nlohmann::json::array());
}

TEST(QSym, ProductIsTheQuasiShuffle) {
  for (const auto& a : compositions_of(3))
    for (const auto& b : compositions_of(2)) {
      QSym expect;
      for (const auto& [c, k] : stuffle(a, b)) expect.add(c, k);
      EXPECT_EQ(monomial(a) * monomial(b), expect);
    }
}

TEST(QSym, ProductIsCommutativeAndAssociative) {
  auto B = basis_upto(2);
  for (const auto& x : B)
    for (const auto& y : B) {
      EXPECT_EQ(x * y, y * x);
      for (const auto& z : B) ASSERT_EQ((x * y) * z, x * (y * z));
    }
  EXPECT_EQ(QSym::unit() * monomial({2, 1}), monomial({2, 1}));
}

TEST(Antipode, IsAnInvolutionUpToWeightSix) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& c : compositions_of(n)) ASSERT_EQ(antipode(antipode(monomial(c))), monomial(c)) << str(c);
}

TEST(Antipode, BothFormulasAgreeUpToWeightSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : compositions_of(n)) ASSERT_TRUE(antipode_formulas(c).equal) << str(c);
}

TEST(Antipode, IsMultiplicative) {
  auto B = basis_upto(3);
  for (const auto& x : B)
    for (const auto& y : B) ASSERT_EQ(antipode(x * y), antipode(x) * antipode(y));
}

TEST(Antipode, SmallValues) {
  EXPECT_EQ(antipode(monomial({1})), -monomial({1}));
  // S(M_{2,1}) = E_{1,2} = M_{1,2} + M_{3}
  EXPECT_EQ(antipode(monomial({2, 1})), monomial({1, 2}) + monomial({3}));
}

TEST(Essential, ConversionsBothWays) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : compositions_of(n)) {
      EXPECT_TRUE(m_by_e(c).equal) << str(c);
      EXPECT_TRUE(e_by_m(c).equal) << str(c);
    }
}

TEST(Realize, HomomorphismOnBasisProducts) {
  auto B = basis_upto(4);
  for (std::size_t i = 0; i < B.size(); i += 2)
    for (std::size_t j = 1; j < B.size(); j += 3) ASSERT_EQ(realize(B[i] * B[j], 4, 8), realize(B[i], 4, 8) * realize(B[j], 4, 8));
}

TEST(Realize, MonomialInTwoVariables) {
  // M_{1,2}(t1, t2) = t1 t2^2
  TruncatedPoly p = realize(monomial({1, 2}), 2, 3);
  TruncatedPoly q(2, 3);
  q.add({1, 2}, 1);
  EXPECT_EQ(p, q);
}

TEST(Rho, TruncatedZetaValues) {
  EXPECT_EQ(rho_N(monomial({1, 2}), 3), Rational(5, 12));
  EXPECT_EQ(rho_N(essential({1, 2}), 3), oracle::nested({1, 2}, 3, true));
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : compositions_of(n))
      for (long N = 0; N <= 4; ++N) {
        EXPECT_EQ(rho_N(monomial(c), N), oracle::nested(c, N, false));
        EXPECT_EQ(rho_N(essential(c), N), oracle::nested(c, N, true));
      }
}

TEST(Rho, IntertwinesSchurWithTruncatedSums) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& t : oracle::fillings(SkewShape(lam), 2))
        for (long N = 1; N <= 4; ++N) ASSERT_EQ(rho_N(schur_qsym(t), N), oracle::ssyt_sum(t, N));
}

TEST(Schur, SignedFormAgrees) {
  for (const auto& s : {SkewShape{Partition{3, 1}}, SkewShape{Partition{2, 2}}, SkewShape{Partition{3, 2}, Partition{1}}})
    for (const auto& t : oracle::fillings(s, 2)) EXPECT_EQ(schur_qsym_signed_E(t), schur_qsym(t));
}

TEST(Schur, RimSumsOnDiagonalFillings) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      SkewShape s(lam);
      for (const auto& a : all_diagonal_maps(s, {1, 2})) {
        auto t = diagonal_tableau(s, a);
        EXPECT_EQ(schur_rim_H(t), schur_qsym(t)) << lam.str();
        EXPECT_EQ(schur_rim_E(t), schur_qsym(t)) << lam.str();
      }
    }
}

// gamma_11 = 1, gamma_12 = 2, gamma_13 = 4, gamma_21 = 8, so every sum of entries is distinct.
TEST(AntipodeSchur, ThreeOneExample) {
  auto t = Tableau<int>::from_rows(SkewShape{Partition{3, 1}}, {{1, 2, 4}, {8}});
  QSym lhs = antipode(schur_qsym(t));
  auto sharp = anti_transpose(t);
  EXPECT_EQ(sharp.shape(), (SkewShape{Partition{2, 2, 2}, Partition{1, 1}}));
  EXPECT_EQ(schur_qsym(sharp), lhs);
  QSym E = parse_qsym(
      "E[8,4,2,1] - E[12,2,1] - E[8,6,1] - E[8,4,3] + E[14,1] + E[12,3] + E[8,7] + E[4,8,2,1] - E[4,8,3] + E[4,2,8,1]"
      " - E[6,8,1] - E[4,10,1]");
  EXPECT_EQ(E, lhs);
  // sixth term is M[4,2,8,1], not a second M[4,10,1]
  QSym M = parse_qsym("M[8,4,2,1] + M[12,2,1] + M[4,10,1] + M[4,8,2,1] + M[4,2,9] + M[4,2,8,1]");
  EXPECT_EQ(M, lhs);
  QSym H = essential({4}) * essential({2}) * essential({8, 1}) - essential({2, 4}) * essential({8, 1}) -
           essential({4}) * essential({8, 1, 2}) + essential({8, 1, 2, 4});
  EXPECT_EQ(H, lhs);
  QSym Erim = monomial({8}) * monomial({4, 2, 1}) - monomial({4, 2, 1, 8});
  EXPECT_EQ(Erim, lhs);
  // the rim sums hold here even though the filling is not diagonal
  EXPECT_EQ(schur_rim_H(sharp), lhs);
  EXPECT_EQ(schur_rim_E(sharp), lhs);
}

TEST(AntipodeSchur, RibbonsAndStraightShapesUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<SkewShape> shapes = oracle::ribbons(n);
    for (const auto& lam : partitions_of(n)) shapes.emplace_back(lam);
    for (const auto& s : shapes)
      for (const auto& t : oracle::fillings(s, 3)) {
        auto r = antipode_schur_identity(t);
        ASSERT_TRUE(r.equal) << s.str();
        ASSERT_GE(r.sides.size(), is_diagonal(t) ? 4u : 2u);
      }
  }
}

TEST(QuasiJacobiTrudi, SkewShapes) {
  for (const auto& s : {SkewShape{Partition{3, 2, 2}}, SkewShape{Partition{3, 2}, Partition{1}}, SkewShape{Partition{4, 3, 2}, Partition{2, 1}}}) {
    DiagMap a;
    auto [lo, hi] = s.content_range();
    for (int k = lo; k <= hi; ++k) a[k] = 1 + (k + 7) % 3;
    EXPECT_TRUE(jt_quasi(s, a, RimKind::H).equal) << s.str();
    EXPECT_TRUE(jt_quasi(s, a, RimKind::E).equal) << s.str();
  }
}

TEST(QuasiGiambelli, ThreeTwoTwoAndFourThreeThreeTwo) {
  DiagMap c{{-3, 2}, {-2, 1}, {-1, 2}, {0, 3}, {1, 2}, {2, 1}, {3, 1}};
  EXPECT_TRUE(giambelli_quasi(Partition{3, 2, 2}, c).equal);
  EXPECT_TRUE(giambelli_quasi(Partition{4, 3, 3, 2}, c).equal);
}

TEST(QuasiDualCauchy, IdentityAndItsAntipodeImage) {
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 3; ++s) {
      DiagMap c, d;
      for (int k = -3; k <= 3; ++k) {
        c[k] = 1 + (k + 9) % 3;
        d[k] = 1 + (k + 8) % 2;
      }
      EXPECT_TRUE(dual_cauchy_quasi(r, s, c, d).equal) << r << s;
      EXPECT_TRUE(dual_cauchy_antipode(r, s, c, d).equal) << r << s;
    }
}

TEST(QSymReport, Json) {
  auto r = antipode_formulas({2, 1});
  auto j = r.to_json();
  EXPECT_EQ(j["identity"], "antipode-formulas");
  EXPECT_EQ(j["verdict"], "equal");
}

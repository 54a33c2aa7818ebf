#include <gtest/gtest.h>

#include "mmt/charpoly.hpp"
#include "oracles.hpp"

using namespace mmt;

namespace {

// Determinant of a rational matrix by Gaussian elimination.
Rational gauss_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t s = c; s < n; ++s) a[r][s] -= f * a[c][s];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> random_rows(oracle::Gen& gen, int m) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m));
  for (auto& row : rows)
    for (int j = 0; j < m; ++j) row.emplace_back(gen.integer(-4, 4));
  return rows;
}

}  // namespace

TEST(CharCoeffs, IdentityGivesSignedElementary) {
  for (int m = 1; m <= 5; ++m) {
    auto c = char_coeffs(scale_rows_by_t(SymMatrix::identity(m)));
    ASSERT_EQ(c.size(), static_cast<std::size_t>(m) + 1);
    for (int r = 0; r <= m; ++r) {
      Poly e = elementary_sym(r, m);
      EXPECT_EQ(c[static_cast<std::size_t>(r)], r % 2 == 0 ? e : -e) << m << "," << r;
    }
  }
}

TEST(CharCoeffs, SymbolicTwoByTwo) {
  auto c = char_coeffs(scale_rows_by_t(SymMatrix::symbolic(2)));
  Poly t1 = Poly::t(1), t2 = Poly::t(2);
  EXPECT_EQ(c[0], Poly(1));
  EXPECT_EQ(c[1], -(t1 * Poly::a(1, 1) + t2 * Poly::a(2, 2)));
  EXPECT_EQ(c[2], t1 * t2 * (Poly::a(1, 1) * Poly::a(2, 2) - Poly::a(1, 2) * Poly::a(2, 1)));
}

TEST(CharCoeffs, DiagonalMatrix) {
  auto a = SymMatrix::from_rationals({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  auto c = char_coeffs(a);
  // (x-2)(x-3)(x-5) = x^3 - 10x^2 + 31x - 30
  EXPECT_EQ(c, (std::vector<Poly>{Poly(1), Poly(-10), Poly(31), Poly(-30)}));
}

TEST(CharCoeffs, MatchesEvaluatedDeterminant) {
  oracle::Gen gen(31);
  for (int n = 0; n < 40; ++n) {
    int m = gen.integer(1, 4);
    auto rows = random_rows(gen, m);
    auto c = char_coeffs(SymMatrix::from_rationals(rows));
    for (int lambda = -3; lambda <= 3; ++lambda) {
      auto shifted = rows;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              (i == j ? Rational(lambda) : Rational(0)) - rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Rational value = 0;
      for (int r = 0; r <= m; ++r) {
        Rational lp = 1;
        for (int s = 0; s < m - r; ++s) lp *= lambda;
        value += c[static_cast<std::size_t>(r)].constant_term() * lp;
      }
      ASSERT_EQ(value, gauss_det(shifted));
    }
  }
}

TEST(PartialPerms, Counts) {
  EXPECT_EQ(enumerate_partial_perms(3, 0).size(), 1u);
  EXPECT_EQ(enumerate_partial_perms(3, 1).size(), 3u);
  EXPECT_EQ(enumerate_partial_perms(3, 2).size(), 6u);
  EXPECT_EQ(enumerate_partial_perms(3, 3).size(), 6u);
  EXPECT_EQ(enumerate_partial_perms(4, 2).size(), 12u);
  EXPECT_THROW(enumerate_partial_perms(3, 4), std::invalid_argument);
}

TEST(PartialPerms, EmptyHasUnitWeight) {
  auto empty = enumerate_partial_perms(2, 0);
  EXPECT_EQ(empty[0].weight(SymMatrix::symbolic(2)), Poly(1));
  EXPECT_EQ(empty[0].inv(), 0u);
}

TEST(PartialPerms, CorrectedExpansionEqualsCharCoeffs) {
  for (int m = 1; m <= 4; ++m) {
    auto ta = scale_rows_by_t(SymMatrix::symbolic(m));
    EXPECT_EQ(partial_perm_expansion(ta, SignConvention::corrected), char_coeffs(ta)) << m;
  }
}

TEST(PartialPerms, PrintedConventionDiffersAtOddDegree) {
  auto ta = scale_rows_by_t(SymMatrix::symbolic(3));
  auto printed = partial_perm_expansion(ta, SignConvention::printed);
  auto c = char_coeffs(ta);
  for (std::size_t r = 0; r < c.size(); ++r) EXPECT_EQ(printed[r], r % 2 == 0 ? c[r] : -c[r]);
}

TEST(Alpha, Table) {
  for (int k = 2; k <= 6; ++k)
    for (int r = 0; r <= 12; ++r) {
      EXPECT_EQ(alpha(r, k), k * (r / k));
      EXPECT_EQ(alpha(r, k) % k, 0);
      EXPECT_LE(r - alpha(r, k), k - 1);
    }
  EXPECT_EQ(alpha(7, 3), 6);
  EXPECT_EQ(alpha(4, 3), 3);
}

TEST(SecondFactor, CommutativeCaseIsDeterminant) {
  for (int m = 2; m <= 4; ++m) {
    auto a = SymMatrix::symbolic(m);
    EXPECT_EQ(second_factor(a, AlgebraParams(m, 2)), det_identity_minus(scale_rows_by_t(a))) << m;
  }
}

TEST(SecondFactor, IdentityMatrix) {
  auto e = [](int r, int m) { return elementary_sym(r, m); };
  EXPECT_EQ(second_factor(SymMatrix::identity(3), AlgebraParams(3, 3)), Poly(1) - e(1, 3) + e(3, 3));
  EXPECT_EQ(second_factor(SymMatrix::identity(4), AlgebraParams(4, 3)), Poly(1) - e(1, 4) + e(3, 4) - e(4, 4));
  EXPECT_EQ(second_factor(SymMatrix::identity(4), AlgebraParams(4, 4)), Poly(1) - e(1, 4) + e(4, 4));
}

TEST(SecondFactor, DimensionMismatch) {
  EXPECT_THROW(second_factor(SymMatrix::identity(3), AlgebraParams(4, 2)), std::invalid_argument);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(SymMatrix::from_rationals({{1, 2}, {3, 4}})), Poly(-2));
  EXPECT_EQ(determinant(SymMatrix::identity(4)), Poly(1));
  EXPECT_EQ(det_identity_minus(SymMatrix::zero(3)), Poly(1));
}

// Properties

TEST(CharPolyProperty, ExpansionRoutesAgreeOnRandomMatrices) {
  oracle::Gen gen(32);
  for (int n = 0; n < 30; ++n) {
    int m = gen.integer(1, 4);
    auto ta = scale_rows_by_t(SymMatrix::from_rationals(random_rows(gen, m)));
    ASSERT_EQ(partial_perm_expansion(ta), char_coeffs(ta));
  }
}

TEST(CharPolyProperty, DiagonalScaling) {
  // Scaling A by a diagonal matrix D on the left is the same as substituting t_i -> d_i t_i.
  oracle::Gen gen(33);
  for (int n = 0; n < 20; ++n) {
    int m = gen.integer(2, 4);
    auto rows = random_rows(gen, m);
    std::vector<int> d(static_cast<std::size_t>(m));
    for (auto& x : d) x = gen.integer(1, 3);
    auto scaled = rows;
    for (int i = 0; i < m; ++i)
      for (auto& x : scaled[static_cast<std::size_t>(i)]) x *= d[static_cast<std::size_t>(i)];
    Poly lhs = second_factor(SymMatrix::from_rationals(scaled), AlgebraParams(m, 2));
    Poly rhs;
    const Poly base = second_factor(SymMatrix::from_rationals(rows), AlgebraParams(m, 2));
    for (const auto& [mono, c] : base.terms()) {
      Rational factor = c;
      for (const auto& [v, e] : mono.entries())
        for (std::uint32_t s = 0; s < e; ++s) factor *= d[static_cast<std::size_t>(v.i - 1)];
      rhs.add_term(mono, factor);
    }
    ASSERT_EQ(lhs, rhs);
  }
}

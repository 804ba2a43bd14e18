#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "property_checks.hpp"
#include "ratweyl/matrix.hpp"
#include "ratweyl/weyl.hpp"

using namespace ratweyl;
using namespace ratweyl::testing;

namespace {

/// Column k of a signed permutation matrix has its entry in row sigma(k).
std::vector<std::size_t> column_perm(const QMatrix& m) {
  std::vector<std::size_t> sigma(m.size() + 1, 0);
  for (std::size_t k = 1; k <= m.size(); ++k) {
    for (std::size_t r = 1; r <= m.size(); ++r) {
      if (sgn(m(r, k)) != 0) sigma[k] = r;
    }
  }
  return sigma;
}

/// e_a - e_b in simple-root coordinates of A_{n-1}.
Root difference_root(std::size_t n, std::size_t a, std::size_t b) {
  Root out{std::vector<int>(n - 1, 0)};
  const int sign = a < b ? 1 : -1;
  for (std::size_t k = std::min(a, b); k < std::max(a, b); ++k) out.coeffs[k - 1] = sign;
  return out;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(parse_rational("abc"), PreconditionError);
  EXPECT_THROW(parse_rational(""), PreconditionError);
}

TEST(QMatrix, ArithmeticAndInverse) {
  const QMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a(2, 1), Rational(3));
  EXPECT_EQ(a.at(0, 1), Rational(2));
  EXPECT_EQ(a.determinant(), Rational(-2));
  EXPECT_EQ(a * a.inverse(), QMatrix::identity(2));
  const QMatrix inv = a.inverse();
  EXPECT_EQ(inv(1, 1), Rational(-2));
  EXPECT_EQ(inv(2, 1), Rational(3, 2));
  EXPECT_THROW((QMatrix{{1, 2}, {2, 4}}).inverse(), PreconditionError);
  EXPECT_THROW(QMatrix::identity(2) * QMatrix::identity(3), PreconditionError);
  EXPECT_EQ((QMatrix{{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}).determinant(), Rational(1));
}

TEST(QMatrix, ShapePredicates) {
  EXPECT_TRUE(is_upper_borel(QMatrix{{2, 5}, {0, 1}}));
  EXPECT_FALSE(is_upper_borel(QMatrix{{2, 5}, {0, 0}}));
  EXPECT_FALSE(is_upper_borel(QMatrix{{2, 5}, {1, 1}}));
  EXPECT_TRUE(is_unit_lower(QMatrix{{1, 0}, {7, 1}}));
  EXPECT_FALSE(is_unit_lower(QMatrix{{2, 0}, {7, 1}}));
  EXPECT_TRUE(is_diagonal(QMatrix{{2, 0}, {0, 3}}));
  EXPECT_FALSE(is_diagonal(QMatrix{{2, 1}, {0, 3}}));
}

TEST(Gauss, WorkedExample) {
  const GaussPair lu = gauss_decompose(QMatrix{{3, 4}, {6, 13}});
  EXPECT_EQ(lu.lower, (QMatrix{{1, 0}, {2, 1}}));
  EXPECT_EQ(lu.upper, (QMatrix{{3, 4}, {0, 5}}));
}

TEST(Gauss, ReportsTheVanishingMinor) {
  try {
    gauss_decompose(QMatrix{{0, 1}, {1, 0}});
    FAIL();
  } catch (const NotGenericError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  try {
    gauss_decompose(QMatrix{{1, 2, 3}, {2, 4, 5}, {1, 1, 1}});
    FAIL();
  } catch (const NotGenericError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(Gauss, RoundTripOnRandomMatrices) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    const QMatrix g = random_generic_matrix(n, rng);
    const GaussPair lu = gauss_decompose(g);
    EXPECT_TRUE(is_unit_lower(lu.lower));
    EXPECT_TRUE(is_upper_borel(lu.upper));
    EXPECT_EQ(lu.lower * lu.upper, g);
    EXPECT_EQ(lower_part(g), lu.lower);
    EXPECT_EQ(upper_part(g), lu.upper);
  }
}

TEST(Gauss, PropertySuite) {
  const PropertyResult r = check_gaussian_suite();
  EXPECT_EQ(r.cases, 1000u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(Chevalley, RankOneCommutation) {
  const Rational t1 = 1, t2 = 2, d = 1 + t1 * t2;
  EXPECT_EQ(chevalley_x(2, 1, t1) * chevalley_y(2, 1, t2),
            chevalley_y(2, 1, t2 / d) * torus_h(2, 1, d) * chevalley_x(2, 1, t1 / d));
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int k = 0; k < 100; ++k) {
    const Rational a = Rational(dist(rng)) / (1 + std::abs(dist(rng)));
    const Rational b = Rational(dist(rng)) / (1 + std::abs(dist(rng)));
    const Rational e = 1 + a * b;
    if (sgn(e) == 0) continue;
    EXPECT_EQ(chevalley_x(3, 2, a) * chevalley_y(3, 2, b),
              chevalley_y(3, 2, b / e) * torus_h(3, 2, e) * chevalley_x(3, 2, a / e));
  }
}

TEST(Chevalley, CommutatorsAndAdditivity) {
  // distant indices commute; adjacent ones generate E_{13}
  EXPECT_EQ(chevalley_x(4, 1, 3) * chevalley_y(4, 3, 5), chevalley_y(4, 3, 5) * chevalley_x(4, 1, 3));
  EXPECT_EQ(chevalley_x(4, 1, 3) * chevalley_x(4, 3, 5), chevalley_x(4, 3, 5) * chevalley_x(4, 1, 3));
  const QMatrix comm = chevalley_x(3, 1, 1) * chevalley_x(3, 2, 1) * chevalley_x(3, 1, -1) * chevalley_x(3, 2, -1);
  QMatrix e13 = QMatrix::identity(3);
  e13(1, 3) = 1;
  EXPECT_EQ(comm, e13);
  EXPECT_NE(chevalley_x(3, 1, 1) * chevalley_x(3, 2, 1), chevalley_x(3, 2, 1) * chevalley_x(3, 1, 1));
  EXPECT_EQ(chevalley_y(3, 2, 2) * chevalley_y(3, 2, Rational(1, 3)), chevalley_y(3, 2, Rational(7, 3)));
  EXPECT_EQ(torus_h(2, 1, 4) * torus_h(2, 1, Rational(1, 4)), QMatrix::identity(2));
  EXPECT_THROW(chevalley_x(3, 3, 1), PreconditionError);
  EXPECT_THROW(chevalley_y(3, 0, 1), PreconditionError);
  EXPECT_THROW(torus_h(3, 1, 0), PreconditionError);
}

TEST(Representative, SimpleReflections) {
  EXPECT_EQ(dot_s(2, 1), (QMatrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(dot_s(2, 1) * dot_s(2, 1), (QMatrix{{-1, 0}, {0, -1}}));
  EXPECT_EQ(representative(3, {}), QMatrix::identity(3));
  EXPECT_EQ(representative(3, {1, 2}), dot_s(3, 1) * dot_s(3, 2));
}

TEST(Representative, BraidRelations) {
  for (std::size_t n : {3, 4, 5}) {
    for (int i = 1; i + 1 < static_cast<int>(n); ++i) {
      EXPECT_EQ(representative(n, {i, i + 1, i}), representative(n, {i + 1, i, i + 1}));
    }
  }
  EXPECT_EQ(representative(4, {1, 3}), representative(4, {3, 1}));
}

TEST(Representative, PermutationMatchesWeylAction) {
  std::mt19937_64 rng(47);
  for (std::size_t n : {3, 4, 5}) {
    const RootSystem rs(gl_weyl_type(n));
    for (int trial = 0; trial < 20; ++trial) {
      const WeylElement u = random_element(rs, rng);
      const Word w = reduced_word(rs, u);
      const QMatrix rep = representative(n, w);
      const auto sigma = column_perm(rep);
      for (int j = 1; j < static_cast<int>(n); ++j) {
        const auto jj = static_cast<std::size_t>(j);
        EXPECT_EQ(act(rs, u, simple_root(rs, j)), difference_root(n, sigma[jj], sigma[jj + 1]));
        // u y_j u^{-1} is a root subgroup at E_{u(j+1), u(j)}
        const QMatrix conj = rep * chevalley_y(n, j, 1) * rep.inverse();
        QMatrix expect = QMatrix::identity(n);
        expect(sigma[jj + 1], sigma[jj]) = conj(sigma[jj + 1], sigma[jj]);
        EXPECT_EQ(conj, expect);
        EXPECT_EQ(abs(conj(sigma[jj + 1], sigma[jj])), Rational(1));
      }
    }
  }
}

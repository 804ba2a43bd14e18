#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "property_checks.hpp"
#include "ratweyl/decompose.hpp"

using namespace ratweyl;
using namespace ratweyl::testing;

namespace {

const QMatrix kPermW0{{0, 1}, {1, 0}};

}  // namespace

TEST(W0Solution, GL2WorkedExample) {
  const QMatrix x{{1, 2}, {3, 4}};
  const Solution s = w0_solution(x, kPermW0);
  EXPECT_EQ(s.n_part, (QMatrix{{1, 0}, {2, 1}}));
  EXPECT_EQ(s.b_part, (QMatrix{{2, 5}, {0, 1}}));
  EXPECT_TRUE(verify_solution(x, s));
}

TEST(W0Solution, GL2ClosedForm) {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 50) {
    const QMatrix x = random_decomposable_matrix(2, rng);
    if (sgn(x(1, 2)) == 0) continue;
    ++checked;
    const Solution s = w0_solution(x, kPermW0);
    const Rational det = x.determinant();
    EXPECT_EQ(s.n_part, chevalley_y(2, 1, x(2, 2) / x(1, 2)));
    EXPECT_EQ(s.b_part(1, 1), x(1, 2));
    EXPECT_EQ(s.b_part(1, 2), x(1, 1) + x(2, 2));
    EXPECT_EQ(s.b_part(2, 1), Rational(0));
    EXPECT_EQ(s.b_part(2, 2), -det / x(1, 2));
  }
}

TEST(W0Solution, BorelTimesW0HasTrivialN) {
  std::mt19937_64 rng(59);
  for (std::size_t n : {2, 3, 4}) {
    const QMatrix w0 = w0_representative(n);
    const QMatrix b = random_upper_borel(n, rng);
    const Solution s = w0_solution(b * w0, w0);
    EXPECT_EQ(s.n_part, QMatrix::identity(n));
    EXPECT_EQ(s.b_part, b);
  }
}

TEST(W0Solution, NonGenericInput) {
  EXPECT_THROW(w0_solution(QMatrix{{1, 0}, {3, 4}}, kPermW0), NotGenericError);
}

TEST(Solve, LongestWordStabilizesImmediately) {
  std::mt19937_64 rng(61);
  for (std::size_t n : {2, 3, 4}) {
    const QMatrix g = random_decomposable_matrix(n, rng);
    const SolveResult r = solve(g, w0_word(n));
    EXPECT_EQ(r.trace.verdict.to_string(), "Stabilized(0)");
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(verify_solution(g, *r.solution));
  }
}

TEST(Solve, RationalElementsStabilizeExactly) {
  std::mt19937_64 rng(67);
  std::size_t redraws = 0;
  for (std::size_t n : {3, 4}) {
    const auto words = rational_words(n);
    EXPECT_EQ(words.size(), n == 3 ? 3u : 7u);
    for (const Word& w : words) {
      for (int seed = 0; seed < 20; ++seed) {
        const auto [g, r] = generic_solve(n, w, rng, redraws);
        ASSERT_TRUE(r.ok()) << "GL" << n << " u = " << word_to_string(w) << ": " << r.trace.verdict.to_string();
        EXPECT_TRUE(verify_solution(g, *r.solution));
        EXPECT_EQ(r.solution->n_part * r.solution->b_part * representative(n, w) * r.solution->n_part.inverse(), g);
        EXPECT_EQ(r.trace.p_terms.size(), r.trace.n_terms.size());
      }
    }
  }
  EXPECT_LT(redraws, 5u);
}

TEST(Solve, CoxeterInGL3StabilizesWithinTwoSteps) {
  std::mt19937_64 rng(71);
  std::size_t redraws = 0;
  for (int k = 0; k < 20; ++k) {
    const SolveResult r = generic_solve(3, {1, 2}, rng, redraws).result;
    ASSERT_TRUE(r.ok());
    EXPECT_LE(r.solution->iterations, 2);
  }
}

TEST(Solve, NonRationalElementsDoNotStabilize) {
  std::mt19937_64 rng(73);
  std::size_t redraws = 0;
  for (const Word& w : {Word{}, Word{1}, Word{2}}) {
    for (int seed = 0; seed < 20; ++seed) {
      const SolveResult r = generic_solve(3, w, rng, redraws).result;
      EXPECT_EQ(r.trace.verdict.to_string(), "NotStabilized(64)") << word_to_string(w);
      EXPECT_FALSE(r.ok());
      EXPECT_EQ(r.trace.p_terms.size(), 65u);
    }
  }
  const SolveResult r = solve(QMatrix{{1, 2}, {3, 4}}, Word{}, {std::nullopt, 10});
  EXPECT_EQ(r.trace.verdict.to_string(), "NotStabilized(10)");
}

TEST(Solve, NonGenericBaseIsStepZero) {
  const SolveResult r = solve(QMatrix::identity(3), Word{1, 2});
  EXPECT_EQ(r.trace.verdict.to_string(), "NotGeneric(0)");
  EXPECT_FALSE(r.ok());
}

TEST(Solve, RejectsBadInput) {
  EXPECT_THROW(solve(QMatrix::identity(3), Word{3}), PreconditionError);
  EXPECT_THROW(solve(QMatrix{{1, 2}, {3, 4}}, Word{1}, {std::nullopt, -1}), PreconditionError);
  EXPECT_THROW(solve(QMatrix{{1, 2}, {3, 4}}, representative(3, {1}), std::nullopt), PreconditionError);
}

TEST(Solve, RepresentativeChoiceOnlyRescalesB) {
  std::mt19937_64 rng(79);
  for (const Word& w : rational_words(4)) {
    const QMatrix g = random_decomposable_matrix(4, rng);
    const QMatrix u = representative(4, w);
    const QMatrix h = random_diagonal(4, rng);
    const SolveResult a = solve(g, u, std::nullopt);
    const SolveResult b = solve(g, u * h, std::nullopt);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_TRUE(verify_solution(g, *b.solution));
    EXPECT_EQ(b.solution->n_part, a.solution->n_part);
    EXPECT_EQ(b.solution->b_part, a.solution->b_part * u * h.inverse() * u.inverse());
  }
}

TEST(Solve, RelativeBaseAgreesWithDefault) {
  std::mt19937_64 rng(83);
  for (const Word& v : {Word{2, 1}, Word{2, 1, 2}}) {
    for (const Word& w : rational_words(3)) {
      const QMatrix g = random_decomposable_matrix(3, rng);
      const SolveResult base = solve(g, w);
      const SolveResult rel = solve(g, w, {v, 64});
      ASSERT_TRUE(base.ok());
      ASSERT_TRUE(rel.ok()) << word_to_string(v) << " / " << word_to_string(w) << " " << rel.trace.verdict.to_string();
      EXPECT_TRUE(verify_solution(g, *rel.solution));
      EXPECT_EQ(rel.solution->n_part, base.solution->n_part);
      EXPECT_EQ(rel.solution->b_part, base.solution->b_part);
    }
  }
  // a base that is itself no solution is rejected
  EXPECT_THROW(solve(random_decomposable_matrix(3, rng), Word{1, 2}, {Word{1}, 64}), PreconditionError);
}

TEST(NFromB, MatchesSolver) {
  std::mt19937_64 rng(89);
  const QMatrix w0 = w0_representative(3);
  const QMatrix g = random_decomposable_matrix(3, rng);
  const SolveResult r = solve(g, {1, 2});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(n_from_b(g, r.solution->b_part, r.solution->representative, w0), r.solution->n_part);
  const PropertyResult p = check_n_from_b();
  EXPECT_EQ(p.failures, 0u) << p.first_failure;
}

TEST(ConjugationInvariance, Examples) {
  std::mt19937_64 rng(97);
  EXPECT_TRUE(conjugation_invariance_check(random_decomposable_matrix(3, rng), QMatrix::identity(3), {1, 2}));
  EXPECT_TRUE(conjugation_invariance_check(random_decomposable_matrix(3, rng), random_unit_lower(3, rng), {1, 2}));
  EXPECT_TRUE(conjugation_invariance_check(QMatrix{{1, 2}, {3, 4}}, chevalley_y(2, 1, 5), {1}));
  EXPECT_THROW(conjugation_invariance_check(QMatrix{{1, 2}, {3, 4}}, chevalley_x(2, 1, 5), {1}), PreconditionError);
  EXPECT_THROW(conjugation_invariance_check(random_decomposable_matrix(3, rng), QMatrix::identity(3), {1}),
               PreconditionError);
  const PropertyResult p = check_conjugation_invariance();
  EXPECT_GT(p.cases, 0u);
  EXPECT_EQ(p.failures, 0u) << p.first_failure;
}

TEST(FixerWitness, WorkedExample) {
  const QMatrix b{{2, 2}, {0, 3}};
  const Witness w = fixer_witness(b, {}, 1);
  EXPECT_FALSE(w.degenerate);
  EXPECT_EQ(w.n, chevalley_y(2, 1, Rational(1, 2)));
  EXPECT_TRUE(check_fiber_collision(b, QMatrix::identity(2), w.n));
}

TEST(FixerWitness, DegenerateAndRejectedCases) {
  const Witness w = fixer_witness(QMatrix{{2, 1}, {0, 2}}, {}, 1);
  EXPECT_TRUE(w.degenerate);
  EXPECT_EQ(w.n, QMatrix::identity(2));
  EXPECT_THROW(fixer_witness(QMatrix{{2, 2}, {0, 3}}, {1}, 1), PreconditionError);
  EXPECT_THROW(fixer_witness(QMatrix{{2, 0}, {0, 3}}, {}, 1), PreconditionError);
  EXPECT_THROW(fixer_witness(QMatrix{{2, 2}, {1, 3}}, {}, 1), PreconditionError);
  EXPECT_THROW(fixer_witness(QMatrix{{2, 2}, {0, 3}}, {}, 2), PreconditionError);
}

TEST(FixerWitness, NonIdentityFixer) {
  // in GL4, s3 fixes alpha_1
  std::mt19937_64 rng(101);
  int found = 0;
  for (int k = 0; k < 20; ++k) {
    const QMatrix b = random_upper_borel(4, rng);
    if (sgn(b(1, 2)) == 0) continue;
    const Witness w = fixer_witness(b, {3}, 1);
    if (!w.degenerate) {
      ++found;
      EXPECT_TRUE(check_fiber_collision(b, representative(4, {3}), w.n));
    }
  }
  EXPECT_GT(found, 0);
}

TEST(OrthoCycleWitness, SwapOfOrthogonalRoots) {
  const RootSystem a3(gl_weyl_type(4));
  const Word swap13 = reduced_word(a3, from_signed_perm(a3, {3, 4, 1, 2}));
  const QMatrix rep = representative(4, swap13);
  std::mt19937_64 rng(103);
  int verified = 0;
  for (int k = 0; k < 20; ++k) {
    const QMatrix b = random_upper_borel(4, rng);
    try {
      const Witness w = ortho_cycle_witness(b, swap13, {1, 3});
      if (!w.degenerate) {
        ++verified;
        EXPECT_TRUE(check_fiber_collision(b, rep, w.n));
      }
    } catch (const PreconditionError&) {
    }
  }
  EXPECT_GT(verified, 10);
}

TEST(OrthoCycleWitness, DegenerateWhenProductsAgree) {
  const RootSystem a3(gl_weyl_type(4));
  const Word swap13 = reduced_word(a3, from_signed_perm(a3, {3, 4, 1, 2}));
  bool saw_degenerate = false;
  for (long d1 : {1L, -1L}) {
    const QMatrix b{{d1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    try {
      const Witness w = ortho_cycle_witness(b, swap13, {1, 3});
      if (w.degenerate) {
        saw_degenerate = true;
        EXPECT_EQ(w.n, QMatrix::identity(4));
      }
    } catch (const PreconditionError&) {
    }
  }
  EXPECT_TRUE(saw_degenerate);
}

TEST(OrthoCycleWitness, Preconditions) {
  const RootSystem a3(gl_weyl_type(4));
  const Word swap13 = reduced_word(a3, from_signed_perm(a3, {3, 4, 1, 2}));
  const QMatrix b{{2, 1, 0, 0}, {0, 3, 0, 0}, {0, 0, 5, 1}, {0, 0, 0, 7}};
  EXPECT_THROW(ortho_cycle_witness(b, swap13, {1, 2}), PreconditionError);  // not orthogonal
  EXPECT_THROW(ortho_cycle_witness(b, {}, {1, 3}), PreconditionError);      // u does not swap them
  EXPECT_THROW(ortho_cycle_witness(b, swap13, {}), PreconditionError);
  const QMatrix not_upper{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_THROW(ortho_cycle_witness(not_upper, swap13, {1, 3}), PreconditionError);
}

TEST(FiberCollision, W0FibersAreSingletons) {
  std::mt19937_64 rng(107);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const QMatrix b = random_upper_borel(n, rng);
    const QMatrix m = random_unit_lower(n, rng);
    EXPECT_FALSE(check_fiber_collision(b, w0_representative(n), m));
  }
  EXPECT_FALSE(check_fiber_collision(QMatrix{{2, 2}, {0, 3}}, QMatrix::identity(2), QMatrix::identity(2)));
  const PropertyResult p = check_fiber_collisions();
  EXPECT_EQ(p.failures, 0u) << p.first_failure;
}

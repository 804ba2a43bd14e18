#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratweyl/errors.hpp"
#include "ratweyl/matrix.hpp"
#include "ratweyl/root_system.hpp"
#include "ratweyl/weyl.hpp"

namespace ratweyl {

/// g = N * B * u_rep * N^{-1} with N in N- and B in B+.
struct Solution {
  QMatrix n_part;
  QMatrix b_part;
  QMatrix representative;
  int iterations = 0;
};

struct Verdict {
  enum class Kind { Stabilized, NotStabilized, NotGeneric };
  Kind kind = Kind::NotStabilized;
  int value = 0;  // m, max_iter, or the failing step

  std::string to_string() const {
    const char* name = kind == Kind::Stabilized      ? "Stabilized"
                       : kind == Kind::NotStabilized ? "NotStabilized"
                                                     : "NotGeneric";
    return std::string(name) + "(" + std::to_string(value) + ")";
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct IterationTrace {
  std::vector<QMatrix> p_terms;
  std::vector<QMatrix> n_terms;
  Verdict verdict;
};

struct SolveResult {
  std::optional<Solution> solution;  // present iff the verdict is Stabilized
  IterationTrace trace;

  bool ok() const { return solution.has_value(); }
};

struct SolveOptions {
  std::optional<Word> v_word;  // base solution; empty means w0
  int max_iter = 64;
};

/// Weyl group of GL_n, i.e. type A_{n-1}.
inline LieType gl_weyl_type(std::size_t n) {
  if (n < 2) throw PreconditionError("GL_n needs n >= 2");
  return {Family::A, static_cast<int>(n) - 1};
}

inline void check_word_for(std::size_t n, const Word& w) {
  for (int i : w) {
    if (i < 1 || static_cast<std::size_t>(i) > n - 1) {
      throw PreconditionError("simple index " + std::to_string(i) + " out of range for GL_" +
                              std::to_string(n));
    }
  }
}

/// Reduced word of w0 in A_{n-1}.
inline Word w0_word(std::size_t n) {
  const RootSystem rs(gl_weyl_type(n));
  return reduced_word(rs, longest_element(rs));
}

inline QMatrix w0_representative(std::size_t n) { return representative(n, w0_word(n)); }

/// Exact check of g == N * B * rep * N^{-1} and of the shapes of N and B.
inline bool verify_solution(const QMatrix& g, const Solution& s) {
  return is_unit_lower(s.n_part) && is_upper_borel(s.b_part) &&
         s.n_part * s.b_part * s.representative * s.n_part.inverse() == g;
}

/// Base solution for u = w0: N = [g w0^{-1}]_-, B = [g w0^{-1}]_+ w0 [g w0^{-1}]_- w0^{-1}.
inline Solution w0_solution(const QMatrix& g, const QMatrix& w0_rep) {
  const QMatrix w0_inv = w0_rep.inverse();
  const GaussPair h = gauss_decompose(g * w0_inv);
  Solution s{h.lower, h.upper * w0_rep * h.lower * w0_inv, w0_rep, 0};
  if (!verify_solution(g, s)) throw Error("w0 solution failed exact verification");
  return s;
}

/// Random integer matrix in the domain of the w0 base solution: the leading
/// minors of both g and g w0^{-1} are nonzero.
template <class Rng>
QMatrix random_decomposable_matrix(std::size_t n, Rng& rng, int lo = -9, int hi = 9) {
  const QMatrix w0_inv = w0_representative(n).inverse();
  for (;;) {
    QMatrix g = random_generic_matrix(n, rng, lo, hi);
    try {
      gauss_decompose(g * w0_inv);
      return g;
    } catch (const NotGenericError&) {
    }
  }
}

inline SolveResult solve(const QMatrix& g, const QMatrix& u_rep, const std::optional<QMatrix>& v_rep,
                         int max_iter = 64);

namespace detail {

/// N-map of the base solution: for the default base, [x w0^{-1}]_-.
inline QMatrix base_n_map(const QMatrix& x, const std::optional<QMatrix>& v_rep, const QMatrix& w0_rep) {
  if (!v_rep) return lower_part(x * w0_rep.inverse());
  SolveResult r = solve(x, *v_rep, std::nullopt);
  if (r.trace.verdict.kind == Verdict::Kind::NotGeneric) throw NotGenericError(0);
  if (!r.ok()) throw PreconditionError("base element is not a solution: " + r.trace.verdict.to_string());
  return r.solution->n_part;
}

}  // namespace detail

/// Iteration P_0 = B~(g) v u^{-1}, P_k = [P_{k-1}]_+ u [P_{k-1}]_- u^{-1}, stopping
/// once P_m lies in B+; then N = N~(g) N~(P_m u)^{-1} and B = P_m. N~, B~ come from
/// the base solution for v (w0 when `v_rep` is empty).
inline SolveResult solve(const QMatrix& g, const QMatrix& u_rep, const std::optional<QMatrix>& v_rep,
                         int max_iter) {
  const std::size_t n = g.size();
  if (u_rep.size() != n || (v_rep && v_rep->size() != n)) throw PreconditionError("matrix size mismatch");
  if (max_iter < 0) throw PreconditionError("max_iter must be nonnegative");
  const QMatrix w0_rep = w0_representative(n);
  SolveResult res;
  auto fail = [&](int step) {
    res.trace.verdict = {Verdict::Kind::NotGeneric, step};
    return res;
  };

  QMatrix n_base, b_base, v_mat;
  try {
    if (!v_rep) {
      Solution base = w0_solution(g, w0_rep);
      n_base = std::move(base.n_part);
      b_base = std::move(base.b_part);
      v_mat = w0_rep;
    } else {
      SolveResult base = solve(g, *v_rep, std::nullopt, max_iter);
      if (base.trace.verdict.kind == Verdict::Kind::NotGeneric) return fail(0);
      if (!base.ok()) throw PreconditionError("base element is not a solution: " + base.trace.verdict.to_string());
      n_base = std::move(base.solution->n_part);
      b_base = std::move(base.solution->b_part);
      v_mat = *v_rep;
    }
  } catch (const NotGenericError&) {
    return fail(0);
  }

  const QMatrix u_inv = u_rep.inverse();
  QMatrix p = b_base * v_mat * u_inv;
  for (int k = 0;; ++k) {
    res.trace.p_terms.push_back(p);
    QMatrix nk;
    try {
      nk = n_base * detail::base_n_map(p * u_rep, v_rep, w0_rep).inverse();
    } catch (const NotGenericError&) {
      return fail(k);
    }
    res.trace.n_terms.push_back(nk);
    if (is_upper_borel(p)) {
      Solution s{std::move(nk), p, u_rep, k};
      if (!verify_solution(g, s)) throw Error("solution failed exact verification");
      res.trace.verdict = {Verdict::Kind::Stabilized, k};
      res.solution = std::move(s);
      return res;
    }
    if (k == max_iter) break;
    GaussPair lu;
    try {
      lu = gauss_decompose(p);
    } catch (const NotGenericError&) {
      return fail(k + 1);
    }
    p = lu.upper * u_rep * lu.lower * u_inv;
  }
  res.trace.verdict = {Verdict::Kind::NotStabilized, max_iter};
  return res;
}

inline SolveResult solve(const QMatrix& g, const Word& u_word, const SolveOptions& opt = {}) {
  const std::size_t n = g.size();
  check_word_for(n, u_word);
  std::optional<QMatrix> v_rep;
  if (opt.v_word) {
    check_word_for(n, *opt.v_word);
    v_rep = representative(n, *opt.v_word);
  }
  return solve(g, representative(n, u_word), v_rep, opt.max_iter);
}

/// N recovered from B alone: N = [g w0^{-1}]_- ([B u w0^{-1}]_-)^{-1}.
inline QMatrix n_from_b(const QMatrix& g, const QMatrix& b_part, const QMatrix& u_rep,
                        const QMatrix& w0_rep) {
  const QMatrix w0_inv = w0_rep.inverse();
  return lower_part(g * w0_inv) * lower_part(b_part * u_rep * w0_inv).inverse();
}

/// B(n g n^{-1}) = B(g) and N(n g n^{-1}) = n N(g).
inline bool conjugation_invariance_check(const QMatrix& g, const QMatrix& n, const Word& u_word,
                                         const SolveOptions& opt = {}) {
  if (!is_unit_lower(n)) throw PreconditionError("conjugating matrix must be unit lower triangular");
  const SolveResult a = solve(g, u_word, opt);
  const SolveResult b = solve(n * g * n.inverse(), u_word, opt);
  if (a.trace.verdict.kind == Verdict::Kind::NotGeneric) throw NotGenericError(0);
  if (b.trace.verdict.kind == Verdict::Kind::NotGeneric) throw NotGenericError(0);
  if (!a.ok() || !b.ok()) throw PreconditionError("conjugation check needs u to stabilize on both inputs");
  return b.solution->b_part == a.solution->b_part && b.solution->n_part == n * a.solution->n_part;
}

/// n != I and n^{-1} b u n u^{-1} in B+.
inline bool check_fiber_collision(const QMatrix& b, const QMatrix& u_rep, const QMatrix& n) {
  if (n == QMatrix::identity(n.size())) return false;
  return is_upper_borel(n.inverse() * b * u_rep * n * u_rep.inverse());
}

struct Witness {
  QMatrix n;
  bool degenerate = false;  // n = I, so no collision is certified
};

namespace detail {

/// The scalar c with rep * y_from(1) * rep^{-1} = y_to(c).
inline Rational conjugated_y_scale(const QMatrix& rep, int from, int to) {
  const std::size_t n = rep.size();
  const QMatrix m = rep * chevalley_y(n, from, 1) * rep.inverse();
  const Rational c = m(static_cast<std::size_t>(to) + 1, static_cast<std::size_t>(to));
  if (sgn(c) == 0 || !(m == chevalley_y(n, to, c))) {
    throw PreconditionError("representative does not carry alpha_" + std::to_string(from) + " to alpha_" +
                            std::to_string(to));
  }
  return c;
}

inline void check_borel(const QMatrix& b) {
  if (!is_upper_borel(b)) throw PreconditionError("b must be invertible upper triangular");
}

}  // namespace detail

/// Witness n = y_i(c), c = (r a^{-alpha_i} - 1) / (r t), for u fixing alpha_i,
/// where b = a x_i(t) n' and u y_i(1) u^{-1} = y_i(r).
inline Witness fixer_witness(const QMatrix& b, const Word& u_word, int i) {
  const std::size_t n = b.size();
  detail::check_borel(b);
  check_word_for(n, u_word);
  check_word_for(n, {i});
  const RootSystem rs(gl_weyl_type(n));
  const WeylElement u = from_word(rs, u_word);
  const std::size_t a = rs.simple_index(i - 1);
  if (!(u(a) == SignedRoot::positive(a))) {
    throw PreconditionError("u does not fix alpha_" + std::to_string(i));
  }
  const QMatrix rep = representative(n, u_word);
  const auto ii = static_cast<std::size_t>(i);
  const Rational t = b(ii, ii + 1) / b(ii, ii);
  if (sgn(t) == 0) throw PreconditionError("degenerate b: t = 0");
  const Rational a_minus = b(ii + 1, ii + 1) / b(ii, ii);
  const Rational r = detail::conjugated_y_scale(rep, i, i);
  const Rational c = (r * a_minus - 1) / (r * t);
  Witness w{chevalley_y(n, i, c), sgn(c) == 0};
  if (!w.degenerate && !check_fiber_collision(b, rep, w.n)) throw Error("fixer witness failed verification");
  return w;
}

/// Witness for a cycle of pairwise orthogonal simple roots with
/// u(alpha_{i_j}) = alpha_{i_{j-1}} (indices mod m): n = prod_j y_{i_j}(c_j).
inline Witness ortho_cycle_witness(const QMatrix& b, const Word& u_word, const std::vector<int>& cycle) {
  const std::size_t n = b.size();
  detail::check_borel(b);
  check_word_for(n, u_word);
  check_word_for(n, cycle);
  const std::size_t m = cycle.size();
  if (m == 0) throw PreconditionError("empty cycle");
  const RootSystem rs(gl_weyl_type(n));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      if (cycle[j] == cycle[k] || rs.cartan(cycle[j] - 1, cycle[k] - 1) != 0) {
        throw PreconditionError("cycle roots must be distinct and pairwise orthogonal");
      }
    }
  }
  const WeylElement u = from_word(rs, u_word);
  auto prev = [&](std::size_t j) { return (j + m - 1) % m; };
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t src = rs.simple_index(cycle[j] - 1);
    const std::size_t dst = rs.simple_index(cycle[prev(j)] - 1);
    if (!(u(src) == SignedRoot::positive(dst))) {
      throw PreconditionError("u does not map alpha_" + std::to_string(cycle[j]) + " to alpha_" +
                              std::to_string(cycle[prev(j)]));
    }
  }
  const QMatrix rep = representative(n, u_word);
  std::vector<Rational> g(m), a(m), t(m);
  Rational prod_g = 1, prod_a = 1;
  for (std::size_t j = 0; j < m; ++j) {
    const auto ij = static_cast<std::size_t>(cycle[j]);
    g[j] = detail::conjugated_y_scale(rep, cycle[j], cycle[prev(j)]);
    a[j] = b(ij, ij) / b(ij + 1, ij + 1);
    t[j] = b(ij, ij + 1) / b(ij, ij);
    prod_g *= g[j];
    prod_a *= a[j];
  }
  const Rational num = prod_g - prod_a;
  QMatrix wn = QMatrix::identity(n);
  for (std::size_t j = 0; j < m; ++j) {
    Rational d = 0;
    for (std::size_t s = 0; s < m; ++s) {
      Rational term = t[(j + s) % m];
      for (std::size_t l = 1; l <= s; ++l) term *= a[(j + l) % m];
      for (std::size_t k = s + 1; k < m; ++k) term *= g[(j + k) % m];
      d += term;
    }
    if (sgn(d) == 0) throw PreconditionError("vanishing denominator D_" + std::to_string(j + 1));
    const Rational c = num / (a[j] * g[j] * d);
    wn *= chevalley_y(n, cycle[j], c);
  }
  Witness w{wn, sgn(num) == 0};
  if (!w.degenerate && !check_fiber_collision(b, rep, w.n)) throw Error("cycle witness failed verification");
  return w;
}

}  // namespace ratweyl

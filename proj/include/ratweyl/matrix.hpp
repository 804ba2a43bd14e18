#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratweyl/errors.hpp"

namespace ratweyl {

/// Exact rational, always kept canonical (positive denominator, reduced).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw PreconditionError("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// "p/q", or "p" for integers.
inline std::string format_rational(const Rational& q) { return q.get_str(10); }

/// Dense square matrix over the rationals, row-major, 0-based storage.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), a_(n * n) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> rows) : QMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw PreconditionError("matrix literal is not square");
      std::size_t j = 0;
      for (long v : row) at(i, j++) = v;
      ++i;
    }
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// 1-based access, matching matrix-unit notation E_{i,j}.
  Rational& operator()(std::size_t i, std::size_t j) { return at(i - 1, j - 1); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return at(i - 1, j - 1); }

  friend bool operator==(const QMatrix& x, const QMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.n_ != y.n_) throw PreconditionError("matrix size mismatch");
    const std::size_t n = x.n_;
    QMatrix z(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& xik = x.at(i, k);
        if (sgn(xik) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) z.at(i, j) += xik * y.at(k, j);
      }
    }
    return z;
  }

  QMatrix& operator*=(const QMatrix& y) { return *this = *this * y; }

  /// Gauss-Jordan inverse with row pivoting. Throws if singular.
  QMatrix inverse() const {
    const std::size_t n = n_;
    QMatrix m = *this;
    QMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && sgn(m.at(piv, c)) == 0) ++piv;
      if (piv == n) throw PreconditionError("matrix is singular");
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m.at(c, j), m.at(piv, j));
          std::swap(inv.at(c, j), inv.at(piv, j));
        }
      }
      const Rational d = m.at(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(c, j) /= d;
        inv.at(c, j) /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || sgn(m.at(i, c)) == 0) continue;
        const Rational f = m.at(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          m.at(i, j) -= f * m.at(c, j);
          inv.at(i, j) -= f * inv.at(c, j);
        }
      }
    }
    return inv;
  }

  Rational determinant() const {
    QMatrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && sgn(m.at(piv, c)) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != c) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(c, j), m.at(piv, j));
        det = -det;
      }
      det *= m.at(c, c);
      for (std::size_t i = c + 1; i < n_; ++i) {
        if (sgn(m.at(i, c)) == 0) continue;
        const Rational f = m.at(i, c) / m.at(c, c);
        for (std::size_t j = c; j < n_; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    return det;
  }

  /// Largest number of decimal digits in any numerator or denominator.
  std::size_t max_digits() const {
    std::size_t d = 0;
    for (const auto& q : a_) {
      d = std::max({d, mpz_sizeinbase(q.get_num_mpz_t(), 10), mpz_sizeinbase(q.get_den_mpz_t(), 10)});
    }
    return d;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Invertible upper triangular (B+).
inline bool is_upper_borel(const QMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sgn(g.at(i, i)) == 0) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(g.at(i, j)) != 0) return false;
    }
  }
  return true;
}

/// Unit lower triangular (N-).
inline bool is_unit_lower(const QMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.at(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (sgn(g.at(i, j)) != 0) return false;
    }
  }
  return true;
}

inline bool is_diagonal(const QMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i != j && sgn(g.at(i, j)) != 0) return false;
    }
  }
  return true;
}

/// g = lower * upper with lower in N- and upper in B+.
struct GaussPair {
  QMatrix lower;
  QMatrix upper;
};

/// Doolittle factorization without pivoting. Throws NotGenericError(k) when
/// the k-th leading principal minor (1-based) vanishes.
inline GaussPair gauss_decompose(const QMatrix& g) {
  const std::size_t n = g.size();
  GaussPair out{QMatrix::identity(n), QMatrix(n)};
  QMatrix& L = out.lower;
  QMatrix& U = out.upper;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j < n; ++j) {
      Rational s = g.at(k, j);
      for (std::size_t m = 0; m < k; ++m) s -= L.at(k, m) * U.at(m, j);
      U.at(k, j) = s;
    }
    if (sgn(U.at(k, k)) == 0) {
      throw NotGenericError(k + 1);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational s = g.at(i, k);
      for (std::size_t m = 0; m < k; ++m) s -= L.at(i, m) * U.at(m, k);
      L.at(i, k) = s / U.at(k, k);
    }
  }
  return out;
}

namespace detail {
inline void check_chevalley_index(std::size_t n, int i) {
  if (n < 2 || i < 1 || static_cast<std::size_t>(i) > n - 1) {
    throw PreconditionError("simple index " + std::to_string(i) + " out of range for GL_" +
                            std::to_string(n));
  }
}
}  // namespace detail

/// x_i(t) = I + t E_{i,i+1}.
inline QMatrix chevalley_x(std::size_t n, int i, const Rational& t) {
  detail::check_chevalley_index(n, i);
  QMatrix m = QMatrix::identity(n);
  m(i, i + 1) = t;
  return m;
}

/// y_i(t) = I + t E_{i+1,i}.
inline QMatrix chevalley_y(std::size_t n, int i, const Rational& t) {
  detail::check_chevalley_index(n, i);
  QMatrix m = QMatrix::identity(n);
  m(i + 1, i) = t;
  return m;
}

/// t^{h_i}: diag with t at i and 1/t at i+1.
inline QMatrix torus_h(std::size_t n, int i, const Rational& t) {
  detail::check_chevalley_index(n, i);
  if (sgn(t) == 0) throw PreconditionError("torus_h needs t != 0");
  QMatrix m = QMatrix::identity(n);
  m(i, i) = t;
  m(i + 1, i + 1) = 1 / t;
  return m;
}

/// s-dot_i = x_i(-1) y_i(1) x_i(-1).
inline QMatrix dot_s(std::size_t n, int i) {
  return chevalley_x(n, i, -1) * chevalley_y(n, i, 1) * chevalley_x(n, i, -1);
}

/// Product of the s-dot_i along `word`, left to right.
inline QMatrix representative(std::size_t n, const std::vector<int>& word) {
  QMatrix m = QMatrix::identity(n);
  for (int i : word) m *= dot_s(n, i);
  return m;
}

/// Lower part g_- of the Gaussian decomposition.
inline QMatrix lower_part(const QMatrix& g) { return gauss_decompose(g).lower; }
/// Borel part g_+ of the Gaussian decomposition.
inline QMatrix upper_part(const QMatrix& g) { return gauss_decompose(g).upper; }

/// Random matrix with integer entries in [lo, hi] whose leading principal
/// minors are all nonzero (rejection sampled).
template <class Rng>
QMatrix random_generic_matrix(std::size_t n, Rng& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  for (;;) {
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    }
    try {
      gauss_decompose(m);
      return m;
    } catch (const NotGenericError&) {
    }
  }
}

template <class Rng>
QMatrix random_unit_lower(std::size_t n, Rng& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  QMatrix m = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m.at(i, j) = dist(rng);
  }
  return m;
}

/// Random invertible upper triangular matrix with integer entries.
template <class Rng>
QMatrix random_upper_borel(std::size_t n, Rng& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      int v = dist(rng);
      while (i == j && v == 0) v = dist(rng);
      m.at(i, j) = v;
    }
  }
  return m;
}

template <class Rng>
QMatrix random_diagonal(std::size_t n, Rng& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    int v = dist(rng);
    while (v == 0) v = dist(rng);
    m.at(i, i) = v;
  }
  return m;
}

}  // namespace ratweyl

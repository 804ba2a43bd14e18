#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "ratweyl/errors.hpp"
#include "ratweyl/root_system.hpp"

namespace ratweyl {

/// Signed permutation of the Euclidean basis: entry k is +-(j+1) when the
/// element sends e_{k+1} to +-e_{j+1}. Type A uses only positive entries.
using SignedPerm = std::vector<std::int16_t>;

inline bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

/// Euclidean realization of a classical root system: A_r in R^{r+1}, B/C/D_r in R^r.
/// Provides the root action of a signed permutation through a dense lookup table.
class ClassicalModel {
 public:
  explicit ClassicalModel(const RootSystem& rs) : rs_(&rs) {
    const LieType& t = rs.type();
    if (!is_classical(t.family)) throw ConfigError("no Euclidean model for " + to_string(t));
    const auto simple = detail::classical_simple_roots(t);
    dim_ = simple.front().size();
    stride_ = dim_ * 4 + 1;
    lookup_.assign(dim_ * 4 * stride_, SignedRoot{});
    const std::size_t n = rs.num_positive();
    terms_.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<int> v(dim_, 0);
      for (int i = 0; i < rs.rank(); ++i) {
        for (std::size_t k = 0; k < dim_; ++k) v[k] += rs.root(p).coeffs[i] * simple[i][k];
      }
      for (std::size_t k = 0; k < dim_; ++k) {
        if (v[k] != 0) terms_[p].push_back({static_cast<int>(k), v[k]});
      }
      if (terms_[p].empty() || terms_[p].size() > 2) throw ConfigError("unexpected classical root shape");
      lookup_[key(terms_[p])] = SignedRoot::positive(p);
      auto neg = terms_[p];
      for (auto& tm : neg) tm.coeff = -tm.coeff;
      lookup_[key(neg)] = SignedRoot::negative(p);
    }
  }

  std::size_t dimension() const { return dim_; }

  /// Image of positive root p under the signed permutation w.
  SignedRoot image(std::span<const std::int16_t> w, std::size_t p) const {
    Term buf[2];
    const auto& src = terms_[p];
    for (std::size_t i = 0; i < src.size(); ++i) {
      const int code = w[static_cast<std::size_t>(src[i].coord)];
      buf[i].coord = std::abs(code) - 1;
      buf[i].coeff = code > 0 ? src[i].coeff : -src[i].coeff;
    }
    if (src.size() == 2 && buf[0].coord > buf[1].coord) std::swap(buf[0], buf[1]);
    return lookup_[key(std::span<const Term>(buf, src.size()))];
  }

  /// Root action table of w on all positive roots.
  void action(std::span<const std::int16_t> w, std::span<SignedRoot> out) const {
    for (std::size_t p = 0; p < terms_.size(); ++p) out[p] = image(w, p);
  }

  static SignedPerm inverse(std::span<const std::int16_t> w) {
    SignedPerm inv(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int code = w[k];
      inv[static_cast<std::size_t>(std::abs(code) - 1)] =
          static_cast<std::int16_t>(code > 0 ? static_cast<int>(k) + 1 : -static_cast<int>(k) - 1);
    }
    return inv;
  }

  /// Composition (u v)(e) = u(v(e)).
  static SignedPerm compose(std::span<const std::int16_t> u, std::span<const std::int16_t> v) {
    SignedPerm out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      const int code = v[k];
      const int inner = u[static_cast<std::size_t>(std::abs(code) - 1)];
      out[k] = static_cast<std::int16_t>(code > 0 ? inner : -inner);
    }
    return out;
  }

  SignedPerm identity() const {
    SignedPerm id(dim_);
    for (std::size_t k = 0; k < dim_; ++k) id[k] = static_cast<std::int16_t>(k + 1);
    return id;
  }

  /// Signed permutation of the simple reflection s_{i+1} (0-based i).
  SignedPerm simple_reflection(int i) const {
    SignedPerm s = identity();
    const int r = rs_->rank();
    const Family f = rs_->type().family;
    if (f == Family::A || i < r - 1) {
      std::swap(s[i], s[i + 1]);
    } else if (f == Family::D) {
      s[r - 2] = static_cast<std::int16_t>(-r);
      s[r - 1] = static_cast<std::int16_t>(-(r - 1));
    } else {
      s[r - 1] = static_cast<std::int16_t>(-r);
    }
    return s;
  }

 private:
  struct Term {
    int coord = 0;
    int coeff = 0;
  };

  static std::size_t enc(int coeff) {
    switch (coeff) {
      case -2: return 0;
      case -1: return 1;
      case 1: return 2;
      default: return 3;
    }
  }

  std::size_t key(std::span<const Term> t) const {
    const std::size_t first = static_cast<std::size_t>(t[0].coord) * 4 + enc(t[0].coeff);
    const std::size_t second =
        t.size() == 2 ? static_cast<std::size_t>(t[1].coord) * 4 + enc(t[1].coeff) : dim_ * 4;
    return first * stride_ + second;
  }

  const RootSystem* rs_;
  std::size_t dim_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::vector<Term>> terms_;
  std::vector<SignedRoot> lookup_;
};

}  // namespace ratweyl

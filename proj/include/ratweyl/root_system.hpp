#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ratweyl/errors.hpp"
#include "ratweyl/root_set.hpp"

namespace ratweyl {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const LieType&, const LieType&) = default;
};

inline std::string to_string(const LieType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

inline std::ostream& operator<<(std::ostream& os, const LieType& t) { return os << to_string(t); }

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw ConfigError("unknown Lie family '" + s + "'");
}

inline bool is_admissible(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B:
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

/// Coefficients of a root over the simple roots.
struct Root {
  std::vector<int> coeffs;

  bool is_positive() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) &&
           std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
  }
  bool is_negative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; }) &&
           std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c < 0; });
  }
  int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
  Root operator-() const {
    Root r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

inline std::string to_string(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    int c = r.coeffs[i];
    if (c == 0) continue;
    if (c < 0) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

/// A root in the signed index space Pi = Pi+ u Pi-: positive-root index plus sign.
class SignedRoot {
 public:
  constexpr SignedRoot() = default;
  static constexpr SignedRoot positive(std::size_t index) {
    return SignedRoot(static_cast<std::int16_t>(index + 1));
  }
  static constexpr SignedRoot negative(std::size_t index) {
    return SignedRoot(static_cast<std::int16_t>(-static_cast<int>(index) - 1));
  }
  static constexpr SignedRoot from_code(std::int16_t code) { return SignedRoot(code); }

  constexpr std::size_t index() const {
    return static_cast<std::size_t>(code_ > 0 ? code_ - 1 : -code_ - 1);
  }
  constexpr bool is_positive() const { return code_ > 0; }
  constexpr bool is_negative() const { return code_ < 0; }
  constexpr SignedRoot operator-() const { return SignedRoot(static_cast<std::int16_t>(-code_)); }
  constexpr std::int16_t code() const { return code_; }

  friend constexpr bool operator==(SignedRoot, SignedRoot) = default;
  friend constexpr auto operator<=>(SignedRoot, SignedRoot) = default;

 private:
  constexpr explicit SignedRoot(std::int16_t code) : code_(code) {}
  std::int16_t code_ = 0;
};

namespace detail {

inline std::vector<std::vector<int>> zero_matrix(int r) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(r), std::vector<int>(r, 0));
}

// Integer Euclidean coordinates of the simple roots for the classical families.
// B_r: alpha_r = e_r short. C_r: alpha_r = 2 e_r long. D_r: alpha_r = e_{r-1} + e_r.
inline std::vector<std::vector<int>> classical_simple_roots(const LieType& t) {
  const int r = t.rank;
  const int dim = t.family == Family::A ? r + 1 : r;
  std::vector<std::vector<int>> simple(static_cast<std::size_t>(r), std::vector<int>(dim, 0));
  const int chain = t.family == Family::A ? r : r - 1;
  for (int i = 0; i < chain; ++i) {
    simple[i][i] = 1;
    simple[i][i + 1] = -1;
  }
  switch (t.family) {
    case Family::A: break;
    case Family::B: simple[r - 1][r - 1] = 1; break;
    case Family::C: simple[r - 1][r - 1] = 2; break;
    case Family::D:
      simple[r - 1][r - 2] = 1;
      simple[r - 1][r - 1] = 1;
      break;
    default: throw ConfigError("not a classical family");
  }
  return simple;
}

inline std::vector<std::vector<int>> cartan_from_euclidean(const std::vector<std::vector<int>>& simple) {
  const auto r = static_cast<int>(simple.size());
  auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
  };
  auto a = zero_matrix(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      a[i][j] = 2 * dot(simple[j], simple[i]) / dot(simple[i], simple[i]);
    }
  }
  return a;
}

// Bourbaki numbering for the exceptional families.
inline std::vector<std::vector<int>> exceptional_cartan(const LieType& t) {
  const int r = t.rank;
  auto a = zero_matrix(r);
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(2, 4);
      for (int i = 5; i < r; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      a[1][2] = -1;  // <alpha_3, alpha_2^vee>, alpha_2 long
      a[2][1] = -2;  // <alpha_2, alpha_3^vee>, alpha_3 short
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default: throw ConfigError("not an exceptional family");
  }
  return a;
}

}  // namespace detail

/// Immutable tables for one indecomposable crystallographic root system.
///
/// Positive roots are indexed 0..N-1 by increasing height; within one height,
/// roots with lexicographically larger coefficient vectors come first, so the
/// simple roots alpha_1..alpha_r receive indices 0..r-1 and the highest root
/// receives index N-1.
class RootSystem {
 public:
  explicit RootSystem(const LieType& t) : type_(t) {
    if (!is_admissible(t)) {
      throw ConfigError("inadmissible Lie type " + to_string(t));
    }
    switch (t.family) {
      case Family::E:
      case Family::F:
      case Family::G: cartan_ = detail::exceptional_cartan(t); break;
      default: cartan_ = detail::cartan_from_euclidean(detail::classical_simple_roots(t)); break;
    }
    close_under_reflections();
    build_tables();
  }

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t num_positive() const { return roots_.size(); }

  /// a_ij = <alpha_j, alpha_i^vee>; indices are 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const Root& root(std::size_t index) const { return roots_[index]; }
  const std::vector<Root>& positive_roots() const { return roots_; }

  /// Index of the simple root alpha_{i+1} (0-based i).
  std::size_t simple_index(int i) const { return static_cast<std::size_t>(i); }
  std::size_t highest_root_index() const { return roots_.size() - 1; }
  const Root& highest_root() const { return roots_.back(); }

  std::optional<std::size_t> find(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<SignedRoot> find_signed(const Root& r) const {
    if (auto p = find(r)) return SignedRoot::positive(*p);
    if (auto n = find(-r)) return SignedRoot::negative(*n);
    return std::nullopt;
  }
  Root signed_root(SignedRoot s) const {
    return s.is_positive() ? roots_[s.index()] : -roots_[s.index()];
  }

  /// b <= c in the root poset (c - b has nonnegative coefficients).
  bool leq(std::size_t b, std::size_t c) const { return down_sets_[c].test(b); }
  bool leq(const Root& b, const Root& c) const {
    if (b.coeffs.size() != c.coeffs.size()) throw PreconditionError("roots of different ranks");
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
      if (c.coeffs[i] < b.coeffs[i]) return false;
    }
    return true;
  }

  /// Roots below `c` (inclusive).
  const RootSet& down_set(std::size_t c) const { return down_sets_[c]; }
  /// Roots above `b` (inclusive).
  const RootSet& up_set(std::size_t b) const { return up_sets_[b]; }

  /// Downward closure of `s` in the root poset.
  RootSet adj(const RootSet& s) const {
    RootSet out;
    s.for_each([&](std::size_t i) { out |= down_sets_[i]; });
    return out;
  }

  RootSet all_positive() const { return RootSet::first_n(roots_.size()); }

  /// <beta, alpha_i^vee> for a root given by coefficients.
  int pairing(const Root& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += beta.coeffs[j] * cartan_[i][j];
    return s;
  }

  /// Action of s_{i+1} on positive roots.
  const std::vector<SignedRoot>& simple_reflection(int i) const { return reflections_[i]; }

 private:
  void close_under_reflections() {
    const int r = rank();
    std::vector<Root> found;
    std::map<std::vector<int>, bool> seen;
    std::deque<Root> queue;
    for (int i = 0; i < r; ++i) {
      Root a{std::vector<int>(r, 0)};
      a.coeffs[i] = 1;
      seen[a.coeffs] = true;
      queue.push_back(a);
    }
    while (!queue.empty()) {
      Root beta = queue.front();
      queue.pop_front();
      found.push_back(beta);
      if (found.size() > RootSet::kCapacity) {
        throw ConfigError("Lie type " + to_string(type_) + " has more than " +
                          std::to_string(RootSet::kCapacity) + " positive roots");
      }
      for (int i = 0; i < r; ++i) {
        if (beta.coeffs[i] > 0 && beta.height() == beta.coeffs[i]) continue;  // beta == alpha_i
        Root gamma = beta;
        gamma.coeffs[i] -= pairing(beta, i);
        if (!seen[gamma.coeffs]) {
          seen[gamma.coeffs] = true;
          queue.push_back(gamma);
        }
      }
    }
    std::sort(found.begin(), found.end(), [](const Root& x, const Root& y) {
      if (x.height() != y.height()) return x.height() < y.height();
      return x.coeffs > y.coeffs;
    });
    roots_ = std::move(found);
    for (std::size_t p = 0; p < roots_.size(); ++p) index_[roots_[p].coeffs] = p;
  }

  void build_tables() {
    const std::size_t n = roots_.size();
    down_sets_.assign(n, RootSet{});
    up_sets_.assign(n, RootSet{});
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(roots_[b], roots_[c])) {
          down_sets_[c].set(b);
          up_sets_[b].set(c);
        }
      }
    }
    reflections_.assign(static_cast<std::size_t>(rank()), {});
    for (int i = 0; i < rank(); ++i) {
      auto& table = reflections_[i];
      table.resize(n);
      for (std::size_t p = 0; p < n; ++p) {
        if (p == simple_index(i)) {
          table[p] = SignedRoot::negative(p);
          continue;
        }
        Root gamma = roots_[p];
        gamma.coeffs[i] -= pairing(roots_[p], i);
        table[p] = SignedRoot::positive(index_.at(gamma.coeffs));
      }
    }
  }

  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<RootSet> down_sets_;
  std::vector<RootSet> up_sets_;
  std::vector<std::vector<SignedRoot>> reflections_;
};

/// |Pi+| by the closed forms for each family.
inline std::size_t expected_positive_root_count(const LieType& t) {
  const auto r = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace ratweyl

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ratweyl/classical_model.hpp"
#include "ratweyl/errors.hpp"
#include "ratweyl/root_system.hpp"
#include "ratweyl/weyl.hpp"

namespace ratweyl {

/// Type-specific compact code of a group element.
///   A_r:    permutation of {1..r+1} (entry k = image of e_{k+1}).
///   B/C_r:  signed permutation of {1..r}.
///   D_r:    signed permutation of {1..r} with an even number of signs.
///   E/F/G:  root action table, entry p = SignedRoot code of u(alpha_p).
struct CompactElement {
  std::vector<std::int16_t> code;

  friend bool operator==(const CompactElement&, const CompactElement&) = default;
  friend auto operator<=>(const CompactElement&, const CompactElement&) = default;
};

struct CompactElementHash {
  std::size_t operator()(const CompactElement& c) const noexcept {
    return std::hash<std::string_view>{}(std::string_view(
        reinterpret_cast<const char*>(c.code.data()), c.code.size() * sizeof(std::int16_t)));
  }
};

inline std::uint64_t group_order(const LieType& t) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << t.rank) * factorial(t.rank);
    case Family::D: return (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank);
    case Family::E: return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

inline CompactElement to_compact(const RootSystem& rs, const WeylElement& u) {
  check_same_system(rs, u);
  if (!is_classical(rs.type().family)) {
    CompactElement c;
    c.code.reserve(u.size());
    for (auto s : u.action()) c.code.push_back(s.code());
    return c;
  }
  const ClassicalModel model(rs);
  SignedPerm w = model.identity();
  for (int i : reduced_word(rs, u)) w = ClassicalModel::compose(w, model.simple_reflection(i - 1));
  return CompactElement{std::move(w)};
}

inline WeylElement from_compact(const RootSystem& rs, const CompactElement& c) {
  if (is_classical(rs.type().family)) return from_signed_perm(rs, c.code);
  if (c.code.size() != rs.num_positive()) throw PreconditionError("compact code has wrong size");
  std::vector<SignedRoot> act;
  act.reserve(c.code.size());
  for (auto code : c.code) act.push_back(SignedRoot::from_code(code));
  return WeylElement(rs.type(), std::move(act));
}

/// Streams every element of W exactly once.
///
/// Classical types are generated lexicographically from their signed
/// permutation models and split into disjoint sub-streams by the leading
/// symbol of the code. Exceptional types are produced by a breadth-first
/// closure over root action tables, one length level at a time; they form a
/// single stream.
class GroupEnumerator {
 public:
  explicit GroupEnumerator(const RootSystem& rs) : rs_(&rs) {
    if (is_classical(rs.type().family)) model_.emplace_back(rs);
  }

  const RootSystem& root_system() const { return *rs_; }
  bool is_classical_model() const { return !model_.empty(); }

  std::size_t partition_count() const {
    if (!is_classical_model()) return 1;
    const std::size_t dim = model_.front().dimension();
    return rs_->type().family == Family::A ? dim : 2 * dim;
  }

  /// Leading symbol of the codes in sub-stream `part`.
  std::int16_t leading_symbol(std::size_t part) const {
    if (rs_->type().family == Family::A) return static_cast<std::int16_t>(part + 1);
    const auto v = static_cast<std::int16_t>(part / 2 + 1);
    return part % 2 == 0 ? v : static_cast<std::int16_t>(-v);
  }

  template <class Fn>
  void for_each_in_partition(std::size_t part, Fn&& fn) const {
    if (!is_classical_model()) {
      if (part != 0) throw PreconditionError("exceptional types form a single stream");
      for_each_level([&](const std::vector<CompactElement>& level) {
        for (const auto& c : level) fn(c);
      });
      return;
    }
    const std::size_t dim = model_.front().dimension();
    const std::int16_t lead = leading_symbol(part);
    std::vector<std::int16_t> rest;
    for (std::size_t v = 1; v <= dim; ++v) {
      if (static_cast<int>(v) != std::abs(lead)) rest.push_back(static_cast<std::int16_t>(v));
    }
    CompactElement c;
    c.code.resize(dim);
    c.code[0] = lead;
    const Family f = rs_->type().family;
    const std::size_t tail = dim - 1;
    const std::uint64_t masks = f == Family::A ? 1 : (std::uint64_t{1} << tail);
    do {
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        int negatives = lead < 0 ? 1 : 0;
        for (std::size_t k = 0; k < tail; ++k) {
          const bool neg = ((mask >> (tail - 1 - k)) & 1) != 0;
          negatives += neg ? 1 : 0;
          c.code[k + 1] = neg ? static_cast<std::int16_t>(-rest[k]) : rest[k];
        }
        if (f == Family::D && negatives % 2 != 0) continue;
        fn(static_cast<const CompactElement&>(c));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t part = 0; part < partition_count(); ++part) for_each_in_partition(part, fn);
  }

  /// Breadth-first closure by length: calls `fn(level)` for lengths 0, 1, 2, ...
  /// Only two levels are held in memory at a time.
  template <class Fn>
  void for_each_level(Fn&& fn) const {
    const RootSystem& rs = *rs_;
    const std::size_t n = rs.num_positive();
    if (is_classical_model()) throw PreconditionError("level enumeration is for action codes");
    std::vector<CompactElement> level{to_compact(rs, identity_element(rs))};
    while (!level.empty()) {
      fn(static_cast<const std::vector<CompactElement>&>(level));
      std::unordered_set<CompactElement, CompactElementHash> next;
      std::vector<CompactElement> ordered;
      for (const auto& c : level) {
        for (int i = 0; i < rs.rank(); ++i) {
          const std::size_t a = rs.simple_index(i);
          // s_i u is longer iff u^{-1}(alpha_i) > 0.
          bool ascent = false;
          for (std::size_t p = 0; p < n; ++p) {
            if (SignedRoot::from_code(c.code[p]).index() == a) {
              ascent = c.code[p] > 0;
              break;
            }
          }
          if (!ascent) continue;
          const auto& s = rs.simple_reflection(i);
          CompactElement d;
          d.code.resize(n);
          for (std::size_t p = 0; p < n; ++p) {
            const SignedRoot img = SignedRoot::from_code(c.code[p]);
            d.code[p] = (img.is_positive() ? s[img.index()] : -s[img.index()]).code();
          }
          if (next.insert(d).second) ordered.push_back(std::move(d));
        }
      }
      level = std::move(ordered);
    }
  }

  /// u^{-1}(alpha_p) for every positive root p, written into `out`.
  /// `scratch` is caller-owned to keep the hot loop allocation-free.
  void inverse_action(const CompactElement& c, std::span<SignedRoot> out, SignedPerm& scratch) const {
    if (is_classical_model()) {
      scratch.resize(c.code.size());
      for (std::size_t k = 0; k < c.code.size(); ++k) {
        const int code = c.code[k];
        scratch[static_cast<std::size_t>(std::abs(code) - 1)] =
            static_cast<std::int16_t>(code > 0 ? static_cast<int>(k) + 1 : -static_cast<int>(k) - 1);
      }
      model_.front().action(scratch, out);
      return;
    }
    for (std::size_t p = 0; p < c.code.size(); ++p) {
      const SignedRoot img = SignedRoot::from_code(c.code[p]);
      out[img.index()] = img.is_positive() ? SignedRoot::positive(p) : SignedRoot::negative(p);
    }
  }

 private:
  const RootSystem* rs_;
  std::vector<ClassicalModel> model_;  // empty for exceptional types
};

}  // namespace ratweyl

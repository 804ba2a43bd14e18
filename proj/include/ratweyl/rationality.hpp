#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ratweyl/errors.hpp"
#include "ratweyl/root_set.hpp"
#include "ratweyl/root_system.hpp"
#include "ratweyl/weyl.hpp"

namespace ratweyl {

/// nu^0 ⊇ nu^1 ⊇ ... up to (not including) the first repeated term.
struct NuSequence {
  std::vector<RootSet> terms;
  RootSet limit;
};

/// nu^0(u) = u(Pi+) ∩ Pi+ = { beta > 0 : u^{-1}(beta) > 0 }.
inline RootSet nu0(const RootSystem& rs, const WeylElement& u) {
  check_same_system(rs, u);
  RootSet out;
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u(p).is_positive()) out.set(u(p).index());
  }
  return out;
}

/// u(Adj s) ∩ Pi+.
inline RootSet nu_step(const RootSystem& rs, const WeylElement& u, const RootSet& s) {
  RootSet out;
  rs.adj(s).for_each([&](std::size_t q) {
    if (u(q).is_positive()) out.set(u(q).index());
  });
  return out;
}

inline NuSequence nu_sequence(const RootSystem& rs, const WeylElement& u) {
  NuSequence seq;
  seq.terms.push_back(nu0(rs, u));
  for (;;) {
    RootSet next = nu_step(rs, u, seq.terms.back());
    if (next == seq.terms.back()) break;
    seq.terms.push_back(next);
  }
  seq.limit = seq.terms.back();
  return seq;
}

/// nu^0(v w0) from a reduced word of v: beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).
/// Throws PreconditionError when the word is not reduced.
inline RootSet nu0_via_reduced_word(const RootSystem& rs, const Word& v_word) {
  RootSet out;
  WeylElement prefix = identity_element(rs);
  for (int i : v_word) {
    check_simple_index(rs, i);
    const SignedRoot beta = prefix(rs.simple_index(i - 1));
    if (beta.is_negative() || out.test(beta.index())) {
      throw PreconditionError("word " + word_to_string(v_word, ",", false) + " is not reduced");
    }
    out.set(beta.index());
    prefix = right_mul_simple(rs, i, prefix);
  }
  return out;
}

struct RelativeNu {
  std::vector<RootSet> terms;
  bool empty_limit = false;    // some term is empty (then all later ones are)
  bool cycle_found = false;    // a term value repeated
  std::size_t cycle_start = 0; // first index of the repeating block
  std::size_t period = 0;
};

/// Sequence of u relative to v: nu^0 = u v^{-1}(Pi-) ∩ Pi+, nu^k = u(Adj nu^{k-1}) ∩ Pi+.
/// Stops at the first repeated term value or after `max_terms` terms
/// (0 selects 2|Pi+| + 2).
inline RelativeNu relative_nu(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                              std::size_t max_terms = 0) {
  check_same_system(rs, u);
  check_same_system(rs, v);
  if (max_terms == 0) max_terms = 2 * rs.num_positive() + 2;
  const WeylElement w = mul(u, inverse(v));
  RelativeNu out;
  RootSet term;
  for (std::size_t p = 0; p < w.size(); ++p) {
    // beta = w(-alpha_p) is positive iff w(alpha_p) is negative.
    if (w(p).is_negative()) term.set(w(p).index());
  }
  while (out.terms.size() < max_terms) {
    for (std::size_t j = 0; j < out.terms.size(); ++j) {
      if (out.terms[j] == term) {
        out.cycle_found = true;
        out.cycle_start = j;
        out.period = out.terms.size() - j;
        break;
      }
    }
    if (out.cycle_found) break;
    out.terms.push_back(term);
    if (term.empty()) out.empty_limit = true;
    term = nu_step(rs, u, term);
  }
  return out;
}

/// Gamma(u): vertices nu^0(u), edge alpha -> beta iff u^{-1}(alpha) <= beta.
struct RatGraph {
  RootSet vertices;
  std::vector<RootSet> out;  // indexed by positive-root index; empty rows off the vertex set

  bool has_edge(std::size_t a, std::size_t b) const { return out[a].test(b); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    vertices.for_each([&](std::size_t a) { out[a].for_each([&](std::size_t b) { e.emplace_back(a, b); }); });
    return e;
  }
};

inline RatGraph gamma(const RootSystem& rs, const WeylElement& u) {
  RatGraph g;
  g.vertices = nu0(rs, u);
  g.out.assign(rs.num_positive(), RootSet{});
  const WeylElement inv = inverse(u);
  g.vertices.for_each([&](std::size_t a) {
    const SignedRoot pre = inv(a);  // positive for every vertex
    g.out[a] = rs.up_set(pre.index()) & g.vertices;
  });
  return g;
}

/// Kahn-style topological peel; loops count as cycles.
inline bool is_acyclic(const RatGraph& g) {
  const std::size_t n = g.out.size();
  std::vector<int> indeg(n, 0);
  g.vertices.for_each([&](std::size_t a) { g.out[a].for_each([&](std::size_t b) { ++indeg[b]; }); });
  std::vector<std::size_t> ready;
  g.vertices.for_each([&](std::size_t a) {
    if (indeg[a] == 0) ready.push_back(a);
  });
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t a = ready.back();
    ready.pop_back();
    ++removed;
    g.out[a].for_each([&](std::size_t b) {
      if (--indeg[b] == 0) ready.push_back(b);
    });
  }
  return removed == g.vertices.count();
}

/// Some directed cycle of `g` (a loop is a one-vertex cycle), if any.
inline std::optional<std::vector<std::size_t>> find_cycle(const RatGraph& g) {
  const std::size_t n = g.out.size();
  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<std::size_t> stack;
  std::optional<std::vector<std::size_t>> found;

  auto dfs = [&](auto&& self, std::size_t a) -> void {
    mark[a] = Mark::Grey;
    stack.push_back(a);
    for (std::size_t b : g.out[a].indices()) {
      if (found) return;
      if (mark[b] == Mark::Grey) {
        auto it = std::find(stack.begin(), stack.end(), b);
        found = std::vector<std::size_t>(it, stack.end());
        return;
      }
      if (mark[b] == Mark::White) self(self, b);
    }
    stack.pop_back();
    mark[a] = Mark::Black;
  };
  for (std::size_t a : g.vertices.indices()) {
    if (found) break;
    if (mark[a] == Mark::White) dfs(dfs, a);
  }
  return found;
}

/// Rational iff nu(u) is empty.
inline bool is_rational(const RootSystem& rs, const WeylElement& u) {
  return nu_sequence(rs, u).limit.empty();
}

struct RationalityCertificate {
  bool rational = false;
  NuSequence nu;
  std::vector<std::size_t> cycle;  // a cycle of Gamma(u) when not rational
};

inline RationalityCertificate certify_rationality(const RootSystem& rs, const WeylElement& u) {
  RationalityCertificate cert;
  cert.nu = nu_sequence(rs, u);
  cert.rational = cert.nu.limit.empty();
  if (!cert.rational) {
    auto cyc = find_cycle(gamma(rs, u));
    if (!cyc) throw Error("nonempty nu-limit without a cycle in the rationality graph");
    cert.cycle = std::move(*cyc);
  }
  return cert;
}

/// A positive root alpha with alpha <= u(alpha), if any (a loop of Gamma(u)).
inline std::optional<std::size_t> has_loop(const RootSystem& rs, const WeylElement& u) {
  check_same_system(rs, u);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u(p).is_positive() && rs.leq(p, u(p).index())) return p;
  }
  return std::nullopt;
}

/// For a permutation of {1..n} (entry k-1 = image of k): true when the cycle
/// (1 2 ... k), k < n, or (k k+1 ... n), k > 1, occurs in its cycle decomposition.
/// Sufficient for non-rationality only.
inline bool sn_cycle_obstruction(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  auto img = [&](int k) { return perm[static_cast<std::size_t>(k - 1)]; };
  for (int k = 1; k < n; ++k) {
    bool ok = img(k) == 1;
    for (int j = 1; j < k && ok; ++j) ok = img(j) == j + 1;
    if (ok) return true;
  }
  for (int k = 2; k <= n; ++k) {
    bool ok = img(n) == k;
    for (int j = k; j < n && ok; ++j) ok = img(j) == j + 1;
    if (ok) return true;
  }
  return false;
}

enum class BoundaryKind { SiW0, SiSjW0 };

/// s_i w0 or s_i s_j w0 (1-based i, j).
inline WeylElement boundary_element(const RootSystem& rs, BoundaryKind kind, int i, int j = 0) {
  const Word w = kind == BoundaryKind::SiW0 ? Word{i} : Word{i, j};
  return mul(from_word(rs, w), longest_element(rs));
}

/// Closed-form rationality of s_i w0 and s_i s_j w0 in terms of w0 on simple roots.
inline bool len_boundary_rational(const RootSystem& rs, BoundaryKind kind, int i, int j = 0) {
  check_simple_index(rs, i);
  const WeylElement w0 = longest_element(rs);
  auto w0_is_minus = [&](int a, int b) {  // w0(alpha_a) == -alpha_b
    return w0(rs.simple_index(a - 1)) == SignedRoot::negative(rs.simple_index(b - 1));
  };
  if (kind == BoundaryKind::SiW0) return !w0_is_minus(i, i);
  check_simple_index(rs, j);
  if (i == j) throw PreconditionError("s_i s_j w0 requires i != j");
  const bool cond1 = !w0_is_minus(j, i) && !w0_is_minus(j, j);
  const bool cond2 = rs.cartan(i - 1, j - 1) != 0 || !w0_is_minus(i, i);
  return cond1 && cond2;
}

/// Hot-path rationality test working from the inverse root action.
///
/// Peels Gamma(u) on bitmasks: S_0 = nu^0, S_{k+1} = vertices of S_k with an
/// edge into S_k; this is exactly the nu-sequence. Rejects early when the
/// highest root is a vertex (it carries a loop). Holds scratch space, so use
/// one instance per thread.
class RationalityKernel {
 public:
  explicit RationalityKernel(const RootSystem& rs) : rs_(&rs) {}

  bool is_rational_from_inverse(std::span<const SignedRoot> inv) {
    const std::size_t n = inv.size();
    RootSet nu;
    for (std::size_t p = 0; p < n; ++p) {
      if (inv[p].is_positive()) nu.set(p);
    }
    if (nu.test(n - 1)) return false;
    std::size_t m = 0;
    nu.for_each([&](std::size_t p) {
      idx_[m] = p;
      rows_[m++] = rs_->up_set(inv[p].index()) & nu;
    });
    RootSet cur = nu;
    for (;;) {
      RootSet next;
      for (std::size_t k = 0; k < m; ++k) {
        if (cur.test(idx_[k]) && rows_[k].intersects(cur)) next.set(idx_[k]);
      }
      if (next.empty()) return true;
      if (next == cur) return false;
      cur = next;
    }
  }

  bool is_rational(const WeylElement& u) {
    const WeylElement inv = inverse(u);
    return is_rational_from_inverse(inv.action());
  }

 private:
  const RootSystem* rs_;
  std::array<std::size_t, RootSet::kCapacity> idx_{};
  std::array<RootSet, RootSet::kCapacity> rows_{};
};

}  // namespace ratweyl

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ratweyl/enumerate.hpp"
#include "ratweyl/errors.hpp"
#include "ratweyl/rationality.hpp"
#include "ratweyl/root_system.hpp"
#include "ratweyl/weyl.hpp"

namespace ratweyl {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class EdgeSide { Left, Right };

struct SweepOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct AtlasOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
  EdgeSide edge_side = EdgeSide::Left;  // Right is a diagnostic variant only
};

namespace detail {

inline void check_budget(const RootSystem& rs, std::uint64_t budget) {
  const std::uint64_t need = group_order(rs.type());
  if (need > budget) {
    throw ConfigError("|W(" + to_string(rs.type()) + ")| = " + std::to_string(need) +
                      " exceeds the element budget " + std::to_string(budget) +
                      "; rerun with a budget of at least " + std::to_string(need));
  }
}

/// Runs `visit(worker_state, element, inverse_action)` over all of W, split
/// across `workers` threads. `make_state()` builds one private state per thread;
/// the states are returned for merging.
template <class State, class MakeState, class Visit>
std::vector<State> sweep(const RootSystem& rs, const SweepOptions& opt, MakeState make_state,
                         Visit visit) {
  check_budget(rs, opt.budget);
  const GroupEnumerator gen(rs);
  const unsigned workers = std::max(1u, opt.workers);
  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());

  auto run_threads = [&](auto&& body) {
    if (workers == 1) {
      body(0u);
      return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  };

  if (gen.is_classical_model()) {
    std::atomic<std::size_t> next_part{0};
    run_threads([&](unsigned w) {
      std::vector<SignedRoot> inv(rs.num_positive());
      SignedPerm scratch;
      for (std::size_t part; (part = next_part.fetch_add(1)) < gen.partition_count();) {
        gen.for_each_in_partition(part, [&](const CompactElement& c) {
          gen.inverse_action(c, inv, scratch);
          visit(states[w], c, std::span<const SignedRoot>(inv));
        });
      }
    });
    return states;
  }

  // Exceptional types: the level generation is sequential, the per-level
  // rationality tests are split into contiguous chunks.
  gen.for_each_level([&](const std::vector<CompactElement>& level) {
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    run_threads([&](unsigned w) {
      std::vector<SignedRoot> inv(rs.num_positive());
      SignedPerm scratch;
      const std::size_t lo = std::min(level.size(), w * chunk);
      const std::size_t hi = std::min(level.size(), lo + chunk);
      for (std::size_t k = lo; k < hi; ++k) {
        gen.inverse_action(level[k], inv, scratch);
        visit(states[w], level[k], std::span<const SignedRoot>(inv));
      }
    });
  });
  return states;
}

struct CountState {
  RationalityKernel kernel;
  std::uint64_t count = 0;
};

struct CollectState {
  RationalityKernel kernel;
  std::vector<CompactElement> found;
};

}  // namespace detail

/// Number of rational elements of W. The result does not depend on `workers`.
inline std::uint64_t count_rational(const RootSystem& rs, const SweepOptions& opt = {}) {
  auto states = detail::sweep<detail::CountState>(
      rs, opt, [&] { return detail::CountState{RationalityKernel(rs)}; },
      [](detail::CountState& st, const CompactElement&, std::span<const SignedRoot> inv) {
        if (st.kernel.is_rational_from_inverse(inv)) ++st.count;
      });
  std::uint64_t total = 0;
  for (const auto& s : states) total += s.count;
  return total;
}

/// All rational elements of W.
inline std::vector<WeylElement> collect_rational(const RootSystem& rs, const SweepOptions& opt = {}) {
  auto states = detail::sweep<detail::CollectState>(
      rs, opt, [&] { return detail::CollectState{RationalityKernel(rs), {}}; },
      [](detail::CollectState& st, const CompactElement& c, std::span<const SignedRoot> inv) {
        if (st.kernel.is_rational_from_inverse(inv)) st.found.push_back(c);
      });
  std::vector<WeylElement> out;
  for (const auto& s : states) {
    for (const auto& c : s.found) out.push_back(from_compact(rs, c));
  }
  return out;
}

struct AtlasEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  int label = 0;  // simple reflection index, 1-based

  friend bool operator==(const AtlasEdge&, const AtlasEdge&) = default;
  friend auto operator<=>(const AtlasEdge&, const AtlasEdge&) = default;
};

/// The rationality graph of W: rational elements, joined when they differ by
/// a simple reflection on the left (or, diagnostically, on the right).
struct Atlas {
  LieType lie_type;
  EdgeSide edge_side = EdgeSide::Left;
  std::vector<WeylElement> vertices;  // sorted by (length, reduced word)
  std::vector<Word> words;            // reduced word of each vertex
  std::vector<AtlasEdge> edges;       // a < b, sorted
  std::vector<std::vector<std::size_t>> components;
  std::vector<int> valencies;

  std::size_t count() const { return vertices.size(); }
  bool connected() const { return components.size() <= 1; }

  std::optional<std::size_t> find(const WeylElement& u) const {
    auto it = index_.find(u.action());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t valency_one_count() const {
    return static_cast<std::size_t>(std::count(valencies.begin(), valencies.end(), 1));
  }

  std::map<std::vector<SignedRoot>, std::size_t> index_;
};

inline WeylElement edge_neighbor(const RootSystem& rs, EdgeSide side, int i, const WeylElement& u) {
  return side == EdgeSide::Left ? left_mul_simple(rs, i, u) : right_mul_simple(rs, i, u);
}

/// Assembles the atlas from an explicit rational vertex list.
inline Atlas assemble_atlas(const RootSystem& rs, std::vector<WeylElement> rational, EdgeSide side) {
  Atlas at;
  at.lie_type = rs.type();
  at.edge_side = side;
  std::vector<std::pair<std::pair<int, Word>, WeylElement>> keyed;
  keyed.reserve(rational.size());
  for (auto& u : rational) {
    Word w = reduced_word(rs, u);
    const int len = static_cast<int>(w.size());
    keyed.push_back({{len, std::move(w)}, std::move(u)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [key, u] : keyed) {
    at.index_.emplace(u.action(), at.vertices.size());
    at.words.push_back(std::move(key.second));
    at.vertices.push_back(std::move(u));
  }

  const std::size_t n = at.vertices.size();
  at.valencies.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (int i = 1; i <= rs.rank(); ++i) {
      auto b = at.find(edge_neighbor(rs, side, i, at.vertices[a]));
      if (!b) continue;
      ++at.valencies[a];
      if (a < *b) at.edges.push_back({a, *b, i});
    }
  }
  std::sort(at.edges.begin(), at.edges.end());

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : at.edges) parent[root(e.a)] = root(e.b);
  std::map<std::size_t, std::size_t> comp_of;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = comp_of.emplace(root(v), at.components.size());
    if (fresh) at.components.emplace_back();
    at.components[it->second].push_back(v);
  }
  return at;
}

inline Atlas build_atlas(const RootSystem& rs, const AtlasOptions& opt = {}) {
  return assemble_atlas(rs, collect_rational(rs, {opt.workers, opt.budget}), opt.edge_side);
}

/// Number of simple reflections s with s*u rational.
inline int valency(const RootSystem& rs, const WeylElement& u) {
  int v = 0;
  for (int i = 1; i <= rs.rank(); ++i) v += is_rational(rs, left_mul_simple(rs, i, u)) ? 1 : 0;
  return v;
}

/// Greedy ascent from a rational u to w0: at each step take the smallest simple
/// index a with u^{-1}(alpha_a) > 0 and u(alpha_a) < 0 and replace u by s_a u.
/// Returns a_1 .. a_k with s_{a_k} ... s_{a_1} u = w0.
inline Word path_to_w0(const RootSystem& rs, const WeylElement& u) {
  if (!is_rational(rs, u)) throw PreconditionError("path_to_w0 requires a rational element");
  const int top = static_cast<int>(rs.num_positive());
  Word path;
  WeylElement cur = u;
  while (length(cur) < top) {
    int pick = 0;
    for (int i = 1; i <= rs.rank() && pick == 0; ++i) {
      const std::size_t a = rs.simple_index(i - 1);
      if (!is_left_descent(rs, cur, i) && cur(a).is_negative()) pick = i;
    }
    if (pick == 0) throw Error("no admissible simple root on the path to w0");
    cur = left_mul_simple(rs, pick, cur);
    if (!is_rational(rs, cur)) throw Error("path to w0 left the rational set");
    path.push_back(pick);
  }
  return path;
}

struct CoxeterReport {
  std::vector<CoxeterElement> rational;
  std::vector<int> valencies;  // valency in the rationality graph, per rational entry
  std::size_t total = 0;       // number of distinct Coxeter elements
};

inline CoxeterReport coxeter_report(const RootSystem& rs) {
  CoxeterReport rep;
  auto all = coxeter_elements(rs);
  rep.total = all.size();
  for (auto& c : all) {
    if (!is_rational(rs, c.element)) continue;
    rep.valencies.push_back(valency(rs, c.element));
    rep.rational.push_back(std::move(c));
  }
  return rep;
}

/// True iff eps maps the vertex set onto itself and sends each edge with label
/// i to an edge with label eps(i).
inline bool check_z2_symmetry(const RootSystem& rs, const Atlas& at) {
  if (!(at.lie_type == rs.type())) throw PreconditionError("atlas built for another type");
  const EpsilonMap eps(rs);
  std::vector<std::size_t> image(at.count());
  for (std::size_t v = 0; v < at.count(); ++v) {
    auto w = at.find(eps(at.vertices[v]));
    if (!w) return false;
    image[v] = *w;
  }
  std::set<std::tuple<std::size_t, std::size_t, int>> edge_set;
  for (const auto& e : at.edges) edge_set.emplace(e.a, e.b, e.label);
  for (const auto& e : at.edges) {
    const auto a = std::min(image[e.a], image[e.b]);
    const auto b = std::max(image[e.a], image[e.b]);
    if (!edge_set.count({a, b, eps.simple(e.label)})) return false;
  }
  return true;
}

}  // namespace ratweyl

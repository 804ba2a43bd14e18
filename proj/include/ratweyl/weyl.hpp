#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ratweyl/classical_model.hpp"
#include "ratweyl/errors.hpp"
#include "ratweyl/root_system.hpp"

namespace ratweyl {

/// Word in the simple reflections, 1-based: {1, 2} means s_1 s_2.
using Word = std::vector<int>;

/// Weyl group element stored as its action on the positive roots:
/// `action()[p]` is u(alpha_p) as a signed root index.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(LieType type, std::vector<SignedRoot> action)
      : type_(type), action_(std::move(action)) {}

  const LieType& type() const { return type_; }
  const std::vector<SignedRoot>& action() const { return action_; }
  std::size_t size() const { return action_.size(); }

  SignedRoot operator()(std::size_t p) const { return action_[p]; }
  SignedRoot apply(SignedRoot s) const {
    return s.is_positive() ? action_[s.index()] : -action_[s.index()];
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.type_ == b.type_ && a.action_ == b.action_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.action_ < b.action_; }

 private:
  LieType type_;
  std::vector<SignedRoot> action_;
};

inline void check_same_system(const RootSystem& rs, const WeylElement& u) {
  if (!(u.type() == rs.type()) || u.size() != rs.num_positive()) {
    throw PreconditionError("element of " + to_string(u.type()) + " used with root system " +
                            to_string(rs.type()));
  }
}

inline WeylElement identity_element(const RootSystem& rs) {
  std::vector<SignedRoot> act(rs.num_positive());
  for (std::size_t p = 0; p < act.size(); ++p) act[p] = SignedRoot::positive(p);
  return WeylElement(rs.type(), std::move(act));
}

inline bool is_identity(const WeylElement& u) {
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u(p) != SignedRoot::positive(p)) return false;
  }
  return true;
}

inline void check_simple_index(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) {
    throw PreconditionError("simple index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(rs.rank()));
  }
}

/// s_i for 1-based i.
inline WeylElement simple_reflection(const RootSystem& rs, int i) {
  check_simple_index(rs, i);
  return WeylElement(rs.type(), rs.simple_reflection(i - 1));
}

/// (u v)(alpha) = u(v(alpha)).
inline WeylElement mul(const WeylElement& u, const WeylElement& v) {
  if (!(u.type() == v.type()) || u.size() != v.size()) {
    throw PreconditionError("cannot multiply elements of " + to_string(u.type()) + " and " +
                            to_string(v.type()));
  }
  std::vector<SignedRoot> act(v.size());
  for (std::size_t p = 0; p < act.size(); ++p) act[p] = u.apply(v(p));
  return WeylElement(u.type(), std::move(act));
}

inline WeylElement inverse(const WeylElement& u) {
  std::vector<SignedRoot> act(u.size());
  for (std::size_t p = 0; p < act.size(); ++p) {
    const SignedRoot img = u(p);
    act[img.index()] = img.is_positive() ? SignedRoot::positive(p) : SignedRoot::negative(p);
  }
  return WeylElement(u.type(), std::move(act));
}

/// Number of positive roots sent to negative roots.
inline int length(const WeylElement& u) {
  return static_cast<int>(std::count_if(u.action().begin(), u.action().end(),
                                        [](SignedRoot s) { return s.is_negative(); }));
}

/// Left multiplication by s_i, 1-based.
inline WeylElement left_mul_simple(const RootSystem& rs, int i, const WeylElement& u) {
  check_simple_index(rs, i);
  const auto& s = rs.simple_reflection(i - 1);
  std::vector<SignedRoot> act(u.size());
  for (std::size_t p = 0; p < act.size(); ++p) {
    const SignedRoot img = u(p);
    act[p] = img.is_positive() ? s[img.index()] : -s[img.index()];
  }
  return WeylElement(u.type(), std::move(act));
}

/// Right multiplication by s_i, 1-based.
inline WeylElement right_mul_simple(const RootSystem& rs, int i, const WeylElement& u) {
  return mul(u, simple_reflection(rs, i));
}

/// s_{w[0]} s_{w[1]} ... ; the rightmost factor acts first.
inline WeylElement from_word(const RootSystem& rs, const Word& word) {
  WeylElement u = identity_element(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = left_mul_simple(rs, *it, u);
  return u;
}

/// u applied to an arbitrary root (by linearity over the simple roots).
inline Root act(const RootSystem& rs, const WeylElement& u, const Root& beta) {
  check_same_system(rs, u);
  if (beta.coeffs.size() != static_cast<std::size_t>(rs.rank())) {
    throw PreconditionError("root has wrong rank");
  }
  Root out{std::vector<int>(rs.rank(), 0)};
  for (int j = 0; j < rs.rank(); ++j) {
    if (beta.coeffs[j] == 0) continue;
    const Root img = rs.signed_root(u(rs.simple_index(j)));
    for (int k = 0; k < rs.rank(); ++k) out.coeffs[k] += beta.coeffs[j] * img.coeffs[k];
  }
  return out;
}

/// True when l(s_i u) < l(u), i.e. u^{-1}(alpha_i) < 0.
inline bool is_left_descent(const RootSystem& rs, const WeylElement& u, int i) {
  const std::size_t a = rs.simple_index(i - 1);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u(p).index() == a) return u(p).is_negative();
  }
  return false;
}

/// Reduced word built by stripping the smallest left descent repeatedly.
inline Word reduced_word(const RootSystem& rs, WeylElement u) {
  check_same_system(rs, u);
  Word w;
  while (!is_identity(u)) {
    const WeylElement inv = inverse(u);
    int pick = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (inv(rs.simple_index(i - 1)).is_negative()) {
        pick = i;
        break;
      }
    }
    w.push_back(pick);
    u = left_mul_simple(rs, pick, u);
  }
  return w;
}

inline std::string word_to_string(const Word& w, const std::string& sep = " ", bool with_s = true) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += sep;
    if (with_s) out += "s";
    out += std::to_string(w[k]);
  }
  return out;
}

/// w0: grows the element by right descents until every simple root is sent negative.
inline WeylElement longest_element(const RootSystem& rs) {
  WeylElement u = identity_element(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (u(rs.simple_index(i - 1)).is_positive()) {
        u = right_mul_simple(rs, i, u);
        grew = true;
        break;
      }
    }
  }
  return u;
}

inline int order(const WeylElement& u) {
  WeylElement p = u;
  int k = 1;
  while (!is_identity(p)) {
    p = mul(p, u);
    ++k;
  }
  return k;
}

/// Diagram involution with w0(alpha_i) = -alpha_{eps(i)}; 1-based, entry 0 unused.
inline std::vector<int> diagram_involution(const RootSystem& rs) {
  const WeylElement w0 = longest_element(rs);
  std::vector<int> eps(static_cast<std::size_t>(rs.rank()) + 1, 0);
  for (int i = 1; i <= rs.rank(); ++i) {
    const SignedRoot img = w0(rs.simple_index(i - 1));
    if (img.is_positive() || img.index() >= static_cast<std::size_t>(rs.rank())) {
      throw Error("w0 does not send simple roots to negative simple roots");
    }
    eps[i] = static_cast<int>(img.index()) + 1;
  }
  return eps;
}

/// The group automorphism induced by the diagram involution: s_i -> s_{eps(i)}.
class EpsilonMap {
 public:
  explicit EpsilonMap(const RootSystem& rs) : rs_(&rs), eps_(diagram_involution(rs)) {
    root_perm_.resize(rs.num_positive());
    for (std::size_t p = 0; p < rs.num_positive(); ++p) {
      Root img{std::vector<int>(rs.rank(), 0)};
      for (int j = 0; j < rs.rank(); ++j) img.coeffs[eps_[j + 1] - 1] = rs.root(p).coeffs[j];
      root_perm_[p] = rs.find(img).value();
    }
  }

  int simple(int i) const { return eps_[i]; }
  bool is_trivial() const {
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (eps_[i] != i) return false;
    }
    return true;
  }

  WeylElement operator()(const WeylElement& u) const {
    check_same_system(*rs_, u);
    std::vector<SignedRoot> act(u.size());
    for (std::size_t p = 0; p < act.size(); ++p) {
      const SignedRoot img = u(root_perm_[p]);
      const std::size_t q = root_perm_[img.index()];
      act[p] = img.is_positive() ? SignedRoot::positive(q) : SignedRoot::negative(q);
    }
    return WeylElement(u.type(), std::move(act));
  }

  Word operator()(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (int i : w) out.push_back(eps_[i]);
    return out;
  }

 private:
  const RootSystem* rs_;
  std::vector<int> eps_;
  std::vector<std::size_t> root_perm_;
};

inline WeylElement epsilon(const RootSystem& rs, const WeylElement& u) { return EpsilonMap(rs)(u); }

struct CoxeterElement {
  Word word;  // lexicographically first ordering producing the element
  WeylElement element;
};

/// Every product of the r simple reflections in some order, deduplicated as group elements.
inline std::vector<CoxeterElement> coxeter_elements(const RootSystem& rs) {
  Word order(static_cast<std::size_t>(rs.rank()));
  std::iota(order.begin(), order.end(), 1);
  std::set<std::vector<SignedRoot>> seen;
  std::vector<CoxeterElement> out;
  do {
    WeylElement c = from_word(rs, order);
    if (seen.insert(c.action()).second) out.push_back({order, std::move(c)});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

/// Element of W from a classical signed permutation.
inline WeylElement from_signed_perm(const RootSystem& rs, const SignedPerm& w) {
  const ClassicalModel model(rs);
  if (w.size() != model.dimension()) throw PreconditionError("signed permutation has wrong size");
  std::vector<bool> hit(w.size(), false);
  int negatives = 0;
  for (auto code : w) {
    const auto k = static_cast<std::size_t>(std::abs(code));
    if (k == 0 || k > w.size() || hit[k - 1]) throw PreconditionError("not a signed permutation");
    hit[k - 1] = true;
    negatives += code < 0 ? 1 : 0;
  }
  if ((rs.type().family == Family::A && negatives != 0) ||
      (rs.type().family == Family::D && negatives % 2 != 0)) {
    throw PreconditionError("signed permutation is not in the Weyl group");
  }
  std::vector<SignedRoot> act(rs.num_positive());
  model.action(w, act);
  for (const auto& s : act) {
    if (s.code() == 0) throw PreconditionError("signed permutation is not in the Weyl group");
  }
  return WeylElement(rs.type(), std::move(act));
}

/// The D_r element with C(e_1) = -e_r, C(e_i) = -e_i (1 < i < r), C(e_r) = e_1.
/// It changes r - 1 signs, so it lies in W(D_r) only for odd r.
inline WeylElement special_d_element(const RootSystem& rs) {
  const LieType& t = rs.type();
  if (t.family != Family::D) throw PreconditionError("special element requires type D");
  if (t.rank % 2 == 0) {
    throw PreconditionError("special element is not in W(D_r) for even r = " +
                            std::to_string(t.rank));
  }
  const int r = t.rank;
  SignedPerm w(static_cast<std::size_t>(r));
  w[0] = static_cast<std::int16_t>(-r);
  for (int i = 2; i <= r - 1; ++i) w[i - 1] = static_cast<std::int16_t>(-i);
  w[r - 1] = 1;
  return from_signed_perm(rs, w);
}

}  // namespace ratweyl

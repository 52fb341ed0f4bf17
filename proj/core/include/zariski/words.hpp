#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zariski/algebra.hpp"
#include "zariski/error.hpp"

namespace zariski {

/// a0 x a1 x ... x an, stored as its coefficients. Degree n = size - 1.
template <class E>
class SemigroupWord {
 public:
  explicit SemigroupWord(std::vector<E> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw InvalidWord("semigroup word needs at least one coefficient");
  }

  static SemigroupWord constant(E a) { return SemigroupWord(std::vector<E>{std::move(a)}); }

  std::size_t degree() const { return coefficients_.size() - 1; }
  const std::vector<E>& coefficients() const { return coefficients_; }

  friend bool operator==(const SemigroupWord&, const SemigroupWord&) = default;

 private:
  std::vector<E> coefficients_;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

/// a0 x^e1 a1 ... x^en an with every e_i in {-1, +1}.
template <class E>
class GroupWord {
 public:
  GroupWord(std::vector<E> coefficients, std::vector<Sign> signs)
      : coefficients_(std::move(coefficients)), signs_(std::move(signs)) {
    if (coefficients_.empty()) throw InvalidWord("group word needs at least one coefficient");
    if (signs_.size() + 1 != coefficients_.size()) {
      throw InvalidWord("group word needs exactly one sign per occurrence of x");
    }
  }

  static GroupWord positive(std::vector<E> coefficients) {
    std::vector<Sign> signs(coefficients.empty() ? 0 : coefficients.size() - 1, Sign::Positive);
    return GroupWord(std::move(coefficients), std::move(signs));
  }

  std::size_t degree() const { return signs_.size(); }
  const std::vector<E>& coefficients() const { return coefficients_; }
  const std::vector<Sign>& signs() const { return signs_; }

  std::size_t count(Sign s) const { return std::count(signs_.begin(), signs_.end(), s); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<E> coefficients_;
  std::vector<Sign> signs_;
};

/// The pair (f, g) standing for the subbasic set {x : (x)f != (x)g}.
template <class E>
struct IneqPair {
  SemigroupWord<E> lhs;
  SemigroupWord<E> rhs;

  friend bool operator==(const IneqPair&, const IneqPair&) = default;
};

template <Monoid S>
typename S::Element eval_semigroup(const SemigroupWord<typename S::Element>& w,
                                   const typename S::Element& x, const S& s) {
  const auto& c = w.coefficients();
  typename S::Element acc = c.front();
  for (std::size_t i = 1; i < c.size(); ++i) acc = s.mul(s.mul(acc, x), c[i]);
  return acc;
}

template <Group G>
typename G::Element eval_group(const GroupWord<typename G::Element>& w,
                               const typename G::Element& x, const G& g) {
  const auto& c = w.coefficients();
  const typename G::Element x_inv = g.inverse(x);
  typename G::Element acc = c.front();
  for (std::size_t i = 1; i < c.size(); ++i) {
    acc = g.mul(g.mul(acc, w.signs()[i - 1] == Sign::Positive ? x : x_inv), c[i]);
  }
  return acc;
}

template <Monoid S>
bool holds_ineq(const IneqPair<typename S::Element>& pair, const typename S::Element& x,
                const S& s) {
  return !(eval_semigroup(pair.lhs, x, s) == eval_semigroup(pair.rhs, x, s));
}

/// Finite intersection of subbasic sets; the empty intersection is everything.
template <Monoid S>
bool basic_set_membership(std::span<const IneqPair<typename S::Element>> pairs,
                          const typename S::Element& x, const S& s) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [&](const auto& pair) { return holds_ineq(pair, x, s); });
}

/// The word whose value at every x is the inverse of w's value:
/// an^-1 x^-en ... x^-e1 a0^-1.
template <Group G>
GroupWord<typename G::Element> formal_inverse(const GroupWord<typename G::Element>& w,
                                              const G& g) {
  std::vector<typename G::Element> coeffs;
  coeffs.reserve(w.coefficients().size());
  for (auto it = w.coefficients().rbegin(); it != w.coefficients().rend(); ++it) {
    coeffs.push_back(g.inverse(*it));
  }
  std::vector<Sign> signs;
  signs.reserve(w.signs().size());
  for (auto it = w.signs().rbegin(); it != w.signs().rend(); ++it) signs.push_back(flip(*it));
  return GroupWord<typename G::Element>(std::move(coeffs), std::move(signs));
}

/// Rewrites the group inequation w(x) != 1 as a semigroup inequation u(x) != v(x)
/// with the same solution set in every group.
///
/// If there are at least two negative occurrences and they outnumber the
/// positive ones, w is replaced by its formal inverse. With no negative occurrence left the result is (w, 1). Otherwise a
/// single x^-1 remains, w = p x^-1 q, and since p x^-1 q = 1 iff q p x^-1 = 1 the
/// result is (q.p, x), where q.p joins the words multiplying q's last
/// coefficient into p's first.
///
/// Throws IrreducibleSignature for mixed signs of degree 4 or more. For degree
/// at most 3 the minority sign occurs at most once, so the rotation is unique.
template <Group G>
IneqPair<typename G::Element> group_ineq_to_semigroup_pair(
    const GroupWord<typename G::Element>& w, const G& g) {
  using E = typename G::Element;
  if (w.degree() > 3 && w.count(Sign::Negative) != 0 && w.count(Sign::Positive) != 0) {
    throw IrreducibleSignature("mixed-sign group word of degree " + std::to_string(w.degree()) +
                               " is outside the degree-3 reduction");
  }
  GroupWord<E> word = w;
  const std::size_t neg_before = word.count(Sign::Negative);
  if (neg_before > 1 && neg_before > word.count(Sign::Positive)) word = formal_inverse(word, g);

  const std::size_t negatives = word.count(Sign::Negative);
  if (negatives == 0) {
    return {SemigroupWord<E>(word.coefficients()), SemigroupWord<E>::constant(g.identity())};
  }

  const auto& c = word.coefficients();
  const auto& signs = word.signs();
  const std::size_t neg = static_cast<std::size_t>(
      std::find(signs.begin(), signs.end(), Sign::Negative) - signs.begin());
  // p = c[0..neg], q = c[neg+1..n]
  std::vector<E> rotated(c.begin() + static_cast<std::ptrdiff_t>(neg) + 1, c.end());
  rotated.back() = g.mul(rotated.back(), c.front());
  rotated.insert(rotated.end(), c.begin() + 1, c.begin() + static_cast<std::ptrdiff_t>(neg) + 1);
  return {SemigroupWord<E>(std::move(rotated)),
          SemigroupWord<E>(std::vector<E>{g.identity(), g.identity()})};
}

}  // namespace zariski

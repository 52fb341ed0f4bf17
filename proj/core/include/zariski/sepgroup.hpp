#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "zariski/algebra.hpp"

namespace zariski {

// The countable abelian group G = (+)_k F/N_k, where F is free abelian on
// x_0, x_1, ... and N_k is generated by the k-th powers of the even-indexed
// generators. Elements are kept in normal form: even-index exponents of
// component k >= 1 lie in [0, k), zero exponents and identity components are
// never stored. N_0 is trivial.

using Generator = std::uint64_t;
using Exponents = std::map<Generator, std::int64_t>;

/// An element of F.
class FreeAbelianWord {
 public:
  FreeAbelianWord() = default;
  explicit FreeAbelianWord(Exponents exponents);

  const Exponents& exponents() const { return exponents_; }

  friend bool operator==(const FreeAbelianWord&, const FreeAbelianWord&) = default;

 private:
  Exponents exponents_;
};

/// An element of G_k = F/N_k in normal form.
class GkElement {
 public:
  GkElement() = default;
  GkElement(std::uint64_t k, const Exponents& exponents);

  std::uint64_t k() const { return k_; }
  const Exponents& exponents() const { return exponents_; }
  bool is_identity() const { return exponents_.empty(); }

  friend bool operator==(const GkElement&, const GkElement&) = default;

 private:
  std::uint64_t k_ = 0;
  Exponents exponents_;
};

GkElement gk_normalize(std::uint64_t k, const FreeAbelianWord& w);

/// A finitely supported element of the direct sum.
class GElement {
 public:
  GElement() = default;

  /// Normalizes each component; accepts any integer exponents.
  static GElement from_components(const std::map<std::uint64_t, Exponents>& components);

  /// x_n N_m placed at coordinate m (an element of T_m).
  static GElement tm_point(std::uint64_t m, Generator n);

  const std::map<std::uint64_t, Exponents>& components() const { return components_; }
  GkElement component(std::uint64_t k) const;
  bool is_identity() const { return components_.empty(); }

  GElement operator*(const GElement& other) const;
  GElement inverse() const;
  GElement pow(std::int64_t p) const;

  friend bool operator==(const GElement&, const GElement&) = default;

 private:
  std::map<std::uint64_t, Exponents> components_;
};

inline GElement g_mul(const GElement& u, const GElement& v) { return u * v; }
inline GElement g_inv(const GElement& u) { return u.inverse(); }
inline bool g_eq(const GElement& u, const GElement& v) { return u == v; }

std::ostream& operator<<(std::ostream& os, const GElement& g);

struct SeparatingGroup {
  using Element = GElement;
  Element identity() const { return {}; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
};

static_assert(Group<SeparatingGroup>);

/// a * x^p.
GElement eval_ax_p(const GElement& a, std::uint64_t p, const GElement& x);

/// The n <= bound with a * tm_point(m, n)^p = 1, from the closed form: a must
/// be trivial off coordinate m, and with h its coordinate-m exponents, n
/// solves iff h vanishes away from n and h(n) + p is 0 (n odd) or divisible
/// by m (n even). Requires m >= 1, p >= 1.
std::vector<Generator> solve_on_tm(const GElement& a, std::uint64_t p, std::uint64_t m,
                                   Generator bound);

/// The same set by evaluating every candidate n <= bound.
std::vector<Generator> solve_on_tm_by_enumeration(const GElement& a, std::uint64_t p,
                                                  std::uint64_t m, Generator bound);

/// Where solutions on T_m can lie. Either all even indices (m | p and a
/// contributes nothing at coordinate m) or a finite set of indices: the
/// letters of a's coordinate-m word, or nothing when a is nontrivial elsewhere.
struct CandidateBound {
  bool all_even = false;
  std::vector<Generator> candidates;  // empty when all_even

  bool admits(Generator n) const;
  friend bool operator==(const CandidateBound&, const CandidateBound&) = default;
};

CandidateBound finiteness_bound(const GElement& a, std::uint64_t p, std::uint64_t m);

/// a x^n != 1 has the same solutions as a^-1 x^|n| != 1, so every commutative
/// inequation can be written with a non-negative exponent.
template <Group G>
std::pair<typename G::Element, std::uint64_t> commutative_reduce(const typename G::Element& a,
                                                                 std::int64_t n, const G& g) {
  if (n >= 0) return {a, static_cast<std::uint64_t>(n)};
  return {g.inverse(a), static_cast<std::uint64_t>(-n)};
}

}  // namespace zariski

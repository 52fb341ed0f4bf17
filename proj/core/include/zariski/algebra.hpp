#pragma once

#include <concepts>
#include <cstdint>

#include "zariski/perm.hpp"

namespace zariski {

// A structure type S describes how its elements multiply; elements are plain
// values of S::Element. Multiplication is written left to right, so for
// permutations mul(a, b) applies a first.

template <class S>
concept Monoid = requires(const S& s, const typename S::Element& a) {
  typename S::Element;
  { s.identity() } -> std::convertible_to<typename S::Element>;
  { s.mul(a, a) } -> std::convertible_to<typename S::Element>;
  { a == a } -> std::convertible_to<bool>;
};

template <class S>
concept Group = Monoid<S> && requires(const S& s, const typename S::Element& a) {
  { s.inverse(a) } -> std::convertible_to<typename S::Element>;
};

/// The finitary symmetric group Sym_omega(N).
struct SymOmega {
  using Element = FinPermutation;
  Element identity() const { return {}; }
  Element mul(const Element& a, const Element& b) const { return compose(a, b); }
  Element inverse(const Element& a) const { return a.inverse(); }
};

/// (N, +): cancellative, commutative, and without inverses.
struct NaturalsUnderAddition {
  using Element = std::uint64_t;
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return a + b; }
};

static_assert(Group<SymOmega>);
static_assert(Monoid<NaturalsUnderAddition> && !Group<NaturalsUnderAddition>);

}  // namespace zariski

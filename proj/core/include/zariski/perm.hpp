#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

/// A point of the countable set X = N on which permutations act.
using Point = std::uint64_t;

using PointPair = std::pair<Point, Point>;

/// A finitely supported permutation of N.
///
/// Only moved points are stored, sorted by point, so two permutations are
/// equal exactly when their stored maps are equal. Functions act on the
/// right and compose left to right: (x)(p*q) = ((x)p)q.
class FinPermutation {
 public:
  FinPermutation() = default;

  /// Builds a permutation from point/image pairs. Pairs x -> x are dropped.
  /// Throws InvalidPermutation unless the pairs form a bijection of their
  /// own domain.
  static FinPermutation from_pairs(std::vector<PointPair> pairs);

  /// The cycle (c0 c1 ... c_{r-1}) mapping c_i to c_{i+1}.
  static FinPermutation cycle(std::initializer_list<Point> points);
  static FinPermutation transposition(Point x, Point y);

  Point apply(Point x) const;
  Point operator()(Point x) const { return apply(x); }

  FinPermutation inverse() const;

  bool is_identity() const { return moved_.empty(); }

  /// Moved points in ascending order.
  std::vector<Point> support() const;

  /// Stored (point, image) pairs, sorted by point.
  std::span<const PointPair> pairs() const { return moved_; }

  /// Largest moved point plus one, or 0 for the identity.
  Point extent() const { return moved_.empty() ? 0 : moved_.back().first + 1; }

  friend bool operator==(const FinPermutation&, const FinPermutation&) = default;
  friend auto operator<=>(const FinPermutation&, const FinPermutation&) = default;

 private:
  explicit FinPermutation(std::vector<PointPair> sorted_moved)
      : moved_(std::move(sorted_moved)) {}

  std::vector<PointPair> moved_;

  friend FinPermutation compose(const FinPermutation&, const FinPermutation&);
  friend class PartialBijection;
};

/// Left-to-right composition: apply(compose(p, q), x) == q(p(x)).
FinPermutation compose(const FinPermutation& p, const FinPermutation& q);

inline FinPermutation operator*(const FinPermutation& p, const FinPermutation& q) {
  return compose(p, q);
}

inline FinPermutation invert(const FinPermutation& p) { return p.inverse(); }

inline std::vector<Point> support(const FinPermutation& p) { return p.support(); }

/// A finite injective partial map of N.
class PartialBijection {
 public:
  PartialBijection() = default;

  /// Throws NotInjective if two pairs share a point or an image.
  static PartialBijection from_pairs(std::vector<PointPair> pairs);

  std::optional<Point> apply(Point x) const;
  bool in_domain(Point x) const { return apply(x).has_value(); }
  bool in_image(Point y) const;

  /// Adds x -> y. Throws NotInjective if x is already mapped or y is already
  /// an image.
  void insert(Point x, Point y);

  /// Returns a copy extended by x -> y.
  PartialBijection with(Point x, Point y) const;

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::vector<Point> domain() const;
  std::vector<Point> image() const;

  /// Pairs sorted by domain point.
  std::span<const PointPair> pairs() const { return pairs_; }

  /// True when p agrees with this map on its whole domain.
  bool restricts(const FinPermutation& p) const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

 private:
  std::vector<PointPair> pairs_;  // sorted by first
  std::vector<Point> image_;      // sorted
};

/// Completes b to a permutation by closing every maximal chain
/// x0 -> x1 -> ... -> xr (x0 not an image, xr not in the domain) with xr -> x0.
/// Cycles already present in b are kept as they are.
FinPermutation extend(const PartialBijection& b);

std::string to_string(const FinPermutation& p);
std::ostream& operator<<(std::ostream& os, const FinPermutation& p);
std::ostream& operator<<(std::ostream& os, const PartialBijection& b);

}  // namespace zariski

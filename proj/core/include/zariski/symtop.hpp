#pragma once

#include "zariski/perm.hpp"

namespace zariski {

/// U_{x,y} = {f : (x)f = y}, a subbasic open set of pointwise convergence.
struct SubbasicSet {
  Point x;
  Point y;
};

inline bool in_u(const SubbasicSet& s, const FinPermutation& f) { return f.apply(s.x) == s.y; }

/// The transposition swapping x and y. Throws InvalidPair if x == y.
class Transposition {
 public:
  Transposition(Point x, Point y);

  Point x() const { return x_; }
  Point y() const { return y_; }
  FinPermutation permutation() const { return FinPermutation::transposition(x_, y_); }

 private:
  Point x_;
  Point y_;
};

/// Whether f commutes with the transposition (x y). This holds exactly when f
/// maps {x, y} onto itself. Throws InvalidPair if x == y.
bool stab_by_commutation(const FinPermutation& f, Point x, Point y);

/// The direct setwise-stabilizer test {(x)f, (y)f} = {x, y}.
bool stabilizes_pair(const FinPermutation& f, Point x, Point y);

struct MaximalDecomposition {
  FinPermutation phi;
  FinPermutation h;
};

/// Writes g = phi f h^-1 with phi and h fixing x, for f and g both moving x.
/// h is the transposition of (x)g and (x)f (identity when they agree), and
/// phi = g h f^-1. Throws FixedPoint if f or g fixes x.
MaximalDecomposition maximal_decompose(const FinPermutation& f, const FinPermutation& g, Point x);

}  // namespace zariski

#include "zariski/symtop.hpp"

#include <string>

#include "zariski/error.hpp"

namespace zariski {

Transposition::Transposition(Point x, Point y) : x_(x), y_(y) {
  if (x == y) throw InvalidPair("transposition needs two distinct points");
}

bool stab_by_commutation(const FinPermutation& f, Point x, Point y) {
  const FinPermutation phi = Transposition(x, y).permutation();
  return compose(phi, f) == compose(f, phi);
}

bool stabilizes_pair(const FinPermutation& f, Point x, Point y) {
  const Point fx = f.apply(x);
  const Point fy = f.apply(y);
  return (fx == x && fy == y) || (fx == y && fy == x);
}

MaximalDecomposition maximal_decompose(const FinPermutation& f, const FinPermutation& g, Point x) {
  const Point fx = f.apply(x);
  const Point gx = g.apply(x);
  if (fx == x) throw FixedPoint("f fixes " + std::to_string(x));
  if (gx == x) throw FixedPoint("g fixes " + std::to_string(x));
  // Neither image is x, so the transposition fixes x.
  FinPermutation h = gx == fx ? FinPermutation{} : FinPermutation::transposition(gx, fx);
  FinPermutation phi = compose(compose(g, h), f.inverse());
  return {std::move(phi), std::move(h)};
}

}  // namespace zariski

#include "zariski/random.hpp"

#include <limits>
#include <numeric>

namespace zariski {

std::uint64_t Rng::below(std::uint64_t n) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

FinPermutation random_permutation(Rng& rng, Point support) {
  std::vector<Point> images(support);
  std::iota(images.begin(), images.end(), Point{0});
  for (Point i = support; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  std::vector<PointPair> pairs;
  for (Point x = 0; x < support; ++x) pairs.emplace_back(x, images[x]);
  return FinPermutation::from_pairs(std::move(pairs));
}

PermPair random_pair(Rng& rng, const PairShape& shape) {
  const std::size_t rows = 1 + rng.below(shape.max_rows);
  std::vector<FinPermutation> pool;
  for (std::size_t i = 0; i < shape.pool; ++i) pool.push_back(random_permutation(rng, shape.support));
  auto entry = [&] {
    return pool.empty() ? random_permutation(rng, shape.support) : pool[rng.below(pool.size())];
  };
  auto random_matrix = [&] {
    std::vector<std::vector<FinPermutation>> m(rows);
    for (auto& row : m) {
      const std::size_t degree = rng.below(shape.max_degree + 1);
      for (std::size_t j = 0; j <= degree; ++j) row.push_back(entry());
    }
    return PermMatrix(std::move(m));
  };
  PermMatrix a = random_matrix();
  PermMatrix b = random_matrix();
  return PermPair(std::move(a), std::move(b));
}

std::pair<PermPair, PermPair> random_proper_pair(Rng& rng, const PairShape& shape,
                                                 const FinPermutation& adjuster) {
  for (;;) {
    PermPair raw = random_pair(rng, shape);
    NormalForm<FinPermutation> nf = normalize(raw, SymOmega{}, adjuster);
    if (nf.kind == NormalFormKind::Proper) return {std::move(raw), std::move(*nf.pair)};
  }
}

GElement random_gelement(Rng& rng, const GElementShape& shape) {
  std::map<std::uint64_t, Exponents> components;
  const std::size_t count = rng.below(shape.max_components + 1);
  for (std::size_t c = 0; c < count; ++c) {
    Exponents& exps = components[rng.below(shape.max_component + 1)];
    const std::size_t letters = rng.below(shape.max_letters + 1);
    for (std::size_t l = 0; l < letters; ++l) {
      exps[rng.below(shape.max_generator + 1)] += rng.between(-shape.max_exponent, shape.max_exponent);
    }
  }
  return GElement::from_components(components);
}

}  // namespace zariski

#pragma once

#include <cstdint>
#include <random>

#include "zariski/perm.hpp"
#include "zariski/sepgroup.hpp"
#include "zariski/witness.hpp"

namespace zariski {

/// Seeded generator: std::mt19937_64, whose output sequence the standard fixes,
/// with bounded draws done by rejection here rather than by the
/// implementation-defined std distributions. Equal seeds give equal streams on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform permutation of {0, ..., support-1} (Fisher-Yates), identity elsewhere.
FinPermutation random_permutation(Rng& rng, Point support);

struct PairShape {
  std::size_t max_rows = 3;     // rows drawn from 1..max_rows
  std::size_t max_degree = 3;   // each row degree drawn from 0..max_degree
  Point support = 8;            // entries permute {0..support-1}
  std::size_t pool = 0;         // if positive, entries come from this many
                                // permutations drawn once per pair
};

PermPair random_pair(Rng& rng, const PairShape& shape);

/// Draws pairs until normalization gives a Proper form; returns the drawn pair
/// and its normal form.
std::pair<PermPair, PermPair> random_proper_pair(Rng& rng, const PairShape& shape,
                                                 const FinPermutation& adjuster);

struct GElementShape {
  std::uint64_t max_component = 6;  // component indices 0..max_component
  Generator max_generator = 20;     // generator indices 0..max_generator
  std::int64_t max_exponent = 5;    // exponents in [-max_exponent, max_exponent]
  std::size_t max_components = 3;
  std::size_t max_letters = 4;
};

GElement random_gelement(Rng& rng, const GElementShape& shape);

}  // namespace zariski

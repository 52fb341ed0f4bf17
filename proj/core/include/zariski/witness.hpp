#pragma once

#include <optional>
#include <set>
#include <vector>

#include "zariski/perm.hpp"
#include "zariski/ragged.hpp"

namespace zariski {

using PermPair = MatrixPair<FinPermutation>;
using PermMatrix = RaggedMatrix<FinPermutation>;

/// What the witness construction needs to know about a permutation group G
/// with no algebraicity.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  /// Whether some element of G extends b.
  virtual bool extendable(const PartialBijection& b) const = 0;

  /// A point a outside `forbidden` such that b + {q -> a} is extendable, or
  /// nullopt if the oracle cannot find one. q must not be in dom(b).
  virtual std::optional<Point> choose_image(const PartialBijection& b, Point q,
                                            const std::set<Point>& forbidden) const = 0;

  /// An element of G extending b.
  virtual FinPermutation complete(const PartialBijection& b) const = 0;
};

/// Sym_omega(N): every finite injective map extends, images are chosen as the
/// smallest admissible point, and completion closes chains into cycles.
class SymOmegaOracle final : public GroupOracle {
 public:
  bool extendable(const PartialBijection&) const override { return true; }
  std::optional<Point> choose_image(const PartialBijection& b, Point q,
                                    const std::set<Point>& forbidden) const override;
  FinPermutation complete(const PartialBijection& b) const override { return extend(b); }
};

inline SymOmegaOracle symw_oracle() { return {}; }

/// For each row, the smallest point moved differently by the two leading
/// coefficients. Throws NotNormalized if a row has equal leading coefficients.
std::vector<Point> pick_separators(const PermPair& p);

/// {1} u C u C^-1 u CC u CC^-1 u C^-1C u C^-1C^-1 for C the set of entries of p,
/// sorted and deduplicated.
std::vector<FinPermutation> forbidden_set(const PermPair& p);

/// How far (m)r_0 x r_1 x ... gets under a partial map x: `reached` is the
/// largest L with (m)r_0 x ... x r_L defined, `values[l]` the point after r_l.
struct RowProgress {
  std::size_t reached = 0;
  std::vector<Point> values;
  Point last() const { return values.back(); }
};

RowProgress partial_row_eval(const std::vector<FinPermutation>& row, Point start,
                             const PartialBijection& x);

enum class WitnessCase { Alpha, Beta };

struct WitnessStep {
  WitnessCase side;
  std::size_t row;
  Point q;
  Point image;
  std::vector<std::size_t> progress_a;  // p(a, j, i) per row after the step
  std::vector<std::size_t> progress_b;
};

struct WitnessTrace {
  std::vector<Point> separators;
  std::vector<FinPermutation> forbidden_products;
  std::vector<WitnessStep> steps;
  PartialBijection partial;  // the final partial map
  FinPermutation final;
};

struct WitnessResult {
  FinPermutation element;
  WitnessTrace trace;
};

/// Builds an element of N_{A,B} for a pair with distinct leading coefficients
/// in every row.
///
/// Starting from the empty map, each step picks the lowest row whose A-side
/// evaluation at its separator gets stuck (else the lowest stuck B-side row),
/// and maps the stuck point q to a fresh point outside (T)P where T collects
/// the current domain, image, q and all separators. When every row evaluates
/// fully the map is completed by the oracle. Each step advances one row by at
/// least one position, so there are at most total_degree() steps.
///
/// Throws NotNormalized or OracleExhausted.
WitnessResult construct_witness(const PermPair& p, const GroupOracle& oracle);

/// A point of N(p1) intersected with N(p2), via the stacked pair.
FinPermutation intersect_witness(const PermPair& p1, const PermPair& p2,
                                 const GroupOracle& oracle);

/// Replay checks on a partial map produced by construct_witness.
///
/// Distinct separated values: for every row i and prefixes L, R at which both
/// sides are defined, (m_i)a_{i,0} x ... a_{i,L} != (m_i)b_{i,0} x ... b_{i,R}.
bool prefixes_stay_separated(const PermPair& p, const std::vector<Point>& separators,
                             const PartialBijection& x);

/// No image of x is carried onto a separator by any element of `products`.
bool images_avoid_separators(const std::vector<FinPermutation>& products,
                             const std::vector<Point>& separators, const PartialBijection& x);

std::string to_string(WitnessCase c);

}  // namespace zariski

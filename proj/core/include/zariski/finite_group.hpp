#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/algebra.hpp"

namespace zariski {

/// A finite group given by its Cayley table, elements 0 .. order-1.
/// Used as exhaustive ground truth for the definitions.
class FiniteGroupTable {
 public:
  using Element = std::uint32_t;

  /// Validates closure, associativity, a two-sided identity and inverses.
  /// Throws InvalidGroupTable.
  static FiniteGroupTable from_table(std::string name, std::vector<std::vector<Element>> table);

  std::uint32_t order() const { return order_; }
  const std::string& name() const { return name_; }

  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inverse(Element a) const { return inv_[a]; }

  bool is_abelian() const;

 private:
  std::string name_;
  std::uint32_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
};

static_assert(Group<FiniteGroupTable>);

/// Z2 .. Z6 (addition mod n), S3, S4 (permutations in lexicographic order,
/// composed left to right). Throws UnknownGroup.
FiniteGroupTable builtin(std::string_view name);

std::vector<std::string> builtin_names();

/// Subsets of the carrier {0, ..., order-1} as bitmasks.
using Subset = std::uint32_t;

/// A deduplicated, sorted collection of subsets of a fixed carrier.
class SetFamily {
 public:
  explicit SetFamily(std::uint32_t order) : order_(order) {}
  SetFamily(std::uint32_t order, std::vector<Subset> sets);

  std::uint32_t order() const { return order_; }
  Subset carrier() const { return order_ == 32 ? ~Subset{0} : (Subset{1} << order_) - 1; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Subset s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::uint32_t order_;
  std::vector<Subset> sets_;
};

/// Largest number of words one side may range over.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;
/// Largest number of distinct (f, g) word-function pairs semigroup_family compares.
inline constexpr std::uint64_t kPairLimit = 50'000'000;
/// Largest explicit topology topology_close will build.
inline constexpr std::size_t kClosureLimit = 4096;

/// All {x : f(x) != g(x)} for semigroup words f, g of degree <= d.
/// Throws TooLarge when |G|^(d+1) exceeds the enumeration limit, or when the
/// distinct word functions to compare exceed kPairLimit pairs.
SetFamily semigroup_family(const FiniteGroupTable& g, std::uint32_t max_degree);

/// All {x : w(x) != 1} for group words w of degree <= d.
/// Throws TooLarge when |G|^(d+1) * 2^d exceeds the enumeration limit.
SetFamily group_family(const FiniteGroupTable& g, std::uint32_t max_degree);

/// The topology generated by f as a subbasis, listed explicitly: the fixpoint
/// of closing f, the empty set and the carrier under pairwise union and
/// intersection. Throws TooLarge past kClosureLimit sets.
SetFamily topology_close(const SetFamily& f);

/// F1 subset of F2. Throws CarrierMismatch for different carriers.
bool family_subset(const SetFamily& f1, const SetFamily& f2);

/// A topology on a finite carrier held as its minimal open neighbourhoods.
/// Handles topologies too large to list.
class FiniteTopology {
 public:
  static FiniteTopology generated_by(const SetFamily& subbasis);

  std::uint32_t order() const { return order_; }
  const std::vector<Subset>& neighbourhoods() const { return neighbourhoods_; }

  bool is_open(Subset s) const;
  bool is_discrete() const;
  /// Every open set of *this is open in other. Throws CarrierMismatch.
  bool coarser_than(const FiniteTopology& other) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  std::uint32_t order_ = 0;
  std::vector<Subset> neighbourhoods_;
};

/// A group word over G whose direct solution set differs from the one given
/// by group_ineq_to_semigroup_pair.
struct ReductionMismatch {
  std::vector<FiniteGroupTable::Element> coefficients;
  std::vector<int> signs;
  Subset direct;
  Subset reduced;
};

/// Checks the degree-3 reduction on every group word over g of degree <= d
/// (every coefficient tuple and sign pattern). Throws TooLarge as
/// group_family and InvalidArgument for d > 3.
std::vector<ReductionMismatch> check_reduction(const FiniteGroupTable& g, std::uint32_t max_degree);

/// Number of words check_reduction visits.
std::uint64_t reduction_word_count(const FiniteGroupTable& g, std::uint32_t max_degree);

}  // namespace zariski

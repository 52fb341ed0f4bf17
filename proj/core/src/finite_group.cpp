#include "zariski/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zariski/error.hpp"
#include "zariski/words.hpp"

namespace zariski {

using Element = FiniteGroupTable::Element;

FiniteGroupTable FiniteGroupTable::from_table(std::string name,
                                              std::vector<std::vector<Element>> table) {
  const auto n = static_cast<std::uint32_t>(table.size());
  if (n == 0 || n > 32) throw InvalidGroupTable("group order must be in 1..32");
  FiniteGroupTable g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.mul_.reserve(std::size_t{n} * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroupTable("Cayley table must be square");
    for (Element e : row) {
      if (e >= n) throw InvalidGroupTable("Cayley table entry out of range");
      g.mul_.push_back(e);
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw InvalidGroupTable("multiplication is not associative");
        }
      }
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    found = true;
    for (Element a = 0; a < n && found; ++a) found = g.mul(e, a) == a && g.mul(a, e) == a;
    if (found) g.identity_ = e;
  }
  if (!found) throw InvalidGroupTable("no identity element");
  g.inv_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) g.inv_[a] = b;
    }
    if (g.inv_[a] == n) throw InvalidGroupTable("element without inverse");
  }
  return g;
}

bool FiniteGroupTable::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

namespace {

FiniteGroupTable cyclic(std::uint32_t n) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroupTable::from_table("Z" + std::to_string(n), std::move(t));
}

FiniteGroupTable symmetric(std::uint32_t degree) {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto n = static_cast<std::uint32_t>(perms.size());
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::vector<Element> ab(degree);
      for (std::uint32_t i = 0; i < degree; ++i) ab[i] = perms[b][perms[a][i]];
      t[a][b] = static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), ab) -
                                     perms.begin());
    }
  }
  return FiniteGroupTable::from_table("S" + std::to_string(degree), std::move(t));
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > kEnumerationLimit) return kEnumerationLimit + 1;
  }
  return out;
}

void guard(std::uint64_t words, const FiniteGroupTable& g, std::uint32_t d) {
  if (words > kEnumerationLimit) {
    throw TooLarge("enumerating degree <= " + std::to_string(d) + " words over " + g.name() +
                   " exceeds " + std::to_string(kEnumerationLimit) + " words");
  }
}

std::uint64_t group_word_bound(const FiniteGroupTable& g, std::uint32_t d) {
  std::uint64_t words = checked_power(g.order(), d + 1);
  for (std::uint32_t i = 0; i < d && words <= kEnumerationLimit; ++i) words *= 2;
  return words;
}

// A word function as its table of values x -> w(x).
using ValueTable = std::vector<Element>;

// Distinct functions of the words c x^s a ... of degree exactly 0..d, built one
// occurrence of x at a time from the constant `starts`.
std::set<ValueTable> word_functions(const FiniteGroupTable& g, std::uint32_t d,
                                    const std::vector<Element>& starts, bool with_inverse) {
  const std::uint32_t n = g.order();
  std::set<ValueTable> level;
  for (Element a : starts) level.insert(ValueTable(n, a));
  std::set<ValueTable> all = level;
  for (std::uint32_t e = 1; e <= d; ++e) {
    std::set<ValueTable> next;
    for (const ValueTable& t : level) {
      for (int sign : with_inverse ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        for (Element a = 0; a < n; ++a) {
          ValueTable u(n);
          for (Element x = 0; x < n; ++x) {
            u[x] = g.mul(g.mul(t[x], sign > 0 ? x : g.inverse(x)), a);
          }
          next.insert(std::move(u));
        }
      }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

Subset differ_mask(const ValueTable& f, const ValueTable& g) {
  Subset m = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] != g[x]) m |= Subset{1} << x;
  }
  return m;
}

}  // namespace

FiniteGroupTable builtin(std::string_view name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '6') {
    return cyclic(static_cast<std::uint32_t>(name[1] - '0'));
  }
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  throw UnknownGroup("unknown group '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4"}; }

SetFamily::SetFamily(std::uint32_t order, std::vector<Subset> sets)
    : order_(order), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

SetFamily semigroup_family(const FiniteGroupTable& g, std::uint32_t max_degree) {
  guard(checked_power(g.order(), max_degree + 1), g, max_degree);
  std::vector<Element> all_elements(g.order());
  std::iota(all_elements.begin(), all_elements.end(), 0);
  const auto lhs = word_functions(g, max_degree, {g.identity()}, false);
  const auto rhs = word_functions(g, max_degree, all_elements, false);
  if (lhs.size() * rhs.size() > kPairLimit) {
    throw TooLarge("comparing " + std::to_string(lhs.size()) + " x " +
                   std::to_string(rhs.size()) + " word functions over " + g.name() +
                   " exceeds " + std::to_string(kPairLimit) + " pairs");
  }
  // {x : f != h} = {x : a^-1 f != a^-1 h}, so the left word may start with 1.
  std::set<Subset> masks;
  for (const ValueTable& f : lhs) {
    for (const ValueTable& h : rhs) masks.insert(differ_mask(f, h));
  }
  return SetFamily(g.order(), {masks.begin(), masks.end()});
}

SetFamily group_family(const FiniteGroupTable& g, std::uint32_t max_degree) {
  guard(group_word_bound(g, max_degree), g, max_degree);
  std::vector<Element> all_elements(g.order());
  std::iota(all_elements.begin(), all_elements.end(), 0);
  const ValueTable one(g.order(), g.identity());
  std::set<Subset> masks;
  for (const ValueTable& w : word_functions(g, max_degree, all_elements, true)) {
    masks.insert(differ_mask(w, one));
  }
  return SetFamily(g.order(), {masks.begin(), masks.end()});
}

SetFamily topology_close(const SetFamily& f) {
  std::set<Subset> seen(f.sets().begin(), f.sets().end());
  seen.insert(0);
  seen.insert(f.carrier());
  std::vector<Subset> done;
  std::vector<Subset> pending(seen.begin(), seen.end());
  while (!pending.empty()) {
    const Subset s = pending.back();
    pending.pop_back();
    done.push_back(s);
    const std::size_t n = done.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (Subset t : {s | done[i], s & done[i]}) {
        if (seen.insert(t).second) {
          if (seen.size() > kClosureLimit) {
            throw TooLarge("generated topology has more than " + std::to_string(kClosureLimit) +
                           " open sets");
          }
          pending.push_back(t);
        }
      }
    }
  }
  return SetFamily(f.order(), {seen.begin(), seen.end()});
}

bool family_subset(const SetFamily& f1, const SetFamily& f2) {
  if (f1.order() != f2.order()) throw CarrierMismatch("families live on different carriers");
  return std::includes(f2.sets().begin(), f2.sets().end(), f1.sets().begin(), f1.sets().end());
}

FiniteTopology FiniteTopology::generated_by(const SetFamily& subbasis) {
  FiniteTopology t;
  t.order_ = subbasis.order();
  t.neighbourhoods_.assign(t.order_, subbasis.carrier());
  for (Subset s : subbasis.sets()) {
    for (std::uint32_t x = 0; x < t.order_; ++x) {
      if (s >> x & 1) t.neighbourhoods_[x] &= s;
    }
  }
  return t;
}

bool FiniteTopology::is_open(Subset s) const {
  for (std::uint32_t x = 0; x < order_; ++x) {
    if ((s >> x & 1) && (neighbourhoods_[x] & ~s) != 0) return false;
  }
  return true;
}

bool FiniteTopology::is_discrete() const {
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (neighbourhoods_[x] != Subset{1} << x) return false;
  }
  return true;
}

bool FiniteTopology::coarser_than(const FiniteTopology& other) const {
  if (order_ != other.order_) throw CarrierMismatch("topologies live on different carriers");
  return std::all_of(neighbourhoods_.begin(), neighbourhoods_.end(),
                     [&](Subset u) { return other.is_open(u); });
}

std::uint64_t reduction_word_count(const FiniteGroupTable& g, std::uint32_t max_degree) {
  std::uint64_t total = 0;
  for (std::uint32_t e = 0; e <= max_degree; ++e) total += group_word_bound(g, e);
  return total;
}

std::vector<ReductionMismatch> check_reduction(const FiniteGroupTable& g,
                                               std::uint32_t max_degree) {
  if (max_degree > 3) throw InvalidArgument("the reduction covers degree <= 3 only");
  guard(group_word_bound(g, max_degree), g, max_degree);
  const std::uint32_t n = g.order();
  std::vector<ReductionMismatch> mismatches;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    std::vector<Element> coeffs(d + 1, 0);
    for (;;) {
      for (std::uint32_t pattern = 0; pattern < (1u << d); ++pattern) {
        std::vector<Sign> signs(d);
        for (std::uint32_t i = 0; i < d; ++i) {
          signs[i] = (pattern >> i & 1) ? Sign::Negative : Sign::Positive;
        }
        GroupWord<Element> w(coeffs, signs);
        IneqPair<Element> pair = group_ineq_to_semigroup_pair(w, g);
        Subset direct = 0;
        Subset reduced = 0;
        for (Element x = 0; x < n; ++x) {
          if (eval_group(w, x, g) != g.identity()) direct |= Subset{1} << x;
          if (holds_ineq(pair, x, g)) reduced |= Subset{1} << x;
        }
        if (direct != reduced) {
          std::vector<int> sign_ints;
          for (Sign s : signs) sign_ints.push_back(static_cast<int>(s));
          mismatches.push_back({coeffs, std::move(sign_ints), direct, reduced});
        }
      }
      // Next coefficient tuple, odometer style.
      std::uint32_t i = 0;
      while (i <= d && ++coeffs[i] == n) coeffs[i++] = 0;
      if (i > d) break;
    }
  }
  return mismatches;
}

}  // namespace zariski

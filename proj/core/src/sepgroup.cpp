#include "zariski/sepgroup.hpp"

#include <algorithm>

#include "zariski/error.hpp"

namespace zariski {

namespace {

std::int64_t reduce(std::uint64_t k, Generator n, std::int64_t e) {
  if (k == 0 || n % 2 != 0) return e;
  const auto mod = static_cast<std::int64_t>(k);
  return ((e % mod) + mod) % mod;
}

Exponents normalized(std::uint64_t k, const Exponents& in) {
  Exponents out;
  for (const auto& [n, e] : in) {
    if (std::int64_t r = reduce(k, n, e); r != 0) out.emplace(n, r);
  }
  return out;
}

void require_positive(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw InvalidArgument("T_m needs m >= 1");
  if (p == 0) throw InvalidArgument("exponent p must be >= 1");
}

}  // namespace

FreeAbelianWord::FreeAbelianWord(Exponents exponents) {
  for (const auto& [n, e] : exponents) {
    if (e != 0) exponents_.emplace(n, e);
  }
}

GkElement::GkElement(std::uint64_t k, const Exponents& exponents)
    : k_(k), exponents_(normalized(k, exponents)) {}

GkElement gk_normalize(std::uint64_t k, const FreeAbelianWord& w) {
  return GkElement(k, w.exponents());
}

GElement GElement::from_components(const std::map<std::uint64_t, Exponents>& components) {
  GElement g;
  for (const auto& [k, exps] : components) {
    Exponents norm = normalized(k, exps);
    if (!norm.empty()) g.components_.emplace(k, std::move(norm));
  }
  return g;
}

GElement GElement::tm_point(std::uint64_t m, Generator n) {
  if (m == 0) throw InvalidArgument("T_m needs m >= 1");
  return from_components({{m, {{n, 1}}}});
}

GkElement GElement::component(std::uint64_t k) const {
  auto it = components_.find(k);
  return it == components_.end() ? GkElement(k, {}) : GkElement(k, it->second);
}

GElement GElement::operator*(const GElement& other) const {
  std::map<std::uint64_t, Exponents> sum = components_;
  for (const auto& [k, exps] : other.components_) {
    Exponents& target = sum[k];
    for (const auto& [n, e] : exps) target[n] += e;
  }
  return from_components(sum);
}

GElement GElement::inverse() const { return pow(-1); }

GElement GElement::pow(std::int64_t p) const {
  std::map<std::uint64_t, Exponents> scaled;
  for (const auto& [k, exps] : components_) {
    Exponents& target = scaled[k];
    for (const auto& [n, e] : exps) target[n] = e * p;
  }
  return from_components(scaled);
}

std::ostream& operator<<(std::ostream& os, const GElement& g) {
  if (g.is_identity()) return os << "1";
  bool first_component = true;
  for (const auto& [k, exps] : g.components()) {
    if (!first_component) os << " + ";
    os << '[' << k << ':';
    for (const auto& [n, e] : exps) os << " x" << n << '^' << e;
    os << ']';
    first_component = false;
  }
  return os;
}

GElement eval_ax_p(const GElement& a, std::uint64_t p, const GElement& x) {
  return a * x.pow(static_cast<std::int64_t>(p));
}

std::vector<Generator> solve_on_tm(const GElement& a, std::uint64_t p, std::uint64_t m,
                                   Generator bound) {
  require_positive(m, p);
  std::vector<Generator> out;
  for (const auto& [k, unused] : a.components()) {
    if (k != m) return out;
  }
  const Exponents h = a.component(m).exponents();
  const auto pp = static_cast<std::int64_t>(p);
  const auto mm = static_cast<std::int64_t>(m);

  if (h.empty()) {
    // Only even indices can solve, and then all of them do.
    if (pp % mm != 0) return out;
    for (Generator n = 0; n <= bound; n += 2) out.push_back(n);
    return out;
  }
  // A solution n needs h to vanish away from n, so h is the single letter x_n^e.
  if (h.size() != 1) return out;
  const auto [n, e] = *h.begin();
  const bool solves = n % 2 == 1 ? e + pp == 0 : (e + pp) % mm == 0;
  if (solves && n <= bound) out.push_back(n);
  return out;
}

std::vector<Generator> solve_on_tm_by_enumeration(const GElement& a, std::uint64_t p,
                                                  std::uint64_t m, Generator bound) {
  require_positive(m, p);
  std::vector<Generator> out;
  for (Generator n = 0; n <= bound; ++n) {
    if (eval_ax_p(a, p, GElement::tm_point(m, n)).is_identity()) out.push_back(n);
  }
  return out;
}

bool CandidateBound::admits(Generator n) const {
  if (all_even) return n % 2 == 0;
  return std::binary_search(candidates.begin(), candidates.end(), n);
}

CandidateBound finiteness_bound(const GElement& a, std::uint64_t p, std::uint64_t m) {
  require_positive(m, p);
  CandidateBound bound;
  for (const auto& [k, unused] : a.components()) {
    if (k != m) return bound;
  }
  const Exponents h = a.component(m).exponents();
  if (h.empty() && p % m == 0) {
    bound.all_even = true;
    return bound;
  }
  for (const auto& [n, unused] : h) bound.candidates.push_back(n);
  return bound;
}

}  // namespace zariski

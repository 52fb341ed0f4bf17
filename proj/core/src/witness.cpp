#include "zariski/witness.hpp"

#include <algorithm>

#include "zariski/error.hpp"

namespace zariski {

std::optional<Point> SymOmegaOracle::choose_image(const PartialBijection& b, Point q,
                                                  const std::set<Point>& forbidden) const {
  if (b.in_domain(q)) return std::nullopt;
  for (Point a = 0;; ++a) {
    if (!forbidden.contains(a) && !b.in_image(a)) return a;
  }
}

std::vector<Point> pick_separators(const PermPair& p) {
  std::vector<Point> out;
  out.reserve(p.row_count());
  for (std::size_t i = 0; i < p.row_count(); ++i) {
    const FinPermutation& a0 = p.a().row(i).front();
    const FinPermutation& b0 = p.b().row(i).front();
    if (a0 == b0) {
      throw NotNormalized("row " + std::to_string(i) + " has equal leading coefficients");
    }
    // The two differ somewhere inside the union of their supports.
    const Point bound = std::max(a0.extent(), b0.extent());
    Point m = 0;
    while (m < bound && a0.apply(m) == b0.apply(m)) ++m;
    out.push_back(m);
  }
  return out;
}

std::vector<FinPermutation> forbidden_set(const PermPair& p) {
  std::vector<FinPermutation> entries;
  for (const auto* mat : {&p.a(), &p.b()}) {
    for (const auto& row : mat->rows()) entries.insert(entries.end(), row.begin(), row.end());
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  std::vector<FinPermutation> inverses;
  inverses.reserve(entries.size());
  for (const auto& c : entries) inverses.push_back(c.inverse());

  std::vector<FinPermutation> out{FinPermutation{}};
  out.insert(out.end(), entries.begin(), entries.end());
  out.insert(out.end(), inverses.begin(), inverses.end());
  for (const auto* left : {&entries, &inverses}) {
    for (const auto* right : {&entries, &inverses}) {
      for (const auto& f : *left) {
        for (const auto& g : *right) out.push_back(compose(f, g));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RowProgress partial_row_eval(const std::vector<FinPermutation>& row, Point start,
                             const PartialBijection& x) {
  RowProgress progress;
  progress.values.push_back(row.front().apply(start));
  while (progress.reached + 1 < row.size()) {
    auto next = x.apply(progress.last());
    if (!next) break;
    ++progress.reached;
    progress.values.push_back(row[progress.reached].apply(*next));
  }
  return progress;
}

namespace {

struct Stuck {
  WitnessCase side;
  std::size_t row;
  Point q;
};

std::optional<Stuck> find_stuck_row(const PermPair& p, const std::vector<Point>& separators,
                                    const PartialBijection& x) {
  for (auto [side, mat] : {std::pair{WitnessCase::Alpha, &p.a()},
                           std::pair{WitnessCase::Beta, &p.b()}}) {
    for (std::size_t j = 0; j < p.row_count(); ++j) {
      RowProgress prog = partial_row_eval(mat->row(j), separators[j], x);
      if (prog.reached < mat->degree(j)) return Stuck{side, j, prog.last()};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> progress_of(const PermMatrix& mat, const std::vector<Point>& separators,
                                     const PartialBijection& x) {
  std::vector<std::size_t> out;
  out.reserve(mat.row_count());
  for (std::size_t i = 0; i < mat.row_count(); ++i) {
    out.push_back(partial_row_eval(mat.row(i), separators[i], x).reached);
  }
  return out;
}

}  // namespace

namespace {

// (t)P for every t: below the largest extent of P the distinct images are
// tabulated, above it every element of P fixes t.
class ProductImages {
 public:
  explicit ProductImages(const std::vector<FinPermutation>& products) {
    Point extent = 0;
    for (const auto& f : products) extent = std::max(extent, f.extent());
    images_.resize(extent);
    for (Point t = 0; t < extent; ++t) {
      for (const auto& f : products) images_[t].insert(f.apply(t));
    }
  }

  void add_images(Point t, std::set<Point>& out) const {
    if (t < images_.size()) {
      out.insert(images_[t].begin(), images_[t].end());
    } else {
      out.insert(t);
    }
  }

 private:
  std::vector<std::set<Point>> images_;
};

}  // namespace

WitnessResult construct_witness(const PermPair& p, const GroupOracle& oracle) {
  WitnessTrace trace;
  trace.separators = pick_separators(p);
  trace.forbidden_products = forbidden_set(p);
  const ProductImages products(trace.forbidden_products);

  PartialBijection x;
  while (auto stuck = find_stuck_row(p, trace.separators, x)) {
    std::set<Point> t;
    for (const auto& [d, i] : x.pairs()) {
      t.insert(d);
      t.insert(i);
    }
    t.insert(stuck->q);
    t.insert(trace.separators.begin(), trace.separators.end());

    std::set<Point> forbidden;
    for (Point point : t) products.add_images(point, forbidden);

    auto image = oracle.choose_image(x, stuck->q, forbidden);
    if (!image || forbidden.contains(*image) || !oracle.extendable(x.with(stuck->q, *image))) {
      throw OracleExhausted("no admissible image for point " + std::to_string(stuck->q));
    }
    x.insert(stuck->q, *image);
    trace.steps.push_back({stuck->side, stuck->row, stuck->q, *image,
                           progress_of(p.a(), trace.separators, x),
                           progress_of(p.b(), trace.separators, x)});
  }

  trace.partial = x;
  trace.final = oracle.complete(x);
  return {trace.final, std::move(trace)};
}

FinPermutation intersect_witness(const PermPair& p1, const PermPair& p2,
                                 const GroupOracle& oracle) {
  return construct_witness(stack(p1, p2), oracle).element;
}

bool prefixes_stay_separated(const PermPair& p, const std::vector<Point>& separators,
                             const PartialBijection& x) {
  for (std::size_t i = 0; i < p.row_count(); ++i) {
    RowProgress a = partial_row_eval(p.a().row(i), separators.at(i), x);
    RowProgress b = partial_row_eval(p.b().row(i), separators.at(i), x);
    for (Point va : a.values) {
      if (std::find(b.values.begin(), b.values.end(), va) != b.values.end()) return false;
    }
  }
  return true;
}

bool images_avoid_separators(const std::vector<FinPermutation>& products,
                             const std::vector<Point>& separators, const PartialBijection& x) {
  for (Point y : x.image()) {
    for (const auto& f : products) {
      if (std::find(separators.begin(), separators.end(), f.apply(y)) != separators.end()) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(WitnessCase c) { return c == WitnessCase::Alpha ? "alpha" : "beta"; }

}  // namespace zariski

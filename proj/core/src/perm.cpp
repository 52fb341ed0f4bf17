#include "zariski/perm.hpp"

#include <algorithm>
#include <sstream>

#include "zariski/error.hpp"

namespace zariski {

namespace {

bool less_first(const PointPair& a, const PointPair& b) { return a.first < b.first; }

const PointPair* find_point(std::span<const PointPair> pairs, Point x) {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), PointPair{x, 0}, less_first);
  if (it == pairs.end() || it->first != x) return nullptr;
  return &*it;
}

}  // namespace

FinPermutation FinPermutation::from_pairs(std::vector<PointPair> pairs) {
  std::erase_if(pairs, [](const PointPair& p) { return p.first == p.second; });
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) {
      throw InvalidPermutation("point " + std::to_string(pairs[i].first) + " mapped twice");
    }
  }
  std::vector<Point> dom, img;
  dom.reserve(pairs.size());
  img.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    dom.push_back(x);
    img.push_back(y);
  }
  std::sort(img.begin(), img.end());
  if (dom != img) {
    throw InvalidPermutation("pairs do not permute their own domain");
  }
  return FinPermutation(std::move(pairs));
}

FinPermutation FinPermutation::cycle(std::initializer_list<Point> points) {
  std::vector<Point> pts(points);
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pairs.emplace_back(pts[i], pts[(i + 1) % pts.size()]);
  }
  return from_pairs(std::move(pairs));
}

FinPermutation FinPermutation::transposition(Point x, Point y) { return cycle({x, y}); }

Point FinPermutation::apply(Point x) const {
  const PointPair* hit = find_point(moved_, x);
  return hit ? hit->second : x;
}

FinPermutation FinPermutation::inverse() const {
  std::vector<PointPair> inv;
  inv.reserve(moved_.size());
  for (const auto& [x, y] : moved_) inv.emplace_back(y, x);
  std::sort(inv.begin(), inv.end());
  return FinPermutation(std::move(inv));
}

std::vector<Point> FinPermutation::support() const {
  std::vector<Point> out;
  out.reserve(moved_.size());
  for (const auto& pair : moved_) out.push_back(pair.first);
  return out;
}

FinPermutation compose(const FinPermutation& p, const FinPermutation& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  std::vector<Point> pts;
  pts.reserve(p.moved_.size() + q.moved_.size());
  for (const auto& pair : p.moved_) pts.push_back(pair.first);
  for (const auto& pair : q.moved_) pts.push_back(pair.first);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<PointPair> out;
  for (Point x : pts) {
    Point y = q.apply(p.apply(x));
    if (y != x) out.emplace_back(x, y);
  }
  return FinPermutation(std::move(out));
}

PartialBijection PartialBijection::from_pairs(std::vector<PointPair> pairs) {
  PartialBijection b;
  for (const auto& [x, y] : pairs) b.insert(x, y);
  return b;
}

std::optional<Point> PartialBijection::apply(Point x) const {
  const PointPair* hit = find_point(pairs_, x);
  if (!hit) return std::nullopt;
  return hit->second;
}

bool PartialBijection::in_image(Point y) const {
  return std::binary_search(image_.begin(), image_.end(), y);
}

void PartialBijection::insert(Point x, Point y) {
  if (in_domain(x)) {
    throw NotInjective("point " + std::to_string(x) + " already in domain");
  }
  if (in_image(y)) {
    throw NotInjective("point " + std::to_string(y) + " already in image");
  }
  pairs_.insert(std::upper_bound(pairs_.begin(), pairs_.end(), PointPair{x, y}, less_first),
                PointPair{x, y});
  image_.insert(std::upper_bound(image_.begin(), image_.end(), y), y);
}

PartialBijection PartialBijection::with(Point x, Point y) const {
  PartialBijection copy = *this;
  copy.insert(x, y);
  return copy;
}

std::vector<Point> PartialBijection::domain() const {
  std::vector<Point> out;
  out.reserve(pairs_.size());
  for (const auto& pair : pairs_) out.push_back(pair.first);
  return out;
}

std::vector<Point> PartialBijection::image() const { return image_; }

bool PartialBijection::restricts(const FinPermutation& p) const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const PointPair& pair) { return p.apply(pair.first) == pair.second; });
}

FinPermutation extend(const PartialBijection& b) {
  std::vector<PointPair> pairs(b.pairs().begin(), b.pairs().end());
  for (const auto& [start, unused] : b.pairs()) {
    if (b.in_image(start)) continue;
    Point end = start;
    while (auto next = b.apply(end)) end = *next;
    pairs.emplace_back(end, start);
  }
  return FinPermutation::from_pairs(std::move(pairs));
}

std::string to_string(const FinPermutation& p) {
  if (p.is_identity()) return "()";
  std::ostringstream os;
  std::vector<Point> seen;
  for (const auto& [start, unused] : p.pairs()) {
    if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
    os << '(';
    Point x = start;
    do {
      if (x != start) os << ' ';
      os << x;
      seen.push_back(x);
      x = p.apply(x);
    } while (x != start);
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinPermutation& p) { return os << to_string(p); }

std::ostream& operator<<(std::ostream& os, const PartialBijection& b) {
  os << '{';
  bool first = true;
  for (const auto& [x, y] : b.pairs()) {
    if (!first) os << ", ";
    os << x << "->" << y;
    first = false;
  }
  return os << '}';
}

}  // namespace zariski

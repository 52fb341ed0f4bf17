#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zariski/algebra.hpp"
#include "zariski/error.hpp"

namespace zariski {

/// Rows of coefficients; row i = (r_{i,0}, ..., r_{i,d_i}) encodes the semigroup
/// polynomial r_{i,0} x r_{i,1} ... x r_{i,d_i}.
template <class E>
class RaggedMatrix {
 public:
  using Row = std::vector<E>;

  explicit RaggedMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidMatrix("ragged matrix needs at least one row");
    for (const Row& r : rows_) {
      if (r.empty()) throw InvalidMatrix("ragged matrix rows must be non-empty");
    }
  }

  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t i) const { return rows_.at(i); }
  std::size_t degree(std::size_t i) const { return rows_.at(i).size() - 1; }

  friend bool operator==(const RaggedMatrix&, const RaggedMatrix&) = default;

 private:
  std::vector<Row> rows_;
};

/// (A, B) standing for N_{A,B}: the x at which every row of A and the
/// matching row of B evaluate differently.
template <class E>
class MatrixPair {
 public:
  MatrixPair(RaggedMatrix<E> a, RaggedMatrix<E> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.row_count() != b_.row_count()) {
      throw InvalidMatrix("matrix pair needs equal row counts, got " +
                          std::to_string(a_.row_count()) + " and " +
                          std::to_string(b_.row_count()));
    }
  }

  const RaggedMatrix<E>& a() const { return a_; }
  const RaggedMatrix<E>& b() const { return b_; }
  std::size_t row_count() const { return a_.row_count(); }

  /// Sum over rows of d_{A,i} + d_{B,i}.
  std::size_t total_degree() const {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < row_count(); ++i) sum += a_.degree(i) + b_.degree(i);
    return sum;
  }

  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;

 private:
  RaggedMatrix<E> a_;
  RaggedMatrix<E> b_;
};

/// (k, d_{A,0}, ..., d_{A,k-1}, d_{B,0}, ..., d_{B,k-1}); compared lexicographically.
template <class E>
std::vector<std::size_t> signature(const MatrixPair<E>& p) {
  std::vector<std::size_t> t{p.row_count()};
  for (std::size_t i = 0; i < p.row_count(); ++i) t.push_back(p.a().degree(i));
  for (std::size_t i = 0; i < p.row_count(); ++i) t.push_back(p.b().degree(i));
  return t;
}

template <Monoid S>
typename S::Element row_eval(const RaggedMatrix<typename S::Element>& r, std::size_t i,
                             const typename S::Element& x, const S& s) {
  if (i >= r.row_count()) {
    throw IndexOutOfRange("row " + std::to_string(i) + " of a " +
                          std::to_string(r.row_count()) + "-row matrix");
  }
  const auto& row = r.row(i);
  typename S::Element acc = row.front();
  for (std::size_t j = 1; j < row.size(); ++j) acc = s.mul(s.mul(acc, x), row[j]);
  return acc;
}

template <Monoid S>
bool membership(const MatrixPair<typename S::Element>& p, const typename S::Element& x,
                const S& s) {
  for (std::size_t i = 0; i < p.row_count(); ++i) {
    if (row_eval(p.a(), i, x, s) == row_eval(p.b(), i, x, s)) return false;
  }
  return true;
}

/// Rows of p1 followed by rows of p2, so N(stack) = N(p1) intersected with N(p2).
template <class E>
MatrixPair<E> stack(const MatrixPair<E>& p1, const MatrixPair<E>& p2) {
  auto a = p1.a().rows();
  auto b = p1.b().rows();
  a.insert(a.end(), p2.a().rows().begin(), p2.a().rows().end());
  b.insert(b.end(), p2.b().rows().begin(), p2.b().rows().end());
  return MatrixPair<E>(RaggedMatrix<E>(std::move(a)), RaggedMatrix<E>(std::move(b)));
}

/// True when every row has positive degree on some side and distinct leading
/// coefficients.
template <class E>
bool satisfies_basis_conditions(const MatrixPair<E>& p) {
  for (std::size_t i = 0; i < p.row_count(); ++i) {
    if (p.a().degree(i) == 0 && p.b().degree(i) == 0) return false;
    if (p.a().row(i).front() == p.b().row(i).front()) return false;
  }
  return true;
}

enum class NormalFormKind { Empty, Full, Proper };

template <class E>
struct NormalForm {
  NormalFormKind kind;
  std::optional<MatrixPair<E>> pair;  // set iff kind == Proper

  static NormalForm empty() { return {NormalFormKind::Empty, std::nullopt}; }
  static NormalForm full() { return {NormalFormKind::Full, std::nullopt}; }
  static NormalForm proper(MatrixPair<E> p) { return {NormalFormKind::Proper, std::move(p)}; }
};

template <Monoid S>
bool membership(const NormalForm<typename S::Element>& nf, const typename S::Element& x,
                const S& s) {
  switch (nf.kind) {
    case NormalFormKind::Empty: return false;
    case NormalFormKind::Full: return true;
    case NormalFormKind::Proper: return membership(*nf.pair, x, s);
  }
  return false;
}

enum class RewriteKind {
  Cancel,     // equal leading a x on both sides, cancelled
  DeleteRow,  // distinct constants, row always satisfied
  Adjust,     // one side constant: multiply by the adjuster on the right
  Contradiction,  // equal constants, row never satisfied
};

struct RewriteStep {
  RewriteKind kind;
  std::size_t row;
  std::vector<std::size_t> signature_before;
  std::vector<std::size_t> signature_after;
  std::size_t violations_before;  // rows with equal leading coefficients
  std::size_t violations_after;
};

template <class E>
struct Normalization {
  NormalForm<E> result;
  std::vector<RewriteStep> steps;
};

namespace detail {

template <class E>
struct WorkingPair {
  std::vector<std::vector<E>> a;
  std::vector<std::vector<E>> b;

  std::vector<std::size_t> signature() const {
    std::vector<std::size_t> t{a.size()};
    for (const auto& r : a) t.push_back(r.size() - 1);
    for (const auto& r : b) t.push_back(r.size() - 1);
    return t;
  }

  std::size_t violations() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += a[i].front() == b[i].front();
    return n;
  }
};

}  // namespace detail

/// Rewrites p into an equivalent pair whose rows satisfy the basis conditions,
/// recording each step.
///
/// First, until nothing applies, the lowest row that can be simplified is:
/// deleted if it compares two distinct constants; reported Empty if it compares
/// equal constants; or, when both sides have positive degree and equal leading
/// coefficients, shortened by cancelling the leading "a x". Each of these
/// steps strictly lowers the signature. Then every row left with equal
/// leading coefficients has exactly one constant side c; that side becomes
/// c*f and the other side's last coefficient is multiplied by f on the right.
///
/// Throws InvalidAdjuster when f is the identity.
template <Monoid S>
Normalization<typename S::Element> normalize_traced(const MatrixPair<typename S::Element>& p,
                                                    const S& s,
                                                    const typename S::Element& adjuster) {
  using E = typename S::Element;
  if (adjuster == s.identity()) throw InvalidAdjuster("adjuster must not be the identity");

  detail::WorkingPair<E> w{p.a().rows(), p.b().rows()};
  std::vector<RewriteStep> steps;
  auto record = [&](RewriteKind kind, std::size_t row, std::vector<std::size_t> before,
                    std::size_t vbefore) {
    steps.push_back({kind, row, std::move(before), w.signature(), vbefore, w.violations()});
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.a.size(); ++i) {
      auto& ra = w.a[i];
      auto& rb = w.b[i];
      const bool equal_lead = ra.front() == rb.front();
      auto before = w.signature();
      const std::size_t vbefore = w.violations();
      if (ra.size() == 1 && rb.size() == 1) {
        if (equal_lead) {
          record(RewriteKind::Contradiction, i, std::move(before), vbefore);
          return {NormalForm<E>::empty(), std::move(steps)};
        }
        w.a.erase(w.a.begin() + static_cast<std::ptrdiff_t>(i));
        w.b.erase(w.b.begin() + static_cast<std::ptrdiff_t>(i));
        record(RewriteKind::DeleteRow, i, std::move(before), vbefore);
        changed = true;
        break;
      }
      if (equal_lead && ra.size() > 1 && rb.size() > 1) {
        ra.erase(ra.begin());
        rb.erase(rb.begin());
        record(RewriteKind::Cancel, i, std::move(before), vbefore);
        changed = true;
        break;
      }
    }
  }

  if (w.a.empty()) return {NormalForm<E>::full(), std::move(steps)};

  for (std::size_t i = 0; i < w.a.size(); ++i) {
    auto& ra = w.a[i];
    auto& rb = w.b[i];
    if (!(ra.front() == rb.front())) continue;
    auto before = w.signature();
    const std::size_t vbefore = w.violations();
    auto& constant_side = ra.size() == 1 ? ra : rb;
    auto& other_side = ra.size() == 1 ? rb : ra;
    constant_side.front() = s.mul(constant_side.front(), adjuster);
    other_side.back() = s.mul(other_side.back(), adjuster);
    record(RewriteKind::Adjust, i, std::move(before), vbefore);
  }

  MatrixPair<E> out(RaggedMatrix<E>(std::move(w.a)), RaggedMatrix<E>(std::move(w.b)));
  return {NormalForm<E>::proper(std::move(out)), std::move(steps)};
}

template <Monoid S>
NormalForm<typename S::Element> normalize(const MatrixPair<typename S::Element>& p, const S& s,
                                          const typename S::Element& adjuster) {
  return normalize_traced(p, s, adjuster).result;
}

/// Default adjuster for Sym_omega: the transposition (0 1).
inline FinPermutation default_adjuster() { return FinPermutation::transposition(0, 1); }

std::string to_string(NormalFormKind kind);
std::string to_string(RewriteKind kind);

}  // namespace zariski

#pragma once

// Dense exact-rational matrices: rank, solve, inverse, membership-in-span.
// Everything runs fraction-exact Gaussian elimination on a private copy.

#include <optional>
#include <stdexcept>
#include <vector>

#include "grasscoh/numeric.hpp"

namespace grasscoh {

// FirstNonzero keeps elimination traces reproducible; LargestNumerator is an
// opt-in heuristic for big instances.
enum class PivotPolicy { FirstNonzero, LargestNumerator };

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[index(r, c)]; }
  const Rat& at(int r, int c) const { return data_[index(r, c)]; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("RationalMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::vector<Rat> data_;
};

namespace detail {

// Row echelon form in place over the first `elim_cols` columns (any further
// columns ride along, e.g. an augmented right-hand side).  Returns the pivot
// column of each pivot row in order.
inline std::vector<int> echelonize(RationalMatrix& m, int elim_cols, PivotPolicy policy) {
  std::vector<int> pivot_cols;
  int pivot_row = 0;
  for (int c = 0; c < elim_cols && pivot_row < m.rows(); ++c) {
    int chosen = -1;
    if (policy == PivotPolicy::FirstNonzero) {
      for (int r = pivot_row; r < m.rows(); ++r)
        if (m.at(r, c) != 0) {
          chosen = r;
          break;
        }
    } else {
      Int best = 0;
      for (int r = pivot_row; r < m.rows(); ++r)
        if (m.at(r, c) != 0) {
          Int mag = boost::multiprecision::abs(boost::multiprecision::numerator(m.at(r, c)));
          if (chosen < 0 || mag > best) {
            chosen = r;
            best = mag;
          }
        }
    }
    if (chosen < 0) continue;
    if (chosen != pivot_row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(chosen, j), m.at(pivot_row, j));
    const Rat inv_pivot = Rat(1) / m.at(pivot_row, c);
    for (int j = c; j < m.cols(); ++j) m.at(pivot_row, j) *= inv_pivot;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, c) == 0) continue;
      const Rat factor = m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(pivot_row, j);
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace detail

inline int rank(const RationalMatrix& m, PivotPolicy policy = PivotPolicy::FirstNonzero) {
  RationalMatrix work = m;
  return static_cast<int>(detail::echelonize(work, work.cols(), policy).size());
}

struct SolveResult {
  enum class Kind { Unique, Inconsistent, Underdetermined };
  Kind kind = Kind::Inconsistent;
  std::vector<Rat> solution;  // populated when kind == Unique

  bool unique() const { return kind == Kind::Unique; }
};

namespace detail {

// Reduced echelon data for the augmented system [A | b]: pivot columns plus a
// particular solution (free variables set to zero), or inconsistency.
struct AugmentedSolve {
  bool consistent = false;
  int rank = 0;
  std::vector<Rat> particular;
};

inline AugmentedSolve solve_augmented(const RationalMatrix& a, const std::vector<Rat>& b,
                                      PivotPolicy policy) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  RationalMatrix work(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) work.at(r, c) = a.at(r, c);
    work.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  const std::vector<int> pivots = detail::echelonize(work, a.cols(), policy);
  AugmentedSolve out;
  out.rank = static_cast<int>(pivots.size());
  for (int r = out.rank; r < work.rows(); ++r)
    if (work.at(r, a.cols()) != 0) return out;  // 0 = nonzero row: inconsistent
  out.consistent = true;
  out.particular.assign(static_cast<std::size_t>(a.cols()), Rat(0));
  for (int i = 0; i < out.rank; ++i)
    out.particular[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
        work.at(i, a.cols());
  return out;
}

}  // namespace detail

inline SolveResult solve(const RationalMatrix& a, const std::vector<Rat>& b,
                         PivotPolicy policy = PivotPolicy::FirstNonzero) {
  const auto aug = detail::solve_augmented(a, b, policy);
  SolveResult res;
  if (!aug.consistent) {
    res.kind = SolveResult::Kind::Inconsistent;
  } else if (aug.rank < a.cols()) {
    res.kind = SolveResult::Kind::Underdetermined;
  } else {
    res.kind = SolveResult::Kind::Unique;
    res.solution = aug.particular;
  }
  return res;
}

struct SpanResult {
  bool in_span = false;
  std::vector<Rat> certificate;  // coefficients on the spanning vectors
};

// Membership of `target` in the rational span of `vectors`; a successful
// certificate reproduces the target exactly by substitution.
inline SpanResult in_span(const std::vector<std::vector<Rat>>& vectors,
                          const std::vector<Rat>& target,
                          PivotPolicy policy = PivotPolicy::FirstNonzero) {
  SpanResult res;
  const int dim = static_cast<int>(target.size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("in_span: dimension mismatch");
  const int n = static_cast<int>(vectors.size());
  RationalMatrix a(dim, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < dim; ++r) a.at(r, c) = vectors[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  const auto aug = detail::solve_augmented(a, target, policy);
  if (!aug.consistent) return res;
  res.in_span = true;
  res.certificate = aug.particular;
  return res;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& m,
                                             PivotPolicy policy = PivotPolicy::FirstNonzero) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  RationalMatrix work(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) work.at(r, c) = m.at(r, c);
    work.at(r, n + r) = 1;
  }
  if (static_cast<int>(detail::echelonize(work, n, policy).size()) < n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = work.at(r, n + c);
  return inv;
}

}  // namespace grasscoh

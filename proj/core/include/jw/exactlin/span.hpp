#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jw/exactlin/sparse.hpp"

namespace jw::exactlin {

/// Row space over Q that grows one vector at a time.
///
/// Stored rows are in echelon form: each row's leading entry is 1 and sits in
/// a column no other row leads in. Rows are kept in insertion order; the
/// pivot table maps a column to the row that leads there.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ncols);

  /// Adds v to the span. Returns true iff v was outside the previous span.
  bool insert(const SparseVector& v);

  /// Canonical remainder of v modulo the span: the unique vector congruent to
  /// v that is zero in every pivot column.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t dim() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

 private:
  std::size_t ncols_;
  std::vector<SparseVector> rows_;
  std::vector<std::int64_t> pivot_row_;
};

/// Rank over Q. Rows are eliminated sparsest first and columns are relabelled
/// so the sparsest column leads; ties break on the lower index.
std::size_t rank(const SparseMatrix& m);

/// Basis of {x : m x = 0} over Q, one vector per non-pivot column, ordered by
/// that column. Each vector has a 1 in its free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Solves A x = b for a dense rational system; returns false when
/// inconsistent. On success x has one particular solution (free variables 0).
bool solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x);

}  // namespace jw::exactlin

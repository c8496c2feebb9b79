#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jw/exactlin/number.hpp"

namespace jw::exactlin {

struct SparseEntry {
  std::size_t col;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Sparse rational vector with strictly increasing column indices and no
// stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  // Sorts, merges duplicate columns and drops zeros.
  static SparseVector from_entries(std::vector<SparseEntry> entries);
  static SparseVector from_dense(std::span<const Rational> values);
  static SparseVector from_dense(std::span<const long> values);

  const std::vector<SparseEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  // Column of the first stored entry. Requires !empty().
  std::size_t leading_col() const { return entries_.front().col; }
  const Rational& leading_value() const { return entries_.front().value; }
  // One past the largest stored column (0 for the zero vector).
  std::size_t col_bound() const { return empty() ? 0 : entries_.back().col + 1; }

  Rational get(std::size_t col) const;
  void set(std::size_t col, const Rational& value);

  // this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);

  std::vector<Rational> to_dense(std::size_t ncols) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<SparseEntry> entries_;
};

class SparseMatrix {
 public:
  explicit SparseMatrix(std::size_t ncols) : ncols_(ncols) {}

  // Throws std::out_of_range if the row has an entry at or beyond ncols.
  void add_row(SparseVector row);

  std::size_t ncols() const { return ncols_; }
  std::size_t nrows() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }

 private:
  std::size_t ncols_;
  std::vector<SparseVector> rows_;
};

}  // namespace jw::exactlin

#include "jw/exactlin/span.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jw::exactlin {

IncrementalSpan::IncrementalSpan(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

SparseVector IncrementalSpan::reduce(SparseVector v) const {
  if (v.col_bound() > ncols_) throw std::out_of_range("vector wider than span");
  // A row leads at its pivot, so subtracting it only touches columns at or
  // right of the cursor; entries left of the cursor are final.
  std::size_t pos = 0;
  while (pos < v.nnz()) {
    const auto& entry = v.entries()[pos];
    const auto r = pivot_row_[entry.col];
    if (r < 0) {
      ++pos;
      continue;
    }
    Rational factor = -entry.value;
    v.axpy(factor, rows_[static_cast<std::size_t>(r)]);
  }
  return v;
}

bool IncrementalSpan::insert(const SparseVector& v) {
  SparseVector rem = reduce(v);
  if (rem.empty()) return false;
  Rational inv = 1 / rem.leading_value();
  rem.scale(inv);
  pivot_row_[rem.leading_col()] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(rem));
  return true;
}

namespace {

// Column permutation putting sparse columns first; ties keep index order.
std::vector<std::size_t> sparsity_column_order(const SparseMatrix& m) {
  std::vector<std::size_t> counts(m.ncols(), 0);
  for (const auto& row : m.rows()) {
    for (const auto& e : row.entries()) ++counts[e.col];
  }
  std::vector<std::size_t> order(m.ncols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] < counts[b]; });
  return order;  // order[new] = old
}

SparseVector relabel(const SparseVector& v, const std::vector<std::size_t>& old_to_new) {
  std::vector<SparseEntry> entries;
  entries.reserve(v.nnz());
  for (const auto& e : v.entries()) entries.push_back({old_to_new[e.col], e.value});
  return SparseVector::from_entries(std::move(entries));
}

std::vector<std::size_t> rows_by_sparsity(const SparseMatrix& m) {
  std::vector<std::size_t> order(m.nrows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).nnz() < m.row(b).nnz();
  });
  return order;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  const auto new_to_old = sparsity_column_order(m);
  std::vector<std::size_t> old_to_new(m.ncols());
  for (std::size_t i = 0; i < new_to_old.size(); ++i) old_to_new[new_to_old[i]] = i;

  IncrementalSpan span(m.ncols());
  for (auto r : rows_by_sparsity(m)) {
    if (m.row(r).empty()) continue;
    span.insert(relabel(m.row(r), old_to_new));
    if (span.dim() == m.ncols()) break;
  }
  return span.dim();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  IncrementalSpan span(m.ncols());
  for (auto r : rows_by_sparsity(m)) span.insert(m.row(r));

  // Back-substitute to reduced row echelon form, highest pivot first.
  std::vector<SparseVector> rows = span.rows();
  std::sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) {
    return a.leading_col() < b.leading_col();
  });
  std::vector<std::int64_t> pivot_of(m.ncols(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) pivot_of[rows[i].leading_col()] = static_cast<std::int64_t>(i);
  for (std::size_t ii = rows.size(); ii-- > 0;) {
    auto& row = rows[ii];
    std::size_t pos = 1;
    while (pos < row.nnz()) {
      const auto& e = row.entries()[pos];
      const auto p = pivot_of[e.col];
      if (p < 0) {
        ++pos;
        continue;
      }
      Rational factor = -e.value;
      row.axpy(factor, rows[static_cast<std::size_t>(p)]);
    }
  }

  std::vector<SparseVector> basis;
  for (std::size_t col = 0; col < m.ncols(); ++col) {
    if (pivot_of[col] >= 0) continue;
    std::vector<SparseEntry> entries{{col, Rational(1)}};
    for (const auto& row : rows) {
      Rational v = row.get(col);
      if (v != 0) entries.push_back({row.leading_col(), -v});
    }
    basis.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return basis;
}

bool solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? x.size() : a.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return true;
}

}  // namespace jw::exactlin

#include "jw/exactlin/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jw::exactlin {

SparseVector SparseVector::from_entries(std::vector<SparseEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().col == e.col) {
      out.entries_.back().value += e.value;
    } else {
      if (!out.entries_.empty() && out.entries_.back().value == 0) out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && out.entries_.back().value == 0) out.entries_.pop_back();
  return out;
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) out.entries_.push_back({i, values[i]});
  }
  return out;
}

SparseVector SparseVector::from_dense(std::span<const long> values) {
  SparseVector out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) out.entries_.push_back({i, Rational(values[i])});
  }
  return out;
}

Rational SparseVector::get(std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  if (it != entries_.end() && it->col == col) return it->value;
  return Rational(0);
}

void SparseVector::set(std::size_t col, const Rational& value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  if (it != entries_.end() && it->col == col) {
    if (value == 0) {
      entries_.erase(it);
    } else {
      it->value = value;
    }
  } else if (value != 0) {
    entries_.insert(it, SparseEntry{col, value});
  }
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (factor == 0 || other.empty()) return;
  std::vector<SparseEntry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  Rational tmp;
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->col < b->col)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->col < a->col) {
      merged.push_back({b->col, factor * b->value});
      ++b;
    } else {
      tmp = factor * b->value;
      tmp += a->value;
      if (tmp != 0) merged.push_back({a->col, tmp});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

std::vector<Rational> SparseVector::to_dense(std::size_t ncols) const {
  std::vector<Rational> out(ncols);
  for (const auto& e : entries_) {
    if (e.col >= ncols) throw std::out_of_range("sparse vector column exceeds dense size");
    out[e.col] = e.value;
  }
  return out;
}

void SparseMatrix::add_row(SparseVector row) {
  if (row.col_bound() > ncols_) {
    throw std::out_of_range("row entry at column " + std::to_string(row.col_bound() - 1) +
                            " exceeds matrix width " + std::to_string(ncols_));
  }
  rows_.push_back(std::move(row));
}

}  // namespace jw::exactlin

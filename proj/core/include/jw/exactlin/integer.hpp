#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jw/exactlin/number.hpp"

namespace jw::exactlin {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static IntMatrix from_integer_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  void append_row(const std::vector<Integer>& row);

  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithResult {
  /// Nonzero elementary divisors d_1 | d_2 | ..., all positive.
  std::vector<Integer> divisors;
  /// With transforms requested: left * A * right = diag(divisors, 0...),
  /// and right_inverse = right^{-1}. All three are unimodular.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
  std::optional<IntMatrix> right_inverse;
};

SmithResult smith_normal_form(IntMatrix a, bool with_transforms = false);
std::vector<Integer> smith_divisors(const IntMatrix& a);

/// Structure of a finitely generated abelian group Z^free_rank + sum Z/t_i.
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each > 1, each dividing the next

  bool is_free() const { return torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const QuotientStructure&, const QuotientStructure&) = default;
};

/// Z^ambient_dim modulo the row span of subgroup_gens.
QuotientStructure quotient_structure(std::size_t ambient_dim, const IntMatrix& subgroup_gens);

/// Direct sum of finitely generated abelian groups, renormalised to an
/// invariant-factor chain.
QuotientStructure direct_sum(const std::vector<QuotientStructure>& parts);

/// Z-basis (as rows) of Q-span(rows) intersected with Z^cols.
IntMatrix saturate(const IntMatrix& rows);

/// Z-basis (as rows) of the integer right kernel {x in Z^cols : a x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& a);

}  // namespace jw::exactlin

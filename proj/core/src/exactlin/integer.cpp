#include "jw/exactlin/integer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jw/exactlin/span.hpp"

namespace jw::exactlin {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_integer_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Working state for the Smith reduction. Invariant: U * A0 * V = A and
// Vinv = V^{-1}, maintained only when track is set.
struct SmithState {
  IntMatrix a;
  bool track;
  IntMatrix u, v, vinv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (track) {
      for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (track) {
      for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
      for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
    }
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(j, c) != 0) a(i, c) += q * a(j, c);
    }
    if (track) {
      for (std::size_t c = 0; c < u.cols(); ++c) {
        if (u(j, c) != 0) u(i, c) += q * u(j, c);
      }
    }
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, j) != 0) a(r, i) += q * a(r, j);
    }
    if (track) {
      for (std::size_t r = 0; r < v.rows(); ++r) {
        if (v(r, j) != 0) v(r, i) += q * v(r, j);
      }
      // inverse of the column op: row_j -= q * row_i
      for (std::size_t c = 0; c < vinv.cols(); ++c) {
        if (vinv(i, c) != 0) vinv(j, c) -= q * vinv(i, c);
      }
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (track) {
      for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix a, bool with_transforms) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithState s{std::move(a), with_transforms, {}, {}, {}};
  if (with_transforms) {
    s.u = IntMatrix::identity(m);
    s.v = IntMatrix::identity(n);
    s.vinv = IntMatrix::identity(n);
  }

  SmithResult result;
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = s.a(i, j);
        if (x == 0) continue;
        if (!found || cmpabs(x, s.a(pi, pj)) < 0) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s.a(i, t).get_mpz_t(), s.a(t, t).get_mpz_t());
        s.add_row(i, t, -q);
        if (s.a(i, t) != 0) {
          dirty = true;
          if (cmpabs(s.a(i, t), s.a(t, t)) < 0) s.swap_rows(t, i);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s.a(t, j).get_mpz_t(), s.a(t, t).get_mpz_t());
        s.add_col(j, t, -q);
        if (s.a(t, j) != 0) {
          dirty = true;
          if (cmpabs(s.a(t, j), s.a(t, t)) < 0) s.swap_cols(t, j);
        }
      }
      if (dirty) continue;
      // Row and column are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
            s.add_row(t, i, Integer(1));
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    if (s.a(t, t) < 0) s.negate_row(t);
    result.divisors.push_back(s.a(t, t));
  }

  if (with_transforms) {
    result.left = std::move(s.u);
    result.right = std::move(s.v);
    result.right_inverse = std::move(s.vinv);
  }
  return result;
}

std::vector<Integer> smith_divisors(const IntMatrix& a) { return smith_normal_form(a).divisors; }

std::string QuotientStructure::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t.get_str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

QuotientStructure quotient_structure(std::size_t ambient_dim, const IntMatrix& subgroup_gens) {
  if (subgroup_gens.rows() > 0 && subgroup_gens.cols() > ambient_dim) {
    throw std::invalid_argument("subgroup generators wider than the ambient lattice");
  }
  IntMatrix gens = subgroup_gens;
  if (gens.rows() > 0 && gens.cols() < ambient_dim) {
    IntMatrix wide(gens.rows(), ambient_dim);
    for (std::size_t i = 0; i < gens.rows(); ++i) {
      for (std::size_t j = 0; j < gens.cols(); ++j) wide(i, j) = gens(i, j);
    }
    gens = std::move(wide);
  }
  QuotientStructure q;
  const auto divisors = gens.rows() == 0 ? std::vector<Integer>{} : smith_divisors(gens);
  q.free_rank = ambient_dim - divisors.size();
  for (const auto& d : divisors) {
    if (d > 1) q.torsion.push_back(d);
  }
  return q;
}

QuotientStructure direct_sum(const std::vector<QuotientStructure>& parts) {
  QuotientStructure out;
  std::vector<Integer> t;
  for (const auto& p : parts) {
    out.free_rank += p.free_rank;
    t.insert(t.end(), p.torsion.begin(), p.torsion.end());
  }
  // Z/a + Z/b = Z/gcd + Z/lcm; sweeping left to right leaves a divisor chain.
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer g = gcd(t[i], t[j]);
      Integer l = lcm(t[i], t[j]);
      t[i] = g;
      t[j] = l;
    }
  }
  for (const auto& d : t) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

IntMatrix saturate(const IntMatrix& rows) {
  if (rows.rows() == 0) return IntMatrix(0, rows.cols());
  // U A V = D gives A = U^{-1} D V^{-1}; the first r rows of V^{-1} are a
  // unimodular-completable basis of the rational row space.
  const auto snf = smith_normal_form(rows, true);
  const std::size_t r = snf.divisors.size();
  IntMatrix out(r, rows.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) out(i, j) = (*snf.right_inverse)(i, j);
  }
  return out;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  // Columns r.. of V span the kernel of U A V = D and complete to a
  // unimodular basis, so they form a Z-basis of the integer kernel.
  const auto snf = smith_normal_form(a, true);
  const std::size_t r = snf.divisors.size();
  IntMatrix out(n - r, n);
  for (std::size_t i = r; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i - r, j) = (*snf.right)(j, i);
  }
  return out;
}

}  // namespace jw::exactlin

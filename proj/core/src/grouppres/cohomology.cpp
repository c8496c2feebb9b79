#include <sstream>

#include "jw/exactlin/span.hpp"
#include "jw/grouppres/presentation.hpp"
#include "jw/johnson/johnson.hpp"

namespace jw::grouppres {

using exactlin::IntMatrix;

namespace {

IntMatrix integer_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("action matrix is not square");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("action matrix is singular");
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][n + j].get_den() != 1) throw std::invalid_argument("action matrix is not invertible over Z");
      out(i, j) = m[i][n + j].get_num();
    }
  }
  return out;
}

// Transposition (i, i+1), 1-based, on the basis e_j - e_n of V.
IntMatrix transposition(int n, int i) {
  const auto m = static_cast<std::size_t>(n - 1);
  IntMatrix t(m, m);
  auto swap = [&](int x) { return x == i ? i + 1 : x == i + 1 ? i : x; };
  for (int j = 1; j < n; ++j) {
    const int a = swap(j), b = swap(n);
    if (a != n) t(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(j - 1)) += 1;
    if (b != n) t(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(j - 1)) -= 1;
  }
  return t;
}

std::vector<Integer> mat_vec(const IntMatrix& a, const std::vector<Integer>& v) {
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

exactlin::SparseMatrix to_sparse(const IntMatrix& a) {
  exactlin::SparseMatrix m(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<exactlin::SparseEntry> row;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) row.push_back({j, Rational(a(i, j))});
    }
    m.add_row(exactlin::SparseVector::from_entries(std::move(row)));
  }
  return m;
}

}  // namespace

LatticeAction::LatticeAction(std::size_t rank, std::vector<IntMatrix> matrices)
    : rank_(rank), matrices_(std::move(matrices)) {
  for (const auto& m : matrices_) {
    if (m.rows() != rank_ || m.cols() != rank_) throw std::invalid_argument("action matrix has the wrong size");
    inverses_.push_back(integer_inverse(m));
  }
}

IntMatrix LatticeAction::evaluate(const GroupWord& w) const {
  IntMatrix p = IntMatrix::identity(rank_);
  for (const auto& l : w) p = p * (l.exp > 0 ? matrix(l.gen) : inverse_matrix(l.gen));
  return p;
}

void LatticeAction::check(const Presentation& p) const {
  if (matrices_.size() != p.generators().size()) {
    throw std::invalid_argument("action has " + std::to_string(matrices_.size()) + " matrices for " +
                                std::to_string(p.generators().size()) + " generators");
  }
  const auto id = IntMatrix::identity(rank_);
  for (const auto& r : p.relators()) {
    if (evaluate(r.word) != id) throw std::invalid_argument("relator " + p.format_word(r.word) + " does not act trivially");
  }
}

LatticeAction LatticeAction::standard(const Presentation& p) {
  const int n = p.n();
  std::vector<IntMatrix> mats;
  switch (p.kind()) {
    case GroupKind::mccool:
      mats.assign(p.generators().size(), IntMatrix::identity(static_cast<std::size_t>(n - 1)));
      break;
    case GroupKind::braid:
    case GroupKind::symmetric:
      for (int i = 1; i < n; ++i) mats.push_back(transposition(n, i));
      break;
    case GroupKind::bp:
      for (int t = 0; t < 2; ++t) {
        for (int i = 1; i < n; ++i) mats.push_back(transposition(n, i));
      }
      break;
    case GroupKind::file:
      throw std::invalid_argument("file presentations support only the trivial representation");
  }
  return LatticeAction(static_cast<std::size_t>(n - 1), std::move(mats));
}

LatticeAction LatticeAction::trivial(const Presentation& p, std::size_t rank) {
  return LatticeAction(rank, std::vector<IntMatrix>(p.generators().size(), IntMatrix::identity(rank)));
}

std::vector<Integer> evaluate_cocycle(const CrossedHom& f, const LatticeAction& action, const GroupWord& w) {
  std::vector<Integer> out(action.rank());
  IntMatrix prefix = IntMatrix::identity(action.rank());
  for (const auto& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= f.values.size()) {
      throw std::invalid_argument("word uses an unknown generator");
    }
    const auto& value = f.values[static_cast<std::size_t>(l.gen)];
    if (l.exp > 0) {
      const auto term = mat_vec(prefix, value);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
      prefix = prefix * action.matrix(l.gen);
    } else {
      prefix = prefix * action.inverse_matrix(l.gen);
      const auto term = mat_vec(prefix, value);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] -= term[i];
    }
  }
  return out;
}

CrossedHom principal_cocycle(const LatticeAction& action, const std::vector<Integer>& v, std::size_t generators) {
  CrossedHom f;
  for (std::size_t g = 0; g < generators; ++g) {
    auto image = mat_vec(action.matrix(static_cast<int>(g)), v);
    for (std::size_t i = 0; i < image.size(); ++i) image[i] -= v[i];
    f.values.push_back(std::move(image));
  }
  return f;
}

IntMatrix cocycle_condition_matrix(const Presentation& p, const LatticeAction& action) {
  action.check(p);
  const std::size_t m = action.rank();
  const std::size_t cols = m * p.generators().size();
  IntMatrix out(0, cols);
  for (const auto& r : p.relators()) {
    IntMatrix block(m, cols);
    IntMatrix prefix = IntMatrix::identity(m);
    for (const auto& l : r.word) {
      const std::size_t base = static_cast<std::size_t>(l.gen) * m;
      if (l.exp > 0) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) block(i, base + j) += prefix(i, j);
        }
        prefix = prefix * action.matrix(l.gen);
      } else {
        prefix = prefix * action.inverse_matrix(l.gen);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) block(i, base + j) -= prefix(i, j);
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) out.append_row(block.row(i));
  }
  return out;
}

IntMatrix cocycle_basis(const Presentation& p, const LatticeAction& action) {
  return exactlin::integer_kernel_basis(cocycle_condition_matrix(p, action));
}

std::size_t cocycle_rank(const Presentation& p, const LatticeAction& action) {
  const auto a = cocycle_condition_matrix(p, action);
  return a.cols() - exactlin::rank(to_sparse(a));
}

exactlin::QuotientStructure h1_twisted(const Presentation& p, const LatticeAction& action) {
  const auto a = cocycle_condition_matrix(p, action);
  const std::size_t m = action.rank();
  const std::size_t gens = p.generators().size();
  const std::size_t z1 = a.cols() - exactlin::rank(to_sparse(a));
  // B^1: one row per basis vector v = e_r, listing g.v - v for every generator.
  IntMatrix b(m, m * gens);
  for (std::size_t g = 0; g < gens; ++g) {
    const auto& rho = action.matrix(static_cast<int>(g));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t i = 0; i < m; ++i) b(r, g * m + i) = rho(i, r) - (i == r ? 1 : 0);
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    const auto row = b.row(r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * row[j];
      if (s != 0) throw std::logic_error("principal crossed homomorphism fails a relator");
    }
  }
  // Z^1 is a kernel, hence saturated in Z^N, so the torsion of Z^1/B^1 is
  // the torsion of Z^N/B^1.
  const auto divisors = exactlin::smith_divisors(b);
  exactlin::QuotientStructure out;
  out.free_rank = z1 - divisors.size();
  for (const auto& d : divisors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

exactlin::QuotientStructure abelianization(const Presentation& p) {
  const std::size_t gens = p.generators().size();
  IntMatrix m(0, gens);
  for (const auto& r : p.relators()) {
    std::vector<Integer> row(gens);
    for (const auto& l : r.word) row[static_cast<std::size_t>(l.gen)] += l.exp;
    m.append_row(row);
  }
  return exactlin::quotient_structure(gens, m);
}

std::uint64_t h2_psigma_rank(int n) {
  if (n < 3) throw std::invalid_argument("h2_psigma_rank needs n >= 3");
  const std::uint64_t m = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  const std::uint64_t image = johnson::johnson_image(n, 2).dim;
  const std::uint64_t value = m * (m - 1) / 2 - image;
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t formula = un * un * (un - 1) * (un - 2) / 2;
  const std::uint64_t relators = builtin(GroupKind::mccool, n).relators().size();
  if (value != formula || value != relators) {
    std::ostringstream os;
    os << "H2 rank mismatch for n=" << n << ": difference " << value << ", formula " << formula << ", relators "
       << relators;
    throw VerificationError(os.str());
  }
  return value;
}

}  // namespace jw::grouppres

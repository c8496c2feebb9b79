#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "jw/exactlin/integer.hpp"
#include "jw/exactlin/span.hpp"

namespace jw::cyclic {

/// Element of J, stored as the canonical remainder of its spanning-set
/// coordinates modulo the relation space.
struct JElement {
  int n = 0;
  exactlin::SparseVector coords;

  bool is_zero() const { return coords.empty(); }
  friend bool operator==(const JElement&, const JElement&) = default;
  /// "5*(1^2).(1^2)" style, over the spanning pairs that survive reduction.
  std::string to_string() const;
};

/// The quotient of (wedge^2 H) tensor (wedge^2 H) by the symmetry relation
/// and the three-term relation, for a fixed n. Spanning coordinates are
/// ordered pairs of wedge pairs (a<b, c<d).
class JModule {
 public:
  static std::shared_ptr<const JModule> get(int n);

  int n() const { return n_; }
  std::size_t pair_count() const { return pairs_; }
  std::size_t spanning_size() const { return pairs_ * pairs_; }
  std::size_t pair_index(int a, int b) const;  // requires 1 <= a < b <= n
  /// (x_a ^ x_b).(x_c ^ x_d) in spanning coordinates, before reduction.
  exactlin::SparseVector product(int a, int b, int c, int d) const;

  JElement reduce(const exactlin::SparseVector& coords) const;
  std::size_t rank() const { return spanning_size() - relations_.dim(); }
  /// Integer structure of the quotient lattice.
  exactlin::QuotientStructure integer_structure() const;
  const exactlin::IntMatrix& relation_matrix() const { return relation_matrix_; }

  explicit JModule(int n);

 private:
  int n_;
  std::size_t pairs_;
  exactlin::IncrementalSpan relations_;
  exactlin::IntMatrix relation_matrix_;
};

std::uint64_t j_rank(int n);
JElement j_project(int n, int a, int b, int c, int d);

}  // namespace jw::cyclic

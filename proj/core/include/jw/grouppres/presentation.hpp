#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jw/exactlin/integer.hpp"

namespace jw::grouppres {

/// Thrown when two independent computations of the same quantity disagree.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator index (0-based) raised to +1 or -1.
struct Letter {
  int gen;
  int exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using GroupWord = std::vector<Letter>;

GroupWord inverse(const GroupWord& w);
/// a b a^-1 b^-1
GroupWord commutator(const GroupWord& a, const GroupWord& b);
GroupWord concat(const GroupWord& a, const GroupWord& b);

struct Relator {
  std::string family;  // e.g. "P3", "BP2"; empty for imported groups
  GroupWord word;
};

enum class GroupKind { mccool, bp, braid, symmetric, file };
std::string to_string(GroupKind kind);
/// "mccool", "bp", "braid", "sym"/"symmetric", "file".
GroupKind parse_group_kind(const std::string& text);

class Presentation {
 public:
  Presentation(GroupKind kind, int n, std::vector<std::string> generators);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }

  /// Throws std::invalid_argument if a letter is out of range or exp is not +-1.
  void add_relator(std::string family, GroupWord word);
  /// Equality lhs = rhs stored as lhs rhs^-1.
  void add_relation(std::string family, const GroupWord& lhs, const GroupWord& rhs);
  int generator_index(const std::string& name) const;
  std::size_t count(const std::string& family) const;

  /// "g1^-1 g2"
  std::string format_word(const GroupWord& w) const;
  /// Accepts "a b^-1 c^3"; throws std::invalid_argument on unknown generators.
  GroupWord parse_word(const std::string& text) const;

  /// Plain text: first line lists generators, then one relator per line.
  std::string to_text() const;
  static Presentation from_text(const std::string& text);

 private:
  GroupKind kind_;
  int n_;
  std::vector<std::string> generators_;
  std::vector<Relator> relators_;
};

/// McCool generators K_ij (i != j), FRR generators sigma_i then s_i, Artin
/// sigma_i, or Coxeter s_i. Throws std::invalid_argument for n < 2 or kind file.
Presentation builtin(GroupKind kind, int n);

/// Per-generator invertible integer matrices acting on Z^rank (column vectors).
class LatticeAction {
 public:
  LatticeAction(std::size_t rank, std::vector<exactlin::IntMatrix> matrices);

  std::size_t rank() const { return rank_; }
  const exactlin::IntMatrix& matrix(int gen) const { return matrices_.at(static_cast<std::size_t>(gen)); }
  const exactlin::IntMatrix& inverse_matrix(int gen) const { return inverses_.at(static_cast<std::size_t>(gen)); }
  exactlin::IntMatrix evaluate(const GroupWord& w) const;
  /// Throws std::invalid_argument unless every relator acts as the identity.
  void check(const Presentation& p) const;

  /// Transposition (i, i+1) on V = {sum x_i = 0} with basis e_j - e_n for
  /// sigma_i and s_i; identity for the McCool generators.
  static LatticeAction standard(const Presentation& p);
  static LatticeAction trivial(const Presentation& p, std::size_t rank = 1);

 private:
  std::size_t rank_;
  std::vector<exactlin::IntMatrix> matrices_;
  std::vector<exactlin::IntMatrix> inverses_;
};

/// Values of a crossed homomorphism on the generators.
struct CrossedHom {
  std::vector<std::vector<Integer>> values;
};

/// f(uv) = f(u) + u.f(v), f(g^-1) = -g^-1.f(g), f(empty) = 0.
std::vector<Integer> evaluate_cocycle(const CrossedHom& f, const LatticeAction& action, const GroupWord& w);
/// f_v(g) = g.v - v
CrossedHom principal_cocycle(const LatticeAction& action, const std::vector<Integer>& v, std::size_t generators);

/// Rows: rank * relators; columns: rank * generators. A vector of generator
/// values is a cocycle iff it is in the kernel.
exactlin::IntMatrix cocycle_condition_matrix(const Presentation& p, const LatticeAction& action);
/// Z-basis of Z^1 (rows, generator-major coordinates).
exactlin::IntMatrix cocycle_basis(const Presentation& p, const LatticeAction& action);
std::size_t cocycle_rank(const Presentation& p, const LatticeAction& action);

exactlin::QuotientStructure h1_twisted(const Presentation& p, const LatticeAction& action);
exactlin::QuotientStructure abelianization(const Presentation& p);

/// m(m-1)/2 - dim of the degree two image, m = n(n-1). Throws
/// VerificationError unless it equals n^2(n-1)(n-2)/2 and the McCool relator count.
std::uint64_t h2_psigma_rank(int n);

}  // namespace jw::grouppres

#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "jw/cyclic/jmodule.hpp"
#include "jw/cyclic/necklace.hpp"
#include "jw/freelie/lie.hpp"

namespace jw::tangent {

using freelie::LieElement;
using freelie::TensorElement;
using freelie::Word;

/// Degree-k derivation of the free Lie algebra on n generators, stored as
/// the images of the generators (each of degree k+1). Missing keys are zero.
class Derivation {
 public:
  Derivation(int n, int degree);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<int, LieElement>& values() const { return values_; }
  /// Image of x_i (zero if unset).
  const LieElement& value(int i) const;
  bool is_zero() const { return values_.empty(); }

  /// Throws std::invalid_argument on a bad index or a value of the wrong degree.
  void set(int i, LieElement value);
  void add(int i, const LieElement& value);

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  Derivation& operator*=(const Integer& factor);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(Derivation a, const Integer& f) { return a *= f; }
  friend bool operator==(const Derivation&, const Derivation&) = default;

  /// "x1* (x) [x1,x2] + ..."
  std::string to_string() const;

 private:
  void check_compatible(const Derivation& other) const;

  int n_;
  int degree_;
  std::map<int, LieElement> values_;
};

/// x_i^* (x) [x_{j_1}, ..., x_{j_k}, x_i]
struct TangentialGenerator {
  int i;
  std::vector<int> word;
};

/// x_i^* (x) [u, x_i] with u the Lyndon monomial of `u`.
struct PBasisIndex {
  int i;
  Word u;
  friend auto operator<=>(const PBasisIndex&, const PBasisIndex&) = default;
  std::string to_string() const;
};

/// Leibniz extension of f applied to a.
LieElement apply(const Derivation& f, const LieElement& a);

/// [f, g](x_i) = f(g(x_i)) - g(f(x_i)).
Derivation der_bracket(const Derivation& f, const Derivation& g);

/// Contraction: pairs x_i^* with the first tensor slot of f(x_i).
TensorElement contract(const Derivation& f);

cyclic::CyclicElement trace(const Derivation& f, cyclic::QuotientMode mode = cyclic::QuotientMode::full);

/// f_1 o Phi^4 - 2 f_2 o Phi^4 with f_1(v w x y) = (v^x).(w^y) and
/// f_2(v w x y) = (v^y).(w^x). Throws std::invalid_argument unless degree is 4.
cyclic::JElement trace_J(const Derivation& f);

/// i-major, Lyndon order within each i. For k = 1 the pair (i, x_i) is skipped.
std::vector<PBasisIndex> p_basis(int n, int k);

Derivation tangential(int n, const TangentialGenerator& g);
/// x_i^* (x) [u, x_i]
Derivation tangential(int n, int i, const LieElement& u);
Derivation tangential(int n, const PBasisIndex& index);
/// x_i^* (x) [x_j, x_i]; throws std::invalid_argument when i == j.
Derivation tau1_generator(int n, int i, int j);

/// The u with [u, x_i] = value, with no x_i term in degree one. Throws
/// std::invalid_argument if value is not of that form.
LieElement tangential_part(const LieElement& value, int i);

/// Coordinates in p_basis(n, k). Throws std::invalid_argument when f is not
/// tangential.
std::map<PBasisIndex, Integer> p_coordinates(const Derivation& f);
Derivation from_p_coordinates(int n, int k, const std::map<PBasisIndex, Integer>& coords);

}  // namespace jw::tangent

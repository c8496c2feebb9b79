#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "jw/exactlin/number.hpp"
#include "jw/freelie/word.hpp"

namespace jw::freelie {

/// Integer combination of words in the tensor algebra T(H). Terms are kept
/// in word order with no zero coefficients.
class TensorElement {
 public:
  using Terms = std::map<Word, Integer>;

  TensorElement() = default;
  static TensorElement of_word(const Word& w, const Integer& coef = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Length of the words (0 for the zero element).
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
  Integer coefficient(const Word& w) const;

  void add(const Word& w, const Integer& coef);
  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  /// this += factor * other
  void add_scaled(const TensorElement& other, const Integer& factor);
  TensorElement& operator*=(const Integer& factor);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Integer& f) { return a *= f; }
  /// Concatenation product.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// "3*(1,2) - (2,1)"
  std::string to_string() const;

 private:
  Terms terms_;
};

/// ab - ba
TensorElement commutator(const TensorElement& a, const TensorElement& b);

}  // namespace jw::freelie

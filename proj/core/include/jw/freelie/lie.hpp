#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jw/exactlin/number.hpp"
#include "jw/freelie/tensor.hpp"
#include "jw/freelie/word.hpp"

namespace jw::freelie {

/// Binary bracket expression with generator leaves.
class BracketTree {
 public:
  static BracketTree leaf(int generator);
  static BracketTree node(BracketTree left, BracketTree right);
  /// [x_a, x_b, x_c, ...] = [[[x_a, x_b], x_c], ...]
  static BracketTree left_normed(const std::vector<int>& generators);
  /// Accepts "x3", "3", and bracket lists "[e1, e2, ...]" (left-normed when
  /// longer than two), nesting allowed: "[[x1,x2],[x1,x3]]".
  static BracketTree parse(const std::string& text);

  bool is_leaf() const { return letter_ != 0; }
  int letter() const { return letter_; }
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }
  std::size_t degree() const;
  std::string to_string() const;

 private:
  int letter_ = 0;
  std::shared_ptr<const BracketTree> left_, right_;
};

/// Lyndon word standing for its standard bracketing. The Hall set is the set
/// of Lyndon words ordered lexicographically.
struct HallMonomial {
  Word word;

  std::size_t degree() const { return word.size(); }
  std::vector<int> multidegree(int n) const { return content(word, n); }
  BracketTree tree() const;
  /// Standard bracketing, e.g. "[x1,[x1,x2]]".
  std::string to_string() const;
  friend auto operator<=>(const HallMonomial&, const HallMonomial&) = default;
};

/// Integer combination of Lyndon basis monomials.
class LieElement {
 public:
  using Terms = std::map<Word, Integer>;

  LieElement() = default;
  static LieElement generator(int i);
  /// Throws std::invalid_argument unless w is a Lyndon word.
  static LieElement basis(const Word& w, const Integer& coef = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
  Integer coefficient(const Word& w) const;

  /// Adds coef times the basis element w; w must be Lyndon (not rechecked).
  void add(const Word& w, const Integer& coef);
  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Integer& factor);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Integer& f) { return a *= f; }
  friend LieElement operator-(LieElement a) { return a *= Integer(-1); }
  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Lyndon words of one content together with the triangular change of basis
/// between their bracketings and the words themselves: the bracketing P_w of
/// w equals w plus lexicographically larger words.
struct LyndonBlock {
  std::vector<int> content;
  std::vector<Word> words;
  std::unordered_map<Word, std::size_t> index;
  /// lower[j] lists (i, m) with i < j and m the coefficient of words[j] in P_{words[i]}.
  std::vector<std::vector<std::pair<std::size_t, Integer>>> lower;
};

std::shared_ptr<const LyndonBlock> lyndon_block(const std::vector<int>& content);

/// Tensor expansion of the standard bracketing of a Lyndon word.
std::shared_ptr<const TensorElement> lyndon_expansion(const Word& w);

/// Lyndon coordinates of a block from the tensor coefficients at the block's
/// Lyndon words (forward substitution).
std::vector<Integer> block_coordinates(const LyndonBlock& block, const std::vector<Integer>& lyndon_values);

TensorElement expand(const BracketTree& tree);
TensorElement embed_tensor(const LieElement& a);

/// Lyndon coordinates of a tensor known to lie in the free Lie algebra. Only
/// coefficients at Lyndon words are read.
LieElement normalize(const TensorElement& t);
LieElement normalize(const BracketTree& tree);
LieElement normalize(const std::vector<std::pair<Integer, BracketTree>>& combination);

/// True iff t lies in the image of the free Lie algebra.
bool is_lie(const TensorElement& t);

LieElement bracket(const LieElement& a, const LieElement& b);

/// Lyndon words of length k over n letters in lexicographic order; cached.
std::shared_ptr<const std::vector<Word>> hall_words(int n, int k);
std::vector<HallMonomial> hall_basis(int n, int k);

/// Seeds the basis cache with externally stored words after checking they are
/// exactly the expected basis. Throws std::invalid_argument otherwise.
void install_hall_basis(int n, int k, std::vector<Word> words);

}  // namespace jw::freelie

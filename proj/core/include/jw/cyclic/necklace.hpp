#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jw/exactlin/number.hpp"
#include "jw/freelie/tensor.hpp"
#include "jw/freelie/word.hpp"

namespace jw::cyclic {

using freelie::Word;

enum class QuotientMode { full, bar, tilde };

std::string to_string(QuotientMode mode);
/// "full", "bar" or "tilde"; throws std::invalid_argument otherwise.
QuotientMode parse_mode(const std::string& text);

/// Lexicographically least rotation (Booth's algorithm).
Word necklace_canonicalize(const Word& w);
bool is_necklace(const Word& w);

/// x_i^k
bool is_power(const Word& necklace);
/// Some letter occurs exactly once; these necklaces span the tilde quotient.
bool has_single_letter(const Word& necklace);
/// Whether a basis necklace survives in the given quotient.
bool survives(const Word& necklace, QuotientMode mode);

/// Integer combination of necklaces.
class CyclicElement {
 public:
  using Terms = std::map<Word, Integer>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
  Integer coefficient(const Word& w) const;

  /// Adds coef times the necklace of an arbitrary word.
  void add(const Word& w, const Integer& coef);
  CyclicElement& operator+=(const CyclicElement& other);
  CyclicElement& operator-=(const CyclicElement& other);
  friend CyclicElement operator-(CyclicElement a, const CyclicElement& b) { return a -= b; }
  friend bool operator==(const CyclicElement&, const CyclicElement&) = default;

  std::string to_string() const;

 private:
  void add_canonical(const Word& necklace, const Integer& coef);
  Terms terms_;
};

CyclicElement project_cyclic(const freelie::TensorElement& t);
/// Drops coordinates on necklaces killed by the quotient.
CyclicElement reduce(const CyclicElement& e, QuotientMode mode);

/// Number of necklaces with the given letter counts:
/// (1/k) sum_{d | gcd} phi(d) (k/d)! / prod (alpha_i/d)!.
std::uint64_t necklace_count(const std::vector<int>& counts);
/// Rank of C_n(k) and its quotients.
std::uint64_t cyclic_rank(int n, int k, QuotientMode mode);

/// Canonical necklaces with the given letter counts, lexicographic order.
std::vector<Word> necklaces_with_content(const std::vector<int>& counts);
/// All canonical necklaces of length k over n letters, lexicographic order.
std::vector<Word> necklaces(int n, int k);

}  // namespace jw::cyclic

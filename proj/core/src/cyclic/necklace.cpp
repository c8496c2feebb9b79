#include "jw/cyclic/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jw/util/combinatorics.hpp"

namespace jw::cyclic {

std::string to_string(QuotientMode mode) {
  switch (mode) {
    case QuotientMode::full:
      return "full";
    case QuotientMode::bar:
      return "bar";
    case QuotientMode::tilde:
      return "tilde";
  }
  return "full";
}

QuotientMode parse_mode(const std::string& text) {
  if (text == "full") return QuotientMode::full;
  if (text == "bar") return QuotientMode::bar;
  if (text == "tilde") return QuotientMode::tilde;
  throw std::invalid_argument("unknown quotient mode '" + text + "' (expected full, bar or tilde)");
}

Word necklace_canonicalize(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("cannot canonicalize the empty word");
  const std::string s = w + w;
  std::vector<long> f(s.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    const char sj = s[j];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
      if (sj < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != s[k + static_cast<std::size_t>(i + 1)]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return s.substr(k, n);
}

bool is_necklace(const Word& w) { return !w.empty() && necklace_canonicalize(w) == w; }

bool is_power(const Word& necklace) {
  return !necklace.empty() &&
         std::all_of(necklace.begin(), necklace.end(), [&](char c) { return c == necklace[0]; });
}

bool has_single_letter(const Word& necklace) {
  for (char c : necklace) {
    if (std::count(necklace.begin(), necklace.end(), c) == 1) return true;
  }
  return false;
}

bool survives(const Word& necklace, QuotientMode mode) {
  switch (mode) {
    case QuotientMode::full:
      return true;
    case QuotientMode::bar:
      return !is_power(necklace);
    case QuotientMode::tilde:
      return has_single_letter(necklace);
  }
  return true;
}

Integer CyclicElement::coefficient(const Word& w) const {
  auto it = terms_.find(necklace_canonicalize(w));
  return it == terms_.end() ? Integer(0) : it->second;
}

void CyclicElement::add(const Word& w, const Integer& coef) { add_canonical(necklace_canonicalize(w), coef); }

void CyclicElement::add_canonical(const Word& necklace, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(necklace, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

CyclicElement& CyclicElement::operator+=(const CyclicElement& other) {
  for (const auto& [w, c] : other.terms_) add_canonical(w, c);
  return *this;
}

CyclicElement& CyclicElement::operator-=(const CyclicElement& other) {
  for (const auto& [w, c] : other.terms_) add_canonical(w, -c);
  return *this;
}

std::string CyclicElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "(" + freelie::format_word(w) + ")";
    first = false;
  }
  return out;
}

CyclicElement project_cyclic(const freelie::TensorElement& t) {
  CyclicElement out;
  for (const auto& [w, c] : t.terms()) out.add(w, c);
  return out;
}

CyclicElement reduce(const CyclicElement& e, QuotientMode mode) {
  CyclicElement out;
  for (const auto& [w, c] : e.terms()) {
    if (survives(w, mode)) out.add(w, c);
  }
  return out;
}

std::uint64_t necklace_count(const std::vector<int>& counts) {
  int k = 0;
  int g = 0;
  for (int a : counts) {
    k += a;
    g = std::gcd(g, a);
  }
  if (k == 0) return 0;
  Integer sum = 0;
  for (int d : util::divisors(g)) {
    std::vector<int> parts;
    for (int a : counts) parts.push_back(a / d);
    sum += util::euler_phi(d) * util::multinomial(parts);
  }
  return util::to_count(sum / k);
}

std::uint64_t cyclic_rank(int n, int k, QuotientMode mode) {
  if (n < 1 || k < 1) throw std::invalid_argument("cyclic_rank needs n >= 1 and k >= 1");
  switch (mode) {
    case QuotientMode::full: {
      Integer sum = 0;
      Integer power;
      for (int d : util::divisors(k)) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k / d));
        sum += util::euler_phi(d) * power;
      }
      return util::to_count(sum / k);
    }
    case QuotientMode::bar:
      return cyclic_rank(n, k, QuotientMode::full) - static_cast<std::uint64_t>(n);
    case QuotientMode::tilde: {
      std::uint64_t total = 0;
      for (const auto& alpha : util::compositions(k, n)) {
        if (std::find(alpha.begin(), alpha.end(), 1) != alpha.end()) total += necklace_count(alpha);
      }
      return total;
    }
  }
  return 0;
}

std::vector<Word> necklaces_with_content(const std::vector<int>& counts) {
  std::vector<Word> out;
  for (auto& w : freelie::words_with_content(counts)) {
    if (necklace_canonicalize(w) == w) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> necklaces(int n, int k) {
  std::vector<Word> out;
  std::vector<int> w(static_cast<std::size_t>(k), 1);
  // Odometer over all words; keep the canonical ones.
  for (;;) {
    Word word = freelie::make_word(w);
    if (necklace_canonicalize(word) == word) out.push_back(std::move(word));
    int pos = k - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace jw::cyclic

#include "jw/freelie/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jw::freelie {

namespace {

char to_letter(int i) {
  if (i < 1 || i > 127) throw std::invalid_argument("generator index out of range: " + std::to_string(i));
  return static_cast<char>(i);
}

}  // namespace

Word make_word(std::initializer_list<int> letters) {
  Word w;
  w.reserve(letters.size());
  for (int i : letters) w.push_back(to_letter(i));
  return w;
}

Word make_word(const std::vector<int>& letters) {
  Word w;
  w.reserve(letters.size());
  for (int i : letters) w.push_back(to_letter(i));
  return w;
}

std::vector<int> letters(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (char c : w) out.push_back(static_cast<int>(c));
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  const bool has_sep = text.find_first_of(", ") != std::string::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("bad word '" + text + "'");
    }
    std::size_t end = pos + 1;
    if (has_sep) {
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    }
    w.push_back(to_letter(std::stoi(text.substr(pos, end - pos))));
    pos = end;
  }
  return w;
}

std::vector<int> content(const Word& w, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (char c : w) {
    const int i = static_cast<int>(c);
    if (i < 1 || i > n) throw std::invalid_argument("letter " + std::to_string(i) + " outside 1.." + std::to_string(n));
    ++counts[static_cast<std::size_t>(i - 1)];
  }
  return counts;
}

std::vector<int> trim_content(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<int> content_key(const Word& w) { return trim_content(content(w, max_letter(w))); }

int max_letter(const Word& w) {
  int m = 0;
  for (char c : w) m = std::max(m, static_cast<int>(c));
  return m;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  // Strictly smaller than every proper suffix.
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (w.compare(j, std::string::npos, w) <= 0) return false;
  }
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard factorization needs length >= 2");
  for (std::size_t j = 1; j < w.size(); ++j) {
    Word suffix = w.substr(j);
    if (is_lyndon(suffix)) return {w.substr(0, j), std::move(suffix)};
  }
  throw std::logic_error("unreachable: single letters are Lyndon");
}

std::vector<Word> lyndon_words(int n, int k) {
  // Duval's generation in lexicographic order, keeping lengths equal to k.
  std::vector<Word> out;
  if (n < 1 || k < 1) return out;
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == k) out.push_back(make_word(w));
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::vector<Word> words_with_content(const std::vector<int>& counts) {
  Word w;
  for (std::size_t i = 0; i < counts.size(); ++i) w.append(static_cast<std::size_t>(counts[i]), to_letter(static_cast<int>(i + 1)));
  std::vector<Word> out;
  if (w.empty()) return out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Word> lyndon_words_with_content(const std::vector<int>& counts) {
  std::vector<Word> out;
  for (auto& w : words_with_content(counts)) {
    if (is_lyndon(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace jw::freelie

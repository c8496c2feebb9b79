#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace jw::freelie {

/// A word over generator indices. Each char stores one index in 1..n, so
/// std::string ordering is the lexicographic order on index sequences.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
Word make_word(const std::vector<int>& letters);
std::vector<int> letters(const Word& w);

/// "1,2,1"
std::string format_word(const Word& w);
/// Inverse of format_word; also accepts letters without commas when all are
/// single digits ("121"). Throws std::invalid_argument on bad input.
Word parse_word(const std::string& text);

/// Letter-count vector of w, length n (letters above n are rejected).
std::vector<int> content(const Word& w, int n);
/// Letter-count vector with trailing zeros removed; the canonical key for
/// content blocks.
std::vector<int> content_key(const Word& w);
std::vector<int> trim_content(std::vector<int> counts);

/// Largest letter index occurring in w (0 for the empty word).
int max_letter(const Word& w);

bool is_lyndon(const Word& w);

/// w = u v with v the longest proper Lyndon suffix. Requires |w| >= 2 and w Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Lyndon words of length k over 1..n in increasing lexicographic order.
std::vector<Word> lyndon_words(int n, int k);

/// Words with the given letter counts (counts[i] copies of letter i+1), in
/// increasing lexicographic order.
std::vector<Word> words_with_content(const std::vector<int>& counts);

/// Lyndon words with the given letter counts, increasing lexicographic order.
std::vector<Word> lyndon_words_with_content(const std::vector<int>& counts);

}  // namespace jw::freelie

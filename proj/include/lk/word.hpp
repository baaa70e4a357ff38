#pragma once

#include <string>
#include <vector>

namespace lk {

/// Letters are signed 1-based generator indices; -k stands for s_k^-1.
using SignedWord = std::vector<int>;
/// Letters are 1-based generator indices.
using PositiveWord = std::vector<int>;

/// Parses whitespace-separated integers, e.g. "1 2 -1". Throws
/// std::invalid_argument on junk, zero letters or letters beyond rank.
SignedWord parse_signed_word(const std::string& text, int rank);
/// As parse_signed_word but throws NegativeLetter on a negative letter.
PositiveWord parse_positive_word(const std::string& text, int rank);

std::string format_word(const std::vector<int>& word);

}  // namespace lk

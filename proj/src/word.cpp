#include "lk/word.hpp"

#include "lk/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace lk {

SignedWord parse_signed_word(const std::string& text, int rank) {
  SignedWord word;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad letter '" + token + "'");
    if (letter == 0 || letter > rank || letter < -rank)
      throw std::invalid_argument("letter " + token + " outside 1.." + std::to_string(rank));
    word.push_back(letter);
  }
  return word;
}

PositiveWord parse_positive_word(const std::string& text, int rank) {
  SignedWord word = parse_signed_word(text, rank);
  for (int letter : word)
    if (letter < 0) throw NegativeLetter("positive word contains " + std::to_string(letter));
  return word;
}

std::string format_word(const std::vector<int>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
  return os.str();
}

}  // namespace lk

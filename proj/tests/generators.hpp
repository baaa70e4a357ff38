#pragma once

#include "lk/laurent.hpp"
#include "lk/word.hpp"

#include <random>

namespace lk::testing {

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LaurentPoly poly(int max_terms = 5, int max_exp = 4, int max_coeff = 40) {
    std::vector<LaurentPoly::Term> terms;
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Integer c = uniform(-max_coeff, max_coeff);
      if (uniform(0, 5) == 0) c *= Integer("123456789012345678901234567890");
      terms.push_back({Exponent{uniform(-max_exp, max_exp), uniform(-max_exp, max_exp)}, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  PositiveWord positive_word(int rank, int max_len) {
    PositiveWord w(static_cast<std::size_t>(uniform(0, max_len)));
    for (int& letter : w) letter = uniform(1, rank);
    return w;
  }

  SignedWord signed_word(int rank, int max_len) {
    SignedWord w = positive_word(rank, max_len);
    for (int& letter : w)
      if (uniform(0, 1)) letter = -letter;
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lk::testing

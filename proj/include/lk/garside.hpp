#pragma once

#include "lk/lk_rep.hpp"
#include "lk/root_system.hpp"
#include "lk/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lk {

/// Coordinates of a vector in V_1 = R[t, 1/t]^{Phi+}, one per positive root.
using ConeVector = Vector<TPoly>;

/// The reduced word of w read in B+ (lexicographically smallest).
PositiveWord b_embed(const RootSystem& rs, const WeylElement& w);

/// s_k * A. Throws NotClosed.
RootSet star_act(const RootSystem& rs, int k, const RootSet& set);

/// x * A for x = s_{x_1} ... s_{x_m}: the last letter acts first.
RootSet star_act_word(const RootSystem& rs, const PositiveWord& x, const RootSet& set);

/// L(x), the longest simple prefix of x, computed as g(x * {}).
WeylElement head_L(const RootSystem& rs, const PositiveWord& x);

/// {beta : constant term of coordinate beta is zero}. Throws NotInCone on a
/// negative constant term or a negative power of t.
RootSet classify_cone(const RootSystem& rs, const ConeVector& v);

/// Vector of U_A: constant 1 off A, t on A.
ConeVector generic_cone_vector(const RootSystem& rs, const RootSet& set);

/// rho(x) at r = r0 applied to a vector of U_A; with A empty this is the all-ones probe.
ConeVector act_on_cone(const Representation& rep, const PositiveWord& x, const ConeVector& v, const Rational& r0);

/// g of the cone piece reached by rho(x) from the all-ones vector.
WeylElement faithfulness_probe(const Representation& rep, const PositiveWord& x, const Rational& r0);

/// Positive words of bounded length grouped by braid-relation rewriting.
struct WordClasses {
  std::vector<PositiveWord> words;
  std::vector<int> class_of;  // parallel to words
  int class_count = 0;
};

/// Partition of all positive words of length <= len into classes of words
/// linked by single braid-relation substitutions. Throws BudgetExceeded.
WordClasses word_equiv_oracle(const RootSystem& rs, int len, long max_words);

/// max(h - k, h, -k) from the global t-degree range of rho(x).
int charney_length_matrix(const Representation& rep, const SignedWord& x);

/// Global lowest and highest t exponent over the nonzero entries of m.
std::pair<int, int> matrix_t_range(const RepMatrix& m);

/// Ball in B around 1 for the word metric on Omega u Omega^-1, with group
/// elements compared through rho.
class OmegaBall {
 public:
  /// Throws TooLarge when |W| exceeds the Weyl budget.
  OmegaBall(const Representation& rep, const Budget& budget);

  /// Grows the ball to the given radius. Throws TooLarge past the ball budget.
  void grow_to(int radius);
  int radius() const { return radius_; }
  std::optional<int> distance(const RepMatrix& m) const;
  std::size_t element_count() const { return seen_.size(); }
  std::size_t generator_count() const { return generators_.size(); }

 private:
  const Representation* rep_;
  Budget budget_;
  std::vector<RepMatrix> generators_;
  std::map<std::string, int> seen_;
  std::vector<RepMatrix> frontier_;
  int radius_ = 0;
};

/// Minimal number of factors from Omega u Omega^-1 giving x, by breadth-first
/// search. Throws NotFound beyond maxlen and TooLarge on budget overruns.
int charney_length_bfs(const Representation& rep, const SignedWord& x, int maxlen, const Budget& budget = Budget{});
int charney_length_bfs(OmegaBall& ball, const Representation& rep, const SignedWord& x, int maxlen);

/// x is positive and not left-divisible by b(w0), i.e. head_L(x) != w0.
bool positive_and_not_delta_divisible(const RootSystem& rs, const PositiveWord& x);

}  // namespace lk

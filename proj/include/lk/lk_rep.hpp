#pragma once

#include "lk/laurent.hpp"
#include "lk/matrix.hpp"
#include "lk/root_system.hpp"
#include "lk/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lk {

/// Coefficients T_{k,beta} of the rank-one parts of the generators.
class TTable {
 public:
  TTable(int rank, int size) : rank_(rank), size_(size), values_(static_cast<std::size_t>(rank * size)) {}

  int rank() const { return rank_; }
  int size() const { return size_; }
  const LaurentPoly& operator()(int k, int beta) const { return values_[at(k, beta)]; }
  LaurentPoly& operator()(int k, int beta) { return values_[at(k, beta)]; }

  friend bool operator==(const TTable&, const TTable&) = default;

 private:
  std::size_t at(int k, int beta) const { return static_cast<std::size_t>((k - 1) * size_ + beta); }
  int rank_;
  int size_;
  std::vector<LaurentPoly> values_;
};

/// Exponents a, c, d with T_{k,beta} = r^(ht+1) (r^2-1) f, where f is 1,
/// 1 - r^-a or (1 - r^-c)(1 - r^-d) by the value of (alpha_k, beta).
/// Entries that the formula does not use are zero; c <= d.
class ExponentTable {
 public:
  struct Entry {
    int a = 0, c = 0, d = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  ExponentTable(int rank, int size) : size_(size), values_(static_cast<std::size_t>(rank * size)) {}
  const Entry& operator()(int k, int beta) const { return values_[static_cast<std::size_t>((k - 1) * size_ + beta)]; }
  Entry& operator()(int k, int beta) { return values_[static_cast<std::size_t>((k - 1) * size_ + beta)]; }

 private:
  int size_;
  std::vector<Entry> values_;
};

/// Which candidate the recursive solver uses when several apply.
enum class TieBreak { Smallest, Largest };

/// Recursive solution of the T-equations in height order.
/// Throws InconsistentSystem if no rule applies (never expected).
TTable solve_T(const RootSystem& rs, TieBreak tie = TieBreak::Smallest);

struct ClosedFormSolution {
  TTable table;
  ExponentTable exponents;
};

/// Closed-form route through the exponent recursions. Throws RuleNotApplicable.
ClosedFormSolution solve_T_closed_form(const RootSystem& rs);

/// The t = 0 part tau_k.
RepMatrix tau(const RootSystem& rs, int k);
SparseColumns<LaurentPoly> tau_sparse(const RootSystem& rs, int k);

/// sigma_k = tau_k + t T_k.
RepMatrix sigma(const RootSystem& rs, const TTable& T, int k);
SparseColumns<LaurentPoly> sigma_sparse(const RootSystem& rs, const TTable& T, int k);

/// sigma_k^-1 = r^-2 (sigma_k + (r^2-1) I - (t r^4)^-1 Q) with
/// Q = sigma_k^2 + (r^2-1) sigma_k - r^2 I.
RepMatrix sigma_inverse(const RootSystem& rs, const TTable& T, int k);

/// Root system, T-table and cached sparse generators together.
class Representation {
 public:
  explicit Representation(RootSystem rs);
  Representation(RootSystem rs, TTable T);

  const RootSystem& roots() const { return rs_; }
  const TTable& table() const { return T_; }
  int size() const { return rs_.size(); }

  const SparseColumns<LaurentPoly>& generator(int letter) const;
  RepMatrix sigma(int k) const { return generator(k).to_dense(); }

  /// rho(w) = product of sigma_{|letter|}^{+/-1} left to right; [] -> identity.
  RepMatrix rho(const SignedWord& word) const;
  /// rho(prefix) * sigma_letter.
  RepMatrix extend(const RepMatrix& prefix, int letter) const { return multiply(prefix, generator(letter)); }

 private:
  RootSystem rs_;
  TTable T_;
  std::vector<SparseColumns<LaurentPoly>> positive_, negative_;
};

RepMatrix rho_word(const Representation& rep, const SignedWord& word);

struct RelationCheck {
  int i = 0, j = 0;
  bool tau_only = false;
  bool pass = true;
  /// First differing entry (row, column) on failure.
  int witness_row = -1, witness_col = -1;
};

/// Braid relations for every generator pair, for sigma and for tau alone.
std::vector<RelationCheck> verify_braid_relations(const RootSystem& rs, const TTable& T);

/// det(sigma_k) by fraction-free elimination.
LaurentPoly determinant_sigma(const RootSystem& rs, const TTable& T, int k);
/// (-1)^c t r^(4+2c), c = #{beta : (alpha_k, beta) = -1}.
LaurentPoly expected_determinant(const RootSystem& rs, int k);

struct MonomialFactorization {
  LaurentPoly scalar;
  /// perm[beta] = gamma with rho(Delta) x_beta = scalar * x_gamma.
  std::vector<int> perm;
};

/// rho(b(w0)) = scalar * permutation matrix. Throws NotMonomialMatrix.
MonomialFactorization rho_longest(const Representation& rep);
/// e + 3 for the type: 2(n+1), 4(n-1), 24, 36, 60.
int longest_exponent(const TypeSpec& spec);
/// The permutation beta -> -w0(beta).
std::vector<int> minus_w0_permutation(const RootSystem& rs);

/// The r-only matrix U with sigma_k U bar(sigma_k) = U. Throws AmbiguousRule
/// when two admissible k give different entries.
RepMatrix build_U_matrix(const RootSystem& rs, const TTable& T);

struct UCheck {
  int k = 0;
  bool pass = true;
  int witness_row = -1, witness_col = -1;
};
std::vector<UCheck> verify_U_identity(const Representation& rep, const RepMatrix& U);

struct ConeViolation {
  int row, col;
  std::string reason;
};

struct ConeReport {
  bool pass = true;
  std::vector<ConeViolation> violations;
};

/// Evaluates rho(word) at r = r0 and checks every entry lies in R>=0 + tR[t].
/// The word must be positive (throws NegativeLetter).
ConeReport cone_check(const Representation& rep, const PositiveWord& word, const Rational& r0);

/// Entry in R>=0 + tR[t].
bool in_cone(const TPoly& p);

/// Every defining equation for T whose side conditions hold, checked by substitution.
/// Returns human-readable descriptions of violations.
std::vector<std::string> check_table_equations(const RootSystem& rs, const TTable& T);

/// Structural properties of the solution: anchor values, vanishing off the
/// support, r-degree 3 + ht, divisibility by r^2 - 1, the (alpha_k,beta) = 1
/// closed form and the equal-coefficient rule. Returns violations.
std::vector<std::string> check_structural_properties(const RootSystem& rs, const TTable& T);

/// Whether sigma_k^2 + (r^2-1) sigma_k - r^2 I has all columns in the span of x_{alpha_k}.
bool quadratic_relation_rank_one(const Representation& rep, int k);

}  // namespace lk

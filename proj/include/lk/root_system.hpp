#pragma once

#include "lk/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lk {

enum class Family { A, D, E };

struct TypeSpec {
  Family family;
  int rank;

  /// Throws InvalidType unless A_n (n>=1), D_n (n>=4) or E_6..E_8.
  void validate() const;
  std::string name() const;
  static TypeSpec parse(const std::string& family, int rank);
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

/// Coefficients of a root with respect to the simple roots.
using Root = std::vector<int>;

/// Bitset over positive-root indices.
using RootSet = boost::dynamic_bitset<>;

/// A root +/- roots[index].
struct SignedRoot {
  int index;
  bool negative;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// Positive roots of a simply laced finite type, in the simple-root basis.
///
/// Simple indices are 1-based (Bourbaki numbering) in every public function;
/// root indices are 0-based positions in roots(), which is also the matrix
/// basis order. Simple root alpha_k sits at index k-1.
class RootSystem {
 public:
  static RootSystem build(TypeSpec spec);

  const TypeSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int index) const { return roots_[static_cast<std::size_t>(index)]; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int height(int index) const { return heights_[static_cast<std::size_t>(index)]; }
  bool in_support(int k, int index) const { return root(index)[static_cast<std::size_t>(k - 1)] != 0; }
  int simple_index(int k) const { return k - 1; }
  bool adjacent(int k, int l) const { return cartan_[k - 1][l - 1] == -1; }

  std::optional<int> find(const Root& coords) const;
  /// Index of a positive root; throws UnknownRoot.
  int index_of(const Root& coords) const;

  /// Pairing of two positive roots by index.
  int inner(int beta, int gamma) const { return inner_[static_cast<std::size_t>(beta * size() + gamma)]; }
  /// (alpha_k, beta).
  int inner_simple(int k, int beta) const { return inner(k - 1, beta); }
  /// Pairing of arbitrary roots (negative allowed); throws UnknownRoot.
  int inner(const Root& beta, const Root& gamma) const;

  /// Index of beta + alpha_k, or -1 when it is not a positive root.
  int plus_simple(int beta, int k) const { return plus_[static_cast<std::size_t>((k - 1) * size() + beta)]; }
  /// Index of beta - alpha_k, or -1.
  int minus_simple(int beta, int k) const { return minus_[static_cast<std::size_t>((k - 1) * size() + beta)]; }
  /// Index of beta + gamma, or -1.
  int sum(int beta, int gamma) const { return sum_[static_cast<std::size_t>(beta * size() + gamma)]; }

  /// r_k(beta) = beta - (alpha_k, beta) alpha_k.
  SignedRoot reflect(int k, int beta) const { return reflect_[static_cast<std::size_t>((k - 1) * size() + beta)]; }

  /// gamma <= beta: beta - gamma is a nonnegative combination of simple roots.
  bool root_leq(int gamma, int beta) const;

  /// Simple indices adjacent to k in the diagram, ascending.
  const std::vector<int>& neighbours(int k) const { return neighbours_[static_cast<std::size_t>(k - 1)]; }

  RootSet empty_set() const { return RootSet(static_cast<std::size_t>(size())); }
  RootSet full_set() const { return ~empty_set(); }

 private:
  TypeSpec spec_{Family::A, 1};
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<int> heights_;
  std::map<Root, int> index_;
  std::vector<int> inner_, plus_, minus_, sum_;
  std::vector<SignedRoot> reflect_;
  std::vector<std::vector<int>> neighbours_;
};

std::vector<std::vector<int>> cartan_matrix(TypeSpec spec);

/// Element of W, stored as its signed action on the positive roots.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  /// r_{w_1} r_{w_2} ... r_{w_m}; letters are 1-based simple indices.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);

  /// w(beta) for a positive root beta.
  SignedRoot apply(int beta) const { return images_[static_cast<std::size_t>(beta)]; }
  const std::vector<SignedRoot>& images() const { return images_; }

  /// |Phi_w| = l(w).
  int length() const;
  /// Phi_w = {alpha > 0 : w^-1 alpha < 0}.
  RootSet inversion_set() const;

  WeylElement times_simple(const RootSystem& rs, int k) const;  // w r_k
  WeylElement simple_times(const RootSystem& rs, int k) const;  // r_k w
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;

  /// Lexicographically smallest reduced word.
  std::vector<int> reduced_word(const RootSystem& rs) const;
  bool is_identity() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.key() < b.key(); }

 private:
  std::vector<int> key() const;
  std::vector<SignedRoot> images_;
};

RootSet inversion_set(const RootSystem& rs, const WeylElement& w);

bool is_closed(const RootSystem& rs, const RootSet& set);

/// The w with Phi_w the largest inversion set inside a closed set (the map g).
/// Throws NotClosed.
WeylElement max_inversion_subset(const RootSystem& rs, const RootSet& set);

/// v <= w in the prefix (weak) order, decided by Phi_v subset of Phi_w.
bool weak_order_leq(const RootSystem& rs, const WeylElement& v, const WeylElement& w);

/// All closed subsets, in increasing bitmask order. Throws TooLarge when the
/// root count exceeds max_roots.
std::vector<RootSet> enumerate_closed_sets(const RootSystem& rs, int max_roots = 12);

WeylElement longest_element(const RootSystem& rs);

/// |W| from the type: (n+1)!, 2^(n-1) n!, 51840, 2903040, 696729600.
long weyl_group_order(const TypeSpec& spec);

/// Every element of W, sorted. Throws TooLarge past the budget.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long max_elements);

std::string format_root(const Root& root);
std::string format_set(const RootSystem& rs, const RootSet& set);

}  // namespace lk

#include "lk/lk_rep.hpp"

#include <algorithm>
#include <sstream>

namespace lk {

namespace {

const LaurentPoly& r_poly() {
  static const LaurentPoly r = LaurentPoly::r();
  return r;
}

// r - r^-1
const LaurentPoly& r_minus_rinv() {
  static const LaurentPoly p = LaurentPoly::r() - LaurentPoly::r(-1);
  return p;
}

// r^(ht+1) (r^2 - 1)
LaurentPoly height_factor(int ht) { return LaurentPoly::r(ht + 3) - LaurentPoly::r(ht + 1); }

// 1 - r^-e
LaurentPoly one_minus_rinv(int e) { return LaurentPoly(1) - LaurentPoly::r(-e); }

std::string describe(const RootSystem& rs, int k, int beta) {
  return "(k=" + std::to_string(k) + ", beta=" + format_root(rs.root(beta)) + ")";
}

template <typename Pred>
std::vector<int> simple_indices(const RootSystem& rs, Pred pred) {
  std::vector<int> out;
  for (int l = 1; l <= rs.rank(); ++l)
    if (pred(l)) out.push_back(l);
  return out;
}

int pick(const std::vector<int>& candidates, TieBreak tie) {
  return tie == TieBreak::Smallest ? candidates.front() : candidates.back();
}

}  // namespace

// ------------------------------------------------------------------ solvers

TTable solve_T(const RootSystem& rs, TieBreak tie) {
  TTable T(rs.rank(), rs.size());
  const LaurentPoly r4 = LaurentPoly::r(4);
  const LaurentPoly r5_r3 = LaurentPoly::r(5) - LaurentPoly::r(3);
  for (int beta = 0; beta < rs.size(); ++beta) {
    const int ht = rs.height(beta);
    for (int k = 1; k <= rs.rank(); ++k) {
      if (!rs.in_support(k, beta)) continue;  // stays zero
      if (ht == 1) {
        T(k, beta) = r4;
        continue;
      }
      if (ht == 2) {
        T(k, beta) = r5_r3;
        continue;
      }
      // A non-neighbour l with (alpha_l, beta) = 1.
      auto far = simple_indices(rs, [&](int l) { return l != k && !rs.adjacent(k, l) && rs.inner_simple(l, beta) == 1; });
      if (!far.empty()) {
        int l = pick(far, tie);
        T(k, beta) = r_poly() * T(k, rs.minus_simple(beta, l));
        continue;
      }
      auto near = simple_indices(rs, [&](int l) { return rs.adjacent(k, l) && rs.inner_simple(l, beta) == 1; });
      const int ip = rs.inner_simple(k, beta);
      if (!near.empty()) {
        int l = pick(near, tie);
        int lower = rs.minus_simple(beta, l);
        if (ip == 0) {
          int delta = rs.minus_simple(lower, k);
          if (delta < 0) throw InconsistentSystem("missing beta - alpha_k - alpha_l at " + describe(rs, k, beta));
          T(k, beta) = T(l, delta) + r_minus_rinv() * T(k, lower);
        } else if (ip == -1) {
          T(k, beta) = LaurentPoly::r(-1) * T(l, lower) + r_minus_rinv() * T(k, lower);
        } else {
          throw InconsistentSystem("unexpected (alpha_k, beta) = " + std::to_string(ip) + " at " + describe(rs, k, beta));
        }
        continue;
      }
      // Only alpha_k pairs to 1 with beta; use a neighbour orthogonal to beta.
      auto flat = simple_indices(rs, [&](int l) { return rs.adjacent(k, l) && rs.inner_simple(l, beta) == 0; });
      if (ip != 1 || flat.empty()) throw InconsistentSystem("no rule applies at " + describe(rs, k, beta));
      int l = pick(flat, tie);
      T(k, beta) = r_poly() * T(l, rs.minus_simple(beta, k));
    }
  }
  return T;
}

ClosedFormSolution solve_T_closed_form(const RootSystem& rs) {
  ClosedFormSolution out{TTable(rs.rank(), rs.size()), ExponentTable(rs.rank(), rs.size())};
  auto& T = out.table;
  auto& E = out.exponents;
  for (int beta = 0; beta < rs.size(); ++beta) {
    const int ht = rs.height(beta);
    // The c/d rules read a-exponents at the same root, so fill those first.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 1; k <= rs.rank(); ++k) {
        if (!rs.in_support(k, beta)) continue;
        const int ip = rs.inner_simple(k, beta);
        if ((pass == 0) == (ip == -1)) continue;
        if (ip == 2) {
          T(k, beta) = LaurentPoly::r(4);
          continue;
        }
        if (ip == 1) {
          T(k, beta) = height_factor(ht);
          continue;
        }
        auto raising = simple_indices(rs, [&](int l) { return rs.inner_simple(l, beta) == 1; });
        bool found = false;
        if (ip == 0) {
          for (int l : raising) {
            int lower = rs.minus_simple(beta, l);
            if (!rs.adjacent(k, l)) {
              E(k, beta).a = E(k, lower).a;
            } else {
              int delta = rs.minus_simple(lower, k);
              if (delta < 0) continue;
              E(k, beta).a = E(l, delta).a + 2;
            }
            found = true;
            break;
          }
          if (!found) throw RuleNotApplicable("no exponent rule for a at " + describe(rs, k, beta));
          T(k, beta) = height_factor(ht) * one_minus_rinv(E(k, beta).a);
          continue;
        }
        int c = 0, d = 0;
        for (int l : raising) {
          int lower = rs.minus_simple(beta, l);
          if (!rs.adjacent(k, l)) {
            c = E(k, lower).c;
            d = E(k, lower).d;
            found = true;
            break;
          }
          // Match one member of {c_l, d_l} against a_k at beta - alpha_l.
          const int ak = E(k, lower).a;
          const auto& el = E(l, lower);
          if (!rs.in_support(l, lower)) {
            // T_{l, beta - alpha_l} = 0: the factor 1 - r^0 vanishes and d_l is free.
            c = ak;
            d = 2;
          } else if (el.d == ak) {
            c = ak;
            d = el.c + 2;
          } else if (el.c == ak) {
            c = ak;
            d = el.d + 2;
          } else {
            continue;
          }
          found = true;
          break;
        }
        if (!found) {
          for (int l : rs.neighbours(k)) {
            for (int m : rs.neighbours(k)) {
              if (m == l || rs.inner_simple(l, beta) != 0 || rs.inner_simple(m, beta) != 0) continue;
              c = E(l, beta).a;
              d = E(m, beta).a;
              found = true;
              break;
            }
            if (found) break;
          }
        }
        if (!found) throw RuleNotApplicable("no exponent rule for c, d at " + describe(rs, k, beta));
        if (c > d) std::swap(c, d);
        E(k, beta).c = c;
        E(k, beta).d = d;
        T(k, beta) = height_factor(ht) * one_minus_rinv(c) * one_minus_rinv(d);
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------ matrices

SparseColumns<LaurentPoly> tau_sparse(const RootSystem& rs, int k) {
  SparseColumns<LaurentPoly> s(rs.size());
  const LaurentPoly one_minus_r2 = LaurentPoly(1) - LaurentPoly::r(2);
  for (int beta = 0; beta < rs.size(); ++beta) {
    switch (rs.inner_simple(k, beta)) {
      case 2:
        break;
      case 1:
        s.push(rs.minus_simple(beta, k), beta, r_poly());
        break;
      case 0:
        s.push(beta, beta, LaurentPoly(1));
        break;
      case -1:
        s.push(beta, beta, one_minus_r2);
        s.push(rs.plus_simple(beta, k), beta, r_poly());
        break;
      default:
        throw InconsistentSystem("inner product out of range");
    }
  }
  return s;
}

RepMatrix tau(const RootSystem& rs, int k) { return tau_sparse(rs, k).to_dense(); }

SparseColumns<LaurentPoly> sigma_sparse(const RootSystem& rs, const TTable& T, int k) {
  SparseColumns<LaurentPoly> s = tau_sparse(rs, k);
  // tau_k never has an entry in row alpha_k, so the rank-one part does not collide.
  const LaurentPoly t = LaurentPoly::t();
  for (int beta = 0; beta < rs.size(); ++beta)
    if (!T(k, beta).is_zero()) s.push(rs.simple_index(k), beta, t * T(k, beta));
  return s;
}

RepMatrix sigma(const RootSystem& rs, const TTable& T, int k) { return sigma_sparse(rs, T, k).to_dense(); }

RepMatrix sigma_inverse(const RootSystem& rs, const TTable& T, int k) {
  const auto sparse = sigma_sparse(rs, T, k);
  const RepMatrix s = sparse.to_dense();
  const RepMatrix id = identity<LaurentPoly>(rs.size());
  const LaurentPoly r2 = LaurentPoly::r(2);
  const LaurentPoly r2_minus_1 = r2 - LaurentPoly(1);
  RepMatrix q = multiply(s, sparse) + s * r2_minus_1 - id * r2;
  RepMatrix inv = (s + id * r2_minus_1 - q * LaurentPoly::monomial(1, -4, -1)) * LaurentPoly::r(-2);
  return inv;
}

Representation::Representation(RootSystem rs) : Representation(rs, solve_T(rs)) {}

Representation::Representation(RootSystem rs, TTable T) : rs_(std::move(rs)), T_(std::move(T)) {
  for (int k = 1; k <= rs_.rank(); ++k) {
    positive_.push_back(sigma_sparse(rs_, T_, k));
    negative_.push_back(SparseColumns<LaurentPoly>::from_dense(sigma_inverse(rs_, T_, k)));
  }
}

const SparseColumns<LaurentPoly>& Representation::generator(int letter) const {
  if (letter == 0 || letter > rs_.rank() || letter < -rs_.rank())
    throw std::out_of_range("generator index out of range: " + std::to_string(letter));
  return letter > 0 ? positive_[static_cast<std::size_t>(letter - 1)]
                    : negative_[static_cast<std::size_t>(-letter - 1)];
}

RepMatrix Representation::rho(const SignedWord& word) const {
  if (word.empty()) return identity<LaurentPoly>(size());
  RepMatrix m = generator(word.front()).to_dense();
  for (std::size_t i = 1; i < word.size(); ++i) m = multiply(m, generator(word[i]));
  return m;
}

RepMatrix rho_word(const Representation& rep, const SignedWord& word) { return rep.rho(word); }

// ------------------------------------------------------------------ checks

std::vector<RelationCheck> verify_braid_relations(const RootSystem& rs, const TTable& T) {
  std::vector<RelationCheck> out;
  for (int pass = 0; pass < 2; ++pass) {
    const bool tau_only = pass == 1;
    std::vector<SparseColumns<LaurentPoly>> gens;
    for (int k = 1; k <= rs.rank(); ++k) gens.push_back(tau_only ? tau_sparse(rs, k) : sigma_sparse(rs, T, k));
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = i + 1; j <= rs.rank(); ++j) {
        const int len = rs.adjacent(i, j) ? 3 : 2;
        auto alternate = [&](int first, int second) {
          RepMatrix m = gens[first - 1].to_dense();
          for (int step = 1; step < len; ++step) m = multiply(m, gens[(step % 2 ? second : first) - 1]);
          return m;
        };
        RepMatrix lhs = alternate(i, j);
        RepMatrix rhs = alternate(j, i);
        RelationCheck check{i, j, tau_only, true, -1, -1};
        auto [row, col] = first_difference(lhs, rhs);
        if (row >= 0) {
          check.pass = false;
          check.witness_row = static_cast<int>(row);
          check.witness_col = static_cast<int>(col);
        }
        out.push_back(check);
      }
  }
  return out;
}

LaurentPoly determinant_sigma(const RootSystem& rs, const TTable& T, int k) { return determinant(sigma(rs, T, k)); }

LaurentPoly expected_determinant(const RootSystem& rs, int k) {
  int c = 0;
  for (int beta = 0; beta < rs.size(); ++beta)
    if (rs.inner_simple(k, beta) == -1) ++c;
  return LaurentPoly::monomial(c % 2 ? -1 : 1, 4 + 2 * c, 1);
}

int longest_exponent(const TypeSpec& spec) {
  switch (spec.family) {
    case Family::A: return 2 * (spec.rank + 1);
    case Family::D: return 4 * (spec.rank - 1);
    case Family::E: return spec.rank == 6 ? 24 : spec.rank == 7 ? 36 : 60;
  }
  return 0;
}

std::vector<int> minus_w0_permutation(const RootSystem& rs) {
  const WeylElement w0 = longest_element(rs);
  std::vector<int> perm(static_cast<std::size_t>(rs.size()));
  for (int beta = 0; beta < rs.size(); ++beta) perm[beta] = w0.apply(beta).index;
  return perm;
}

MonomialFactorization rho_longest(const Representation& rep) {
  const RootSystem& rs = rep.roots();
  const auto word = longest_element(rs).reduced_word(rs);
  const RepMatrix m = rep.rho(word);
  MonomialFactorization out;
  out.perm.assign(static_cast<std::size_t>(rs.size()), -1);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      if (m(row, col).is_zero()) continue;
      if (out.perm[col] >= 0)
        throw NotMonomialMatrix("column " + std::to_string(col) + " has more than one nonzero entry");
      out.perm[col] = static_cast<int>(row);
      if (col == 0) out.scalar = m(row, col);
      else if (!(m(row, col) == out.scalar))
        throw NotMonomialMatrix("column " + std::to_string(col) + " carries " + to_string(m(row, col)));
    }
    if (out.perm[col] < 0) throw NotMonomialMatrix("column " + std::to_string(col) + " is zero");
  }
  return out;
}

RepMatrix build_U_matrix(const RootSystem& rs, const TTable& T) {
  const int n = rs.size();
  RepMatrix U = RepMatrix::Constant(n, n, LaurentPoly());
  const LaurentPoly rinv = LaurentPoly::r(-1);
  const LaurentPoly rinv_minus_r = LaurentPoly::r(-1) - LaurentPoly::r();
  const LaurentPoly r4 = LaurentPoly::r(4);
  for (int beta = 0; beta < n; ++beta) {
    if (rs.height(beta) == 1) {
      U(beta, beta) = LaurentPoly(1);
      continue;
    }
    auto ks = simple_indices(rs, [&](int k) { return rs.inner_simple(k, beta) == 1; });
    if (ks.empty()) throw InconsistentSystem("no simple root pairs to 1 with " + format_root(rs.root(beta)));
    std::optional<Vector<LaurentPoly>> chosen;
    int chosen_k = 0;
    for (int k : ks) {
      const int lower = rs.minus_simple(beta, k);
      Vector<LaurentPoly> column = Vector<LaurentPoly>::Constant(n, LaurentPoly());
      for (int gamma = 0; gamma < n; ++gamma) {
        if (!rs.root_leq(gamma, beta)) continue;
        if (gamma == beta) {
          column(gamma) = LaurentPoly(1);
          continue;
        }
        if (gamma == rs.simple_index(k)) {
          column(gamma) = bar_involution(T(k, beta)) * r4;
          continue;
        }
        switch (rs.inner_simple(k, gamma)) {
          case 1:
            column(gamma) = U(rs.minus_simple(gamma, k), lower);
            break;
          case 0:
            column(gamma) = rinv * U(gamma, lower);
            break;
          case -1:
            column(gamma) = U(rs.plus_simple(gamma, k), lower) + rinv_minus_r * U(gamma, lower);
            break;
          default:
            throw InconsistentSystem("unexpected pairing in U recursion");
        }
      }
      if (!chosen) {
        chosen = std::move(column);
        chosen_k = k;
      } else if (!(*chosen == column)) {
        throw AmbiguousRule("U column " + format_root(rs.root(beta)) + " differs between k=" +
                            std::to_string(chosen_k) + " and k=" + std::to_string(k));
      }
    }
    U.col(beta) = *chosen;
  }
  return U;
}

std::vector<UCheck> verify_U_identity(const Representation& rep, const RepMatrix& U) {
  std::vector<UCheck> out;
  for (int k = 1; k <= rep.roots().rank(); ++k) {
    const auto& s = rep.generator(k);
    auto s_bar = s.map([](const LaurentPoly& p) { return bar_involution(p); });
    RepMatrix product = multiply(multiply(s, U), s_bar);
    UCheck check{k, true, -1, -1};
    auto [row, col] = first_difference(product, U);
    if (row >= 0) {
      check.pass = false;
      check.witness_row = static_cast<int>(row);
      check.witness_col = static_cast<int>(col);
    }
    out.push_back(check);
  }
  return out;
}

bool in_cone(const TPoly& p) {
  if (p.is_zero()) return true;
  const auto& lowest = p.terms().front();
  if (lowest.exp < 0) return false;
  return lowest.exp > 0 || lowest.coeff > 0;
}

ConeReport cone_check(const Representation& rep, const PositiveWord& word, const Rational& r0) {
  for (int letter : word)
    if (letter < 0) throw NegativeLetter("cone check needs a positive word");
  const SpecMatrix m = eval_r(rep.rho(word), r0);
  ConeReport report;
  for (Eigen::Index col = 0; col < m.cols(); ++col)
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      const TPoly& p = m(row, col);
      if (p.is_zero()) continue;
      if (p.terms().front().exp < 0) {
        report.violations.push_back({static_cast<int>(row), static_cast<int>(col), "negative power of t"});
      } else if (p.coeff(0) < 0) {
        report.violations.push_back({static_cast<int>(row), static_cast<int>(col), "negative constant term"});
      }
    }
  report.pass = report.violations.empty();
  return report;
}

std::vector<std::string> check_table_equations(const RootSystem& rs, const TTable& T) {
  std::vector<std::string> bad;
  const LaurentPoly r4 = LaurentPoly::r(4);
  const LaurentPoly r5_r3 = LaurentPoly::r(5) - LaurentPoly::r(3);
  auto expect = [&](bool ok, const char* row, int k, int l, int beta) {
    if (!ok) bad.push_back(std::string(row) + " fails at " + describe(rs, k, beta) + " l=" + std::to_string(l));
  };
  for (int beta = 0; beta < rs.size(); ++beta)
    for (int k = 1; k <= rs.rank(); ++k)
      for (int l = 1; l <= rs.rank(); ++l) {
        const int kb = rs.inner_simple(k, beta);
        const int lb = rs.inner_simple(l, beta);
        const int kl = rs.cartan()[k - 1][l - 1];
        if (k != l && beta == rs.simple_index(l)) expect(T(k, beta).is_zero(), "T_{k,alpha_l} = 0", k, l, beta);
        if (k == l && beta == rs.simple_index(k)) expect(T(k, beta) == r4, "T_{k,alpha_k} = r^4", k, l, beta);
        if (kl == -1 && rs.height(beta) == 2 && rs.in_support(k, beta) && rs.in_support(l, beta))
          expect(T(k, beta) == r5_r3, "T_{k,alpha_k+alpha_l} = r^5 - r^3", k, l, beta);
        if (k == l) continue;
        if (lb == 1 && kl == 0)
          expect(T(k, beta) == r_poly() * T(k, rs.minus_simple(beta, l)), "commuting rule", k, l, beta);
        if (kl == -1 && kb == 0 && lb == 1) {
          int lower = rs.minus_simple(beta, l);
          int delta = rs.minus_simple(lower, k);
          LaurentPoly rhs = r_minus_rinv() * T(k, lower);
          if (delta >= 0) rhs += T(l, delta);
          expect(T(k, beta) == rhs, "(0,1) rule", k, l, beta);
        }
        if (kl == -1 && kb == -1 && lb == 1) {
          int lower = rs.minus_simple(beta, l);
          expect(T(k, beta) == LaurentPoly::r(-1) * T(l, lower) + r_minus_rinv() * T(k, lower), "(-1,1) rule", k, l,
                 beta);
        }
        if (kl == -1 && kb == 1 && lb == 0)
          expect(T(k, beta) == r_poly() * T(l, rs.minus_simple(beta, k)), "(1,0) rule", k, l, beta);
      }
  return bad;
}

std::vector<std::string> check_structural_properties(const RootSystem& rs, const TTable& T) {
  std::vector<std::string> bad;
  const LaurentPoly r2_minus_1 = LaurentPoly::r(2) - LaurentPoly(1);
  for (int beta = 0; beta < rs.size(); ++beta)
    for (int k = 1; k <= rs.rank(); ++k) {
      const LaurentPoly& p = T(k, beta);
      const std::string where = describe(rs, k, beta);
      if (!rs.in_support(k, beta)) {
        if (!p.is_zero()) bad.push_back("nonzero off the support at " + where);
        continue;
      }
      if (p.is_zero()) {
        bad.push_back("zero on the support at " + where);
        continue;
      }
      auto [tlo, thi] = t_degree_range(p);
      auto [rlo, rhi] = r_degree_range(p);
      if (tlo != 0 || thi != 0 || rlo < 0) bad.push_back("not in Z[r] at " + where);
      if (rhi != 3 + rs.height(beta)) bad.push_back("r-degree " + std::to_string(rhi) + " != 3 + ht at " + where);
      if (beta != rs.simple_index(k)) {
        try {
          (void)exact_divide(p, r2_minus_1);
        } catch (const NotDivisible&) {
          bad.push_back("not divisible by r^2 - 1 at " + where);
        }
      }
      if (rs.inner_simple(k, beta) == 1 && !(p == height_factor(rs.height(beta))))
        bad.push_back("(alpha_k,beta) = 1 closed form fails at " + where);
      for (int l : rs.neighbours(k))
        if (rs.inner_simple(k, beta) == 0 && rs.inner_simple(l, beta) == 0 && !(p == T(l, beta)))
          bad.push_back("equal-coefficient rule fails at " + where + " l=" + std::to_string(l));
    }
  return bad;
}

bool quadratic_relation_rank_one(const Representation& rep, int k) {
  const auto& sparse = rep.generator(k);
  const RepMatrix s = sparse.to_dense();
  const int n = rep.size();
  const LaurentPoly r2 = LaurentPoly::r(2);
  RepMatrix q = multiply(s, sparse) + s * (r2 - LaurentPoly(1)) - identity<LaurentPoly>(n) * r2;
  const int row_k = rep.roots().simple_index(k);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row)
      if (row != row_k && !q(row, col).is_zero()) return false;
  return true;
}

}  // namespace lk

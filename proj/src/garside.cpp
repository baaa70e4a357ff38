#include "lk/garside.hpp"

#include <numeric>

namespace lk {

PositiveWord b_embed(const RootSystem& rs, const WeylElement& w) { return w.reduced_word(rs); }

RootSet star_act(const RootSystem& rs, int k, const RootSet& set) {
  if (!is_closed(rs, set)) throw NotClosed("star action on a set that is not closed: " + format_set(rs, set));
  RootSet out = rs.empty_set();
  out.set(static_cast<std::size_t>(rs.simple_index(k)));
  auto in = [&](int beta) { return beta >= 0 && set.test(static_cast<std::size_t>(beta)); };
  for (int beta = 0; beta < rs.size(); ++beta) {
    bool member = false;
    switch (rs.inner_simple(k, beta)) {
      case 1: member = in(rs.minus_simple(beta, k)); break;
      case 0: member = in(beta); break;
      case -1: member = in(beta) && in(rs.plus_simple(beta, k)); break;
      default: break;
    }
    if (member) out.set(static_cast<std::size_t>(beta));
  }
  return out;
}

RootSet star_act_word(const RootSystem& rs, const PositiveWord& x, const RootSet& set) {
  RootSet out = set;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    if (*it < 1) throw NegativeLetter("star action needs a positive word");
    out = star_act(rs, *it, out);
  }
  return out;
}

WeylElement head_L(const RootSystem& rs, const PositiveWord& x) {
  return max_inversion_subset(rs, star_act_word(rs, x, rs.empty_set()));
}

RootSet classify_cone(const RootSystem& rs, const ConeVector& v) {
  RootSet out = rs.empty_set();
  for (int beta = 0; beta < rs.size(); ++beta) {
    const TPoly& p = v(beta);
    if (!p.is_zero() && p.terms().front().exp < 0)
      throw NotInCone("coordinate " + format_root(rs.root(beta)) + " has a negative power of t");
    const Rational c = p.coeff(0);
    if (c < 0) throw NotInCone("coordinate " + format_root(rs.root(beta)) + " has a negative constant term");
    if (c == 0) out.set(static_cast<std::size_t>(beta));
  }
  return out;
}

ConeVector generic_cone_vector(const RootSystem& rs, const RootSet& set) {
  ConeVector v(rs.size());
  for (int beta = 0; beta < rs.size(); ++beta)
    v(beta) = set.test(static_cast<std::size_t>(beta)) ? TPoly(Rational(1), 1) : TPoly(1);
  return v;
}

ConeVector act_on_cone(const Representation& rep, const PositiveWord& x, const ConeVector& v, const Rational& r0) {
  for (int letter : x)
    if (letter < 1) throw NegativeLetter("cone action needs a positive word");
  ConeVector out = v;
  // Apply the last letter first: rho(x) v = sigma_{x_1}(... sigma_{x_m} v).
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    auto gen = rep.generator(*it).map([&](const LaurentPoly& p) { return eval_r(p, r0); });
    ConeVector next = ConeVector::Constant(out.size(), TPoly());
    for (Eigen::Index col = 0; col < out.size(); ++col) {
      if (out(col).is_zero()) continue;
      for (const auto& e : gen.column(col)) next(e.row) += e.value * out(col);
    }
    out = std::move(next);
  }
  return out;
}

WeylElement faithfulness_probe(const Representation& rep, const PositiveWord& x, const Rational& r0) {
  const RootSystem& rs = rep.roots();
  ConeVector image = act_on_cone(rep, x, generic_cone_vector(rs, rs.empty_set()), r0);
  return max_inversion_subset(rs, classify_cone(rs, image));
}

WordClasses word_equiv_oracle(const RootSystem& rs, int len, long max_words) {
  const int n = rs.rank();
  long total = 0;
  long layer = 1;
  for (int l = 0; l <= len; ++l) {
    total += layer;
    if (total > max_words)
      throw BudgetExceeded(std::to_string(n) + " letters up to length " + std::to_string(len) + " exceeds " +
                           std::to_string(max_words) + " words");
    layer *= n;
  }

  WordClasses out;
  for (int l = 0; l <= len; ++l) {
    // Words of length l in lexicographic order; code = base-n digits.
    long count = 1;
    for (int i = 0; i < l; ++i) count *= n;
    std::vector<long> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0L);
    auto root = [&](long a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    auto decode = [&](long code) {
      PositiveWord w(static_cast<std::size_t>(l));
      for (int i = l - 1; i >= 0; --i) {
        w[i] = static_cast<int>(code % n) + 1;
        code /= n;
      }
      return w;
    };
    auto encode = [&](const PositiveWord& w) {
      long code = 0;
      for (int letter : w) code = code * n + (letter - 1);
      return code;
    };
    for (long code = 0; code < count; ++code) {
      const PositiveWord w = decode(code);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const int m = rs.adjacent(i, j) ? 3 : 2;
          for (int p = 0; p + m <= l; ++p) {
            bool match = true;
            for (int q = 0; q < m && match; ++q) match = w[p + q] == (q % 2 == 0 ? i : j);
            if (!match) continue;
            PositiveWord v = w;
            for (int q = 0; q < m; ++q) v[p + q] = q % 2 == 0 ? j : i;
            long a = root(code), b = root(encode(v));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
    }
    std::map<long, int> ids;
    for (long code = 0; code < count; ++code) {
      auto [it, fresh] = ids.emplace(root(code), out.class_count);
      if (fresh) ++out.class_count;
      out.words.push_back(decode(code));
      out.class_of.push_back(it->second);
    }
  }
  return out;
}

std::pair<int, int> matrix_t_range(const RepMatrix& m) {
  int lo = 0, hi = 0;
  bool any = false;
  for (Eigen::Index col = 0; col < m.cols(); ++col)
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      if (m(row, col).is_zero()) continue;
      auto [a, b] = t_degree_range(m(row, col));
      lo = any ? std::min(lo, a) : a;
      hi = any ? std::max(hi, b) : b;
      any = true;
    }
  return {lo, hi};
}

int charney_length_matrix(const Representation& rep, const SignedWord& x) {
  auto [k, h] = matrix_t_range(rep.rho(x));
  return std::max({h - k, h, -k});
}

OmegaBall::OmegaBall(const Representation& rep, const Budget& budget) : rep_(&rep), budget_(budget) {
  const RootSystem& rs = rep.roots();
  for (const auto& w : enumerate_weyl(rs, budget.weyl_elements)) {
    if (w.is_identity()) continue;
    PositiveWord word = b_embed(rs, w);
    SignedWord inverse(word.rbegin(), word.rend());
    for (int& letter : inverse) letter = -letter;
    generators_.push_back(rep.rho(word));
    generators_.push_back(rep.rho(inverse));
  }
  RepMatrix id = identity<LaurentPoly>(rep.size());
  seen_.emplace(canonical_key(id), 0);
  frontier_.push_back(std::move(id));
}

void OmegaBall::grow_to(int radius) {
  while (radius_ < radius) {
    const int next = radius_ + 1;
    std::vector<RepMatrix> layer;
    for (const auto& m : frontier_)
      for (const auto& g : generators_) {
        RepMatrix product = multiply(m, g);
        if (seen_.emplace(canonical_key(product), next).second) {
          if (static_cast<long>(seen_.size()) > budget_.ball_elements)
            throw TooLarge("Charney ball exceeds " + std::to_string(budget_.ball_elements) + " elements");
          layer.push_back(std::move(product));
        }
      }
    frontier_ = std::move(layer);
    radius_ = next;
  }
}

std::optional<int> OmegaBall::distance(const RepMatrix& m) const {
  auto it = seen_.find(canonical_key(m));
  if (it == seen_.end()) return std::nullopt;
  return it->second;
}

int charney_length_bfs(OmegaBall& ball, const Representation& rep, const SignedWord& x, int maxlen) {
  const RepMatrix target = rep.rho(x);
  // Grow lazily: most queries resolve well inside maxlen.
  for (int radius = 0; radius <= maxlen; ++radius) {
    if (ball.radius() < radius) ball.grow_to(radius);
    if (auto d = ball.distance(target); d && *d <= radius) return *d;
  }
  throw NotFound("Charney length of [" + format_word(x) + "] exceeds " + std::to_string(maxlen));
}

int charney_length_bfs(const Representation& rep, const SignedWord& x, int maxlen, const Budget& budget) {
  OmegaBall ball(rep, budget);
  return charney_length_bfs(ball, rep, x, maxlen);
}

bool positive_and_not_delta_divisible(const RootSystem& rs, const PositiveWord& x) {
  for (int letter : x)
    if (letter < 1) return false;
  return !(head_L(rs, x) == longest_element(rs));
}

}  // namespace lk

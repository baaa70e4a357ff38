#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "lk/garside.hpp"

#include <algorithm>
#include <map>

using namespace lk;

namespace {

RootSystem make(const char* family, int rank) { return RootSystem::build(TypeSpec::parse(family, rank)); }

RootSet set_of(const RootSystem& rs, std::initializer_list<Root> roots) {
  RootSet s = rs.empty_set();
  for (const auto& r : roots) s.set(rs.index_of(r));
  return s;
}

WeylElement element(const RootSystem& rs, std::vector<int> word) { return WeylElement::from_word(rs, word); }

PositiveWord concat(PositiveWord a, const PositiveWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const Rational half(1, 2);

}  // namespace

TEST_CASE("b embedding") {
  const RootSystem rs = make("A", 2);
  CHECK(b_embed(rs, WeylElement::identity(rs)).empty());
  CHECK(b_embed(rs, element(rs, {1})) == PositiveWord{1});
  CHECK(b_embed(rs, longest_element(rs)) == PositiveWord{1, 2, 1});
  CHECK(b_embed(rs, element(rs, {2, 1, 2})) == PositiveWord{1, 2, 1});
}

TEST_CASE("star action examples") {
  const RootSystem rs = make("A", 2);
  const RootSet empty = rs.empty_set();
  CHECK(star_act(rs, 1, empty) == set_of(rs, {{1, 0}}));
  CHECK(star_act(rs, 1, set_of(rs, {{1, 0}})) == set_of(rs, {{1, 0}}));
  CHECK(star_act(rs, 1, rs.full_set()) == rs.full_set());
  CHECK(star_act_word(rs, {}, set_of(rs, {{1, 1}})) == set_of(rs, {{1, 1}}));
  CHECK(star_act_word(rs, {1, 1}, empty) == set_of(rs, {{1, 0}}));
  CHECK(star_act_word(rs, {1, 2}, empty) == set_of(rs, {{1, 0}, {1, 1}}));
  CHECK_THROWS_AS(star_act(rs, 1, set_of(rs, {{1, 0}, {0, 1}})), NotClosed);
  CHECK_THROWS_AS(star_act_word(rs, {1, -2}, empty), NegativeLetter);
}

TEST_CASE("head examples") {
  const RootSystem rs = make("A", 2);
  CHECK(head_L(rs, {}).is_identity());
  CHECK(head_L(rs, {1, 2, 1}) == longest_element(rs));
  CHECK(head_L(rs, {1, 1, 2}) == element(rs, {1}));
  CHECK(head_L(rs, {2, 1, 2, 2}) == longest_element(rs));
}

TEST_CASE("head agrees with divisibility by rewriting") {
  // L(x) is the longest w such that some word equivalent to x starts with b(w).
  for (auto [rank, len] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}}) {
    const RootSystem rs = make("A", rank);
    const auto classes = word_equiv_oracle(rs, len, 100000);
    std::map<int, std::vector<const PositiveWord*>> members;
    for (std::size_t i = 0; i < classes.words.size(); ++i) members[classes.class_of[i]].push_back(&classes.words[i]);
    const auto weyl = enumerate_weyl(rs, 1000);
    for (std::size_t i = 0; i < classes.words.size(); ++i) {
      const WeylElement* best = nullptr;
      for (const auto& w : weyl) {
        const PositiveWord b = b_embed(rs, w);
        const bool divides = std::any_of(members[classes.class_of[i]].begin(), members[classes.class_of[i]].end(),
                                         [&](const PositiveWord* y) { return b.size() <= y->size() && std::equal(b.begin(), b.end(), y->begin()); });
        if (divides && (!best || w.length() > best->length())) best = &w;
      }
      REQUIRE(best != nullptr);
      CHECK(head_L(rs, classes.words[i]) == *best);
    }
  }
}

TEST_CASE("cone classification") {
  const RootSystem rs = make("A", 2);
  CHECK(classify_cone(rs, generic_cone_vector(rs, rs.empty_set())).none());
  ConeVector v = ConeVector::Constant(3, TPoly(1));
  v(0) = TPoly();
  CHECK(classify_cone(rs, v) == set_of(rs, {{1, 0}}));
  v(0) = TPoly(Rational(-1));
  CHECK_THROWS_AS(classify_cone(rs, v), NotInCone);
  v(0) = TPoly(Rational(1), -1);
  CHECK_THROWS_AS(classify_cone(rs, v), NotInCone);
  v(0) = TPoly(Rational(5), 3);
  CHECK(classify_cone(rs, v) == set_of(rs, {{1, 0}}));
  const Representation rep(rs);
  const ConeVector image = act_on_cone(rep, {1}, generic_cone_vector(rs, rs.empty_set()), half);
  CHECK(classify_cone(rs, image) == star_act(rs, 1, rs.empty_set()));
}

TEST_CASE("faithfulness probe examples") {
  const Representation rep(make("A", 2));
  const RootSystem& rs = rep.roots();
  CHECK(faithfulness_probe(rep, {1}, half) == element(rs, {1}));
  CHECK(faithfulness_probe(rep, {2}, half) == element(rs, {2}));
  CHECK(faithfulness_probe(rep, {1, 2, 1}, half) == longest_element(rs));
  CHECK(faithfulness_probe(rep, {}, half).is_identity());
}

TEST_CASE("word equivalence oracle") {
  const RootSystem a2 = make("A", 2), a3 = make("A", 3);
  auto same = [](const WordClasses& c, const PositiveWord& x, const PositiveWord& y) {
    const auto ix = std::find(c.words.begin(), c.words.end(), x) - c.words.begin();
    const auto iy = std::find(c.words.begin(), c.words.end(), y) - c.words.begin();
    return c.class_of[ix] == c.class_of[iy];
  };
  const auto c2 = word_equiv_oracle(a2, 3, 1000);
  CHECK(same(c2, {1, 2, 1}, {2, 1, 2}));
  CHECK_FALSE(same(c2, {1, 2}, {2, 1}));
  CHECK(c2.words.size() == 15);
  const auto c3 = word_equiv_oracle(a3, 2, 1000);
  CHECK(same(c3, {1, 3}, {3, 1}));
  CHECK_FALSE(same(c3, {1, 2}, {2, 1}));
  CHECK_THROWS_AS(word_equiv_oracle(a3, 8, 1000), BudgetExceeded);
}

TEST_CASE("Charney length examples") {
  const Representation rep(make("A", 2));
  OmegaBall ball(rep, Budget{});
  CHECK(ball.generator_count() == 10);
  CHECK(charney_length_matrix(rep, {1, 2, 1}) == 1);
  CHECK(matrix_t_range(rep.rho({1, 2, 1})) == std::pair{1, 1});
  CHECK(charney_length_matrix(rep, {}) == 0);
  CHECK(charney_length_bfs(ball, rep, {}, 3) == 0);
  CHECK(charney_length_matrix(rep, {1, -2}) == charney_length_bfs(ball, rep, {1, -2}, 3));
  CHECK(charney_length_bfs(ball, rep, {-1}, 3) == 1);
  // Delta squared needs two simple factors.
  CHECK(matrix_t_range(rep.rho({1, 2, 1, 1, 2, 1})) == std::pair{2, 2});
  CHECK(charney_length_matrix(rep, {1, 2, 1, 1, 2, 1}) == 2);
  CHECK(charney_length_bfs(ball, rep, {1, 2, 1, 1, 2, 1}, 3) == 2);
  for (const auto& w : enumerate_weyl(rep.roots(), 100)) {
    if (w.is_identity()) continue;
    CHECK(charney_length_bfs(ball, rep, b_embed(rep.roots(), w), 2) == 1);
    CHECK(charney_length_matrix(rep, b_embed(rep.roots(), w)) == 1);
  }
  CHECK_THROWS_AS(charney_length_bfs(ball, rep, {1, 1, 1, 1}, 2), NotFound);
  Budget tight;
  tight.weyl_elements = 5;
  CHECK_THROWS_AS(OmegaBall(rep, tight), TooLarge);
  tight = Budget{};
  tight.ball_elements = 30;
  OmegaBall small(rep, tight);
  CHECK_THROWS_AS(small.grow_to(3), TooLarge);
}

TEST_CASE("delta divisibility") {
  const RootSystem rs = make("A", 2);
  CHECK(positive_and_not_delta_divisible(rs, {1}));
  CHECK_FALSE(positive_and_not_delta_divisible(rs, {1, 2, 1}));
  CHECK(positive_and_not_delta_divisible(rs, {1, 1}));
  CHECK_FALSE(positive_and_not_delta_divisible(rs, {1, -1}));
}

TEST_CASE("equivariance of g") {
  for (auto [family, rank] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"A", 3}}) {
    const RootSystem rs = make(family, rank);
    for (const auto& a : enumerate_closed_sets(rs))
      for (int i = 1; i <= rank; ++i)
        CHECK(max_inversion_subset(rs, star_act(rs, i, a)) == head_L(rs, concat({i}, b_embed(rs, max_inversion_subset(rs, a)))));
  }
}

TEST_CASE("star action stays between alpha_k and r_k(A)") {
  for (auto [family, rank] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"A", 3}, {"D", 4}}) {
    const RootSystem rs = make(family, rank);
    for (const auto& a : enumerate_closed_sets(rs))
      for (int k = 1; k <= rank; ++k) {
        const RootSet image = star_act(rs, k, a);
        CHECK(image.test(rs.simple_index(k)));
        CHECK(is_closed(rs, image));
        RootSet bound = rs.empty_set();
        bound.set(rs.simple_index(k));
        for (int b = 0; b < rs.size(); ++b)
          if (a.test(b) && !rs.reflect(k, b).negative) bound.set(rs.reflect(k, b).index);
        CHECK(image.is_subset_of(bound));
      }
  }
}

TEST_CASE("star action is monotone") {
  testing::Gen gen(21);
  const RootSystem rs = make("A", 3);
  const auto sets = enumerate_closed_sets(rs);
  for (int i = 0; i < 300; ++i) {
    const RootSet& a = sets[gen.uniform(0, static_cast<int>(sets.size()) - 1)];
    const RootSet& d = sets[gen.uniform(0, static_cast<int>(sets.size()) - 1)];
    if (!a.is_subset_of(d)) continue;
    const PositiveWord x = gen.positive_word(3, 8);
    CHECK(star_act_word(rs, x, a).is_subset_of(star_act_word(rs, x, d)));
  }
}

TEST_CASE("star action matches the representation on the cone") {
  testing::Gen gen(31);
  for (auto [family, rank] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"A", 3}, {"D", 4}}) {
    const Representation rep(make(family, rank));
    const RootSystem& rs = rep.roots();
    const auto sets = enumerate_closed_sets(rs);
    for (int i = 0; i < 60; ++i) {
      const RootSet& a = sets[gen.uniform(0, static_cast<int>(sets.size()) - 1)];
      const PositiveWord x = gen.positive_word(rank, 6);
      CHECK(classify_cone(rs, act_on_cone(rep, x, generic_cone_vector(rs, a), half)) == star_act_word(rs, x, a));
    }
  }
}

TEST_CASE("cone pieces C_x") {
  const Representation rep(make("A", 3));
  const RootSystem& rs = rep.roots();
  // Nonempty: the vector of U_{Phi_w} lies in C_w.
  for (const auto& w : enumerate_weyl(rs, 100))
    CHECK(max_inversion_subset(rs, classify_cone(rs, generic_cone_vector(rs, inversion_set(rs, w)))) == w);
  // s_i C_y lies in C_{L(s_i y)}.
  for (const auto& a : enumerate_closed_sets(rs)) {
    const WeylElement y = max_inversion_subset(rs, a);
    for (int i = 1; i <= rs.rank(); ++i) {
      const RootSet image = classify_cone(rs, act_on_cone(rep, {i}, generic_cone_vector(rs, a), half));
      CHECK(max_inversion_subset(rs, image) == head_L(rs, concat({i}, b_embed(rs, y))));
    }
  }
}

TEST_CASE("head of a product") {
  testing::Gen gen(41);
  for (auto [family, rank] : std::vector<std::pair<const char*, int>>{{"A", 3}, {"D", 4}, {"E", 6}}) {
    const RootSystem rs = make(family, rank);
    for (int i = 0; i < 100; ++i) {
      const PositiveWord x = gen.positive_word(rank, 6), y = gen.positive_word(rank, 6);
      CHECK(head_L(rs, concat(x, y)) == head_L(rs, concat(x, b_embed(rs, head_L(rs, y)))));
    }
  }
}

TEST_CASE("faithfulness probe equals head on random words") {
  testing::Gen gen(51);
  for (auto [family, rank] : std::vector<std::pair<const char*, int>>{{"A", 4}, {"D", 4}}) {
    const Representation rep(make(family, rank));
    for (int i = 0; i < 50; ++i) {
      const PositiveWord x = gen.positive_word(rank, 10);
      CHECK(faithfulness_probe(rep, x, half) == head_L(rep.roots(), x));
    }
  }
}

TEST_CASE("positive words not divisible by Delta") {
  testing::Gen gen(61);
  const Representation rep(make("A", 2));
  OmegaBall ball(rep, Budget{});
  int tested = 0;
  for (int i = 0; i < 60; ++i) {
    const PositiveWord x = gen.positive_word(2, 5);
    if (!positive_and_not_delta_divisible(rep.roots(), x)) continue;
    ++tested;
    const auto [k, h] = matrix_t_range(rep.rho(x));
    CHECK(k == 0);
    CHECK(h == charney_length_bfs(ball, rep, x, 5));
  }
  CHECK(tested > 10);
}

TEST_CASE("budget overrides from the environment") {
  setenv("LK_BUDGET", "closed=6,weyl=5,words=100,ball=7", 1);
  const Budget b = Budget::from_env();
  unsetenv("LK_BUDGET");
  CHECK(b.closed_set_roots == 6);
  CHECK(b.weyl_elements == 5);
  CHECK(b.words == 100);
  CHECK(b.ball_elements == 7);
  CHECK(Budget::from_env().weyl_elements == Budget{}.weyl_elements);
  setenv("LK_BUDGET", "weyl=abc", 1);
  CHECK_THROWS(Budget::from_env());
  unsetenv("LK_BUDGET");
}

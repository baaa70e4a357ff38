#include "lk/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace lk {

namespace {

using Suite = std::function<void(const Representation&, const VerifyOptions&, std::vector<CheckResult>&)>;

std::string cell(long row, long col) { return "row " + std::to_string(row) + ", column " + std::to_string(col); }

std::string pair_name(const std::string& prefix, int i, int j) {
  return prefix + ":" + std::to_string(i) + "," + std::to_string(j);
}

void braid_suite(const Representation& rep, bool tau_only, std::vector<CheckResult>& out) {
  for (const auto& c : verify_braid_relations(rep.roots(), rep.table())) {
    if (c.tau_only != tau_only) continue;
    out.push_back({pair_name(tau_only ? "tau" : "braid", c.i, c.j), c.pass,
                   c.pass ? "" : cell(c.witness_row, c.witness_col), ""});
  }
}

void ttable_suite(const Representation& rep, const VerifyOptions&, std::vector<CheckResult>& out) {
  const RootSystem& rs = rep.roots();
  const TTable& T = rep.table();
  out.push_back({"ttable:tie-break", solve_T(rs, TieBreak::Largest) == T, "", ""});
  out.push_back({"ttable:closed-form", solve_T_closed_form(rs).table == T, "", ""});
  auto report = [&](const std::string& name, const std::vector<std::string>& violations) {
    out.push_back({name, violations.empty(), violations.empty() ? "" : violations.front(),
                   std::to_string(violations.size()) + " violations"});
  };
  report("ttable:equations", check_table_equations(rs, T));
  report("ttable:structure", check_structural_properties(rs, T));
}

void det_suite(const Representation& rep, const VerifyOptions&, std::vector<CheckResult>& out) {
  const RootSystem& rs = rep.roots();
  for (int k = 1; k <= rs.rank(); ++k) {
    const LaurentPoly det = determinant_sigma(rs, rep.table(), k);
    const LaurentPoly want = expected_determinant(rs, k);
    out.push_back({"det:" + std::to_string(k), det == want, det == want ? "" : "got " + to_string(det), to_string(det)});
  }
}

void w0_suite(const Representation& rep, const VerifyOptions&, std::vector<CheckResult>& out) {
  const auto f = rho_longest(rep);
  const LaurentPoly want = LaurentPoly::monomial(1, longest_exponent(rep.roots().spec()), 1);
  out.push_back({"w0:scalar", f.scalar == want, f.scalar == want ? "" : "got " + to_string(f.scalar), to_string(f.scalar)});
  const bool perm = f.perm == minus_w0_permutation(rep.roots());
  out.push_back({"w0:permutation", perm, perm ? "" : "permutation differs from -w0", ""});
}

void umatrix_suite(const Representation& rep, const VerifyOptions&, std::vector<CheckResult>& out) {
  const RepMatrix U = build_U_matrix(rep.roots(), rep.table());
  for (const auto& c : verify_U_identity(rep, U))
    out.push_back({"umatrix:" + std::to_string(c.k), c.pass, c.pass ? "" : cell(c.witness_row, c.witness_col), ""});
}

void inverse_suite(const Representation& rep, const VerifyOptions&, std::vector<CheckResult>& out) {
  for (int k = 1; k <= rep.roots().rank(); ++k) {
    const RepMatrix inv = sigma_inverse(rep.roots(), rep.table(), k);
    const RepMatrix s = rep.sigma(k);
    out.push_back({"inverse:" + std::to_string(k), is_identity(multiply(s, inv)) && is_identity(multiply(inv, s)), "", ""});
  }
}

void quadratic_suite(const Representation& rep, const VerifyOptions&, std::vector<CheckResult>& out) {
  for (int k = 1; k <= rep.roots().rank(); ++k)
    out.push_back({"quadratic:" + std::to_string(k), quadratic_relation_rank_one(rep, k), "", ""});
}

void cone_suite(const Representation& rep, const VerifyOptions& options, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(options.seed);
  const int max_len = options.length > 0 ? options.length : 12;
  std::uniform_int_distribution<int> len(0, max_len), letter(1, rep.roots().rank());
  int failures = 0;
  std::string witness;
  const int samples = 200;
  for (int i = 0; i < samples; ++i) {
    PositiveWord word(static_cast<std::size_t>(len(rng)));
    for (int& l : word) l = letter(rng);
    const ConeReport report = cone_check(rep, word, options.r0);
    if (!report.pass && failures++ == 0)
      witness = "[" + format_word(word) + "] " + cell(report.violations.front().row, report.violations.front().col) +
                ": " + report.violations.front().reason;
  }
  out.push_back({"cone:random-words", failures == 0, witness, std::to_string(samples) + " words"});
}

RootSet closure(const RootSystem& rs, RootSet set) {
  for (bool grew = true; grew;) {
    grew = false;
    for (int b = 0; b < rs.size(); ++b)
      for (int g = 0; g < rs.size(); ++g) {
        if (!set.test(b) || !set.test(g)) continue;
        const int s = rs.sum(b, g);
        if (s >= 0 && !set.test(s)) {
          set.set(s);
          grew = true;
        }
      }
  }
  return set;
}

// Every closed set when the root count is within budget, otherwise 200 seeded
// closures of random small subsets.
std::vector<RootSet> closed_sets_for_suite(const RootSystem& rs, const VerifyOptions& options, std::string& scope) {
  if (rs.size() <= options.budget.closed_set_roots) {
    auto sets = enumerate_closed_sets(rs, options.budget.closed_set_roots);
    scope = std::to_string(sets.size()) + " closed sets";
    return sets;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> count(0, 4), root(0, rs.size() - 1);
  std::vector<RootSet> sets;
  for (int i = 0; i < 200; ++i) {
    RootSet s = rs.empty_set();
    for (int j = count(rng); j > 0; --j) s.set(static_cast<std::size_t>(root(rng)));
    sets.push_back(closure(rs, s));
  }
  scope = "200 sampled closed sets";
  return sets;
}

void equivariance_suite(const Representation& rep, const VerifyOptions& options, std::vector<CheckResult>& out) {
  const RootSystem& rs = rep.roots();
  std::string scope;
  const auto sets = closed_sets_for_suite(rs, options, scope);
  for (int i = 1; i <= rs.rank(); ++i) {
    int failures = 0;
    std::string witness;
    for (const auto& a : sets) {
      PositiveWord word{i};
      const PositiveWord b = b_embed(rs, max_inversion_subset(rs, a));
      word.insert(word.end(), b.begin(), b.end());
      if (!(max_inversion_subset(rs, star_act(rs, i, a)) == head_L(rs, word)) && failures++ == 0)
        witness = "A = " + format_set(rs, a);
    }
    out.push_back({"equivariance:" + std::to_string(i), failures == 0, witness, scope});
  }
}

// Largest length up to cap whose word count stays within limit.
int length_within(long letters, int cap, long limit) {
  int len = 0;
  long total = 1, layer = 1;
  while (len < cap) {
    layer *= letters;
    if (total + layer > limit) break;
    total += layer;
    ++len;
  }
  return len;
}

void faithfulness_suite(const Representation& rep, const VerifyOptions& options, std::vector<CheckResult>& out) {
  const RootSystem& rs = rep.roots();
  const int len = options.length > 0 ? options.length : length_within(rs.rank(), 6, 2000);
  const WordClasses classes = word_equiv_oracle(rs, len, options.budget.words);
  std::map<int, std::string> key_of_class;
  std::map<std::string, int> class_of_key;
  std::string constant_witness, injective_witness, probe_witness;
  for (std::size_t i = 0; i < classes.words.size(); ++i) {
    const PositiveWord& x = classes.words[i];
    const int c = classes.class_of[i];
    const std::string key = canonical_key(rep.rho(x));
    const auto [k, new_class] = key_of_class.emplace(c, key);
    if (!new_class && k->second != key && constant_witness.empty())
      constant_witness = "[" + format_word(x) + "] differs from an equivalent word";
    const auto [m, new_key] = class_of_key.emplace(key, c);
    if (!new_key && m->second != c && injective_witness.empty())
      injective_witness = "[" + format_word(x) + "] shares its matrix with an inequivalent word";
    if (probe_witness.empty() && !(faithfulness_probe(rep, x, options.r0) == head_L(rs, x)))
      probe_witness = "[" + format_word(x) + "]";
  }
  const std::string scope = std::to_string(classes.words.size()) + " words, length <= " + std::to_string(len);
  out.push_back({"faithfulness:constant-on-classes", constant_witness.empty(), constant_witness, scope});
  out.push_back({"faithfulness:injective", injective_witness.empty(), injective_witness, scope});
  out.push_back({"faithfulness:probe", probe_witness.empty(), probe_witness, scope});
}

void charney_suite(const Representation& rep, const VerifyOptions& options, std::vector<CheckResult>& out) {
  const int n = rep.roots().rank();
  OmegaBall ball(rep, options.budget);
  // Ball sizes grow like |generators|^radius; stay near 10^5 products.
  const long gens = static_cast<long>(ball.generator_count());
  const int exhaustive = options.length > 0 ? options.length : std::max(1, length_within(gens, 3, 100000));
  const int random_len = options.length > 0 ? options.length + 1 : std::max(1, length_within(gens, 4, 100000));
  auto compare = [&](const SignedWord& x, int& failures, std::string& witness) {
    const int a = charney_length_matrix(rep, x);
    const int b = charney_length_bfs(ball, rep, x, static_cast<int>(x.size()));
    if (a != b && failures++ == 0)
      witness = "[" + format_word(x) + "] matrix " + std::to_string(a) + ", search " + std::to_string(b);
  };
  int failures = 0, count = 0;
  std::string witness;
  std::vector<SignedWord> layer{{}};
  for (int l = 0; l <= exhaustive; ++l) {
    std::vector<SignedWord> next;
    for (const auto& x : layer) {
      compare(x, failures, witness);
      ++count;
      if (l == exhaustive) continue;
      for (int letter = -n; letter <= n; ++letter) {
        if (letter == 0) continue;
        SignedWord y = x;
        y.push_back(letter);
        next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  out.push_back({"charney:exhaustive", failures == 0, witness,
                 std::to_string(count) + " words of length <= " + std::to_string(exhaustive)});

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> len(0, random_len), letter(1, n), sign(0, 1);
  failures = 0;
  witness.clear();
  for (int i = 0; i < 50; ++i) {
    SignedWord x(static_cast<std::size_t>(len(rng)));
    for (int& l : x) l = sign(rng) ? letter(rng) : -letter(rng);
    compare(x, failures, witness);
  }
  out.push_back({"charney:random", failures == 0, witness, "50 words of length <= " + std::to_string(random_len)});
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites = {
      {"braid", [](const Representation& rep, const VerifyOptions&, auto& out) { braid_suite(rep, false, out); }},
      {"tau", [](const Representation& rep, const VerifyOptions&, auto& out) { braid_suite(rep, true, out); }},
      {"ttable", ttable_suite},
      {"det", det_suite},
      {"w0", w0_suite},
      {"umatrix", umatrix_suite},
      {"inverse", inverse_suite},
      {"quadratic", quadratic_suite},
      {"cone", cone_suite},
      {"equivariance", equivariance_suite},
      {"faithfulness", faithfulness_suite},
      {"charney", charney_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, suite] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::optional<std::string> suite_infeasible(const std::string& suite, const RootSystem& rs, const VerifyOptions& options) {
  if (suite == "charney" && weyl_group_order(rs.spec()) > options.budget.weyl_elements)
    return "|W| = " + std::to_string(weyl_group_order(rs.spec())) + " exceeds the Weyl budget of " +
           std::to_string(options.budget.weyl_elements);
  return std::nullopt;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Representation& rep, const VerifyOptions& options) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  try {
    it->second(rep, options, out);
  } catch (const Error& e) {
    out.push_back({suite + ":error", false, e.what(), ""});
  }
  return out;
}

std::vector<CheckResult> run_suites(const std::vector<std::string>& suites, const Representation& rep,
                                    const VerifyOptions& options) {
  for (const auto& s : suites)
    if (!registry().count(s)) throw UnknownSuite("unknown suite '" + s + "'");
  std::vector<CheckResult> all;
  for (const auto& s : suites) {
    auto part = run_suite(s, rep, options);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return all;
}

json report_to_json(const TypeSpec& spec, const std::vector<std::string>& suites, const std::vector<CheckResult>& checks) {
  json list = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}, {"detail", c.detail}});
    pass = pass && c.pass;
  }
  return {{"type", spec.name()}, {"suites", suites}, {"checks", list}, {"pass", pass}};
}

}  // namespace lk

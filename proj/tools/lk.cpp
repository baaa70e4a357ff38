#include "lk/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace lk;

namespace {

struct RunConfig {
  std::string family;
  int rank = 0;
  std::string word;
  std::string r0 = "1/2";
  std::string suites;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "text";
  int length = 0;
  int maxlen = 4;
  bool oracle = false;
};

void add_type_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--type", cfg.family, "Diagram family")->required()->check(CLI::IsMember({"A", "D", "E"}));
  cmd->add_option("--rank", cfg.rank, "Rank")->required();
}

void add_format_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void write_file(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << j.dump() << '\n';
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int cmd_roots(const RunConfig& cfg) {
  const RootSystem rs = RootSystem::build(TypeSpec::parse(cfg.family, cfg.rank));
  const json j = to_json(rs);
  if (cfg.out.empty()) {
    std::cout << j.dump() << '\n';
  } else {
    write_file(fs::path(cfg.out) / "roots.json", j);
    std::cout << rs.spec().name() << ": " << rs.size() << " positive roots\n";
  }
  return 0;
}

int cmd_rep(const RunConfig& cfg) {
  const Representation rep(RootSystem::build(TypeSpec::parse(cfg.family, cfg.rank)));
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  for (int k = 1; k <= rep.roots().rank(); ++k)
    write_file(dir / ("generator_" + std::to_string(k) + ".json"), generator_to_json(k, rep.sigma(k)));
  write_file(dir / "ttable.json", ttable_to_json(rep.roots(), rep.table()));
  std::cout << rep.roots().spec().name() << ": " << rep.roots().rank() << " generators of size " << rep.size() << " written to "
            << dir.string() << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const TypeSpec spec = TypeSpec::parse(cfg.family, cfg.rank);
  VerifyOptions options;
  options.r0 = parse_rational(cfg.r0);
  options.seed = cfg.seed;
  options.budget = Budget::from_env();
  options.length = cfg.length;

  const auto start = std::chrono::steady_clock::now();
  const Representation rep(RootSystem::build(spec));
  std::vector<std::string> suites;
  if (cfg.suites.empty()) {
    // Without an explicit list, run every suite that fits the budgets.
    for (const auto& s : suite_names()) {
      if (auto reason = suite_infeasible(s, rep.roots(), options))
        std::cerr << "skipping " << s << ": " << *reason << '\n';
      else
        suites.push_back(s);
    }
  } else {
    suites = split_csv(cfg.suites);
    for (const auto& s : suites)
      if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
        throw UnknownSuite("unknown suite '" + s + "'");
  }
  const auto checks = run_suites(suites, rep, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const json report = report_to_json(spec, suites, checks);
  if (cfg.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
      std::string line = (c.pass ? "PASS  " : "FAIL  ") + c.name + std::string(width - c.name.size() + 2, ' ') + c.detail;
      if (!c.pass) line += (c.detail.empty() ? "" : "  ") + c.witness;
      line.erase(line.find_last_not_of(' ') + 1);
      std::cout << line << '\n';
    }
  }
  if (!cfg.out.empty()) {
    write_file(fs::path(cfg.out) / "report.json", report);
    write_file(fs::path(cfg.out) / "report.timing.json", {{"wall_seconds", seconds}});
  }
  return report["pass"].get<bool>() ? 0 : 1;
}

int cmd_charney(const RunConfig& cfg) {
  const Representation rep(RootSystem::build(TypeSpec::parse(cfg.family, cfg.rank)));
  const SignedWord x = parse_signed_word(cfg.word, cfg.rank);
  const int value = charney_length_matrix(rep, x);
  json j = {{"word", x}, {"length", value}};
  bool agree = true;
  if (cfg.oracle) {
    const int bfs = charney_length_bfs(rep, x, cfg.maxlen, Budget::from_env());
    agree = bfs == value;
    j["search"] = bfs;
    j["agree"] = agree;
  }
  if (cfg.format == "json") {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
    if (cfg.oracle) std::cout << "search " << j["search"].get<int>() << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_head(const RunConfig& cfg) {
  const RootSystem rs = RootSystem::build(TypeSpec::parse(cfg.family, cfg.rank));
  const PositiveWord x = parse_positive_word(cfg.word, cfg.rank);
  const RootSet set = star_act_word(rs, x, rs.empty_set());
  const PositiveWord head = b_embed(rs, max_inversion_subset(rs, set));
  if (cfg.format == "json") {
    json roots = json::array();
    for (int b = 0; b < rs.size(); ++b)
      if (set.test(b)) roots.push_back(rs.root(b));
    std::cout << json{{"head", head}, {"closed_set", roots}}.dump() << '\n';
  } else {
    std::cout << format_word(head) << '\n' << format_set(rs, set) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lawrence-Krammer representations of ADE Artin groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* roots = app.add_subcommand("roots", "Positive roots and Cartan matrix as JSON");
  add_type_options(roots, cfg);
  roots->add_option("--out", cfg.out, "Directory for roots.json (default: stdout)");

  auto* rep = app.add_subcommand("rep", "Write the generator matrices and the T-table");
  add_type_options(rep, cfg);
  rep->add_option("--out", cfg.out, "Output directory");
  rep->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_type_options(verify, cfg);
  verify->add_option("--suite", cfg.suites, "Comma-separated suites (default: all)");
  verify->add_option("--r0", cfg.r0, "Value of r for the cone suites, p/q");
  verify->add_option("--seed", cfg.seed, "Seed for randomized suites");
  verify->add_option("--length", cfg.length, "Word length for the word-based suites");
  verify->add_option("--out", cfg.out, "Directory for report.json");
  add_format_option(verify, cfg);

  auto* charney = app.add_subcommand("charney", "Charney length of a signed word");
  add_type_options(charney, cfg);
  charney->add_option("--word", cfg.word, "Signed word, e.g. \"1 -2\"");
  charney->add_flag("--oracle", cfg.oracle, "Also run the breadth-first search");
  charney->add_option("--maxlen", cfg.maxlen, "Search depth for --oracle");
  add_format_option(charney, cfg);

  auto* head = app.add_subcommand("head", "Longest simple prefix of a positive word");
  add_type_options(head, cfg);
  head->add_option("--word", cfg.word, "Positive word, e.g. \"1 1 2\"");
  add_format_option(head, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) return cmd_roots(cfg);
    if (*rep) return cmd_rep(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*charney) return cmd_charney(cfg);
    if (*head) return cmd_head(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

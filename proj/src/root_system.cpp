#include "lk/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace lk {

void TypeSpec::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw InvalidType("invalid type " + name());
}

std::string TypeSpec::name() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return std::string(f) + std::to_string(rank);
}

TypeSpec TypeSpec::parse(const std::string& family, int rank) {
  TypeSpec spec{Family::A, rank};
  if (family == "A" || family == "a") spec.family = Family::A;
  else if (family == "D" || family == "d") spec.family = Family::D;
  else if (family == "E" || family == "e") spec.family = Family::E;
  else throw InvalidType("unknown family '" + family + "'");
  spec.validate();
  return spec;
}

std::vector<std::vector<int>> cartan_matrix(TypeSpec spec) {
  spec.validate();
  const int n = spec.rank;
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto edge = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
      edge(n - 2, n);
      break;
    case Family::E:
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      break;
  }
  return c;
}

RootSystem RootSystem::build(TypeSpec spec) {
  spec.validate();
  RootSystem rs;
  rs.spec_ = spec;
  rs.cartan_ = cartan_matrix(spec);
  const int n = spec.rank;
  auto pair = [&](const Root& a, const Root& b) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += a[i] * rs.cartan_[i][j] * b[j];
    return s;
  };

  // In a simply laced system beta + alpha_i is a root iff (beta, alpha_i) = -1,
  // and every positive root is reached from a simple one this way.
  std::set<Root> found;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root a(static_cast<std::size_t>(n), 0);
    a[i] = 1;
    found.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root a(static_cast<std::size_t>(n), 0);
      a[i] = 1;
      if (pair(beta, a) != -1) continue;
      Root next = beta;
      ++next[i];
      if (found.insert(next).second) queue.push_back(next);
    }
  }

  rs.roots_.assign(found.begin(), found.end());
  auto height = [](const Root& r) { int h = 0; for (int c : r) h += c; return h; };
  std::sort(rs.roots_.begin(), rs.roots_.end(), [&](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int size = rs.size();
  rs.heights_.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    rs.heights_[i] = height(rs.roots_[i]);
    rs.index_[rs.roots_[i]] = i;
  }
  rs.inner_.resize(static_cast<std::size_t>(size * size));
  rs.sum_.assign(static_cast<std::size_t>(size * size), -1);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      rs.inner_[i * size + j] = pair(rs.roots_[i], rs.roots_[j]);
      Root s = rs.roots_[i];
      for (int c = 0; c < n; ++c) s[c] += rs.roots_[j][c];
      if (auto idx = rs.find(s)) rs.sum_[i * size + j] = *idx;
    }
  rs.plus_.assign(static_cast<std::size_t>(n * size), -1);
  rs.minus_.assign(static_cast<std::size_t>(n * size), -1);
  rs.reflect_.resize(static_cast<std::size_t>(n * size));
  for (int k = 1; k <= n; ++k)
    for (int b = 0; b < size; ++b) {
      Root up = rs.roots_[b], down = rs.roots_[b];
      ++up[k - 1];
      --down[k - 1];
      if (auto idx = rs.find(up)) rs.plus_[(k - 1) * size + b] = *idx;
      if (auto idx = rs.find(down)) rs.minus_[(k - 1) * size + b] = *idx;
      const int ip = rs.inner(k - 1, b);
      Root image = rs.roots_[b];
      image[k - 1] -= ip;
      SignedRoot reflected{};
      if (image[k - 1] < 0) {
        for (int& c : image) c = -c;
        reflected = {rs.index_of(image), true};
      } else {
        reflected = {rs.index_of(image), false};
      }
      rs.reflect_[(k - 1) * size + b] = reflected;
    }
  rs.neighbours_.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      if (rs.adjacent(k, l)) rs.neighbours_[k - 1].push_back(l);
  return rs;
}

std::optional<int> RootSystem::find(const Root& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_of(const Root& coords) const {
  if (auto idx = find(coords)) return *idx;
  throw UnknownRoot("not a positive root: " + format_root(coords));
}

int RootSystem::inner(const Root& beta, const Root& gamma) const {
  auto check = [&](const Root& r) {
    Root neg = r;
    for (int& c : neg) c = -c;
    if (static_cast<int>(r.size()) != rank() || (!find(r) && !find(neg)))
      throw UnknownRoot("not a root: " + format_root(r));
  };
  check(beta);
  check(gamma);
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += beta[i] * cartan_[i][j] * gamma[j];
  return s;
}

bool RootSystem::root_leq(int gamma, int beta) const {
  const Root& g = root(gamma);
  const Root& b = root(beta);
  for (int i = 0; i < rank(); ++i)
    if (g[i] > b[i]) return false;
  return true;
}

// ---------------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.images_.resize(static_cast<std::size_t>(rs.size()));
  for (int b = 0; b < rs.size(); ++b) w.images_[b] = {b, false};
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs);
  for (int k : word) {
    if (k < 1 || k > rs.rank()) throw std::out_of_range("simple index out of range: " + std::to_string(k));
    w = w.times_simple(rs, k);
  }
  return w;
}

int WeylElement::length() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](const SignedRoot& s) { return s.negative; }));
}

RootSet WeylElement::inversion_set() const {
  RootSet set(images_.size());
  // w^-1(alpha) < 0 with alpha > 0 iff alpha = -w(gamma) for some gamma > 0 with w(gamma) < 0.
  for (const auto& image : images_)
    if (image.negative) set.set(static_cast<std::size_t>(image.index));
  return set;
}

WeylElement WeylElement::times_simple(const RootSystem& rs, int k) const {
  WeylElement out = *this;
  for (int b = 0; b < rs.size(); ++b) {
    SignedRoot s = rs.reflect(k, b);
    SignedRoot image = images_[static_cast<std::size_t>(s.index)];
    out.images_[b] = {image.index, image.negative != s.negative};
  }
  return out;
}

WeylElement WeylElement::simple_times(const RootSystem& rs, int k) const {
  WeylElement out = *this;
  for (auto& image : out.images_) {
    SignedRoot s = rs.reflect(k, image.index);
    image = {s.index, s.negative != image.negative};
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement out = o;
  for (auto& image : out.images_) {
    SignedRoot s = images_[static_cast<std::size_t>(image.index)];
    image = {s.index, s.negative != image.negative};
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out = *this;
  for (std::size_t b = 0; b < images_.size(); ++b)
    out.images_[static_cast<std::size_t>(images_[b].index)] = {static_cast<int>(b), images_[b].negative};
  return out;
}

std::vector<int> WeylElement::reduced_word(const RootSystem& rs) const {
  // The first letter of any reduced word is a left descent (alpha_k in Phi_w),
  // so taking the smallest descent each time yields the lexicographic minimum.
  std::vector<int> word;
  WeylElement w = *this;
  while (true) {
    RootSet inv = w.inversion_set();
    int k = 1;
    while (k <= rs.rank() && !inv.test(static_cast<std::size_t>(rs.simple_index(k)))) ++k;
    if (k > rs.rank()) break;
    word.push_back(k);
    w = w.simple_times(rs, k);
  }
  return word;
}

bool WeylElement::is_identity() const {
  for (std::size_t b = 0; b < images_.size(); ++b)
    if (images_[b].negative || images_[b].index != static_cast<int>(b)) return false;
  return true;
}

std::vector<int> WeylElement::key() const {
  std::vector<int> k;
  k.reserve(images_.size());
  for (const auto& image : images_) k.push_back(image.negative ? -(image.index + 1) : image.index + 1);
  return k;
}

// -------------------------------------------------------------- free functions

RootSet inversion_set(const RootSystem&, const WeylElement& w) { return w.inversion_set(); }

bool is_closed(const RootSystem& rs, const RootSet& set) {
  for (auto b = set.find_first(); b != RootSet::npos; b = set.find_next(b))
    for (auto c = set.find_next(b); c != RootSet::npos; c = set.find_next(c)) {
      int s = rs.sum(static_cast<int>(b), static_cast<int>(c));
      if (s >= 0 && !set.test(static_cast<std::size_t>(s))) return false;
    }
  return true;
}

WeylElement max_inversion_subset(const RootSystem& rs, const RootSet& set) {
  if (!is_closed(rs, set)) throw NotClosed("set is not closed: " + format_set(rs, set));
  // The inversion sets inside a closed set form a directed family, so greedy
  // ascent through Phi_{w r_k} = Phi_w + {w(alpha_k)} reaches its maximum.
  WeylElement w = WeylElement::identity(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 1; k <= rs.rank(); ++k) {
      SignedRoot image = w.apply(rs.simple_index(k));
      if (!image.negative && set.test(static_cast<std::size_t>(image.index))) {
        w = w.times_simple(rs, k);
        grew = true;
        break;
      }
    }
  }
  return w;
}

bool weak_order_leq(const RootSystem&, const WeylElement& v, const WeylElement& w) {
  return v.inversion_set().is_subset_of(w.inversion_set());
}

std::vector<RootSet> enumerate_closed_sets(const RootSystem& rs, int max_roots) {
  if (rs.size() > max_roots)
    throw TooLarge(rs.spec().name() + " has " + std::to_string(rs.size()) + " positive roots, bound is " +
                   std::to_string(max_roots));
  std::vector<RootSet> out;
  const unsigned long count = 1UL << rs.size();
  for (unsigned long mask = 0; mask < count; ++mask) {
    RootSet set(static_cast<std::size_t>(rs.size()), mask);
    if (is_closed(rs, set)) out.push_back(std::move(set));
  }
  return out;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 1; k <= rs.rank(); ++k)
      if (!w.apply(rs.simple_index(k)).negative) {
        w = w.times_simple(rs, k);
        grew = true;
        break;
      }
  }
  return w;
}

long weyl_group_order(const TypeSpec& spec) {
  spec.validate();
  long factorial = 1;
  for (int i = 2; i <= spec.rank; ++i) factorial *= i;
  switch (spec.family) {
    case Family::A: return factorial * (spec.rank + 1);
    case Family::D: return factorial << (spec.rank - 1);
    case Family::E: return spec.rank == 6 ? 51840L : spec.rank == 7 ? 2903040L : 696729600L;
  }
  return 0;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long max_elements) {
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue;
  WeylElement id = WeylElement::identity(rs);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int k = 1; k <= rs.rank(); ++k) {
      WeylElement next = w.times_simple(rs, k);
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > max_elements)
          throw TooLarge("Weyl group of " + rs.spec().name() + " exceeds budget of " + std::to_string(max_elements));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::string format_root(const Root& root) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < root.size(); ++i) os << (i ? "," : "") << root[i];
  os << ']';
  return os.str();
}

std::string format_set(const RootSystem& rs, const RootSet& set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto b = set.find_first(); b != RootSet::npos; b = set.find_next(b)) {
    os << (first ? "" : " ") << format_root(rs.root(static_cast<int>(b)));
    first = false;
  }
  os << '}';
  return os.str();
}

Budget Budget::from_env() {
  Budget b;
  const char* env = std::getenv("LK_BUDGET");
  if (env == nullptr) return b;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    long value = std::stol(item.substr(eq + 1));
    if (key == "closed") b.closed_set_roots = static_cast<int>(value);
    else if (key == "weyl") b.weyl_elements = value;
    else if (key == "words") b.words = value;
    else if (key == "ball") b.ball_elements = value;
  }
  return b;
}

}  // namespace lk

#include "lk/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lk {

namespace {

template <typename Term, typename Less>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b, Less less) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && less(i->exp, j->exp))) {
      out.push_back(*i++);
    } else if (i == a.end() || less(j->exp, i->exp)) {
      out.push_back(*j++);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      auto c = negate_b ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (c != 0) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Term>
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().exp == term.exp) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

Rational rational_pow(const Rational& base, std::int32_t e) {
  Integer num = boost::multiprecision::numerator(base);
  Integer den = boost::multiprecision::denominator(base);
  unsigned n = static_cast<unsigned>(e < 0 ? -static_cast<std::int64_t>(e) : e);
  Integer pn = boost::multiprecision::pow(num, n);
  Integer pd = boost::multiprecision::pow(den, n);
  return e < 0 ? Rational(pd, pn) : Rational(pn, pd);
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.push_back({{0, 0}, Integer(c)});
}

LaurentPoly::LaurentPoly(Integer c, std::int32_t er, std::int32_t et) {
  if (c != 0) terms_.push_back({{et, er}, std::move(c)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Integer LaurentPoly::coeff(std::int32_t er, std::int32_t et) const {
  Exponent key{et, er};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& term, const Exponent& e) { return term.exp < e; });
  if (it != terms_.end() && it->exp == key) return it->coeff;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false, std::less<Exponent>{});
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true, std::less<Exponent>{});
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& big = a.size() >= b.size() ? a : b;
  const LaurentPoly& small = a.size() >= b.size() ? b : a;
  LaurentPoly out;
  if (small.is_monomial()) {
    // Shifting preserves the order, and Z has no zero divisors.
    const auto& m = small.terms_.front();
    out.terms_.reserve(big.size());
    for (const auto& term : big.terms_) out.terms_.push_back({term.exp + m.exp, term.coeff * m.coeff});
    return out;
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(big.size() * small.size());
  for (const auto& x : small.terms_)
    for (const auto& y : big.terms_) prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
  out.terms_ = canonicalize(std::move(prod));
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int32_t er, std::int32_t et) const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.exp = term.exp + Exponent{et, er};
  return p;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::pair<std::int32_t, std::int32_t> t_degree_range(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  return {p.terms().front().exp.et, p.terms().back().exp.et};
}

std::pair<std::int32_t, std::int32_t> r_degree_range(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  auto [lo, hi] = std::minmax_element(p.terms().begin(), p.terms().end(),
                                      [](const auto& x, const auto& y) { return x.exp.er < y.exp.er; });
  return {lo->exp.er, hi->exp.er};
}

LaurentPoly bar_involution(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms()) terms.push_back({{-term.exp.et, -term.exp.er}, term.coeff});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& m = b.terms().front();
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(a.size());
    for (const auto& term : a.terms()) {
      if (term.coeff % m.coeff != 0) throw NotDivisible();
      terms.push_back({term.exp - m.exp, term.coeff / m.coeff});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }
  // Long division on the leading term. The quotient's exponents lie in the box
  // spanned by the additive min/max degrees, which bounds the loop.
  auto [at_lo, at_hi] = t_degree_range(a);
  auto [bt_lo, bt_hi] = t_degree_range(b);
  auto [ar_lo, ar_hi] = r_degree_range(a);
  auto [br_lo, br_hi] = r_degree_range(b);
  const std::int32_t qt_lo = at_lo - bt_lo, qt_hi = at_hi - bt_hi;
  const std::int32_t qr_lo = ar_lo - br_lo, qr_hi = ar_hi - br_hi;
  if (qt_lo > qt_hi || qr_lo > qr_hi) throw NotDivisible();

  const auto& lead = b.terms().back();
  LaurentPoly rem = a;
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    Exponent e = top.exp - lead.exp;
    if (e.et < qt_lo || e.et > qt_hi || e.er < qr_lo || e.er > qr_hi) throw NotDivisible();
    if (top.coeff % lead.coeff != 0) throw NotDivisible();
    Integer c = top.coeff / lead.coeff;
    LaurentPoly step(c, e.er, e.et);
    quotient.push_back({e, std::move(c)});
    rem -= step * b;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

namespace {

void write_monomial(std::ostream& os, std::int32_t er, std::int32_t et) {
  bool first = true;
  auto factor = [&](const char* var, std::int32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << var;
    if (e != 1) os << '^' << e;
    first = false;
  };
  factor("t", et);
  factor("r", er);
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : p.terms()) {
    Integer c = term.coeff;
    bool unit_monomial = term.exp.er == 0 && term.exp.et == 0;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0 && !unit_monomial && c == -1) {
      os << '-';
      c = 1;
    }
    if (unit_monomial) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      write_monomial(os, term.exp.er, term.exp.et);
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------- TPoly

TPoly::TPoly(int c) {
  if (c != 0) terms_.push_back({0, Rational(c)});
}

TPoly::TPoly(Rational c, std::int32_t exp) {
  if (c != 0) terms_.push_back({exp, std::move(c)});
}

TPoly TPoly::from_terms(std::vector<Term> terms) {
  TPoly p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Rational TPoly::coeff(std::int32_t exp) const {
  for (const auto& term : terms_)
    if (term.exp == exp) return term.coeff;
  return 0;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, false, std::less<std::int32_t>{});
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, true, std::less<std::int32_t>{});
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly TPoly::operator-() const {
  TPoly p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<TPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
  return TPoly::from_terms(std::move(prod));
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : p.terms()) {
    if (!first) os << " + ";
    os << '(' << term.coeff << ')';
    if (term.exp != 0) os << "*t^" << term.exp;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << to_string(p); }

TPoly eval_r(const LaurentPoly& p, const Rational& r0) {
  if (r0 == 0) throw ZeroSubstitution();
  std::vector<TPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms())
    terms.push_back({term.exp.et, Rational(term.coeff) * rational_pow(r0, term.exp.er)});
  return TPoly::from_terms(std::move(terms));
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text.c_str()));
    Integer num(text.substr(0, slash).c_str());
    Integer den(text.substr(slash + 1).c_str());
    if (den == 0) throw std::invalid_argument("zero denominator in rational '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

}  // namespace lk

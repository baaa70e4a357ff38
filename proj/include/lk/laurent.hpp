#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lk {

namespace mp = boost::multiprecision;
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("polynomial is zero") {}
};

struct ZeroSubstitution : std::domain_error {
  ZeroSubstitution() : std::domain_error("cannot substitute r = 0 into a Laurent polynomial") {}
};

struct NotDivisible : std::domain_error {
  NotDivisible() : std::domain_error("exact division failed") {}
};

/// Exponent pair of a monomial r^er t^et. Ordered by (et, er).
struct Exponent {
  std::int32_t et = 0;
  std::int32_t er = 0;

  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
  friend constexpr Exponent operator+(Exponent a, Exponent b) { return {a.et + b.et, a.er + b.er}; }
  friend constexpr Exponent operator-(Exponent a, Exponent b) { return {a.et - b.et, a.er - b.er}; }
};

/// Element of Z[r, 1/r, t, 1/t].
///
/// Stored as a vector of terms sorted by exponent (t first, then r) with no
/// zero coefficients, so structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT: implicit so Eigen can build Scalar(0), Scalar(1)
  LaurentPoly(Integer c, std::int32_t er = 0, std::int32_t et = 0);

  static LaurentPoly r(std::int32_t power = 1) { return {Integer(1), power, 0}; }
  static LaurentPoly t(std::int32_t power = 1) { return {Integer(1), 0, power}; }
  static LaurentPoly monomial(Integer c, std::int32_t er, std::int32_t et) { return {std::move(c), er, et}; }
  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of r^er t^et (zero when absent).
  Integer coeff(std::int32_t er, std::int32_t et) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by the monomial r^er t^et.
  LaurentPoly shifted(std::int32_t er, std::int32_t et) const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Lowest and highest t exponent carrying a nonzero coefficient.
std::pair<std::int32_t, std::int32_t> t_degree_range(const LaurentPoly& p);
/// Lowest and highest r exponent.
std::pair<std::int32_t, std::int32_t> r_degree_range(const LaurentPoly& p);

/// r -> 1/r, t -> 1/t.
LaurentPoly bar_involution(const LaurentPoly& p);

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly pow(const LaurentPoly& p, unsigned n);

std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Polynomial in t with rational coefficients (any integer exponent allowed).
class TPoly {
 public:
  struct Term {
    std::int32_t exp;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  TPoly() = default;
  TPoly(int c);  // NOLINT: implicit for Eigen
  TPoly(Rational c, std::int32_t exp = 0);
  static TPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(std::int32_t exp) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly operator-() const;
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const TPoly& p);
std::ostream& operator<<(std::ostream& os, const TPoly& p);

/// Substitutes r = r0, keeping t formal.
TPoly eval_r(const LaurentPoly& p, const Rational& r0);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace lk

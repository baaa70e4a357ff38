#include "lk/matrix.hpp"

#include <sstream>

namespace lk {

SpecMatrix eval_r(const RepMatrix& m, const Rational& r0) {
  return m.unaryExpr([&](const LaurentPoly& p) { return eval_r(p, r0); });
}

RepMatrix bar_involution(const RepMatrix& m) {
  return m.unaryExpr([](const LaurentPoly& p) { return bar_involution(p); });
}

std::string canonical_key(const RepMatrix& m) {
  std::ostringstream os;
  os << m.rows() << 'x' << m.cols();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      os << '|' << i << ',' << j << ':';
      for (const auto& term : m(i, j).terms()) os << term.coeff << '@' << term.exp.et << ',' << term.exp.er << ';';
    }
  return os.str();
}

LaurentPoly determinant(RepMatrix m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    // Sparsest nonzero pivot keeps the intermediate minors small.
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (pivot < 0 || m(i, k).size() < m(pivot, k).size())) pivot = i;
    if (pivot < 0) return {};
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        LaurentPoly v = m(k, k) * m(i, j);
        if (!m(i, k).is_zero() && !m(k, j).is_zero()) v -= m(i, k) * m(k, j);
        m(i, j) = exact_divide(v, prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace lk

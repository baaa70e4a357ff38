#pragma once

#include "lk/laurent.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lk {

// Eigen treats these as opaque exact scalars. conj/real/imag/abs2 are looked up
// by ADL from Eigen's generic kernels.
inline const LaurentPoly& conj(const LaurentPoly& x) { return x; }
inline const LaurentPoly& real(const LaurentPoly& x) { return x; }
inline LaurentPoly imag(const LaurentPoly&) { return {}; }
inline LaurentPoly abs2(const LaurentPoly& x) { return x * x; }

inline const TPoly& conj(const TPoly& x) { return x; }
inline const TPoly& real(const TPoly& x) { return x; }
inline TPoly imag(const TPoly&) { return {}; }
inline TPoly abs2(const TPoly& x) { return x * x; }

}  // namespace lk

namespace Eigen {

template <>
struct NumTraits<lk::LaurentPoly> : GenericNumTraits<lk::LaurentPoly> {
  using Real = lk::LaurentPoly;
  using NonInteger = lk::LaurentPoly;
  using Nested = lk::LaurentPoly;
  using Literal = lk::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static constexpr int digits10() { return 0; }
};

template <>
struct NumTraits<lk::TPoly> : GenericNumTraits<lk::TPoly> {
  using Real = lk::TPoly;
  using NonInteger = lk::TPoly;
  using Nested = lk::TPoly;
  using Literal = lk::TPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen

namespace lk {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense matrix over Z[r^±1, t^±1]. Column j holds the image of basis vector j.
using RepMatrix = Matrix<LaurentPoly>;
/// RepMatrix with r specialised to a rational number.
using SpecMatrix = Matrix<TPoly>;

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> m = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

/// Column-compressed square matrix; the generators have at most three
/// structural entries per column plus one dense row, so products with them
/// cost O(n^2) instead of O(n^3).
template <typename Scalar>
class SparseColumns {
 public:
  struct Entry {
    Eigen::Index row;
    Scalar value;
  };

  SparseColumns() = default;
  explicit SparseColumns(Eigen::Index n) : cols_(static_cast<std::size_t>(n)) {}

  static SparseColumns from_dense(const Matrix<Scalar>& m) {
    SparseColumns s(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!m(i, j).is_zero()) s.cols_[static_cast<std::size_t>(j)].push_back({i, m(i, j)});
    return s;
  }

  Eigen::Index size() const { return static_cast<Eigen::Index>(cols_.size()); }
  const std::vector<Entry>& column(Eigen::Index j) const { return cols_[static_cast<std::size_t>(j)]; }

  Matrix<Scalar> to_dense() const {
    Matrix<Scalar> m = Matrix<Scalar>::Constant(size(), size(), Scalar(0));
    for (Eigen::Index j = 0; j < size(); ++j)
      for (const auto& e : column(j)) m(e.row, j) = e.value;
    return m;
  }

  template <typename F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    SparseColumns<Out> out(size());
    for (Eigen::Index j = 0; j < size(); ++j)
      for (const auto& e : column(j)) {
        Out v = f(e.value);
        if (!v.is_zero()) out.push(e.row, j, std::move(v));
      }
    return out;
  }

  void push(Eigen::Index row, Eigen::Index col, Scalar value) {
    cols_[static_cast<std::size_t>(col)].push_back({row, std::move(value)});
  }

 private:
  std::vector<std::vector<Entry>> cols_;
};

/// m * s
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& m, const SparseColumns<Scalar>& s) {
  Matrix<Scalar> out = Matrix<Scalar>::Constant(m.rows(), s.size(), Scalar(0));
  for (Eigen::Index j = 0; j < s.size(); ++j)
    for (const auto& e : s.column(j))
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!m(i, e.row).is_zero()) out(i, j) += m(i, e.row) * e.value;
  return out;
}

/// s * m
template <typename Scalar>
Matrix<Scalar> multiply(const SparseColumns<Scalar>& s, const Matrix<Scalar>& m) {
  Matrix<Scalar> out = Matrix<Scalar>::Constant(s.size(), m.cols(), Scalar(0));
  for (Eigen::Index k = 0; k < s.size(); ++k)
    for (const auto& e : s.column(k))
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!m(k, j).is_zero()) out(e.row, j) += e.value * m(k, j);
  return out;
}

/// Dense product that skips structural zeros; Eigen's kernel multiplies them.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out = Matrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (b(k, j).is_zero()) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (!a(i, k).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename Scalar>
bool is_identity(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == (i == j ? Scalar(1) : Scalar(0)))) return false;
  return true;
}

/// First (row, col) where a and b differ, or nullopt-like {-1, -1}.
template <typename Scalar>
std::pair<Eigen::Index, Eigen::Index> first_difference(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return {i, j};
  return {-1, -1};
}

/// Entrywise r -> r0.
SpecMatrix eval_r(const RepMatrix& m, const Rational& r0);

/// Entrywise r -> 1/r, t -> 1/t.
RepMatrix bar_involution(const RepMatrix& m);

/// Canonical text key of a matrix, used for hashing group elements.
std::string canonical_key(const RepMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
LaurentPoly determinant(RepMatrix m);

}  // namespace lk

#pragma once

// Dense exact matrices and the handful of generic routines the mutation code
// needs. Everything here is templated on the scalar so the same code runs on
// Integer, Rational, or fixed-width types in tests.

#include "grassdt/exact.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <type_traits>
#include <utility>

namespace grassdt {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RationalMatrix = Matrix<Rational>;

template <class Scalar>
int sign_of(const Scalar& v) {
  return v > Scalar(0) ? 1 : v < Scalar(0) ? -1 : 0;
}

template <class Scalar>
Scalar positive_part_of(const Scalar& v) {
  return v > Scalar(0) ? v : Scalar(0);
}

/// Common sign of a nonzero sign-coherent vector: +1 if all entries are >= 0,
/// -1 if all are <= 0, and 0 if the vector is zero or has mixed signs.
template <class Derived>
int coherent_sign(const Eigen::DenseBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto& x = v.derived().coeff(i);
    if (x > Scalar(0)) pos = true;
    if (x < Scalar(0)) neg = true;
  }
  if (pos == neg) return 0;
  return pos ? 1 : -1;
}

/// Fomin-Zelevinsky matrix mutation at column `k` (0-based). The top
/// cols()×cols() block is the principal part; extra rows (frozen rows, or a
/// stacked C-matrix) mutate by the same rule.
template <class Derived>
Matrix<typename Derived::Scalar> matrix_mutation(const Eigen::MatrixBase<Derived>& b, Eigen::Index k) {
  using Scalar = typename Derived::Scalar;
  if (k < 0 || k >= b.cols() || b.rows() < b.cols())
    throw std::out_of_range("matrix_mutation: column out of range");
  Matrix<Scalar> out = b;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const Scalar& bik = b(i, k);
        const Scalar prod = positive_part_of<Scalar>(bik * b(k, j));
        if (!(prod == Scalar(0))) out(i, j) = b(i, j) + Scalar(sign_of(bik)) * prod;
      }
    }
  }
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination. Requires exact
/// division in `Scalar`, which holds for Integer and Rational.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index c = 0; c < n - 1; ++c) {
    if (m(c, c) == Scalar(0)) {
      Eigen::Index p = c + 1;
      while (p < n && m(p, c) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      m.row(c).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = c + 1; i < n; ++i) {
      for (Eigen::Index j = c + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(c, c) - m(i, c) * m(c, j);
        if constexpr (std::is_same_v<Scalar, Integer>)
          m(i, j) = divide_exact(t, prev);
        else
          m(i, j) = t / prev;
      }
      m(i, c) = Scalar(0);
    }
    prev = m(c, c);
  }
  return sign > 0 ? m(n - 1, n - 1) : Scalar(-m(n - 1, n - 1));
}

}  // namespace grassdt

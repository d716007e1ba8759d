// Copyright 2026 The bincurve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact dense linear algebra over Fp and Rational, on Eigen storage.
//
// Eigen's decompositions assume an ordered real field with rounding; none of
// them is used here. Elimination pivots on the first nonzero entry, which is
// exact for any field.

#ifndef BINCURVE_LINALG_HPP
#define BINCURVE_LINALG_HPP

#include <vector>

#include <Eigen/Core>

#include "bincurve/field.hpp"

namespace Eigen {

template <>
struct NumTraits<bincurve::Fp> : GenericNumTraits<bincurve::Fp> {
  using Real = bincurve::Fp;
  using NonInteger = bincurve::Fp;
  using Literal = bincurve::Fp;
  using Nested = bincurve::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<bincurve::Rational> : GenericNumTraits<bincurve::Rational> {
  using Real = bincurve::Rational;
  using NonInteger = bincurve::Rational;
  using Literal = bincurve::Rational;
  using Nested = bincurve::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace bincurve {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;      // reduced row echelon form, same shape as input
  std::vector<Index> pivots;   // pivot column of each nonzero row, ascending
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Gauss-Jordan to reduced row echelon form.
template <class Derived>
EchelonForm<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> out{m, {}};
  Matrix<Scalar>& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = row;
    while (piv < a.rows() && a(piv, col) == Scalar(0)) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = a(row, col).inverse();
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

// Rank by forward elimination only; cheaper than rref when no basis is needed.
template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = row;
    while (piv < a.rows() && a(piv, col) == Scalar(0)) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = a(row, col).inverse();
    for (Index i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == Scalar(0)) continue;
      const Scalar f = a(i, col) * inv;
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
  }
  return row;
}

template <class Derived>
Index nullity(const Eigen::MatrixBase<Derived>& m) {
  return m.cols() - rank(m);
}

// Basis of the right kernel, one vector per free column in ascending order.
// Each vector has a 1 at its free column and zeros at the other free columns,
// so the basis is unique for a given kernel.
template <class Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m,
                                                           const typename Derived::Scalar& one) {
  using Scalar = typename Derived::Scalar;
  const EchelonForm<Scalar> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(m.cols(), one - one);
    v(free) = one;
    for (Index r = 0; r < e.rank(); ++r) v(e.pivots[static_cast<std::size_t>(r)]) = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bincurve

#endif  // BINCURVE_LINALG_HPP

// Copyright 2026 The cohread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHREAD_LINALG_H_
#define COHREAD_LINALG_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cohread {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

/// Default tolerance for physicality checks (CPTP, POVM, density matrices).
inline constexpr double kPhysicalTol = 1e-10;
/// Default tolerance for structural identities (Hermiticity, round trips).
inline constexpr double kStructuralTol = 1e-12;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. Throws if dim == 0.
  explicit ComplexMatrix(std::size_t dim);
  /// Builds from nested rows; all rows must have the same length as the
  /// number of rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  /// The operator |row><col|.
  static ComplexMatrix basis_op(std::size_t dim, std::size_t row,
                                std::size_t col);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// Row-major entries; `entries.size()` must be a perfect square.
  static ComplexMatrix from_row_major(std::span<const Complex> entries);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Dense real matrix with arbitrary shape, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t row, std::size_t col) {
    return data_[row * cols_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const {
    return data_[row * cols_ + col];
  }
  std::span<const double> data() const { return data_; }

  RealVector column_sums() const;
  RealMatrix transpose() const;
  double max_abs() const;
  double frobenius_norm() const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

RealVector operator*(const RealMatrix& m, std::span<const double> v);

/// Hilbert-Schmidt inner product Tr(lhs^dagger rhs).
Complex hs_inner(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// True iff max |M_ij - conj(M_ji)| <= tol.
bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol);

/// Eigenvalues in ascending order with matching eigenvector columns.
struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi eigendecomposition of the Hermitian part
/// (M + M^dagger) / 2. Throws std::runtime_error if the sweep limit is hit.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

double min_eigenvalue_hermitian(const ComplexMatrix& m);

/// Kronecker product; `lhs` indexes the most significant factor.
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Column-stacked vectorization: index col * N + row.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(std::span<const Complex> v, std::size_t dim);

/// Solves the square system m * x = rhs with partial pivoting. Throws
/// std::domain_error when a pivot falls below `singular_tol` relative to the
/// largest entry of m.
RealVector solve_linear(const RealMatrix& m, std::span<const double> rhs,
                        double singular_tol = 1e-12);

/// Euclidean projection of `v` onto the probability simplex.
RealVector project_to_simplex(std::span<const double> v);

}  // namespace cohread

#endif  // COHREAD_LINALG_H_

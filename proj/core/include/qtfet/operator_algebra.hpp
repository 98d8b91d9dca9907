// Copyright 2026 The qtfet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace qtfet {

using Complex = std::complex<double>;

/// Dense square complex matrix with row-major storage.
///
/// Carrier for Hamiltonians, jump operators, density matrices and the
/// vectorized superoperator. Entry (r, c) lives at index r * dim + c.
class ComplexMatrix {
 public:
  /// Zero matrix. Throws DimensionError when dim == 0.
  explicit ComplexMatrix(std::size_t dim);

  /// Takes row-major entries; entries.size() must equal dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// The outer product |row><col| in a dim-dimensional basis.
  static ComplexMatrix outer(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  /// this += scale * other
  ComplexMatrix& add_scaled(const ComplexMatrix& other, Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
/// Matrix product. Zero entries of the left operand are skipped.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: entry (i*b.dim + k, j*b.dim + l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Left-to-right chained Kronecker product of three or more factors.
template <std::same_as<ComplexMatrix>... Rest>
  requires(sizeof...(Rest) > 0)
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, const Rest&... rest) {
  return kron(kron(a, b), rest...);
}

ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

/// ab - ba. Throws DimensionError on mismatched dims.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// ab + ba. Throws DimensionError on mismatched dims.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a) noexcept;

/// Reduced matrix of subsystem `keep` in a tensor-product space whose factor
/// dimensions are `dims` (leftmost factor varies slowest).
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::size_t keep);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& a) noexcept;
/// Largest entry magnitude of a - b. Throws DimensionError on mismatched dims.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |a - a^dagger|
double hermiticity_error(const ComplexMatrix& a) noexcept;

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-12);

/// Column-stacking vectorization: vec(a)[r + c * dim] = a(r, c).
std::vector<Complex> vectorize(const ComplexMatrix& a);
/// Inverse of vectorize. v.size() must be a perfect square.
ComplexMatrix unvectorize(std::span<const Complex> v);

/// Matrix-vector product a * v.
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v);

double norm2(std::span<const Complex> v) noexcept;

}  // namespace qtfet

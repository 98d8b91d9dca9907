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

#include "qtfet/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qtfet/errors.hpp"

namespace qtfet {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be at least 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be at least 1");
  if (entries_.size() != dim * dim) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim * dim) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) throw DimensionError("ComplexMatrix::outer: index out of range");
  ComplexMatrix m(dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(const ComplexMatrix& other, Complex scale) {
  require_same_dim(*this, other, "add_scaled");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += scale * other.entries_[i];
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) d(j, i) = std::conj(a(i, j));
  }
  return d;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& e : c.entries()) e = std::conj(e);
  return c;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

Complex trace(const ComplexMatrix& a) noexcept {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::size_t keep) {
  if (dims.empty()) throw DimensionError("partial_trace: empty subsystem list");
  if (keep >= dims.size()) {
    throw DimensionError("partial_trace: subsystem index " + std::to_string(keep) +
                         " out of range");
  }
  if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end()) {
    throw DimensionError("partial_trace: subsystem dimensions must be positive");
  }
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
  if (total != rho.dim()) {
    throw DimensionError("partial_trace: subsystem dimensions multiply to " +
                         std::to_string(total) + ", matrix has dimension " +
                         std::to_string(rho.dim()));
  }

  // Index = (outer * d_keep + kept) * inner + inner_index.
  std::size_t inner = 1;
  for (std::size_t s = keep + 1; s < dims.size(); ++s) inner *= dims[s];
  const std::size_t dk = dims[keep];
  const std::size_t outer = total / (inner * dk);

  ComplexMatrix reduced(dk);
  for (std::size_t a = 0; a < dk; ++a) {
    for (std::size_t b = 0; b < dk; ++b) {
      Complex sum{};
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t in = 0; in < inner; ++in) {
          sum += rho((o * dk + a) * inner + in, (o * dk + b) * inner + in);
        }
      }
      reduced(a, b) = sum;
    }
  }
  return reduced;
}

double max_abs(const ComplexMatrix& a) noexcept {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

double hermiticity_error(const ComplexMatrix& a) noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

std::vector<Complex> vectorize(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> v(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) v[r + c * n] = a(r, c);
  }
  return v;
}

ComplexMatrix unvectorize(std::span<const Complex> v) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n == 0 || n * n != v.size()) {
    throw DimensionError("unvectorize: length " + std::to_string(v.size()) +
                         " is not a positive perfect square");
  }
  ComplexMatrix a(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) a(r, c) = v[r + c * n];
  }
  return a;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v) {
  if (v.size() != a.dim()) {
    throw DimensionError("matvec: vector length " + std::to_string(v.size()) +
                         " does not match matrix dimension " + std::to_string(a.dim()));
  }
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < a.dim(); ++j) sum += a(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

double norm2(std::span<const Complex> v) noexcept {
  double s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return std::sqrt(s);
}

}  // namespace qtfet

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

#include "qtfet/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "eigen_bridge.hpp"
#include "qtfet/errors.hpp"

namespace qtfet {

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  const Eigen::MatrixXcd m = detail::to_eigen(a);
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

StateDiagnostics diagnose(const ComplexMatrix& rho) {
  return {hermiticity_error(rho), std::abs(trace(rho) - 1.0), hermitian_eigenvalues(rho).front()};
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(a - b)) sum += std::abs(ev);
  return 0.5 * sum;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, const StateTolerances& tol)
    : mat_(std::move(mat)), diagnostics_(diagnose(mat_)) {
  if (!diagnostics_.within(tol)) {
    std::ostringstream msg;
    msg << "not a valid density matrix: hermiticity error " << diagnostics_.hermiticity_error
        << ", trace error " << diagnostics_.trace_error << ", min eigenvalue "
        << diagnostics_.min_eigenvalue;
    throw ConsistencyError(msg.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

}  // namespace qtfet

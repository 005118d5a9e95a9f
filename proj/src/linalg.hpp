// Copyright 2026 The btgates Authors
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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace btg {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kUnitarityTol = 1e-10;

inline double unitarity_error(const CMatrix &u) {
    if (u.rows() != u.cols()) return 1.0;
    return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

inline bool is_unitary(const CMatrix &u, double tol = kUnitarityTol) { return unitarity_error(u) < tol; }

/// max |a - e^{i phi} b| with phi chosen from Tr(b^dagger a); global phase is quotiented out.
inline double phase_distance(const CMatrix &a, const CMatrix &b) {
    const cplx overlap = (b.adjoint() * a).trace();
    const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

inline double max_abs(const CMatrix &a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

inline double offdiagonal_max(const CMatrix &a) {
    CMatrix d = a;
    d.diagonal().setZero();
    return max_abs(d);
}

}  // namespace btg

// Copyright 2026 The repdec developers
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

#ifndef REPDEC_LINALG_H
#define REPDEC_LINALG_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace repdec {

using cdouble = std::complex<double>;

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// log |det| plus the accumulated phase (arg of the determinant, defined
/// modulo 2*pi).
struct LogDet {
    double log_abs = 0.0;
    double phase = 0.0;
};

template <typename Real>
struct SparseEntryT {
    uint32_t col;
    std::complex<Real> value;
};
using SparseEntry = SparseEntryT<double>;

/// In-place dense LU with partial pivoting; `a` is row-major n x n.
/// Instantiated for double and long double.
template <typename Real>
LogDet log_det_dense_t(std::vector<std::complex<Real>> &a, size_t n);

/// Sparse LU with Markowitz-style pivoting (fewest-entry column, rook
/// magnitude threshold within it). Rows are consumed.
template <typename Real>
LogDet log_det_sparse_t(std::vector<std::vector<SparseEntryT<Real>>> rows);

inline LogDet log_det_dense(std::vector<cdouble> &a, size_t n) {
    return log_det_dense_t<double>(a, n);
}
inline LogDet log_det_sparse(std::vector<std::vector<SparseEntry>> rows) {
    return log_det_sparse_t<double>(std::move(rows));
}

}  // namespace repdec

#endif

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

#include "repdec/linalg.h"

#include <algorithm>
#include <cmath>

namespace repdec {

namespace {

// Parity of the permutation k -> perm[k], via cycle decomposition.
int permutation_sign(const std::vector<uint32_t> &perm) {
    std::vector<uint8_t> seen(perm.size(), 0);
    size_t transpositions = 0;
    for (size_t k = 0; k < perm.size(); k++) {
        if (seen[k]) {
            continue;
        }
        size_t len = 0;
        size_t j = k;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            len++;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

constexpr double kSingularTol = 1e-300;

// Rook-style magnitude threshold for sparsity-guided pivoting: a pivot must
// be within this factor of the largest entry in both its column and its row,
// which bounds growth in both triangular factors.
constexpr double kPivotThreshold = 0.25;

}  // namespace

template <typename Real>
LogDet log_det_dense_t(std::vector<std::complex<Real>> &a, size_t n) {
    using C = std::complex<Real>;
    LogDet result;
    int sign_swaps = 0;
    for (size_t k = 0; k < n; k++) {
        size_t best = k;
        Real best_mag = std::abs(a[k * n + k]);
        for (size_t i = k + 1; i < n; i++) {
            Real mag = std::abs(a[i * n + k]);
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (best_mag < (Real)kSingularTol) {
            throw SingularMatrixError("dense LU hit a numerically singular pivot");
        }
        if (best != k) {
            for (size_t j = 0; j < n; j++) {
                std::swap(a[k * n + j], a[best * n + j]);
            }
            sign_swaps ^= 1;
        }
        C piv = a[k * n + k];
        result.log_abs += (double)std::log(std::abs(piv));
        result.phase += (double)std::arg(piv);
        C inv = C(1) / piv;
        for (size_t i = k + 1; i < n; i++) {
            C f = a[i * n + k] * inv;
            if (f == C{}) {
                continue;
            }
            a[i * n + k] = {};
            for (size_t j = k + 1; j < n; j++) {
                a[i * n + j] -= f * a[k * n + j];
            }
        }
    }
    if (sign_swaps) {
        result.phase += std::acos(-1.0);
    }
    return result;
}

template <typename Real>
LogDet log_det_sparse_t(std::vector<std::vector<SparseEntryT<Real>>> rows) {
    using C = std::complex<Real>;
    const size_t n = rows.size();
    LogDet result;
    if (n == 0) {
        return result;
    }

    std::vector<std::vector<uint32_t>> col_rows(n);
    std::vector<uint32_t> col_count(n, 0);
    for (uint32_t i = 0; i < n; i++) {
        for (const auto &e : rows[i]) {
            col_rows[e.col].push_back(i);
            col_count[e.col]++;
        }
    }

    std::vector<uint8_t> row_active(n, 1), col_active(n, 1);
    std::vector<uint32_t> pivot_rows, pivot_cols;
    pivot_rows.reserve(n);
    pivot_cols.reserve(n);

    std::vector<C> work(n, C{});
    std::vector<uint32_t> stamp(n, UINT32_MAX);
    std::vector<uint32_t> pattern;
    uint32_t epoch = 0;

    auto row_value = [&rows](uint32_t i, uint32_t col) {
        for (const auto &e : rows[i]) {
            if (e.col == col) {
                return e.value;
            }
        }
        return C{};
    };

    for (size_t step = 0; step < n; step++) {
        uint32_t jp = UINT32_MAX;
        uint32_t best_count = UINT32_MAX;
        for (uint32_t j = 0; j < n; j++) {
            if (col_active[j] && col_count[j] < best_count) {
                best_count = col_count[j];
                jp = j;
            }
        }
        if (jp == UINT32_MAX) {
            throw std::logic_error("sparse LU ran out of columns");
        }

        auto &candidates = col_rows[jp];
        candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                        [&](uint32_t i) {
                                            return !row_active[i] || row_value(i, jp) == C{};
                                        }),
                         candidates.end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        col_count[jp] = (uint32_t)candidates.size();

        Real col_max = 0;
        for (uint32_t i : candidates) {
            col_max = std::max(col_max, std::abs(row_value(i, jp)));
        }
        if (col_max < (Real)kSingularTol) {
            throw SingularMatrixError("sparse LU hit a numerically singular column");
        }
        auto row_max = [&](uint32_t i) {
            Real mx = 0;
            for (const auto &e : rows[i]) {
                if (col_active[e.col] || e.col == jp) {
                    mx = std::max(mx, std::abs(e.value));
                }
            }
            return mx;
        };
        uint32_t ip = UINT32_MAX;
        size_t ip_len = SIZE_MAX;
        for (uint32_t i : candidates) {
            if (rows[i].size() >= ip_len) {
                continue;
            }
            Real mag = std::abs(row_value(i, jp));
            if (mag >= (Real)kPivotThreshold * col_max &&
                mag >= (Real)kPivotThreshold * row_max(i)) {
                ip_len = rows[i].size();
                ip = i;
            }
        }
        if (ip == UINT32_MAX) {
            Real best = -1;
            for (uint32_t i : candidates) {
                Real mag = std::abs(row_value(i, jp));
                if (mag > best) {
                    best = mag;
                    ip = i;
                }
            }
        }

        C piv = row_value(ip, jp);
        result.log_abs += (double)std::log(std::abs(piv));
        result.phase += (double)std::arg(piv);
        pivot_rows.push_back(ip);
        pivot_cols.push_back(jp);
        row_active[ip] = 0;
        col_active[jp] = 0;

        C inv = C(1) / piv;
        std::vector<uint32_t> targets = candidates;
        for (uint32_t i : targets) {
            if (!row_active[i]) {
                continue;
            }
            C f = row_value(i, jp) * inv;
            if (f == C{}) {
                continue;
            }
            epoch++;
            pattern.clear();
            for (const auto &e : rows[i]) {
                if (e.col == jp) {
                    continue;
                }
                stamp[e.col] = epoch;
                work[e.col] = e.value;
                pattern.push_back(e.col);
            }
            for (const auto &e : rows[ip]) {
                if (e.col == jp) {
                    continue;
                }
                if (stamp[e.col] == epoch) {
                    work[e.col] -= f * e.value;
                } else {
                    stamp[e.col] = epoch;
                    work[e.col] = -f * e.value;
                    pattern.push_back(e.col);
                    col_rows[e.col].push_back(i);
                    col_count[e.col]++;
                }
            }
            rows[i].clear();
            for (uint32_t col : pattern) {
                rows[i].push_back({col, work[col]});
            }
        }
        rows[ip].erase(std::remove_if(rows[ip].begin(), rows[ip].end(),
                                      [jp](const SparseEntryT<Real> &e) { return e.col == jp; }),
                       rows[ip].end());
        for (const auto &e : rows[ip]) {
            if (col_count[e.col] > 0) {
                col_count[e.col]--;
            }
        }
    }

    double pi = std::acos(-1.0);
    if (permutation_sign(pivot_rows) * permutation_sign(pivot_cols) < 0) {
        result.phase += pi;
    }
    return result;
}

template LogDet log_det_dense_t<double>(std::vector<std::complex<double>> &, size_t);
template LogDet log_det_dense_t<long double>(std::vector<std::complex<long double>> &, size_t);
template LogDet log_det_sparse_t<double>(std::vector<std::vector<SparseEntryT<double>>>);
template LogDet log_det_sparse_t<long double>(std::vector<std::vector<SparseEntryT<long double>>>);

}  // namespace repdec

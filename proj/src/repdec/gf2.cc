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

#include "repdec/gf2.h"

namespace repdec {

Gf2Solver::Gf2Solver(std::vector<BitVec> rows, size_t cols) : cols_(cols), n_rows_(rows.size()) {
    reduced_ = std::move(rows);
    transform_.resize(n_rows_);
    for (size_t i = 0; i < n_rows_; i++) {
        transform_[i] = BitVec(n_rows_);
        transform_[i].set(i, true);
    }

    size_t next_row = 0;
    for (size_t col = 0; col < cols_ && next_row < n_rows_; col++) {
        size_t pivot = SIZE_MAX;
        for (size_t i = next_row; i < n_rows_; i++) {
            if (reduced_[i].get(col)) {
                pivot = i;
                break;
            }
        }
        if (pivot == SIZE_MAX) {
            continue;
        }
        std::swap(reduced_[pivot], reduced_[next_row]);
        std::swap(transform_[pivot], transform_[next_row]);
        for (size_t i = 0; i < n_rows_; i++) {
            if (i != next_row && reduced_[i].get(col)) {
                reduced_[i] ^= reduced_[next_row];
                transform_[i] ^= transform_[next_row];
            }
        }
        pivot_cols_.push_back((uint32_t)col);
        next_row++;
    }
}

std::optional<BitVec> Gf2Solver::solve(const BitVec &b) const {
    BitVec x(cols_);
    for (size_t i = 0; i < n_rows_; i++) {
        bool rhs = transform_[i].parity_and(b);
        if (i < pivot_cols_.size()) {
            if (rhs) {
                x.set(pivot_cols_[i], true);
            }
        } else if (rhs) {
            return std::nullopt;  // inconsistent row
        }
    }
    return x;
}

}  // namespace repdec

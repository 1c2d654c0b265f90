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

#ifndef REPDEC_GF2_H
#define REPDEC_GF2_H

#include <cstdint>
#include <optional>
#include <vector>

namespace repdec {

/// Packed GF(2) row vector.
class BitVec {
 public:
    BitVec() = default;
    explicit BitVec(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {
    }
    size_t size() const {
        return bits_;
    }
    bool get(size_t k) const {
        return words_[k / 64] >> (k % 64) & 1;
    }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t(1) << (k % 64);
        words_[k / 64] = v ? (words_[k / 64] | m) : (words_[k / 64] & ~m);
    }
    void flip(size_t k) {
        words_[k / 64] ^= uint64_t(1) << (k % 64);
    }
    void operator^=(const BitVec &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
    }
    bool parity_and(const BitVec &other) const {
        uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            acc ^= words_[w] & other.words_[w];
        }
        return __builtin_parityll(acc);
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool operator==(const BitVec &other) const = default;

 private:
    size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Precomputed row reduction of a GF(2) matrix for repeated solves of
/// A x = b. Rows of A are given packed over `cols` bits.
class Gf2Solver {
 public:
    Gf2Solver(std::vector<BitVec> rows, size_t cols);

    size_t rank() const {
        return pivot_cols_.size();
    }
    /// A particular solution, or nullopt when b is outside the column space.
    std::optional<BitVec> solve(const BitVec &b) const;

 private:
    size_t cols_ = 0;
    size_t n_rows_ = 0;
    std::vector<BitVec> reduced_;     // RREF rows
    std::vector<BitVec> transform_;   // row ops: reduced = transform * A
    std::vector<uint32_t> pivot_cols_;
};

}  // namespace repdec

#endif

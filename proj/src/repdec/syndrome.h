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

#ifndef REPDEC_SYNDROME_H
#define REPDEC_SYNDROME_H

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace repdec {

/// Fixed-width bit matrix, one row per shot.
class BitMatrix {
 public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t bits_per_row)
        : rows_(rows), bits_(bits_per_row), stride_((bits_per_row + 63) / 64),
          words_(rows * ((bits_per_row + 63) / 64), 0) {
    }

    size_t rows() const {
        return rows_;
    }
    size_t bits_per_row() const {
        return bits_;
    }
    bool get(size_t row, size_t bit) const {
        return words_[row * stride_ + bit / 64] >> (bit % 64) & 1;
    }
    void set(size_t row, size_t bit, bool v) {
        uint64_t &w = words_[row * stride_ + bit / 64];
        uint64_t m = uint64_t(1) << (bit % 64);
        w = v ? (w | m) : (w & ~m);
    }
    void xor_bit(size_t row, size_t bit) {
        words_[row * stride_ + bit / 64] ^= uint64_t(1) << (bit % 64);
    }
    const uint64_t *row_words(size_t row) const {
        return words_.data() + row * stride_;
    }
    uint64_t *row_words(size_t row) {
        return words_.data() + row * stride_;
    }
    size_t stride_words() const {
        return stride_;
    }
    std::vector<uint8_t> row_bits(size_t row) const;

    bool operator==(const BitMatrix &other) const = default;

 private:
    size_t rows_ = 0;
    size_t bits_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> words_;
};

/// Detector outcomes per shot, plus (optionally) the observed logical flips
/// used for scoring. Immutable in normal use; operations return new batches.
struct SyndromeBatch {
    size_t shots = 0;
    uint32_t detector_count = 0;
    uint32_t observable_count = 0;
    BitMatrix detector_bits;                // shots x detector_count
    bool has_observables = false;
    BitMatrix observable_bits;              // shots x observable_count when present
};

// "01" format: one ASCII row per shot, detector bits then observable bits.
// "b8" format: little-endian packed bytes per shot, detectors padded to a
// byte boundary; observables live in a separate file.
void write_batch_01(const SyndromeBatch &batch, std::ostream &out);
SyndromeBatch read_batch_01(std::istream &in, uint32_t detector_count, uint32_t observable_count);

void write_bits_b8(const BitMatrix &bits, std::ostream &out);
BitMatrix read_bits_b8(std::istream &in, uint32_t bits_per_row);

}  // namespace repdec

#endif

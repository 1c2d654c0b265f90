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

#include "repdec/syndrome.h"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace repdec {

std::vector<uint8_t> BitMatrix::row_bits(size_t row) const {
    std::vector<uint8_t> out(bits_);
    for (size_t b = 0; b < bits_; b++) {
        out[b] = get(row, b);
    }
    return out;
}

void write_batch_01(const SyndromeBatch &batch, std::ostream &out) {
    std::string line;
    for (size_t s = 0; s < batch.shots; s++) {
        line.clear();
        for (uint32_t d = 0; d < batch.detector_count; d++) {
            line.push_back(batch.detector_bits.get(s, d) ? '1' : '0');
        }
        if (batch.has_observables) {
            for (uint32_t o = 0; o < batch.observable_count; o++) {
                line.push_back(batch.observable_bits.get(s, o) ? '1' : '0');
            }
        }
        line.push_back('\n');
        out.write(line.data(), (std::streamsize)line.size());
    }
}

SyndromeBatch read_batch_01(std::istream &in, uint32_t detector_count, uint32_t observable_count) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        size_t expect_with = detector_count + observable_count;
        if (line.size() != detector_count && line.size() != expect_with) {
            throw std::invalid_argument(
                "01 row has " + std::to_string(line.size()) + " bits, expected " +
                std::to_string(detector_count) + " or " + std::to_string(expect_with));
        }
        lines.push_back(line);
    }
    SyndromeBatch batch;
    batch.shots = lines.size();
    batch.detector_count = detector_count;
    batch.observable_count = observable_count;
    batch.detector_bits = BitMatrix(batch.shots, detector_count);
    bool with_obs = !lines.empty() && lines[0].size() > detector_count;
    batch.has_observables = with_obs;
    if (with_obs) {
        batch.observable_bits = BitMatrix(batch.shots, observable_count);
    }
    for (size_t s = 0; s < lines.size(); s++) {
        const std::string &row = lines[s];
        if ((row.size() > detector_count) != with_obs) {
            throw std::invalid_argument("mixed 01 rows with and without observables");
        }
        for (size_t b = 0; b < row.size(); b++) {
            if (row[b] != '0' && row[b] != '1') {
                throw std::invalid_argument("01 row contains a character other than 0/1");
            }
            bool v = row[b] == '1';
            if (b < detector_count) {
                batch.detector_bits.set(s, b, v);
            } else {
                batch.observable_bits.set(s, b - detector_count, v);
            }
        }
    }
    return batch;
}

void write_bits_b8(const BitMatrix &bits, std::ostream &out) {
    size_t bytes_per_row = (bits.bits_per_row() + 7) / 8;
    std::vector<char> buf(bytes_per_row);
    for (size_t s = 0; s < bits.rows(); s++) {
        std::fill(buf.begin(), buf.end(), 0);
        for (size_t b = 0; b < bits.bits_per_row(); b++) {
            if (bits.get(s, b)) {
                buf[b / 8] |= char(1 << (b % 8));
            }
        }
        out.write(buf.data(), (std::streamsize)bytes_per_row);
    }
}

BitMatrix read_bits_b8(std::istream &in, uint32_t bits_per_row) {
    size_t bytes_per_row = (bits_per_row + 7) / 8;
    std::vector<char> payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes_per_row == 0) {
        return BitMatrix(0, 0);
    }
    if (payload.size() % bytes_per_row != 0) {
        throw std::invalid_argument("b8 payload is not a whole number of rows");
    }
    size_t rows = payload.size() / bytes_per_row;
    BitMatrix bits(rows, bits_per_row);
    for (size_t s = 0; s < rows; s++) {
        const char *row = payload.data() + s * bytes_per_row;
        for (size_t b = 0; b < bits_per_row; b++) {
            if (row[b / 8] >> (b % 8) & 1) {
                bits.set(s, b, true);
            }
        }
    }
    return bits;
}

}  // namespace repdec

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

#ifndef REPDEC_DEM_H
#define REPDEC_DEM_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace repdec {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonGraphlikeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One independent error mechanism: fires with `probability`, flips the
/// detectors listed in `detectors` (0, 1 or 2 of them for graphlike models)
/// and the logical observables selected by `logical_mask`.
struct ErrorMechanism {
    std::vector<uint32_t> detectors;  // sorted, distinct
    uint64_t logical_mask = 0;
    double probability = 0.0;

    bool operator==(const ErrorMechanism &other) const = default;
};

/// Optional (column, round) grid position of a detector.
struct DetectorCoord {
    bool present = false;
    double column = 0.0;
    double round = 0.0;

    bool operator==(const DetectorCoord &other) const = default;
};

struct DetectorErrorModel {
    uint32_t detector_count = 0;
    uint32_t observable_count = 0;
    std::vector<ErrorMechanism> mechanisms;
    std::vector<DetectorCoord> coords;  // empty, or sized detector_count

    bool has_coords() const;
    /// Throws std::invalid_argument when an index is out of range, a
    /// probability is outside [0, 1), or a mechanism repeats a detector.
    void validate() const;

    bool operator==(const DetectorErrorModel &other) const = default;
};

// Text format, a subset of the Stim DEM convention plus explicit count
// declarations so empty models survive a round trip:
//   detectors <n>
//   observables <n>
//   detector(<column>, <round>) D<k>
//   error(<p>) D<i> D<j> L<k>
// '#' starts a comment; blank lines are ignored.
DetectorErrorModel parse_dem(std::istream &in);
DetectorErrorModel parse_dem(const std::string &text);
void write_dem(const DetectorErrorModel &model, std::ostream &out);
std::string write_dem(const DetectorErrorModel &model);

/// XOR-combines every group of mechanisms sharing (detectors, logical_mask):
/// p = p1 (1 - p2) + p2 (1 - p1), folded pairwise. Order of first occurrence
/// is kept. Idempotent.
DetectorErrorModel merge_parallel(const DetectorErrorModel &model);

/// Throws NonGraphlike when any mechanism touches three or more detectors.
void validate_graphlike(const DetectorErrorModel &model);

/// XOR of two firing probabilities (parity-of-occurrence probability).
double xor_probability(double p1, double p2);

/// Clamp used whenever a probability is converted to a coupling or weight.
double clamp_decode_probability(double p);

}  // namespace repdec

#endif

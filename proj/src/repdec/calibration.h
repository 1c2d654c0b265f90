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

#ifndef REPDEC_CALIBRATION_H
#define REPDEC_CALIBRATION_H

#include <string>

#include "repdec/dem.h"
#include "repdec/syndrome.h"

namespace repdec {

/// Pairwise correlation analysis of a detector stream against a model
/// skeleton: which detector pairs are edges comes from the skeleton, the
/// probabilities come from the data.
struct CorrelationReport {
    uint32_t detector_count = 0;
    size_t shots = 0;
    std::vector<double> detector_means;

    struct EdgeEstimate {
        uint32_t mechanism = 0;   // index into the skeleton's mechanisms
        uint32_t det_i = 0, det_j = 0;
        double pair_mean = 0.0;   // <x_i x_j>
        double p_hat = 0.0;
        bool clamped = false;
    };
    std::vector<EdgeEstimate> edges;

    struct BoundaryEstimate {
        uint32_t mechanism = 0;
        uint32_t det = 0;
        double p_hat = 0.0;      // raw deconvolved value, possibly non-physical
        bool clamped = false;    // clamped during estimation (upper range only)
    };
    std::vector<BoundaryEstimate> boundaries;

    struct Correction {
        uint32_t mechanism = 0;
        double raw = 0.0;
        double corrected = 0.0;
        std::string reason;
    };
    std::vector<Correction> corrections;  // filled by estimate and correct stages

    // Optional full pairwise heatmap (row-major detector_count^2), kept only
    // when requested.
    bool has_heatmap = false;
    std::vector<double> heatmap;
};

/// Two-point estimator for every skeleton edge, then boundary probabilities
/// by peeling the edge contributions off each detector mean (descending
/// p-hat). Negative discriminants clamp to the floor and are logged.
CorrelationReport estimate_pij(const SyndromeBatch &batch, const DetectorErrorModel &skeleton,
                               bool keep_heatmap = false);

enum class BoundaryPolicy {
    ClampToEmpirical,
    Reject,
};

struct BoundaryCorrectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decode-ready model with the skeleton's structure and the report's
/// probabilities. Non-physical boundary values become `empirical_value`
/// under the clamp policy (logged in the report copy inside the result) or
/// abort under the reject policy.
struct CalibratedModel {
    DetectorErrorModel model;
    CorrelationReport report;  // with corrections appended
};
CalibratedModel correct_boundaries(const CorrelationReport &report,
                                   const DetectorErrorModel &skeleton, BoundaryPolicy policy,
                                   double empirical_value = 1e-4);

}  // namespace repdec

#endif

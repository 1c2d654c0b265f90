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

#ifndef REPDEC_CODE_CAPACITY_H
#define REPDEC_CODE_CAPACITY_H

#include <string>

#include "repdec/decode_context.h"
#include "repdec/decoder.h"

namespace repdec {

enum class CodeFamily {
    Surface,
    RotatedSurface,
};

CodeFamily parse_code_family(const std::string &name);

/// Code-capacity noise splits into independent X and Z subproblems; each is
/// an ordinary graphlike model whose detectors are the opposite-type
/// stabilizers. `qubits` keeps the qubit-level signatures for sampling
/// correlated (depolarizing) noise.
struct CodeCapacityModel {
    uint32_t distance = 0;
    CodeFamily family = CodeFamily::Surface;
    DetectorErrorModel x_dem;  // decodes X errors via Z-stabilizer syndromes
    DetectorErrorModel z_dem;  // decodes Z errors via X-stabilizer syndromes

    struct Qubit {
        std::vector<uint32_t> x_detectors;
        uint64_t x_mask = 0;
        std::vector<uint32_t> z_detectors;
        uint64_t z_mask = 0;
    };
    std::vector<Qubit> qubits;
};

CodeCapacityModel build_code_capacity_model(CodeFamily family, uint32_t distance, double p_x,
                                            double p_z);

struct CodeCapacityContexts {
    CodeCapacityModel model;
    DecodeContext x_context;
    DecodeContext z_context;
};

/// Pair of decode contexts for the X and Z subproblems (Lx and Lz multiply).
CodeCapacityContexts build_code_capacity_context(CodeFamily family, uint32_t distance, double p_x,
                                                 double p_z);

struct CodeCapacityStats {
    size_t shots = 0;
    size_t x_failures = 0;
    size_t z_failures = 0;
    size_t any_failures = 0;
};

/// Monte Carlo memory trial. With depolarizing=true, `strength` is the
/// depolarizing rate (X, Y, Z each strength/3, Y correlating the
/// subproblems); otherwise X and Z components each flip independently with
/// probability `strength`.
CodeCapacityStats run_code_capacity_trial(const CodeCapacityContexts &ctx, bool depolarizing,
                                          double strength, size_t shots, uint64_t seed,
                                          uint32_t threads = 1);

}  // namespace repdec

#endif

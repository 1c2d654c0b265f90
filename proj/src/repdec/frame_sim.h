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

#ifndef REPDEC_FRAME_SIM_H
#define REPDEC_FRAME_SIM_H

#include <cstdint>
#include <vector>

#include "repdec/dem.h"
#include "repdec/noise.h"
#include "repdec/syndrome.h"

namespace repdec {

/// Detector/observable footprint of one fault outcome.
struct FaultSignature {
    std::vector<uint32_t> detectors;  // sorted
    uint64_t logical_mask = 0;
};

/// Number of distinct outcomes of a channel (1 for a flip, 3/15 for
/// depolarizing channels); each outcome fires with site.probability / count.
uint32_t channel_outcome_count(ChannelKind kind);

/// Deterministically propagates a single fault outcome through the Clifford
/// circuit and reports which detectors and observables it flips.
FaultSignature fault_signature(const NoisyCircuit &noisy, size_t site_index, uint32_t outcome);

/// Extracts the detector error model: one mechanism per distinct signature
/// per site (mutually exclusive outcomes of one site add), then parallel
/// mechanisms across sites are XOR-merged. Detector coordinates are attached
/// when the circuit carries grid metadata.
DetectorErrorModel extract_dem(const NoisyCircuit &noisy);

/// Pauli-frame Monte Carlo. Identical (seed, shots) give bit-identical
/// batches regardless of threading. `first_shot` offsets the per-shot RNG
/// substream so a run can be produced in chunks.
SyndromeBatch sample_syndromes(const NoisyCircuit &noisy, size_t shots, uint64_t seed,
                               uint32_t threads = 1, size_t first_shot = 0);

/// Runs one shot with an explicit list of (site, outcome) faults and nothing
/// else firing. Test hook for signature and linearity checks.
struct ForcedFault {
    size_t site_index;
    uint32_t outcome;
};
FaultSignature simulate_with_faults(const NoisyCircuit &noisy,
                                    const std::vector<ForcedFault> &faults);

}  // namespace repdec

#endif

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

#ifndef REPDEC_CIRCUIT_H
#define REPDEC_CIRCUIT_H

#include <cstdint>
#include <vector>

namespace repdec {

enum class OpType : uint8_t {
    Reset,
    Measure,
    Idle,
    CX,
    Tick,
};

// Idle ops are tagged with where they happen; the noise models weight a qubit
// idling under a gate layer differently from one idling under measure+reset.
enum class IdleKind : uint8_t {
    GateLayer,
    MeasureReset,
};

struct CircuitOp {
    OpType type;
    uint32_t q0 = 0;          // target (Reset/Measure/Idle), control (CX)
    uint32_t q1 = 0;          // target (CX)
    int32_t record = -1;      // measurement record index (Measure)
    IdleKind idle_kind = IdleKind::GateLayer;
};

struct Circuit {
    uint32_t qubit_count = 0;
    std::vector<CircuitOp> ops;
    uint32_t record_count = 0;
    std::vector<std::vector<uint32_t>> detectors;    // XOR lists of record indices
    std::vector<std::vector<uint32_t>> observables;  // XOR lists of record indices

    // Grid metadata when built by build_repetition_circuit: detector
    // t*(d-1)+c sits at column c, round t.
    uint32_t distance = 0;
    uint32_t rounds = 0;
};

/// Bit-flip repetition code memory circuit: d data qubits (0..d-1), d-1
/// ancillas (d..2d-2), r rounds of CX/CX/measure+reset, then a final data
/// measurement. Produces (d-1)(r+1) detectors and one logical observable
/// (the final measurement of data qubit 0).
Circuit build_repetition_circuit(uint32_t distance, uint32_t rounds);

}  // namespace repdec

#endif

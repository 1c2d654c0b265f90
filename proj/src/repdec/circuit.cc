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

#include "repdec/circuit.h"

#include <stdexcept>

namespace repdec {

Circuit build_repetition_circuit(uint32_t distance, uint32_t rounds) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument("distance must be an odd integer >= 3");
    }
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be >= 1");
    }
    const uint32_t d = distance;
    const uint32_t r = rounds;
    const uint32_t n_anc = d - 1;
    auto data = [](uint32_t j) { return j; };
    auto anc = [d](uint32_t i) { return d + i; };

    Circuit c;
    c.qubit_count = d + n_anc;
    c.distance = d;
    c.rounds = r;

    auto push = [&c](CircuitOp op) { c.ops.push_back(op); };
    auto measure = [&](uint32_t q) {
        push({OpType::Measure, q, 0, (int32_t)c.record_count});
        c.record_count++;
    };

    for (uint32_t j = 0; j < d; j++) {
        push({OpType::Reset, data(j)});
    }
    for (uint32_t i = 0; i < n_anc; i++) {
        push({OpType::Reset, anc(i)});
    }

    // Round-t ancilla records start at t * n_anc.
    for (uint32_t t = 0; t < r; t++) {
        push({OpType::Tick});
        // Layer A: each ancilla takes its left data neighbor.
        for (uint32_t i = 0; i < n_anc; i++) {
            push({OpType::CX, data(i), anc(i)});
        }
        push({OpType::Idle, data(d - 1), 0, -1, IdleKind::GateLayer});
        push({OpType::Tick});
        // Layer B: each ancilla takes its right data neighbor.
        for (uint32_t i = 0; i < n_anc; i++) {
            push({OpType::CX, data(i + 1), anc(i)});
        }
        push({OpType::Idle, data(0), 0, -1, IdleKind::GateLayer});
        push({OpType::Tick});
        // Measurement step, then reset step; data qubits idle through both.
        for (uint32_t i = 0; i < n_anc; i++) {
            measure(anc(i));
        }
        for (uint32_t j = 0; j < d; j++) {
            push({OpType::Idle, data(j), 0, -1, IdleKind::MeasureReset});
        }
        push({OpType::Tick});
        for (uint32_t i = 0; i < n_anc; i++) {
            push({OpType::Reset, anc(i)});
        }
        for (uint32_t j = 0; j < d; j++) {
            push({OpType::Idle, data(j), 0, -1, IdleKind::MeasureReset});
        }
    }

    push({OpType::Tick});
    const uint32_t first_data_rec = c.record_count;
    for (uint32_t j = 0; j < d; j++) {
        measure(data(j));
    }

    auto anc_rec = [&](uint32_t t, uint32_t i) { return t * n_anc + i; };
    auto data_rec = [&](uint32_t j) { return first_data_rec + j; };

    // Detector t*(d-1)+c compares ancilla c's round-t outcome against round
    // t-1 (or the initial reset for t=0); the final row compares the data
    // measurements against the last ancilla round.
    for (uint32_t t = 0; t <= r; t++) {
        for (uint32_t i = 0; i < n_anc; i++) {
            std::vector<uint32_t> recs;
            if (t == 0) {
                recs = {anc_rec(0, i)};
            } else if (t < r) {
                recs = {anc_rec(t, i), anc_rec(t - 1, i)};
            } else {
                recs = {data_rec(i), data_rec(i + 1), anc_rec(r - 1, i)};
            }
            c.detectors.push_back(std::move(recs));
        }
    }
    c.observables.push_back({data_rec(0)});
    return c;
}

}  // namespace repdec

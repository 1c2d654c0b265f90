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

#include "repdec/frame_sim.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "repdec/rng.h"

namespace repdec {

namespace {

// Pauli encoding: 0=I, 1=X, 2=Y, 3=Z.
struct Frames {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;

    explicit Frames(uint32_t qubits) : x(qubits, 0), z(qubits, 0) {
    }
    void apply(uint32_t q, uint8_t pauli) {
        x[q] ^= (pauli == 1 || pauli == 2);
        z[q] ^= (pauli == 2 || pauli == 3);
    }
    void apply_op(const CircuitOp &op, std::vector<uint8_t> &records) {
        switch (op.type) {
            case OpType::Reset:
                x[op.q0] = 0;
                z[op.q0] = 0;
                break;
            case OpType::Measure:
                records[op.record] ^= x[op.q0];
                break;
            case OpType::CX:
                x[op.q1] ^= x[op.q0];
                z[op.q0] ^= z[op.q1];
                break;
            case OpType::Idle:
            case OpType::Tick:
                break;
        }
    }
};

bool site_acts_before(const NoisyCircuit &noisy, const FaultSite &site) {
    return noisy.circuit.ops[site.op_index].type == OpType::Measure;
}

void apply_outcome(Frames &frames, const NoisyCircuit &noisy, const FaultSite &site,
                   uint32_t outcome) {
    const CircuitOp &op = noisy.circuit.ops[site.op_index];
    switch (site.kind) {
        case ChannelKind::FlipX:
            frames.apply(op.q0, 1);
            break;
        case ChannelKind::Depolarize1:
            frames.apply(op.q0, (uint8_t)(outcome + 1));
            break;
        case ChannelKind::Depolarize2: {
            uint32_t pair = outcome + 1;  // 1..15, base-4 digits (control, target)
            frames.apply(op.q0, (uint8_t)(pair >> 2));
            frames.apply(op.q1, (uint8_t)(pair & 3));
            break;
        }
    }
}

FaultSignature signature_from_records(const Circuit &circuit, const std::vector<uint8_t> &records) {
    FaultSignature sig;
    for (uint32_t k = 0; k < (uint32_t)circuit.detectors.size(); k++) {
        uint8_t parity = 0;
        for (uint32_t rec : circuit.detectors[k]) {
            parity ^= records[rec];
        }
        if (parity) {
            sig.detectors.push_back(k);
        }
    }
    for (uint32_t k = 0; k < (uint32_t)circuit.observables.size(); k++) {
        uint8_t parity = 0;
        for (uint32_t rec : circuit.observables[k]) {
            parity ^= records[rec];
        }
        if (parity) {
            sig.logical_mask |= uint64_t(1) << k;
        }
    }
    return sig;
}

}  // namespace

uint32_t channel_outcome_count(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::FlipX:
            return 1;
        case ChannelKind::Depolarize1:
            return 3;
        case ChannelKind::Depolarize2:
            return 15;
    }
    return 0;
}

FaultSignature fault_signature(const NoisyCircuit &noisy, size_t site_index, uint32_t outcome) {
    return simulate_with_faults(noisy, {{site_index, outcome}});
}

FaultSignature simulate_with_faults(const NoisyCircuit &noisy,
                                    const std::vector<ForcedFault> &faults) {
    const Circuit &circuit = noisy.circuit;
    Frames frames(circuit.qubit_count);
    std::vector<uint8_t> records(circuit.record_count, 0);

    std::vector<std::pair<size_t, const ForcedFault *>> before, after;
    for (const ForcedFault &f : faults) {
        if (f.site_index >= noisy.sites.size()) {
            throw std::invalid_argument("fault site index out of range");
        }
        const FaultSite &site = noisy.sites[f.site_index];
        if (f.outcome >= channel_outcome_count(site.kind)) {
            throw std::invalid_argument("fault outcome out of range");
        }
        (site_acts_before(noisy, site) ? before : after).push_back({site.op_index, &f});
    }

    for (size_t k = 0; k < circuit.ops.size(); k++) {
        for (auto &[pos, f] : before) {
            if (pos == k) {
                apply_outcome(frames, noisy, noisy.sites[f->site_index], f->outcome);
            }
        }
        frames.apply_op(circuit.ops[k], records);
        for (auto &[pos, f] : after) {
            if (pos == k) {
                apply_outcome(frames, noisy, noisy.sites[f->site_index], f->outcome);
            }
        }
    }
    return signature_from_records(circuit, records);
}

DetectorErrorModel extract_dem(const NoisyCircuit &noisy) {
    const Circuit &circuit = noisy.circuit;
    DetectorErrorModel model;
    model.detector_count = (uint32_t)circuit.detectors.size();
    model.observable_count = (uint32_t)circuit.observables.size();

    for (size_t s = 0; s < noisy.sites.size(); s++) {
        const FaultSite &site = noisy.sites[s];
        if (site.probability <= 0.0) {
            continue;
        }
        uint32_t n_out = channel_outcome_count(site.kind);
        double p_each = site.probability / n_out;
        // Outcomes of one site are mutually exclusive: equal signatures add.
        std::map<std::pair<std::vector<uint32_t>, uint64_t>, double> groups;
        for (uint32_t out = 0; out < n_out; out++) {
            FaultSignature sig = fault_signature(noisy, s, out);
            if (sig.detectors.empty() && sig.logical_mask == 0) {
                continue;
            }
            groups[{std::move(sig.detectors), sig.logical_mask}] += p_each;
        }
        for (const auto &[key, p] : groups) {
            model.mechanisms.push_back({key.first, key.second, p});
        }
    }

    model = merge_parallel(model);
    try {
        validate_graphlike(model);
    } catch (const NonGraphlikeError &e) {
        throw NonGraphlikeError(std::string("extracted model is not graphlike (wiring bug): ") +
                                e.what());
    }

    if (circuit.distance > 0) {
        uint32_t cols = circuit.distance - 1;
        model.coords.resize(model.detector_count);
        for (uint32_t k = 0; k < model.detector_count; k++) {
            model.coords[k] = {true, (double)(k % cols), (double)(k / cols)};
        }
    }
    return model;
}

SyndromeBatch sample_syndromes(const NoisyCircuit &noisy, size_t shots, uint64_t seed,
                               uint32_t threads, size_t first_shot) {
    const Circuit &circuit = noisy.circuit;

    // Sites grouped by op, split into before/after, in stored order.
    std::vector<std::vector<uint32_t>> before(circuit.ops.size()), after(circuit.ops.size());
    for (uint32_t s = 0; s < (uint32_t)noisy.sites.size(); s++) {
        const FaultSite &site = noisy.sites[s];
        (site_acts_before(noisy, site) ? before : after)[site.op_index].push_back(s);
    }

    SyndromeBatch batch;
    batch.shots = shots;
    batch.detector_count = (uint32_t)circuit.detectors.size();
    batch.observable_count = (uint32_t)circuit.observables.size();
    batch.detector_bits = BitMatrix(shots, batch.detector_count);
    batch.has_observables = true;
    batch.observable_bits = BitMatrix(shots, batch.observable_count);

    auto run_range = [&](size_t lo, size_t hi) {
        Frames frames(circuit.qubit_count);
        std::vector<uint8_t> records(circuit.record_count);
        for (size_t shot = lo; shot < hi; shot++) {
            std::fill(frames.x.begin(), frames.x.end(), 0);
            std::fill(frames.z.begin(), frames.z.end(), 0);
            std::fill(records.begin(), records.end(), 0);
            ShotRng rng(seed, first_shot + shot);
            for (size_t k = 0; k < circuit.ops.size(); k++) {
                for (uint32_t s : before[k]) {
                    if (rng.next_double() < noisy.sites[s].probability) {
                        apply_outcome(frames, noisy, noisy.sites[s], 0);
                    }
                }
                frames.apply_op(circuit.ops[k], records);
                for (uint32_t s : after[k]) {
                    const FaultSite &site = noisy.sites[s];
                    double u = rng.next_double();
                    if (u < site.probability) {
                        uint32_t n_out = channel_outcome_count(site.kind);
                        uint32_t out = std::min(n_out - 1, (uint32_t)(u / site.probability * n_out));
                        apply_outcome(frames, noisy, site, out);
                    }
                }
            }
            for (uint32_t k = 0; k < batch.detector_count; k++) {
                uint8_t parity = 0;
                for (uint32_t rec : circuit.detectors[k]) {
                    parity ^= records[rec];
                }
                if (parity) {
                    batch.detector_bits.set(shot, k, true);
                }
            }
            for (uint32_t k = 0; k < batch.observable_count; k++) {
                uint8_t parity = 0;
                for (uint32_t rec : circuit.observables[k]) {
                    parity ^= records[rec];
                }
                if (parity) {
                    batch.observable_bits.set(shot, k, true);
                }
            }
        }
    };

    if (threads <= 1 || shots < 128) {
        run_range(0, shots);
    } else {
        uint32_t n = std::min<uint32_t>(threads, std::max<uint32_t>(1, (uint32_t)(shots / 64)));
        std::vector<std::thread> pool;
        size_t chunk = (shots + n - 1) / n;
        for (uint32_t t = 0; t < n; t++) {
            size_t lo = t * chunk;
            size_t hi = std::min(shots, lo + chunk);
            if (lo < hi) {
                pool.emplace_back(run_range, lo, hi);
            }
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return batch;
}

}  // namespace repdec

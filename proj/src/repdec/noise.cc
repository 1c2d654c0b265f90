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

#include "repdec/noise.h"

#include <stdexcept>

namespace repdec {

NoiseModel parse_noise_model(const std::string &name) {
    if (name == "depolarizing") {
        return NoiseModel::Depolarizing;
    }
    if (name == "si1000") {
        return NoiseModel::SI1000;
    }
    throw std::invalid_argument("unknown noise model: " + name);
}

const char *noise_model_name(NoiseModel model) {
    return model == NoiseModel::Depolarizing ? "depolarizing" : "si1000";
}

NoisyCircuit attach_noise(const Circuit &circuit, const NoiseSpec &spec) {
    if (!(spec.p >= 0.0 && spec.p < 0.5)) {
        throw std::invalid_argument("noise strength must be in [0, 0.5)");
    }
    const bool si = spec.model == NoiseModel::SI1000;
    const double p = (si ? kSi1000Strength : kDepolarizingStrength) * spec.p;

    NoisyCircuit noisy;
    noisy.circuit = circuit;
    for (size_t k = 0; k < circuit.ops.size(); k++) {
        const CircuitOp &op = circuit.ops[k];
        switch (op.type) {
            case OpType::Reset:
                noisy.sites.push_back({k, ChannelKind::FlipX, si ? kSi1000.reset_flip * p : p});
                if (!si) {
                    // Reset transient on the freshly prepared qubit.
                    noisy.sites.push_back({k, ChannelKind::Depolarize1, p});
                }
                break;
            case OpType::Measure:
                noisy.sites.push_back({k, ChannelKind::FlipX, si ? kSi1000.measure_flip * p : p});
                if (!si) {
                    // Readout misclassification on top of the physical flip.
                    noisy.sites.push_back({k, ChannelKind::FlipX, p});
                }
                break;
            case OpType::CX:
                noisy.sites.push_back({k, ChannelKind::Depolarize2, si ? kSi1000.two_qubit * p : p});
                break;
            case OpType::Idle: {
                double scale = 1.0;
                if (si) {
                    scale = op.idle_kind == IdleKind::MeasureReset ? kSi1000.resonator_idle
                                                                   : kSi1000.gate_idle;
                }
                noisy.sites.push_back({k, ChannelKind::Depolarize1, scale * p});
                break;
            }
            case OpType::Tick:
                break;
        }
    }
    return noisy;
}

}  // namespace repdec

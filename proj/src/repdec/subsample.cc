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

#include "repdec/subsample.h"

#include <cmath>
#include <stdexcept>

namespace repdec {

namespace {

struct Grid {
    uint32_t cols = 0;   // detector columns: source distance - 1
    uint32_t rows = 0;   // rounds + 1
    std::vector<uint32_t> col_of, row_of;
};

Grid read_grid(const DetectorErrorModel &model) {
    if (!model.has_coords()) {
        throw std::invalid_argument("subsample requires grid coordinates");
    }
    Grid g;
    g.col_of.resize(model.detector_count);
    g.row_of.resize(model.detector_count);
    for (uint32_t d = 0; d < model.detector_count; d++) {
        const auto &c = model.coords[d];
        if (!c.present) {
            throw std::invalid_argument("detector " + std::to_string(d) + " is missing coordinates");
        }
        double ci = std::round(c.column);
        double ri = std::round(c.round);
        if (std::abs(ci - c.column) > 1e-9 || std::abs(ri - c.round) > 1e-9 || ci < 0 || ri < 0) {
            throw std::invalid_argument("subsample requires integer grid coordinates");
        }
        g.col_of[d] = (uint32_t)ci;
        g.row_of[d] = (uint32_t)ri;
        g.cols = std::max(g.cols, (uint32_t)ci + 1);
        g.rows = std::max(g.rows, (uint32_t)ri + 1);
    }
    return g;
}

}  // namespace

uint32_t subsample_window_count(const DetectorErrorModel &model, uint32_t target_distance) {
    Grid g = read_grid(model);
    uint32_t source_distance = g.cols + 1;
    if (target_distance > source_distance) {
        return 0;
    }
    return source_distance - target_distance + 1;
}

SubsampleResult subsample(const SyndromeBatch &batch, const DetectorErrorModel &model,
                          uint32_t target_distance, uint32_t offset) {
    model.validate();
    if (batch.detector_count != model.detector_count) {
        throw std::invalid_argument("batch and model disagree on detector count");
    }
    if (target_distance < 3 || target_distance % 2 == 0) {
        throw std::invalid_argument("target distance must be an odd integer >= 3");
    }
    Grid g = read_grid(model);
    uint32_t source_distance = g.cols + 1;
    if (target_distance > source_distance) {
        throw std::invalid_argument("target distance exceeds the source distance");
    }
    if (offset + target_distance > source_distance) {
        throw std::invalid_argument("window is out of range");
    }

    // Window keeps data columns [offset, offset + dt - 1], hence detector
    // columns [offset, offset + dt - 2].
    const uint32_t dt = target_distance;
    const uint32_t first_col = offset;
    const uint32_t last_col = offset + dt - 2;
    const uint32_t sub_cols = dt - 1;

    std::vector<uint32_t> sub_id(model.detector_count, UINT32_MAX);
    for (uint32_t d = 0; d < model.detector_count; d++) {
        if (g.col_of[d] >= first_col && g.col_of[d] <= last_col) {
            sub_id[d] = g.row_of[d] * sub_cols + (g.col_of[d] - first_col);
        }
    }

    SubsampleResult out;
    out.model.detector_count = sub_cols * g.rows;
    out.model.observable_count = model.observable_count;
    out.model.coords.resize(out.model.detector_count);
    for (uint32_t d = 0; d < out.model.detector_count; d++) {
        out.model.coords[d] = {true, (double)(d % sub_cols), (double)(d / sub_cols)};
    }

    for (const auto &m : model.mechanisms) {
        std::vector<uint32_t> kept;
        for (uint32_t d : m.detectors) {
            if (sub_id[d] != UINT32_MAX) {
                kept.push_back(sub_id[d]);
            }
        }
        if (kept.empty() && !m.detectors.empty()) {
            continue;
        }
        // The window observable is the final measurement of its leftmost
        // data qubit; only mechanisms that flip that qubit carry the mask.
        uint32_t data_qubit = UINT32_MAX;
        if (m.detectors.size() == 2) {
            uint32_t c0 = g.col_of[m.detectors[0]];
            uint32_t c1 = g.col_of[m.detectors[1]];
            if (c0 != c1) {
                data_qubit = std::max(c0, c1);  // spacelike or beveled edge
            }
        } else if (m.detectors.size() == 1) {
            data_qubit = (m.logical_mask & 1) ? 0 : g.col_of[m.detectors[0]] + 1;
        }
        ErrorMechanism sub;
        sub.detectors = std::move(kept);
        std::sort(sub.detectors.begin(), sub.detectors.end());
        sub.probability = m.probability;
        sub.logical_mask = m.detectors.empty() ? m.logical_mask
                                               : (data_qubit == first_col ? 1 : 0);
        out.model.mechanisms.push_back(std::move(sub));
    }
    out.model = merge_parallel(out.model);
    out.model.validate();

    out.batch.shots = batch.shots;
    out.batch.detector_count = out.model.detector_count;
    out.batch.observable_count = batch.observable_count;
    out.batch.detector_bits = BitMatrix(batch.shots, out.model.detector_count);
    out.batch.has_observables = batch.has_observables;
    if (batch.has_observables) {
        out.batch.observable_bits = BitMatrix(batch.shots, batch.observable_count);
    }
    for (size_t shot = 0; shot < batch.shots; shot++) {
        for (uint32_t d = 0; d < model.detector_count; d++) {
            if (sub_id[d] != UINT32_MAX && batch.detector_bits.get(shot, d)) {
                out.batch.detector_bits.set(shot, sub_id[d], true);
            }
        }
        if (batch.has_observables) {
            // m(d_offset) = m(d_0) xor the parity of every detector column
            // left of the window (telescoped ancilla histories).
            bool flip = batch.observable_bits.get(shot, 0);
            for (uint32_t d = 0; d < model.detector_count; d++) {
                if (g.col_of[d] < first_col && batch.detector_bits.get(shot, d)) {
                    flip = !flip;
                }
            }
            out.batch.observable_bits.set(shot, 0, flip);
            for (uint32_t k = 1; k < batch.observable_count; k++) {
                out.batch.observable_bits.set(shot, k, batch.observable_bits.get(shot, k));
            }
        }
    }
    return out;
}

}  // namespace repdec

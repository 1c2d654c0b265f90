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

#include "repdec/code_capacity.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "repdec/rng.h"

namespace repdec {

CodeFamily parse_code_family(const std::string &name) {
    if (name == "surface") {
        return CodeFamily::Surface;
    }
    if (name == "rotated_surface" || name == "rsc") {
        return CodeFamily::RotatedSurface;
    }
    throw std::invalid_argument("unknown code family: " + name);
}

namespace {

struct StabSet {
    // Per stabilizer: detector id and a drawing position.
    std::map<std::pair<int, int>, uint32_t> id_of_cell;
    std::vector<DetectorCoord> coords;
};

// Planar surface code on the (2d-1)x(2d-1) diagonal lattice: qubits at
// even-sum positions, Z-plaquettes at (even, odd), X-stars at (odd, even).
// The Z-logical runs down column 0, the X-logical across row 0.
void build_surface(uint32_t d, CodeCapacityModel &model) {
    int span = 2 * (int)d - 1;
    StabSet zs, xs;
    for (int i = 0; i < span; i++) {
        for (int j = 0; j < span; j++) {
            if ((i + j) % 2 == 0) {
                continue;
            }
            if (i % 2 == 0) {
                uint32_t id = (uint32_t)zs.coords.size();
                zs.id_of_cell[{i, j}] = id;
                zs.coords.push_back({true, (j - 1) / 2.0, i / 2.0});
            } else {
                uint32_t id = (uint32_t)xs.coords.size();
                xs.id_of_cell[{i, j}] = id;
                xs.coords.push_back({true, (i - 1) / 2.0, j / 2.0});
            }
        }
    }
    for (int i = 0; i < span; i++) {
        for (int j = 0; j < span; j++) {
            if ((i + j) % 2 != 0) {
                continue;
            }
            CodeCapacityModel::Qubit q;
            for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
                auto zit = zs.id_of_cell.find({i + di, j + dj});
                if (zit != zs.id_of_cell.end()) {
                    q.x_detectors.push_back(zit->second);
                }
                auto xit = xs.id_of_cell.find({i + di, j + dj});
                if (xit != xs.id_of_cell.end()) {
                    q.z_detectors.push_back(xit->second);
                }
            }
            q.x_mask = j == 0 ? 1 : 0;  // Z-logical support: column 0
            q.z_mask = i == 0 ? 1 : 0;  // X-logical support: row 0
            model.qubits.push_back(std::move(q));
        }
    }
    model.x_dem.detector_count = (uint32_t)zs.coords.size();
    model.x_dem.coords = zs.coords;
    model.z_dem.detector_count = (uint32_t)xs.coords.size();
    model.z_dem.coords = xs.coords;
}

// Rotated surface code on a d x d qubit grid with checkerboard cells
// (including the two-qubit boundary halves). Z-halves on the top and bottom
// rows, X-halves on the left and right columns; the Z-logical is column 0,
// the X-logical row 0.
void build_rotated(uint32_t d, CodeCapacityModel &model) {
    int n = (int)d;
    StabSet zs, xs;
    for (int a = -1; a < n; a++) {
        for (int b = -1; b < n; b++) {
            int qubits_in_cell = 0;
            for (auto [ii, jj] : {std::pair{a, b}, {a + 1, b}, {a, b + 1}, {a + 1, b + 1}}) {
                if (ii >= 0 && ii < n && jj >= 0 && jj < n) {
                    qubits_in_cell++;
                }
            }
            bool z_type = ((a + b) % 2 + 2) % 2 == 0;
            bool interior = a >= 0 && a < n - 1 && b >= 0 && b < n - 1;
            bool valid;
            if (interior) {
                valid = qubits_in_cell == 4;
            } else if (z_type) {
                valid = qubits_in_cell == 2 && (a == -1 || a == n - 1);  // top/bottom halves
            } else {
                valid = qubits_in_cell == 2 && (b == -1 || b == n - 1);  // left/right halves
            }
            if (!valid) {
                continue;
            }
            if (z_type) {
                uint32_t id = (uint32_t)zs.coords.size();
                zs.id_of_cell[{a, b}] = id;
                zs.coords.push_back({true, b + 0.5, a + 0.5});
            } else {
                uint32_t id = (uint32_t)xs.coords.size();
                xs.id_of_cell[{a, b}] = id;
                xs.coords.push_back({true, a + 0.5, b + 0.5});  // transposed axes
            }
        }
    }
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            CodeCapacityModel::Qubit q;
            for (auto [a, b] : {std::pair{i - 1, j - 1}, {i - 1, j}, {i, j - 1}, {i, j}}) {
                auto zit = zs.id_of_cell.find({a, b});
                if (zit != zs.id_of_cell.end()) {
                    q.x_detectors.push_back(zit->second);
                }
                auto xit = xs.id_of_cell.find({a, b});
                if (xit != xs.id_of_cell.end()) {
                    q.z_detectors.push_back(xit->second);
                }
            }
            q.x_mask = j == 0 ? 1 : 0;
            q.z_mask = i == 0 ? 1 : 0;
            model.qubits.push_back(std::move(q));
        }
    }
    model.x_dem.detector_count = (uint32_t)zs.coords.size();
    model.x_dem.coords = zs.coords;
    model.z_dem.detector_count = (uint32_t)xs.coords.size();
    model.z_dem.coords = xs.coords;
}

}  // namespace

CodeCapacityModel build_code_capacity_model(CodeFamily family, uint32_t distance, double p_x,
                                            double p_z) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument("distance must be an odd integer >= 3");
    }
    if (!(p_x >= 0 && p_x < 0.5) || !(p_z >= 0 && p_z < 0.5)) {
        throw std::invalid_argument("probabilities must be in [0, 0.5)");
    }
    CodeCapacityModel model;
    model.distance = distance;
    model.family = family;
    if (family == CodeFamily::Surface) {
        build_surface(distance, model);
    } else {
        build_rotated(distance, model);
    }
    model.x_dem.observable_count = 1;
    model.z_dem.observable_count = 1;
    for (const auto &q : model.qubits) {
        ErrorMechanism mx;
        mx.detectors = q.x_detectors;
        std::sort(mx.detectors.begin(), mx.detectors.end());
        mx.logical_mask = q.x_mask;
        mx.probability = p_x;
        model.x_dem.mechanisms.push_back(std::move(mx));
        ErrorMechanism mz;
        mz.detectors = q.z_detectors;
        std::sort(mz.detectors.begin(), mz.detectors.end());
        mz.logical_mask = q.z_mask;
        mz.probability = p_z;
        model.z_dem.mechanisms.push_back(std::move(mz));
    }
    model.x_dem.validate();
    model.z_dem.validate();
    return model;
}

CodeCapacityContexts build_code_capacity_context(CodeFamily family, uint32_t distance, double p_x,
                                                 double p_z) {
    CodeCapacityContexts out;
    out.model = build_code_capacity_model(family, distance, p_x, p_z);
    out.x_context = build_context(out.model.x_dem);
    out.z_context = build_context(out.model.z_dem);
    return out;
}

CodeCapacityStats run_code_capacity_trial(const CodeCapacityContexts &ctx, bool depolarizing,
                                          double strength, size_t shots, uint64_t seed,
                                          uint32_t threads) {
    const CodeCapacityModel &model = ctx.model;
    const size_t n = model.qubits.size();

    struct Tally {
        size_t x_fail = 0, z_fail = 0, any_fail = 0;
    };
    auto run_range = [&](size_t lo, size_t hi, Tally &tally) {
        BitVec x_syn(model.x_dem.detector_count);
        BitVec z_syn(model.z_dem.detector_count);
        for (size_t shot = lo; shot < hi; shot++) {
            ShotRng rng(seed, shot);
            x_syn = BitVec(model.x_dem.detector_count);
            z_syn = BitVec(model.z_dem.detector_count);
            bool x_true = false, z_true = false;
            for (size_t q = 0; q < n; q++) {
                bool x_comp = false, z_comp = false;
                if (depolarizing) {
                    double u = rng.next_double();
                    if (u < strength) {
                        int pauli = std::min(2, (int)(u / strength * 3));
                        x_comp = pauli != 2;  // X or Y
                        z_comp = pauli != 0;  // Y or Z
                    }
                } else {
                    x_comp = rng.next_double() < strength;
                    z_comp = rng.next_double() < strength;
                }
                if (x_comp) {
                    for (uint32_t det : model.qubits[q].x_detectors) {
                        x_syn.flip(det);
                    }
                    x_true ^= model.qubits[q].x_mask & 1;
                }
                if (z_comp) {
                    for (uint32_t det : model.qubits[q].z_detectors) {
                        z_syn.flip(det);
                    }
                    z_true ^= model.qubits[q].z_mask & 1;
                }
            }
            bool x_pred = decode(ctx.x_context, x_syn).predicted_class & 1;
            bool z_pred = decode(ctx.z_context, z_syn).predicted_class & 1;
            bool xf = x_pred != x_true;
            bool zf = z_pred != z_true;
            tally.x_fail += xf;
            tally.z_fail += zf;
            tally.any_fail += xf || zf;
        }
    };

    CodeCapacityStats stats;
    stats.shots = shots;
    if (threads <= 1 || shots < 2 * threads) {
        Tally t;
        run_range(0, shots, t);
        stats.x_failures = t.x_fail;
        stats.z_failures = t.z_fail;
        stats.any_failures = t.any_fail;
    } else {
        std::vector<Tally> tallies(threads);
        std::vector<std::thread> pool;
        size_t chunk = (shots + threads - 1) / threads;
        for (uint32_t t = 0; t < threads; t++) {
            size_t lo = t * chunk;
            size_t hi = std::min(shots, lo + chunk);
            if (lo < hi) {
                pool.emplace_back(run_range, lo, hi, std::ref(tallies[t]));
            }
        }
        for (auto &th : pool) {
            th.join();
        }
        for (const auto &t : tallies) {
            stats.x_failures += t.x_fail;
            stats.z_failures += t.z_fail;
            stats.any_failures += t.any_fail;
        }
    }
    return stats;
}

}  // namespace repdec

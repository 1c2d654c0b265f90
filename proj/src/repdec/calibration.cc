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

#include "repdec/calibration.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace repdec {

namespace {
constexpr double kFloor = 1e-12;
constexpr double kCeil = 0.5 - 1e-12;
}

CorrelationReport estimate_pij(const SyndromeBatch &batch, const DetectorErrorModel &skeleton,
                               bool keep_heatmap) {
    skeleton.validate();
    validate_graphlike(skeleton);
    if (batch.detector_count != skeleton.detector_count) {
        throw std::invalid_argument("batch and skeleton disagree on detector count");
    }
    if (batch.shots < 1000) {
        throw std::invalid_argument("correlation analysis needs at least 1000 shots");
    }
    const uint32_t n_det = skeleton.detector_count;
    const size_t shots = batch.shots;

    CorrelationReport report;
    report.detector_count = n_det;
    report.shots = shots;

    std::vector<size_t> ones(n_det, 0);
    for (size_t s = 0; s < shots; s++) {
        for (uint32_t d = 0; d < n_det; d++) {
            ones[d] += batch.detector_bits.get(s, d);
        }
    }
    report.detector_means.resize(n_det);
    for (uint32_t d = 0; d < n_det; d++) {
        report.detector_means[d] = (double)ones[d] / (double)shots;
    }

    // Pair counts only where the skeleton declares an edge.
    std::vector<std::pair<uint32_t, uint32_t>> edge_mechs;
    for (uint32_t k = 0; k < (uint32_t)skeleton.mechanisms.size(); k++) {
        if (skeleton.mechanisms[k].detectors.size() == 2) {
            edge_mechs.push_back({k, 0});
        }
    }
    std::vector<size_t> pair_ones(edge_mechs.size(), 0);
    for (size_t s = 0; s < shots; s++) {
        for (size_t e = 0; e < edge_mechs.size(); e++) {
            const auto &dets = skeleton.mechanisms[edge_mechs[e].first].detectors;
            pair_ones[e] +=
                batch.detector_bits.get(s, dets[0]) && batch.detector_bits.get(s, dets[1]);
        }
    }

    if (keep_heatmap) {
        report.has_heatmap = true;
        report.heatmap.assign((size_t)n_det * n_det, 0.0);
        for (size_t s = 0; s < shots; s++) {
            for (uint32_t i = 0; i < n_det; i++) {
                if (!batch.detector_bits.get(s, i)) {
                    continue;
                }
                for (uint32_t j = 0; j < n_det; j++) {
                    if (batch.detector_bits.get(s, j)) {
                        report.heatmap[(size_t)i * n_det + j] += 1.0;
                    }
                }
            }
        }
        for (double &v : report.heatmap) {
            v /= (double)shots;
        }
    }

    // Two-point estimator per edge:
    //   p = 1/2 - 1/2 sqrt(1 - 4 (<xi xj> - <xi><xj>) /
    //                          (1 - 2<xi> - 2<xj> + 4<xi xj>))
    for (size_t e = 0; e < edge_mechs.size(); e++) {
        uint32_t mech = edge_mechs[e].first;
        const auto &dets = skeleton.mechanisms[mech].detectors;
        CorrelationReport::EdgeEstimate est;
        est.mechanism = mech;
        est.det_i = dets[0];
        est.det_j = dets[1];
        est.pair_mean = (double)pair_ones[e] / (double)shots;
        double mi = report.detector_means[dets[0]];
        double mj = report.detector_means[dets[1]];
        double den = 1.0 - 2.0 * mi - 2.0 * mj + 4.0 * est.pair_mean;
        if (std::abs(den) < 1e-12) {
            est.p_hat = kCeil;
            est.clamped = true;
            report.corrections.push_back({mech, 0.5, kCeil, "degenerate denominator"});
        } else {
            double disc = 1.0 - 4.0 * (est.pair_mean - mi * mj) / den;
            if (disc < 0.0) {
                est.p_hat = kCeil;
                est.clamped = true;
                report.corrections.push_back({mech, disc, kCeil, "negative discriminant"});
            } else {
                est.p_hat = 0.5 - 0.5 * std::sqrt(disc);
            }
        }
        report.edges.push_back(est);
    }

    // Boundary probabilities: peel every incident edge off the detector mean,
    // strongest first. Peeling is exact for independent XOR channels:
    // q <- (q - p) / (1 - 2p).
    std::vector<std::vector<size_t>> incident(n_det);
    for (size_t e = 0; e < report.edges.size(); e++) {
        incident[report.edges[e].det_i].push_back(e);
        incident[report.edges[e].det_j].push_back(e);
    }
    for (uint32_t k = 0; k < (uint32_t)skeleton.mechanisms.size(); k++) {
        if (skeleton.mechanisms[k].detectors.size() != 1) {
            continue;
        }
        uint32_t det = skeleton.mechanisms[k].detectors[0];
        std::vector<size_t> order = incident[det];
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (report.edges[a].p_hat != report.edges[b].p_hat) {
                return report.edges[a].p_hat > report.edges[b].p_hat;
            }
            return a < b;
        });
        double q = report.detector_means[det];
        for (size_t e : order) {
            double p = std::min(report.edges[e].p_hat, kCeil);
            q = (q - p) / (1.0 - 2.0 * p);
        }
        CorrelationReport::BoundaryEstimate est;
        est.mechanism = k;
        est.det = det;
        est.p_hat = q;
        report.boundaries.push_back(est);
    }
    return report;
}

CalibratedModel correct_boundaries(const CorrelationReport &report,
                                   const DetectorErrorModel &skeleton, BoundaryPolicy policy,
                                   double empirical_value) {
    CalibratedModel out;
    out.model = skeleton;
    out.report = report;

    for (const auto &est : report.edges) {
        double p = est.p_hat;
        if (p < kFloor) {
            if (p < 0.0) {
                out.report.corrections.push_back({est.mechanism, p, kFloor, "edge below zero"});
            }
            p = kFloor;
        } else if (p > kCeil) {
            out.report.corrections.push_back({est.mechanism, p, kCeil, "edge above one half"});
            p = kCeil;
        }
        out.model.mechanisms[est.mechanism].probability = p;
    }

    std::vector<const CorrelationReport::BoundaryEstimate *> bad;
    for (const auto &est : report.boundaries) {
        double p = est.p_hat;
        if (p < 0.0 || p > kCeil) {
            bad.push_back(&est);
            out.report.corrections.push_back(
                {est.mechanism, p, empirical_value, "non-physical boundary"});
            p = empirical_value;
        }
        out.model.mechanisms[est.mechanism].probability = p;
    }
    if (policy == BoundaryPolicy::Reject && !bad.empty()) {
        std::ostringstream msg;
        msg << bad.size() << " non-physical boundary value(s):";
        for (const auto *est : bad) {
            msg << " mechanism " << est->mechanism << " (detector " << est->det
                << ", p=" << est->p_hat << ")";
        }
        throw BoundaryCorrectionError(msg.str());
    }

    out.model.validate();
    validate_graphlike(out.model);
    return out;
}

}  // namespace repdec

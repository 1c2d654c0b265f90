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

#ifndef REPDEC_DECODE_CONTEXT_H
#define REPDEC_DECODE_CONTEXT_H

#include <memory>
#include <optional>

#include "repdec/dem.h"
#include "repdec/gf2.h"
#include "repdec/kac_ward.h"
#include "repdec/planar_graph.h"

namespace repdec {

struct UnsatisfiableSyndromeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoLogicalRepresentativeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything precomputed for maximum-likelihood decoding of one model:
/// the primal error graph, its dual spin graph with the auxiliary spin at
/// the unbounded face, base couplings, a GF(2) factorization for reference
/// errors, and the logical representative. Immutable after construction.
struct DecodeContext {
    // Prepared model: merged, zero-probability mechanisms dropped,
    // zero-detector logical channels split off.
    uint32_t detector_count = 0;
    std::vector<ErrorMechanism> planar_mechanisms;  // >= 1 detector each
    std::vector<std::pair<double, uint64_t>> detached_logicals;

    // Primal drawing: one vertex per non-isolated detector, plus the two
    // virtual boundary vertices.
    std::shared_ptr<const PlanarEmbeddedGraph> primal;
    std::vector<uint32_t> primal_vertex_of_detector;  // UINT32_MAX if isolated
    uint32_t left_boundary_vertex = 0;
    uint32_t right_boundary_vertex = 0;
    FaceSet faces;

    // Dual spin graph. Edge k of `dual` realizes planar mechanism
    // dual_edge_mechanism[k]; bridges become scalar factors instead.
    std::shared_ptr<const PlanarEmbeddedGraph> dual;
    uint32_t aux_spin = 0;
    std::vector<uint32_t> dual_edge_mechanism;
    std::vector<uint32_t> bridge_mechanisms;

    std::vector<double> base_coupling;  // |J| = log((1-p)/p) / 2 per mechanism
    double log_sqrt_pq_sum = 0.0;       // sum of log sqrt(p (1-p))

    std::unique_ptr<Gf2Solver> syndrome_solver;            // H x = gamma
    std::unique_ptr<Gf2Solver> representative_solver;      // [H; mask] x = (0, 1)
    bool has_planar_representative = false;
    BitVec logical_representative;  // over planar mechanisms
    bool reference_mask_parity_cached = false;

    // Detached-channel mask parity distribution, in logs.
    double log_detached_parity[2] = {0.0, 0.0};

    /// Spin glass instance for one reference-error membership pattern.
    SpinGlassInstance instance_for(const BitVec &error_subset) const;
    /// Signed scalar contribution of contracted bridge edges.
    double bridge_log_factor(const BitVec &error_subset) const;
};

/// Builds the context from a graphlike, grid-coordinated model. The model is
/// merge_parallel'ed internally. Throws NonGraphlike, NonPlanar,
/// NoLogicalRepresentative or std::invalid_argument.
DecodeContext build_context(const DetectorErrorModel &model);

/// Any particular mechanism subset whose detector signature equals gamma.
/// Deterministic for a fixed context. Throws UnsatisfiableSyndrome.
BitVec reference_error(const DecodeContext &ctx, const BitVec &syndrome);

}  // namespace repdec

#endif

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

#ifndef REPDEC_KAC_WARD_H
#define REPDEC_KAC_WARD_H

#include <memory>
#include <vector>

#include "repdec/planar_graph.h"

namespace repdec {

/// Zero-field Ising spin glass on an embedded planar graph. Boltzmann weight
/// per edge is exp(J * s_u * s_v). The graph is shared so per-shot instances
/// that differ only in coupling signs stay cheap.
struct SpinGlassInstance {
    std::shared_ptr<const PlanarEmbeddedGraph> graph;
    std::vector<double> couplings;  // one J per edge
    int64_t aux_spin = -1;          // distinguished vertex, or -1
};

/// log Z via the Kac-Ward determinant:
///   Z = 2^n (prod_e cosh J_e) det(I - W)^(1/2)
/// with W the non-backtracking directed-edge operator weighted by tanh(J)
/// and half the turning angle. Handles polyline edges by folding each
/// directed edge's interior turning into its weight. The determinant's phase
/// must vanish (asserted below 1e-6) and is discarded.
double log_partition(const SpinGlassInstance &instance);

/// Direct summation oracle over all 2^n spin configurations (n <= 24).
double brute_force_log_partition(const SpinGlassInstance &instance);

}  // namespace repdec

#endif

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

#include "repdec/kac_ward.h"

#include <cmath>
#include <stdexcept>

#include "repdec/linalg.h"

namespace repdec {

namespace {

constexpr size_t kDenseLimit = 256;  // directed-edge count threshold

template <typename Real>
Real wrap_angle_t(Real a) {
    const Real pi = std::acos((Real)-1);
    while (a > pi) {
        a -= 2 * pi;
    }
    while (a <= -pi) {
        a += 2 * pi;
    }
    return a;
}

template <typename Real>
Real log_cosh_t(Real x) {
    Real a = std::abs(x);
    return a + std::log1p(std::exp(-2 * a)) - std::log((Real)2);
}

// One Kac-Ward evaluation at a chosen precision. Deep coset tails push
// det(I - W) exponentially far below the matrix scale, so double precision
// occasionally cannot certify the vanishing phase; the caller retries with
// long doubles, recomputing angles and weights at that precision as well.
template <typename Real>
struct Evaluation {
    double log_z;
    LogDet det;
};

template <typename Real>
Evaluation<Real> evaluate(const SpinGlassInstance &instance) {
    using C = std::complex<Real>;
    const PlanarEmbeddedGraph &graph = *instance.graph;
    const size_t n_edges = graph.edge_count();
    const size_t n_dirs = 2 * n_edges;

    double log_z = (double)graph.vertex_count() * std::log(2.0);
    std::vector<Real> tanh_j(n_edges);
    for (size_t e = 0; e < n_edges; e++) {
        Real j = (Real)instance.couplings[e];
        log_z += (double)log_cosh_t(j);
        tanh_j[e] = std::tanh(j);
    }

    // Angles from the polylines, computed at the working precision.
    std::vector<Real> start_angle(n_dirs), end_angle(n_dirs), internal_half(n_dirs);
    for (uint32_t dir = 0; dir < n_dirs; dir++) {
        auto pts = graph.dir_polyline(dir);
        auto seg_angle = [](const Point &a, const Point &b) {
            return std::atan2((Real)b.y - (Real)a.y, (Real)b.x - (Real)a.x);
        };
        start_angle[dir] = seg_angle(pts[0], pts[1]);
        end_angle[dir] = seg_angle(pts[pts.size() - 2], pts[pts.size() - 1]);
        Real turn = 0;
        for (size_t k = 0; k + 2 < pts.size(); k++) {
            turn += wrap_angle_t<Real>(seg_angle(pts[k + 1], pts[k + 2]) -
                                       seg_angle(pts[k], pts[k + 1]));
        }
        internal_half[dir] = turn / 2;
    }

    auto transition = [&](uint32_t from, uint32_t to) {
        Real phi = wrap_angle_t<Real>(start_angle[to] - end_angle[from]);
        Real half = phi / 2 + internal_half[to];
        return std::polar(tanh_j[to / 2], half);
    };

    Evaluation<Real> out;
    out.log_z = log_z;
    if (n_dirs <= kDenseLimit) {
        std::vector<C> a(n_dirs * n_dirs, C{});
        for (uint32_t d = 0; d < n_dirs; d++) {
            a[d * n_dirs + d] = C(1);
        }
        for (uint32_t from = 0; from < n_dirs; from++) {
            uint32_t head = graph.dir_head(from);
            for (uint32_t to : graph.rotation(head)) {
                if (to == PlanarEmbeddedGraph::reverse_dir(from)) {
                    continue;
                }
                a[from * n_dirs + to] -= transition(from, to);
            }
        }
        out.det = log_det_dense_t(a, n_dirs);
    } else {
        std::vector<std::vector<SparseEntryT<Real>>> rows(n_dirs);
        for (uint32_t from = 0; from < n_dirs; from++) {
            uint32_t head = graph.dir_head(from);
            rows[from].reserve(graph.rotation(head).size() + 1);
            for (uint32_t to : graph.rotation(head)) {
                if (to == PlanarEmbeddedGraph::reverse_dir(from)) {
                    continue;
                }
                rows[from].push_back({to, -transition(from, to)});
            }
            rows[from].push_back({from, C(1)});
        }
        out.det = log_det_sparse_t(std::move(rows));
    }
    return out;
}

}  // namespace

double log_partition(const SpinGlassInstance &instance) {
    const PlanarEmbeddedGraph &graph = *instance.graph;
    if (instance.couplings.size() != graph.edge_count()) {
        throw std::invalid_argument("coupling count must match edge count");
    }
    for (double j : instance.couplings) {
        if (!std::isfinite(j)) {
            throw std::invalid_argument("couplings must be finite");
        }
    }
    if (graph.edge_count() == 0) {
        return (double)graph.vertex_count() * std::log(2.0);
    }

    auto result = evaluate<double>(instance);
    double residue = wrap_angle(result.det.phase);
    // Extended precision buys roughly three orders of magnitude; a residue
    // beyond its reach means det(I - W) sits below the attainable floor
    // (couplings near the clamp, or a coset exponentially far in the tail).
    if (std::abs(residue) > 1e-6 && std::abs(residue) <= 2e-3) {
        result.det = evaluate<long double>(instance).det;
        residue = wrap_angle(result.det.phase);
    }
    if (std::abs(residue) > 1e-6) {
        throw SingularMatrixError(
            "(I - W) is numerically singular: determinant phase residue " +
            std::to_string(residue));
    }
    return result.log_z + 0.5 * result.det.log_abs;
}

double brute_force_log_partition(const SpinGlassInstance &instance) {
    const PlanarEmbeddedGraph &graph = *instance.graph;
    size_t n = graph.vertex_count();
    if (n > 24) {
        throw std::invalid_argument("brute force is limited to 24 spins");
    }
    if (instance.couplings.size() != graph.edge_count()) {
        throw std::invalid_argument("coupling count must match edge count");
    }

    double max_energy = -1e300;
    double scaled_sum = 0.0;
    for (uint64_t config = 0; config < (uint64_t(1) << n); config++) {
        double energy = 0.0;
        for (size_t e = 0; e < graph.edge_count(); e++) {
            const DrawnEdge &edge = graph.edges()[e];
            bool aligned = ((config >> edge.u) & 1) == ((config >> edge.v) & 1);
            energy += aligned ? instance.couplings[e] : -instance.couplings[e];
        }
        if (energy > max_energy) {
            scaled_sum = scaled_sum * std::exp(max_energy - energy) + 1.0;
            max_energy = energy;
        } else {
            scaled_sum += std::exp(energy - max_energy);
        }
    }
    return max_energy + std::log(scaled_sum);
}

}  // namespace repdec

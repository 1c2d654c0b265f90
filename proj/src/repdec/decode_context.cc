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

#include "repdec/decode_context.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace repdec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct AuxRoute {
    Point aux_position;
    std::vector<std::vector<Point>> bends;  // per request, aux-side first
};

// Routes the dual edges of the unbounded face: the auxiliary vertex sits
// outside the drawing and each edge follows its own circular lane around the
// outline, dives radially through its boundary edge's midpoint, and ends at
// the face vertex inside. Lanes at distinct radii cannot cross; a dive at
// angle theta only passes lanes that already terminated before theta.
AuxRoute route_aux_edges(const PlanarEmbeddedGraph &primal, const std::vector<Point> &midpoints) {
    constexpr double pi = std::numbers::pi;
    const size_t m = midpoints.size();

    Point c{0.0, 0.0};
    for (const Point &p : primal.vertices()) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= (double)primal.vertex_count();
    c.y /= (double)primal.vertex_count();

    double r_base = 0.0;
    for (const Point &p : primal.vertices()) {
        r_base = std::max(r_base, std::hypot(p.x - c.x, p.y - c.y));
    }
    r_base += 1.0;

    std::vector<double> theta(m);
    for (size_t k = 0; k < m; k++) {
        theta[k] = std::atan2(midpoints[k].y - c.y, midpoints[k].x - c.x);
    }

    // Cut the circle at the widest angular gap so no lane wraps past an edge.
    std::vector<double> sorted = theta;
    std::sort(sorted.begin(), sorted.end());
    double theta_cut = sorted.empty() ? 0.0 : sorted[0] - pi;
    if (m >= 1) {
        double best_gap = 2 * pi + sorted[0] - sorted[m - 1];
        theta_cut = sorted[m - 1] + best_gap / 2;
        for (size_t k = 1; k < m; k++) {
            double gap = sorted[k] - sorted[k - 1];
            if (gap > best_gap) {
                best_gap = gap;
                theta_cut = sorted[k - 1] + gap / 2;
            }
        }
        if (best_gap < 1e-9) {
            throw std::logic_error("boundary edges are not angularly separated");
        }
    }

    // Rank edges counterclockwise from the cut.
    std::vector<double> phi(m);
    double min_phi = 2 * pi;
    for (size_t k = 0; k < m; k++) {
        double f = std::fmod(theta[k] - theta_cut, 2 * pi);
        if (f < 0) {
            f += 2 * pi;
        }
        phi[k] = f;
        min_phi = std::min(min_phi, f);
    }
    std::vector<uint32_t> order(m);
    for (uint32_t k = 0; k < m; k++) {
        order[k] = k;
    }
    std::sort(order.begin(), order.end(), [&phi](uint32_t a, uint32_t b) { return phi[a] < phi[b]; });
    std::vector<uint32_t> rank(m);
    for (uint32_t pos = 0; pos < m; pos++) {
        rank[order[pos]] = pos;
    }

    const double delta = 0.75;
    const double eps = std::min(1e-4, m ? 0.25 * min_phi / (double)(m + 2) : 1e-4);
    AuxRoute route;
    double r_aux = r_base + (double)(m + 2) * delta;
    route.aux_position = {c.x + r_aux * std::cos(theta_cut), c.y + r_aux * std::sin(theta_cut)};
    route.bends.resize(m);
    for (size_t k = 0; k < m; k++) {
        double r_lane = r_base + (double)(rank[k] + 1) * delta;
        double a0 = eps * (double)(rank[k] + 1);
        std::vector<Point> bends;
        double a = a0;
        while (true) {
            double ang = theta_cut + std::min(a, phi[k]);
            bends.push_back({c.x + r_lane * std::cos(ang), c.y + r_lane * std::sin(ang)});
            if (a >= phi[k]) {
                break;
            }
            a += 0.15;
        }
        bends.push_back(midpoints[k]);
        route.bends[k] = std::move(bends);
    }
    return route;
}

Point edge_midpoint(const PlanarEmbeddedGraph &g, uint32_t e) {
    const Point &a = g.vertices()[g.edges()[e].u];
    const Point &b = g.vertices()[g.edges()[e].v];
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

Point face_centroid(const PlanarEmbeddedGraph &g, const std::vector<uint32_t> &walk) {
    std::vector<uint32_t> vs;
    for (uint32_t dir : walk) {
        vs.push_back(g.dir_tail(dir));
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    Point c{0.0, 0.0};
    for (uint32_t v : vs) {
        c.x += g.vertices()[v].x;
        c.y += g.vertices()[v].y;
    }
    c.x /= (double)vs.size();
    c.y /= (double)vs.size();
    return c;
}

}  // namespace

SpinGlassInstance DecodeContext::instance_for(const BitVec &error_subset) const {
    SpinGlassInstance inst;
    inst.graph = dual;
    inst.aux_spin = aux_spin;
    inst.couplings.resize(dual_edge_mechanism.size());
    for (size_t k = 0; k < dual_edge_mechanism.size(); k++) {
        uint32_t mech = dual_edge_mechanism[k];
        double j = base_coupling[mech];
        inst.couplings[k] = error_subset.get(mech) ? -j : j;
    }
    return inst;
}

double DecodeContext::bridge_log_factor(const BitVec &error_subset) const {
    double total = 0.0;
    for (uint32_t mech : bridge_mechanisms) {
        double j = base_coupling[mech];
        total += error_subset.get(mech) ? -j : j;
    }
    return total;
}

DecodeContext build_context(const DetectorErrorModel &model_in) {
    model_in.validate();
    validate_graphlike(model_in);
    if (model_in.observable_count > 1) {
        throw std::invalid_argument("the planar decoder handles at most one logical observable");
    }
    if (!model_in.has_coords()) {
        throw std::invalid_argument("build_context requires grid coordinates on every detector");
    }
    DetectorErrorModel model = merge_parallel(model_in);

    DecodeContext ctx;
    ctx.detector_count = model.detector_count;
    for (const auto &m : model.mechanisms) {
        if (m.probability <= 0.0) {
            continue;  // an impossible mechanism contributes no edge
        }
        if (m.detectors.empty()) {
            if (m.logical_mask != 0) {
                ctx.detached_logicals.push_back({m.probability, m.logical_mask});
            }
            continue;
        }
        ErrorMechanism prepared = m;
        prepared.probability = clamp_decode_probability(m.probability);
        ctx.planar_mechanisms.push_back(std::move(prepared));
    }
    const size_t n_mech = ctx.planar_mechanisms.size();
    if (n_mech == 0) {
        throw std::invalid_argument("model has no mechanisms that touch a detector");
    }

    // Primal drawing: used detectors at their grid coordinates, plus the two
    // boundary vertices. Mask-carrying danglers terminate on the left vertex,
    // the rest on the right, which keeps left-to-right chains out of the
    // cycle space.
    std::vector<uint8_t> used(model.detector_count, 0);
    for (const auto &m : ctx.planar_mechanisms) {
        for (uint32_t d : m.detectors) {
            used[d] = 1;
        }
    }
    double min_col = kInf, max_col = -kInf, min_round = kInf, max_round = -kInf;
    for (uint32_t d = 0; d < model.detector_count; d++) {
        if (!used[d]) {
            continue;
        }
        if (!model.coords[d].present) {
            throw std::invalid_argument("detector " + std::to_string(d) + " is missing coordinates");
        }
        min_col = std::min(min_col, model.coords[d].column);
        max_col = std::max(max_col, model.coords[d].column);
        min_round = std::min(min_round, model.coords[d].round);
        max_round = std::max(max_round, model.coords[d].round);
    }

    bool left_used = false, right_used = false;
    for (const auto &m : ctx.planar_mechanisms) {
        if (m.detectors.size() == 1) {
            (m.logical_mask != 0 ? left_used : right_used) = true;
        }
    }

    std::vector<Point> vertices;
    ctx.primal_vertex_of_detector.assign(model.detector_count, UINT32_MAX);
    for (uint32_t d = 0; d < model.detector_count; d++) {
        if (used[d]) {
            ctx.primal_vertex_of_detector[d] = (uint32_t)vertices.size();
            vertices.push_back({model.coords[d].column, model.coords[d].round});
        }
    }
    double mid_round = (min_round + max_round) / 2;
    ctx.left_boundary_vertex = ctx.right_boundary_vertex = UINT32_MAX;
    if (left_used) {
        ctx.left_boundary_vertex = (uint32_t)vertices.size();
        vertices.push_back({min_col - 1.0, mid_round});
    }
    if (right_used) {
        ctx.right_boundary_vertex = (uint32_t)vertices.size();
        vertices.push_back({max_col + 1.0, mid_round});
    }

    std::vector<DrawnEdge> primal_edges(n_mech);
    for (size_t k = 0; k < n_mech; k++) {
        const auto &m = ctx.planar_mechanisms[k];
        DrawnEdge e;
        if (m.detectors.size() == 2) {
            e.u = ctx.primal_vertex_of_detector[m.detectors[0]];
            e.v = ctx.primal_vertex_of_detector[m.detectors[1]];
        } else {
            e.u = ctx.primal_vertex_of_detector[m.detectors[0]];
            e.v = m.logical_mask != 0 ? ctx.left_boundary_vertex : ctx.right_boundary_vertex;
        }
        primal_edges[k] = std::move(e);
    }

    auto primal = std::make_shared<PlanarEmbeddedGraph>(std::move(vertices), std::move(primal_edges));
    primal->check_no_crossings();
    ctx.primal = primal;
    ctx.faces = enumerate_faces(*primal);

    // Every face is a stabilizer, so its walk must carry an even logical
    // mask; otherwise the dual spin sum would mix the two cosets.
    for (size_t f = 0; f < ctx.faces.walks.size(); f++) {
        if (f == ctx.faces.outer_face) {
            continue;
        }
        uint64_t parity = 0;
        for (uint32_t dir : ctx.faces.walks[f]) {
            parity ^= ctx.planar_mechanisms[dir / 2].logical_mask;
        }
        if (parity != 0) {
            throw std::invalid_argument(
                "logical mask is inconsistent with the boundary assignment (odd cycle mask)");
        }
    }

    // Dual construction.
    std::vector<uint32_t> dual_id_of_face(ctx.faces.walks.size(), UINT32_MAX);
    std::vector<Point> dual_vertices;
    for (size_t f = 0; f < ctx.faces.walks.size(); f++) {
        if (f == ctx.faces.outer_face) {
            continue;
        }
        dual_id_of_face[f] = (uint32_t)dual_vertices.size();
        dual_vertices.push_back(face_centroid(*primal, ctx.faces.walks[f]));
    }
    ctx.aux_spin = (uint32_t)dual_vertices.size();

    std::vector<DrawnEdge> dual_edges;
    std::vector<uint32_t> aux_request_edges;
    std::vector<uint32_t> aux_request_faces;
    for (uint32_t e = 0; e < (uint32_t)primal->edge_count(); e++) {
        uint32_t f1 = ctx.faces.face_of_dir[2 * e];
        uint32_t f2 = ctx.faces.face_of_dir[2 * e + 1];
        if (f1 == f2) {
            ctx.bridge_mechanisms.push_back(e);
            continue;
        }
        if (f1 != ctx.faces.outer_face && f2 != ctx.faces.outer_face) {
            DrawnEdge de;
            de.u = dual_id_of_face[f1];
            de.v = dual_id_of_face[f2];
            de.bends = {edge_midpoint(*primal, e)};
            dual_edges.push_back(std::move(de));
            ctx.dual_edge_mechanism.push_back(e);
        } else {
            aux_request_edges.push_back(e);
            aux_request_faces.push_back(f1 == ctx.faces.outer_face ? f2 : f1);
        }
    }

    if (!aux_request_edges.empty()) {
        std::vector<Point> midpoints;
        for (uint32_t e : aux_request_edges) {
            midpoints.push_back(edge_midpoint(*primal, e));
        }
        AuxRoute route = route_aux_edges(*primal, midpoints);
        dual_vertices.push_back(route.aux_position);
        for (size_t k = 0; k < aux_request_edges.size(); k++) {
            DrawnEdge de;
            de.u = ctx.aux_spin;
            de.v = dual_id_of_face[aux_request_faces[k]];
            de.bends = std::move(route.bends[k]);
            dual_edges.push_back(std::move(de));
            ctx.dual_edge_mechanism.push_back(aux_request_edges[k]);
        }
    } else {
        // Still give the outer face its spin; it may be the only one.
        dual_vertices.push_back({max_col + 3.0, mid_round});
    }

    auto dual = std::make_shared<PlanarEmbeddedGraph>(std::move(dual_vertices), std::move(dual_edges));
    size_t dual_segments = 0;
    for (const auto &e : dual->edges()) {
        dual_segments += e.bends.size() + 1;
    }
    if (dual_segments <= 4000) {
        dual->check_no_crossings();
    }
    ctx.dual = dual;

    // Couplings and the shared prefactor.
    ctx.base_coupling.resize(n_mech);
    for (size_t k = 0; k < n_mech; k++) {
        double p = ctx.planar_mechanisms[k].probability;
        ctx.base_coupling[k] = 0.5 * std::log((1.0 - p) / p);
        ctx.log_sqrt_pq_sum += 0.5 * std::log(p * (1.0 - p));
    }

    // GF(2) structure for reference errors and the logical representative.
    std::vector<BitVec> h_rows(model.detector_count, BitVec(n_mech));
    BitVec mask_row(n_mech);
    for (uint32_t k = 0; k < n_mech; k++) {
        for (uint32_t d : ctx.planar_mechanisms[k].detectors) {
            h_rows[d].flip(k);
        }
        if (ctx.planar_mechanisms[k].logical_mask & 1) {
            mask_row.flip(k);
        }
    }
    ctx.syndrome_solver = std::make_unique<Gf2Solver>(h_rows, n_mech);
    h_rows.push_back(mask_row);
    ctx.representative_solver = std::make_unique<Gf2Solver>(std::move(h_rows), n_mech);
    BitVec rep_rhs(model.detector_count + 1);
    rep_rhs.set(model.detector_count, true);
    auto rep = ctx.representative_solver->solve(rep_rhs);
    bool detached_carries_mask = false;
    for (const auto &[p, mask] : ctx.detached_logicals) {
        detached_carries_mask |= (mask & 1) != 0;
    }
    if (rep.has_value()) {
        ctx.has_planar_representative = true;
        ctx.logical_representative = std::move(*rep);
    } else if (model.observable_count == 1 && !detached_carries_mask) {
        // A declared observable that no mechanism subset can flip without
        // firing detectors: the class split is broken.
        throw NoLogicalRepresentativeError(
            "no mechanism subset flips the observable without firing detectors");
    } else {
        ctx.logical_representative = BitVec(n_mech);
    }

    // Detached-channel parity distribution.
    double d0 = 1.0, d1 = 0.0;
    for (const auto &[p, mask] : ctx.detached_logicals) {
        if (mask & 1) {
            double n0 = d0 * (1.0 - p) + d1 * p;
            double n1 = d1 * (1.0 - p) + d0 * p;
            d0 = n0;
            d1 = n1;
        }
    }
    ctx.log_detached_parity[0] = d0 > 0.0 ? std::log(d0) : -kInf;
    ctx.log_detached_parity[1] = d1 > 0.0 ? std::log(d1) : -kInf;
    return ctx;
}

BitVec reference_error(const DecodeContext &ctx, const BitVec &syndrome) {
    if (syndrome.size() != ctx.detector_count) {
        throw std::invalid_argument("syndrome width must equal detector count");
    }
    auto x = ctx.syndrome_solver->solve(syndrome);
    if (!x.has_value()) {
        throw UnsatisfiableSyndromeError("syndrome is outside the model's column space");
    }
    return std::move(*x);
}

}  // namespace repdec

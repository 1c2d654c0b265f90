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

#include "repdec/planar_graph.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace repdec {

double wrap_angle(double a) {
    constexpr double pi = std::numbers::pi;
    while (a > pi) {
        a -= 2 * pi;
    }
    while (a <= -pi) {
        a += 2 * pi;
    }
    return a;
}

PlanarEmbeddedGraph::PlanarEmbeddedGraph(std::vector<Point> vertices, std::vector<DrawnEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    rotation_.resize(vertices_.size());
    for (uint32_t e = 0; e < (uint32_t)edges_.size(); e++) {
        if (edges_[e].u >= vertices_.size() || edges_[e].v >= vertices_.size()) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (edges_[e].u == edges_[e].v) {
            throw std::invalid_argument("self-loop edges cannot be drawn");
        }
        rotation_[edges_[e].u].push_back(2 * e);
        rotation_[edges_[e].v].push_back(2 * e + 1);
    }
    for (auto &rot : rotation_) {
        std::sort(rot.begin(), rot.end(), [this](uint32_t a, uint32_t b) {
            double aa = dir_start_angle(a);
            double ab = dir_start_angle(b);
            if (aa != ab) {
                return aa < ab;
            }
            return a < b;
        });
    }
}

uint32_t PlanarEmbeddedGraph::dir_tail(uint32_t dir) const {
    const DrawnEdge &e = edges_[dir / 2];
    return dir & 1 ? e.v : e.u;
}

uint32_t PlanarEmbeddedGraph::dir_head(uint32_t dir) const {
    const DrawnEdge &e = edges_[dir / 2];
    return dir & 1 ? e.u : e.v;
}

std::vector<Point> PlanarEmbeddedGraph::dir_polyline(uint32_t dir) const {
    const DrawnEdge &e = edges_[dir / 2];
    std::vector<Point> pts;
    pts.push_back(vertices_[e.u]);
    pts.insert(pts.end(), e.bends.begin(), e.bends.end());
    pts.push_back(vertices_[e.v]);
    if (dir & 1) {
        std::reverse(pts.begin(), pts.end());
    }
    return pts;
}

static double segment_angle(const Point &a, const Point &b) {
    return std::atan2(b.y - a.y, b.x - a.x);
}

double PlanarEmbeddedGraph::dir_start_angle(uint32_t dir) const {
    auto pts = dir_polyline(dir);
    return segment_angle(pts[0], pts[1]);
}

double PlanarEmbeddedGraph::dir_end_angle(uint32_t dir) const {
    auto pts = dir_polyline(dir);
    return segment_angle(pts[pts.size() - 2], pts[pts.size() - 1]);
}

double PlanarEmbeddedGraph::dir_internal_turning(uint32_t dir) const {
    auto pts = dir_polyline(dir);
    double total = 0.0;
    for (size_t k = 0; k + 2 < pts.size(); k++) {
        total += wrap_angle(segment_angle(pts[k + 1], pts[k + 2]) - segment_angle(pts[k], pts[k + 1]));
    }
    return total;
}

bool PlanarEmbeddedGraph::is_connected() const {
    if (vertices_.empty()) {
        return true;
    }
    std::vector<std::vector<uint32_t>> adjacency(vertices_.size());
    for (const auto &e : edges_) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    std::vector<uint8_t> seen(vertices_.size(), 0);
    std::vector<uint32_t> stack = {0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                count++;
                stack.push_back(w);
            }
        }
    }
    return count == vertices_.size();
}

namespace {

struct Segment {
    Point a, b;
    uint32_t edge;
    uint32_t index;  // position within the edge's polyline
};

int orientation_sign(const Point &a, const Point &b, const Point &c, double scale) {
    double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    double eps = 1e-12 * scale * scale;
    if (cross > eps) {
        return 1;
    }
    if (cross < -eps) {
        return -1;
    }
    return 0;
}

bool points_equal(const Point &a, const Point &b, double scale) {
    return std::abs(a.x - b.x) <= 1e-9 * scale && std::abs(a.y - b.y) <= 1e-9 * scale;
}

bool on_segment(const Point &a, const Point &b, const Point &p) {
    return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
           std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
}

}  // namespace

void PlanarEmbeddedGraph::check_no_crossings() const {
    double scale = 1.0;
    for (const Point &p : vertices_) {
        scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    }

    std::vector<Segment> segs;
    for (uint32_t e = 0; e < (uint32_t)edges_.size(); e++) {
        auto pts = dir_polyline(2 * e);
        for (uint32_t k = 0; k + 1 < pts.size(); k++) {
            segs.push_back({pts[k], pts[k + 1], e, k});
        }
    }

    for (size_t i = 0; i < segs.size(); i++) {
        for (size_t j = i + 1; j < segs.size(); j++) {
            const Segment &s = segs[i];
            const Segment &t = segs[j];
            if (s.edge == t.edge && (s.index + 1 == t.index || t.index + 1 == s.index)) {
                continue;  // consecutive segments of one polyline share a bend
            }
            int o1 = orientation_sign(s.a, s.b, t.a, scale);
            int o2 = orientation_sign(s.a, s.b, t.b, scale);
            int o3 = orientation_sign(t.a, t.b, s.a, scale);
            int o4 = orientation_sign(t.a, t.b, s.b, scale);
            bool proper = o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
            bool touching = false;
            if (!proper) {
                // Collinear or endpoint contact. Contact is only legal at a
                // shared endpoint that is a graph vertex of both edges.
                for (const Point &p : {t.a, t.b}) {
                    int os = orientation_sign(s.a, s.b, p, scale);
                    if (os == 0 && on_segment(s.a, s.b, p)) {
                        bool shared = points_equal(p, s.a, scale) || points_equal(p, s.b, scale);
                        bool at_vertex = false;
                        for (uint32_t vid : {edges_[s.edge].u, edges_[s.edge].v}) {
                            at_vertex |= points_equal(p, vertices_[vid], scale);
                        }
                        if (!shared || !at_vertex) {
                            touching = true;
                        }
                    }
                }
                for (const Point &p : {s.a, s.b}) {
                    int ot = orientation_sign(t.a, t.b, p, scale);
                    if (ot == 0 && on_segment(t.a, t.b, p)) {
                        bool shared = points_equal(p, t.a, scale) || points_equal(p, t.b, scale);
                        bool at_vertex = false;
                        for (uint32_t vid : {edges_[t.edge].u, edges_[t.edge].v}) {
                            at_vertex |= points_equal(p, vertices_[vid], scale);
                        }
                        if (!shared || !at_vertex) {
                            touching = true;
                        }
                    }
                }
            }
            if (proper || touching) {
                throw NonPlanarError("edges " + std::to_string(s.edge) + " and " +
                                     std::to_string(t.edge) + " cross in the drawing");
            }
        }
    }
}

FaceSet enumerate_faces(const PlanarEmbeddedGraph &graph) {
    if (!graph.is_connected()) {
        throw std::invalid_argument("face enumeration requires a connected graph");
    }
    size_t n_dirs = 2 * graph.edge_count();
    FaceSet faces;
    faces.face_of_dir.assign(n_dirs, UINT32_MAX);

    // Position of each outgoing half-edge within its tail's rotation.
    std::vector<uint32_t> rot_pos(n_dirs, 0);
    for (uint32_t v = 0; v < graph.vertex_count(); v++) {
        const auto &rot = graph.rotation(v);
        for (uint32_t k = 0; k < (uint32_t)rot.size(); k++) {
            rot_pos[rot[k]] = k;
        }
    }
    // Successor of `dir` in its face walk: arrive at the head, step to the
    // half-edge clockwise-next from the reversal. Interior stays on the left,
    // so bounded faces come out counterclockwise.
    auto next_dir = [&](uint32_t dir) {
        uint32_t rev = PlanarEmbeddedGraph::reverse_dir(dir);
        uint32_t head = graph.dir_tail(rev);
        const auto &rot = graph.rotation(head);
        uint32_t pos = rot_pos[rev];
        return rot[(pos + rot.size() - 1) % rot.size()];
    };

    for (uint32_t start = 0; start < n_dirs; start++) {
        if (faces.face_of_dir[start] != UINT32_MAX) {
            continue;
        }
        uint32_t face_id = (uint32_t)faces.walks.size();
        std::vector<uint32_t> walk;
        uint32_t dir = start;
        do {
            faces.face_of_dir[dir] = face_id;
            walk.push_back(dir);
            dir = next_dir(dir);
        } while (dir != start);

        double area2 = 0.0;
        for (uint32_t d : walk) {
            auto pts = graph.dir_polyline(d);
            for (size_t k = 0; k + 1 < pts.size(); k++) {
                area2 += pts[k].x * pts[k + 1].y - pts[k + 1].x * pts[k].y;
            }
        }
        faces.walks.push_back(std::move(walk));
        faces.signed_areas.push_back(0.5 * area2);
    }

    if (graph.edge_count() == 0) {
        // A single isolated vertex: one face, no walks to record.
        faces.walks.push_back({});
        faces.signed_areas.push_back(0.0);
    }

    size_t outer = 0;
    for (size_t f = 1; f < faces.walks.size(); f++) {
        if (faces.signed_areas[f] < faces.signed_areas[outer]) {
            outer = f;
        }
    }
    faces.outer_face = outer;

    long long euler = (long long)graph.vertex_count() - (long long)graph.edge_count() +
                      (long long)faces.walks.size();
    if (euler != 2) {
        throw std::logic_error("face enumeration violated Euler's formula; drawing is inconsistent");
    }
    return faces;
}

}  // namespace repdec

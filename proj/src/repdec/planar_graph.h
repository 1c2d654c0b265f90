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

#ifndef REPDEC_PLANAR_GRAPH_H
#define REPDEC_PLANAR_GRAPH_H

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace repdec {

struct NonPlanarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Undirected edge drawn as a polyline: tail coordinates, optional interior
/// bends (in tail-to-head order), head coordinates. Parallel edges are
/// allowed as long as their drawings do not overlap; self-loops are not.
struct DrawnEdge {
    uint32_t u = 0;
    uint32_t v = 0;
    std::vector<Point> bends;
};

/// Straight-line / polyline embedded planar graph. The rotation system is
/// derived from the drawing: half-edges at a vertex are ordered by the angle
/// of their first segment, counterclockwise.
class PlanarEmbeddedGraph {
 public:
    PlanarEmbeddedGraph() = default;
    PlanarEmbeddedGraph(std::vector<Point> vertices, std::vector<DrawnEdge> edges);

    size_t vertex_count() const {
        return vertices_.size();
    }
    size_t edge_count() const {
        return edges_.size();
    }
    const std::vector<Point> &vertices() const {
        return vertices_;
    }
    const std::vector<DrawnEdge> &edges() const {
        return edges_;
    }

    // Directed edge id: 2*edge + 0 traverses u->v, 2*edge + 1 traverses v->u.
    static uint32_t reverse_dir(uint32_t dir) {
        return dir ^ 1;
    }
    uint32_t dir_tail(uint32_t dir) const;
    uint32_t dir_head(uint32_t dir) const;
    /// Polyline of a directed edge, tail first.
    std::vector<Point> dir_polyline(uint32_t dir) const;
    /// Angle of the first segment leaving the tail.
    double dir_start_angle(uint32_t dir) const;
    /// Angle of the last segment arriving at the head.
    double dir_end_angle(uint32_t dir) const;
    /// Sum of signed direction changes at interior bends, each in (-pi, pi).
    double dir_internal_turning(uint32_t dir) const;

    /// Half-edges leaving `v`, sorted counterclockwise by start angle.
    const std::vector<uint32_t> &rotation(uint32_t v) const {
        return rotation_[v];
    }

    bool is_connected() const;

    /// Throws NonPlanar when any two polyline segments cross (shared
    /// endpoints at a common vertex are fine). O(segments^2).
    void check_no_crossings() const;

 private:
    std::vector<Point> vertices_;
    std::vector<DrawnEdge> edges_;
    std::vector<std::vector<uint32_t>> rotation_;
};

/// One face per entry: the cyclic sequence of directed edges with the face on
/// their left. Bounded faces are counterclockwise walks.
struct FaceSet {
    std::vector<std::vector<uint32_t>> walks;
    std::vector<double> signed_areas;
    size_t outer_face = 0;                 // the (unique) clockwise walk
    std::vector<uint32_t> face_of_dir;     // directed edge -> face index
};

/// Enumerates faces from the rotation system. Throws std::invalid_argument on
/// a disconnected graph. Euler's V - E + F = 2 is asserted.
FaceSet enumerate_faces(const PlanarEmbeddedGraph &graph);

double wrap_angle(double a);

}  // namespace repdec

#endif

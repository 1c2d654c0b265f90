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

#include <doctest.h>

#include <cmath>
#include <random>

#include "repdec/kac_ward.h"
#include "repdec/planar_graph.h"

using namespace repdec;

namespace {

std::shared_ptr<PlanarEmbeddedGraph> square_graph() {
    return std::make_shared<PlanarEmbeddedGraph>(
        std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}},
        std::vector<DrawnEdge>{{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {3, 0, {}}});
}

// Random connected subgraph of a small grid with at most one diagonal per
// cell; straight-line planar by construction.
struct RandomInstance {
    std::shared_ptr<PlanarEmbeddedGraph> graph;
    std::vector<double> couplings;
};

RandomInstance random_planar_instance(std::mt19937_64 &rng, int max_spins = 16) {
    int cols = 2 + (int)(rng() % 3);
    int rows = 2 + (int)(rng() % 3);
    while (cols * rows > max_spins) {
        cols = 2 + (int)(rng() % 3);
        rows = 2 + (int)(rng() % 3);
    }
    std::vector<Point> pts;
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            pts.push_back({(double)c, (double)r});
        }
    }
    auto vid = [cols](int r, int c) { return (uint32_t)(r * cols + c); };
    std::uniform_real_distribution<double> jdist(-2, 2);
    std::vector<DrawnEdge> edges;
    std::vector<double> js;
    // Spanning connectivity: all horizontal edges in row 0 plus all vertical
    // edges, then random extras.
    for (int c = 0; c + 1 < cols; c++) {
        edges.push_back({vid(0, c), vid(0, c + 1), {}});
        js.push_back(jdist(rng));
    }
    for (int r = 0; r + 1 < rows; r++) {
        for (int c = 0; c < cols; c++) {
            edges.push_back({vid(r, c), vid(r + 1, c), {}});
            js.push_back(jdist(rng));
        }
    }
    for (int r = 1; r < rows; r++) {
        for (int c = 0; c + 1 < cols; c++) {
            if (rng() % 2) {
                edges.push_back({vid(r, c), vid(r, c + 1), {}});
                js.push_back(jdist(rng));
            }
        }
    }
    for (int r = 0; r + 1 < rows; r++) {
        for (int c = 0; c + 1 < cols; c++) {
            if (rng() % 3 == 0) {
                if (rng() % 2) {
                    edges.push_back({vid(r, c), vid(r + 1, c + 1), {}});
                } else {
                    edges.push_back({vid(r, c + 1), vid(r + 1, c), {}});
                }
                js.push_back(jdist(rng));
            }
        }
    }
    auto graph = std::make_shared<PlanarEmbeddedGraph>(std::move(pts), std::move(edges));
    graph->check_no_crossings();
    return {graph, js};
}

}  // namespace

TEST_CASE("faces: unit square has one bounded and one unbounded face") {
    auto faces = enumerate_faces(*square_graph());
    REQUIRE(faces.walks.size() == 2);
    size_t bounded = 1 - faces.outer_face;
    CHECK(faces.signed_areas[bounded] == doctest::Approx(1.0));
    CHECK(faces.signed_areas[faces.outer_face] == doctest::Approx(-1.0));
}

TEST_CASE("faces: a single bridge edge has one face walking it twice") {
    PlanarEmbeddedGraph g({{0, 0}, {1, 0}}, {{0, 1, {}}});
    auto faces = enumerate_faces(g);
    REQUIRE(faces.walks.size() == 1);
    CHECK(faces.walks[0].size() == 2);
    CHECK(faces.outer_face == 0);
}

TEST_CASE("faces: 2x2 grid graph has 5 faces") {
    std::vector<Point> pts;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            pts.push_back({(double)c, (double)r});
        }
    }
    std::vector<DrawnEdge> edges;
    auto vid = [](int r, int c) { return (uint32_t)(r * 3 + c); };
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c + 1 < 3; c++) {
            edges.push_back({vid(r, c), vid(r, c + 1), {}});
        }
    }
    for (int r = 0; r + 1 < 3; r++) {
        for (int c = 0; c < 3; c++) {
            edges.push_back({vid(r, c), vid(r + 1, c), {}});
        }
    }
    auto faces = enumerate_faces(PlanarEmbeddedGraph(pts, edges));
    CHECK(faces.walks.size() == 5);
}

TEST_CASE("faces: disconnected graph is rejected") {
    PlanarEmbeddedGraph g({{0, 0}, {1, 0}, {5, 5}, {6, 5}}, {{0, 1, {}}, {2, 3, {}}});
    CHECK_THROWS_AS(enumerate_faces(g), std::invalid_argument);
}

TEST_CASE("crossing check rejects both diagonals in one cell") {
    PlanarEmbeddedGraph g({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 2, {}}, {1, 3, {}}});
    CHECK_THROWS_AS(g.check_no_crossings(), NonPlanarError);
}

TEST_CASE("log partition: two spins, one edge") {
    auto g = std::make_shared<PlanarEmbeddedGraph>(std::vector<Point>{{0, 0}, {1, 0}},
                                                   std::vector<DrawnEdge>{{0, 1, {}}});
    SpinGlassInstance inst{g, {0.7}, -1};
    CHECK(log_partition(inst) == doctest::Approx(std::log(4 * std::cosh(0.7))).epsilon(1e-12));
}

TEST_CASE("log partition: uniform square") {
    SpinGlassInstance inst{square_graph(), {0.3, 0.3, 0.3, 0.3}, -1};
    double expect = std::log(16.0 * std::pow(std::cosh(0.3), 4) * (1 + std::pow(std::tanh(0.3), 4)));
    CHECK(log_partition(inst) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("brute force: isolated spin, independent pair, triangle") {
    auto lonely = std::make_shared<PlanarEmbeddedGraph>(std::vector<Point>{{0, 0}},
                                                        std::vector<DrawnEdge>{});
    CHECK(brute_force_log_partition({lonely, {}, -1}) == doctest::Approx(std::log(2.0)));

    auto pair = std::make_shared<PlanarEmbeddedGraph>(std::vector<Point>{{0, 0}, {1, 0}},
                                                      std::vector<DrawnEdge>{{0, 1, {}}});
    CHECK(brute_force_log_partition({pair, {0.0}, -1}) == doctest::Approx(std::log(4.0)));

    auto tri = std::make_shared<PlanarEmbeddedGraph>(
        std::vector<Point>{{0, 0}, {1, 0}, {0.5, 1}},
        std::vector<DrawnEdge>{{0, 1, {}}, {1, 2, {}}, {2, 0, {}}});
    double expect = std::log(2 * std::exp(3.0) + 6 * std::exp(-1.0));
    CHECK(brute_force_log_partition({tri, {1, 1, 1}, -1}) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("Kac-Ward equals brute force on 200 random planar instances") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; trial++) {
        auto [graph, js] = random_planar_instance(rng);
        SpinGlassInstance inst{graph, js, -1};
        double kw = log_partition(inst);
        double bf = brute_force_log_partition(inst);
        CHECK(std::abs(kw - bf) <= 1e-9 * std::abs(bf));
    }
}

TEST_CASE("gauge invariance: flipping all couplings at one vertex") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; trial++) {
        auto [graph, js] = random_planar_instance(rng);
        SpinGlassInstance inst{graph, js, -1};
        double base = log_partition(inst);
        uint32_t v = (uint32_t)(rng() % graph->vertex_count());
        SpinGlassInstance flipped = inst;
        for (size_t e = 0; e < graph->edge_count(); e++) {
            if (graph->edges()[e].u == v || graph->edges()[e].v == v) {
                flipped.couplings[e] = -flipped.couplings[e];
            }
        }
        CHECK(log_partition(flipped) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("all-zero couplings give n log 2") {
    std::mt19937_64 rng(7);
    auto [graph, js] = random_planar_instance(rng);
    SpinGlassInstance inst{graph, std::vector<double>(js.size(), 0.0), -1};
    CHECK(log_partition(inst) ==
          doctest::Approx((double)graph->vertex_count() * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("log partition is invariant under rigid motions of the drawing") {
    std::mt19937_64 rng(31);
    auto [graph, js] = random_planar_instance(rng);
    double base = log_partition({graph, js, -1});
    for (double angle : {0.3, 1.2, 2.9}) {
        double ca = std::cos(angle), sa = std::sin(angle);
        std::vector<Point> pts;
        for (const Point &p : graph->vertices()) {
            pts.push_back({ca * p.x - sa * p.y + 3.5, sa * p.x + ca * p.y - 1.25});
        }
        auto moved = std::make_shared<PlanarEmbeddedGraph>(pts, graph->edges());
        CHECK(log_partition({moved, js, -1}) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("parallel edges combine additively in the coupling") {
    // Two vertices joined by a straight edge and a bent edge form a bigon;
    // Z must equal 4 cosh(J1 + J2).
    auto g = std::make_shared<PlanarEmbeddedGraph>(
        std::vector<Point>{{0, 0}, {1, 0}},
        std::vector<DrawnEdge>{{0, 1, {}}, {0, 1, {{0.5, 0.4}}}});
    g->check_no_crossings();
    SpinGlassInstance inst{g, {0.8, -0.3}, -1};
    CHECK(log_partition(inst) == doctest::Approx(std::log(4 * std::cosh(0.5))).epsilon(1e-12));
    CHECK(brute_force_log_partition(inst) ==
          doctest::Approx(std::log(4 * std::cosh(0.5))).epsilon(1e-12));
}

TEST_CASE("brute force rejects oversized instances") {
    std::vector<Point> pts(25, Point{0, 0});
    for (int k = 0; k < 25; k++) {
        pts[k] = {(double)k, 0};
    }
    std::vector<DrawnEdge> edges;
    for (uint32_t k = 0; k + 1 < 25; k++) {
        edges.push_back({k, k + 1, {}});
    }
    auto g = std::make_shared<PlanarEmbeddedGraph>(pts, edges);
    SpinGlassInstance inst{g, std::vector<double>(24, 0.1), -1};
    CHECK_THROWS_AS(brute_force_log_partition(inst), std::invalid_argument);
}

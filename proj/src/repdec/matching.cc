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

#include "repdec/matching.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "repdec/blossom.h"

namespace repdec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIntScale = 1e7;  // blossom runs on rounded integer weights
}

MatchingGraph::MatchingGraph(const DetectorErrorModel &model_in) {
    model_in.validate();
    validate_graphlike(model_in);
    DetectorErrorModel model = merge_parallel(model_in);
    detector_count_ = model.detector_count;
    adjacency_.resize(detector_count_ + 1);
    for (uint32_t k = 0; k < (uint32_t)model.mechanisms.size(); k++) {
        const auto &m = model.mechanisms[k];
        if (m.probability <= 0.0 || m.detectors.empty()) {
            continue;
        }
        double p = clamp_decode_probability(m.probability);
        double w = std::log((1.0 - p) / p);
        uint32_t a = m.detectors[0];
        uint32_t b = m.detectors.size() == 2 ? m.detectors[1] : boundary_node();
        adjacency_[a].push_back({b, w, m.logical_mask, k});
        adjacency_[b].push_back({a, w, m.logical_mask, k});
    }
}

namespace {

struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int64_t> parent_edge;  // index into adjacency_[parent]
    std::vector<uint32_t> parent;
};

}  // namespace

struct MwpmScratch {
    static DijkstraResult run(const MatchingGraph &g, uint32_t source) {
        size_t n = g.adjacency_.size();
        DijkstraResult r;
        r.dist.assign(n, kInf);
        r.parent.assign(n, UINT32_MAX);
        r.parent_edge.assign(n, -1);
        using Item = std::pair<double, uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        r.dist[source] = 0.0;
        heap.push({0.0, source});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > r.dist[v]) {
                continue;
            }
            for (size_t k = 0; k < g.adjacency_[v].size(); k++) {
                const auto &e = g.adjacency_[v][k];
                double nd = d + e.weight;
                // Strict improvement keeps the predecessor choice, and with
                // it the reported path, deterministic.
                if (nd < r.dist[e.to]) {
                    r.dist[e.to] = nd;
                    r.parent[e.to] = v;
                    r.parent_edge[e.to] = (int64_t)k;
                    heap.push({nd, e.to});
                }
            }
        }
        return r;
    }

    static void walk_path(const MatchingGraph &g, const DijkstraResult &r, uint32_t to,
                          MatchingGraph::PathResult &out) {
        uint32_t v = to;
        while (r.parent[v] != UINT32_MAX) {
            uint32_t pv = r.parent[v];
            const auto &e = g.adjacency_[pv][(size_t)r.parent_edge[v]];
            out.logical_mask ^= e.mask;
            out.mechanisms.push_back(e.mechanism);
            v = pv;
        }
    }
};

MatchingGraph::PathResult MatchingGraph::shortest_path(uint32_t from, uint32_t to) const {
    auto r = MwpmScratch::run(*this, from);
    PathResult out;
    out.distance = r.dist[to];
    if (std::isfinite(out.distance)) {
        MwpmScratch::walk_path(*this, r, to, out);
    }
    return out;
}

MwpmOutcome decode_mwpm(const MatchingGraph &graph, const BitVec &syndrome) {
    if (syndrome.size() != graph.detector_count()) {
        throw std::invalid_argument("syndrome width must equal detector count");
    }
    std::vector<uint32_t> defects;
    for (uint32_t d = 0; d < graph.detector_count(); d++) {
        if (syndrome.get(d)) {
            defects.push_back(d);
        }
    }
    MwpmOutcome out;
    if (defects.empty()) {
        return out;
    }

    const size_t k = defects.size();
    std::vector<DijkstraResult> sssp;
    sssp.reserve(k);
    for (uint32_t d : defects) {
        sssp.push_back(MwpmScratch::run(graph, d));
    }

    // Complete graph on defects plus one boundary copy per defect: copy i is
    // reachable only from defect i (at its boundary distance) and from other
    // copies at zero cost, so any subset of defects may pair with the
    // boundary while the rest pair up.
    const int n = (int)(2 * k);
    double max_finite = 1.0;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k + 1; j++) {
            uint32_t target = j < k ? defects[j] : graph.boundary_node();
            double d = sssp[i].dist[target];
            if (std::isfinite(d)) {
                max_finite = std::max(max_finite, d);
            }
        }
    }
    const int64_t big = (int64_t)std::llround(max_finite * kIntScale) * (int64_t)(n + 2) + 2;
    auto to_weight = [&](double d) -> int64_t {
        if (!std::isfinite(d)) {
            return 0;  // absent edge
        }
        return big - (int64_t)std::llround(d * kIntScale) - 1;
    };

    MaxWeightMatching matcher(n);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            matcher.set_weight((int)i, (int)j, to_weight(sssp[i].dist[defects[j]]));
        }
        matcher.set_weight((int)i, (int)(k + i), to_weight(sssp[i].dist[graph.boundary_node()]));
        for (size_t j = i + 1; j < k; j++) {
            matcher.set_weight((int)(k + i), (int)(k + j), big - 1);
        }
    }
    matcher.solve();

    for (size_t i = 0; i < k; i++) {
        int m = matcher.mate((int)i);
        if (m < 0) {
            throw UnsatisfiableSyndromeError("defect " + std::to_string(defects[i]) +
                                             " has no usable matching partner");
        }
        if ((size_t)m >= k) {
            if ((size_t)m != k + i) {
                throw UnsatisfiableSyndromeError("defect cannot reach the boundary");
            }
            if (!std::isfinite(sssp[i].dist[graph.boundary_node()])) {
                throw UnsatisfiableSyndromeError("defect cannot reach the boundary");
            }
            MatchingGraph::PathResult path;
            path.distance = sssp[i].dist[graph.boundary_node()];
            MwpmScratch::walk_path(graph, sssp[i], graph.boundary_node(), path);
            out.predicted_class ^= path.logical_mask;
            out.total_weight += path.distance;
            out.matched_pairs.push_back({defects[i], graph.boundary_node()});
            out.matched_mechanisms.insert(out.matched_mechanisms.end(), path.mechanisms.begin(),
                                          path.mechanisms.end());
        } else if ((size_t)m > i) {
            if (!std::isfinite(sssp[i].dist[defects[m]])) {
                throw UnsatisfiableSyndromeError("matched defects are unreachable");
            }
            MatchingGraph::PathResult path;
            path.distance = sssp[i].dist[defects[m]];
            MwpmScratch::walk_path(graph, sssp[i], defects[m], path);
            out.predicted_class ^= path.logical_mask;
            out.total_weight += path.distance;
            out.matched_pairs.push_back({defects[i], defects[m]});
            out.matched_mechanisms.insert(out.matched_mechanisms.end(), path.mechanisms.begin(),
                                          path.mechanisms.end());
        }
    }
    std::sort(out.matched_mechanisms.begin(), out.matched_mechanisms.end());
    return out;
}

}  // namespace repdec

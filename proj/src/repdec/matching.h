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

#ifndef REPDEC_MATCHING_H
#define REPDEC_MATCHING_H

#include "repdec/dem.h"
#include "repdec/decode_context.h"
#include "repdec/syndrome.h"

namespace repdec {

/// Minimum-weight perfect matching decoder over a graphlike model. Nodes are
/// detectors plus one virtual boundary node absorbing single-detector
/// mechanisms; edge weight is log((1-p)/p) after clamping.
class MatchingGraph {
 public:
    explicit MatchingGraph(const DetectorErrorModel &model);

    uint32_t detector_count() const {
        return detector_count_;
    }
    uint32_t boundary_node() const {
        return detector_count_;
    }

    struct PathResult {
        double distance = 0.0;
        uint64_t logical_mask = 0;
        std::vector<uint32_t> mechanisms;
    };
    /// Cheapest path between two nodes (boundary allowed), deterministic
    /// tie-breaking. distance is +inf when unreachable.
    PathResult shortest_path(uint32_t from, uint32_t to) const;

 private:
    friend struct MwpmScratch;
    struct AdjEdge {
        uint32_t to;
        double weight;
        uint64_t mask;
        uint32_t mechanism;
    };
    uint32_t detector_count_ = 0;
    std::vector<std::vector<AdjEdge>> adjacency_;  // detector nodes + boundary
};

struct MwpmOutcome {
    uint64_t predicted_class = 0;
    double total_weight = 0.0;
    std::vector<std::pair<uint32_t, uint32_t>> matched_pairs;  // boundary as node id
    std::vector<uint32_t> matched_mechanisms;                  // union of path supports
};

MwpmOutcome decode_mwpm(const MatchingGraph &graph, const BitVec &syndrome);

}  // namespace repdec

#endif

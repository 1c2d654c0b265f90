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

#ifndef REPDEC_BLOSSOM_H
#define REPDEC_BLOSSOM_H

#include <cstdint>
#include <vector>

namespace repdec {

/// Textbook O(V^3) maximum weight matching on a general graph (primal-dual
/// with blossom shrinking). Weights must be positive; a weight of zero means
/// "no edge". Deterministic.
class MaxWeightMatching {
 public:
    explicit MaxWeightMatching(int n);

    void set_weight(int u, int v, int64_t w);

    /// Runs the matching. mate(v) is -1 for unmatched vertices.
    void solve();
    int mate(int v) const;
    int64_t total_weight() const;

 private:
    struct HalfEdge {
        int u = 0, v = 0;
        int64_t w = 0;
    };

    int64_t edge_delta(const HalfEdge &e) const;
    void update_slack(int u, int x);
    void recompute_slack(int x);
    void queue_push(int x);
    void set_root(int x, int b);
    int blossom_entry_rotation(int b, int entry);
    void set_match(int u, int v);
    void augment(int u, int v);
    int find_lca(int u, int v);
    void add_blossom(int u, int lca, int v);
    void expand_blossom(int b);
    bool on_tight_edge(const HalfEdge &e);
    bool grow_matching();

    int n_ = 0;
    int n_nodes_ = 0;  // vertices plus active blossom ids
    std::vector<std::vector<HalfEdge>> g_;
    std::vector<int64_t> label_;
    std::vector<int> match_, slack_, root_, parent_, side_, visit_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::vector<int> queue_;
    size_t queue_head_ = 0;
    int visit_epoch_ = 0;
};

}  // namespace repdec

#endif

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

// Primal-dual weighted blossom matching in the classical array formulation:
// vertices are 1..n, shrunk blossoms take ids n+1..2n, root_[] maps a vertex
// to its outermost blossom, and side_[] holds the alternating-tree label
// (-1 free, 0 outer/S, 1 inner/T). All duals are kept doubled so integer
// halving is exact.

#include "repdec/blossom.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace repdec {

namespace {
constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
}

MaxWeightMatching::MaxWeightMatching(int n) : n_(n) {
    int cap = 2 * n + 1;
    g_.assign(cap, std::vector<HalfEdge>(cap));
    for (int u = 0; u < cap; u++) {
        for (int v = 0; v < cap; v++) {
            g_[u][v] = {u, v, 0};
        }
    }
    label_.assign(cap, 0);
    match_.assign(cap, 0);
    slack_.assign(cap, 0);
    root_.assign(cap, 0);
    parent_.assign(cap, 0);
    side_.assign(cap, -1);
    visit_.assign(cap, 0);
    flower_.assign(cap, {});
    flower_from_.assign(cap, std::vector<int>(n + 1, 0));
}

void MaxWeightMatching::set_weight(int u, int v, int64_t w) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("bad edge");
    }
    if (w < 0) {
        throw std::invalid_argument("weights must be nonnegative");
    }
    g_[u + 1][v + 1].w = w;
    g_[v + 1][u + 1].w = w;
}

int64_t MaxWeightMatching::edge_delta(const HalfEdge &e) const {
    return label_[e.u] + label_[e.v] - g_[e.u][e.v].w * 2;
}

void MaxWeightMatching::update_slack(int u, int x) {
    if (!slack_[x] || edge_delta(g_[u][x]) < edge_delta(g_[slack_[x]][x])) {
        slack_[x] = u;
    }
}

void MaxWeightMatching::recompute_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; u++) {
        if (g_[u][x].w > 0 && root_[u] != x && side_[root_[u]] == 0) {
            update_slack(u, x);
        }
    }
}

void MaxWeightMatching::queue_push(int x) {
    if (x <= n_) {
        queue_.push_back(x);
    } else {
        for (int v : flower_[x]) {
            queue_push(v);
        }
    }
}

void MaxWeightMatching::set_root(int x, int b) {
    root_[x] = b;
    if (x > n_) {
        for (int v : flower_[x]) {
            set_root(v, b);
        }
    }
}

int MaxWeightMatching::blossom_entry_rotation(int b, int entry) {
    int pr = (int)(std::find(flower_[b].begin(), flower_[b].end(), entry) - flower_[b].begin());
    if (pr % 2 == 1) {
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        return (int)flower_[b].size() - pr;
    }
    return pr;
}

void MaxWeightMatching::set_match(int u, int v) {
    match_[u] = g_[u][v].v;
    if (u > n_) {
        const HalfEdge &e = g_[u][v];
        int entry = flower_from_[u][e.u];
        int pr = blossom_entry_rotation(u, entry);
        for (int i = 0; i < pr; i++) {
            set_match(flower_[u][i], flower_[u][i ^ 1]);
        }
        set_match(entry, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }
}

void MaxWeightMatching::augment(int u, int v) {
    for (;;) {
        int xnv = root_[match_[u]];
        set_match(u, v);
        if (!xnv) {
            return;
        }
        set_match(xnv, root_[parent_[xnv]]);
        u = root_[parent_[xnv]];
        v = xnv;
    }
}

int MaxWeightMatching::find_lca(int u, int v) {
    for (visit_epoch_++; u || v; std::swap(u, v)) {
        if (u == 0) {
            continue;
        }
        if (visit_[u] == visit_epoch_) {
            return u;
        }
        visit_[u] = visit_epoch_;
        u = root_[match_[u]];
        if (u) {
            u = root_[parent_[u]];
        }
    }
    return 0;
}

void MaxWeightMatching::add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_nodes_ && root_[b]) {
        b++;
    }
    if (b > n_nodes_) {
        n_nodes_++;
    }
    label_[b] = 0;
    side_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = root_[parent_[y]]) {
        flower_[b].push_back(x);
        flower_[b].push_back(y = root_[match_[x]]);
        queue_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = root_[parent_[y]]) {
        flower_[b].push_back(x);
        flower_[b].push_back(y = root_[match_[x]]);
        queue_push(y);
    }
    set_root(b, b);
    for (int x = 1; x <= n_nodes_; x++) {
        g_[b][x].w = g_[x][b].w = 0;
    }
    for (int x = 1; x <= n_; x++) {
        flower_from_[b][x] = 0;
    }
    for (int xs : flower_[b]) {
        for (int x = 1; x <= n_nodes_; x++) {
            if (g_[b][x].w == 0 || edge_delta(g_[xs][x]) < edge_delta(g_[b][x])) {
                g_[b][x] = g_[xs][x];
                g_[x][b] = g_[x][xs];
            }
        }
        for (int x = 1; x <= n_; x++) {
            if (flower_from_[xs][x]) {
                flower_from_[b][x] = xs;
            }
        }
    }
    recompute_slack(b);
}

void MaxWeightMatching::expand_blossom(int b) {
    for (int v : flower_[b]) {
        set_root(v, v);
    }
    int entry = flower_from_[b][g_[b][parent_[b]].u];
    int pr = blossom_entry_rotation(b, entry);
    for (int i = 0; i < pr; i += 2) {
        int xs = flower_[b][i];
        int xns = flower_[b][i + 1];
        parent_[xs] = g_[xns][xs].u;
        side_[xs] = 1;
        side_[xns] = 0;
        slack_[xs] = 0;
        recompute_slack(xns);
        queue_push(xns);
    }
    side_[entry] = 1;
    parent_[entry] = parent_[b];
    for (size_t i = pr + 1; i < flower_[b].size(); i++) {
        int xs = flower_[b][i];
        side_[xs] = -1;
        recompute_slack(xs);
    }
    root_[b] = 0;
}

bool MaxWeightMatching::on_tight_edge(const HalfEdge &e) {
    int u = root_[e.u];
    int v = root_[e.v];
    if (side_[v] == -1) {
        parent_[v] = e.u;
        side_[v] = 1;
        int nu = root_[match_[v]];
        slack_[v] = slack_[nu] = 0;
        side_[nu] = 0;
        queue_push(nu);
    } else if (side_[v] == 0) {
        int lca = find_lca(u, v);
        if (!lca) {
            augment(u, v);
            augment(v, u);
            return true;
        }
        add_blossom(u, lca, v);
    }
    return false;
}

bool MaxWeightMatching::grow_matching() {
    std::fill(side_.begin() + 1, side_.begin() + n_nodes_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_nodes_ + 1, 0);
    queue_.clear();
    queue_head_ = 0;
    for (int x = 1; x <= n_nodes_; x++) {
        if (root_[x] == x && !match_[x]) {
            parent_[x] = 0;
            side_[x] = 0;
            queue_push(x);
        }
    }
    if (queue_.size() == queue_head_) {
        return false;
    }
    for (;;) {
        while (queue_head_ < queue_.size()) {
            int u = queue_[queue_head_++];
            if (side_[root_[u]] == 1) {
                continue;
            }
            for (int v = 1; v <= n_; v++) {
                if (g_[u][v].w > 0 && root_[u] != root_[v]) {
                    if (edge_delta(g_[u][v]) == 0) {
                        if (on_tight_edge(g_[u][v])) {
                            return true;
                        }
                    } else {
                        update_slack(u, root_[v]);
                    }
                }
            }
        }
        int64_t d = kInf;
        for (int b = n_ + 1; b <= n_nodes_; b++) {
            if (root_[b] == b && side_[b] == 1) {
                d = std::min(d, label_[b] / 2);
            }
        }
        for (int x = 1; x <= n_nodes_; x++) {
            if (root_[x] == x && slack_[x]) {
                if (side_[x] == -1) {
                    d = std::min(d, edge_delta(g_[slack_[x]][x]));
                } else if (side_[x] == 0) {
                    d = std::min(d, edge_delta(g_[slack_[x]][x]) / 2);
                }
            }
        }
        for (int u = 1; u <= n_; u++) {
            if (side_[root_[u]] == 0) {
                if (label_[u] <= d) {
                    return false;  // a free tree root's dual hit zero
                }
                label_[u] -= d;
            } else if (side_[root_[u]] == 1) {
                label_[u] += d;
            }
        }
        for (int b = n_ + 1; b <= n_nodes_; b++) {
            if (root_[b] == b && side_[b] >= 0) {
                label_[b] += side_[b] == 0 ? 2 * d : -2 * d;
            }
        }
        queue_.clear();
        queue_head_ = 0;
        for (int x = 1; x <= n_nodes_; x++) {
            if (root_[x] == x && slack_[x] && root_[slack_[x]] != x &&
                edge_delta(g_[slack_[x]][x]) == 0) {
                if (on_tight_edge(g_[slack_[x]][x])) {
                    return true;
                }
            }
        }
        for (int b = n_ + 1; b <= n_nodes_; b++) {
            if (root_[b] == b && side_[b] == 1 && label_[b] == 0) {
                expand_blossom(b);
            }
        }
    }
}

void MaxWeightMatching::solve() {
    n_nodes_ = n_;
    std::fill(match_.begin(), match_.end(), 0);
    int64_t w_max = 0;
    for (int u = 0; u <= 2 * n_; u++) {
        root_[u] = u;
        flower_[u].clear();
    }
    for (int u = 1; u <= n_; u++) {
        for (int v = 1; v <= n_; v++) {
            flower_from_[u][v] = u == v ? u : 0;
            w_max = std::max(w_max, g_[u][v].w);
        }
    }
    for (int u = 1; u <= n_; u++) {
        label_[u] = w_max;
    }
    while (grow_matching()) {
    }
}

int MaxWeightMatching::mate(int v) const {
    int m = match_[v + 1];
    return m == 0 ? -1 : m - 1;
}

int64_t MaxWeightMatching::total_weight() const {
    int64_t total = 0;
    for (int u = 1; u <= n_; u++) {
        if (match_[u] > u) {
            total += g_[u][match_[u]].w;
        }
    }
    return total;
}

}  // namespace repdec

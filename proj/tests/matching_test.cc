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

#include "repdec/blossom.h"
#include "repdec/circuit.h"
#include "repdec/decoder.h"
#include "repdec/frame_sim.h"
#include "repdec/matching.h"
#include "repdec/noise.h"

using namespace repdec;

namespace {

int64_t dp_max_matching(int n, const std::vector<std::vector<int64_t>> &w) {
    std::vector<int64_t> dp(size_t(1) << n, 0);
    for (int mask = 1; mask < (1 << n); mask++) {
        int i = __builtin_ctz((unsigned)mask);
        dp[mask] = dp[mask & (mask - 1)];
        for (int j = i + 1; j < n; j++) {
            if ((mask >> j & 1) && w[i][j] > 0) {
                dp[mask] = std::max(dp[mask], dp[mask ^ (1 << i) ^ (1 << j)] + w[i][j]);
            }
        }
    }
    return dp[(size_t(1) << n) - 1];
}

struct BruteMin {
    double weight = 1e300;
    bool class_bit = false;
    bool class_unique = true;
};

// Minimum-weight error consistent with a syndrome, over every mechanism
// subset of a small model.
BruteMin brute_force_min_weight(const DetectorErrorModel &model, uint64_t syndrome) {
    size_t n = model.mechanisms.size();
    BruteMin best;
    for (uint64_t sub = 0; sub < (uint64_t(1) << n); sub++) {
        uint64_t syn = 0;
        uint64_t mask = 0;
        double weight = 0;
        for (size_t k = 0; k < n; k++) {
            if (sub >> k & 1) {
                const auto &m = model.mechanisms[k];
                for (uint32_t det : m.detectors) {
                    syn ^= uint64_t(1) << det;
                }
                mask ^= m.logical_mask;
                double p = clamp_decode_probability(m.probability);
                weight += std::log((1 - p) / p);
            }
        }
        if (syn != syndrome) {
            continue;
        }
        if (weight < best.weight - 1e-9) {
            best.weight = weight;
            best.class_bit = mask & 1;
            best.class_unique = true;
        } else if (weight < best.weight + 1e-9 && (bool)(mask & 1) != best.class_bit) {
            best.class_unique = false;
        }
    }
    return best;
}

BitVec syndrome_bits(uint32_t n, uint64_t pattern) {
    BitVec s(n);
    for (uint32_t k = 0; k < n; k++) {
        if (pattern >> k & 1) {
            s.set(k, true);
        }
    }
    return s;
}

}  // namespace

TEST_CASE("blossom agrees with the subset-DP oracle") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 400; trial++) {
        int n = 2 + (int)(rng() % 11);
        std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
        MaxWeightMatching m(n);
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                if (rng() % 10 < 7) {
                    int64_t wt = 1 + (int64_t)(rng() % 100);
                    w[i][j] = w[j][i] = wt;
                    m.set_weight(i, j, wt);
                }
            }
        }
        m.solve();
        CHECK(m.total_weight() == dp_max_matching(n, w));
    }
}

TEST_CASE("two adjacent defects match through their shared mechanism") {
    auto dem = parse_dem(
        "detector(0, 0) D0\n"
        "detector(1, 0) D1\n"
        "error(0.01) D0 L0\n"
        "error(0.2) D0 D1\n"
        "error(0.01) D1\n");
    MatchingGraph graph(dem);
    auto out = decode_mwpm(graph, syndrome_bits(2, 0b11));
    REQUIRE(out.matched_pairs.size() == 1);
    CHECK(out.matched_pairs[0] == std::pair<uint32_t, uint32_t>{0, 1});
    CHECK(out.matched_mechanisms == std::vector<uint32_t>{1});
    CHECK(out.predicted_class == 0);
}

TEST_CASE("matched mechanisms reproduce the syndrome exactly") {
    auto noisy = attach_noise(build_repetition_circuit(5, 4), {NoiseModel::Depolarizing, 0.04});
    auto dem = extract_dem(noisy);
    MatchingGraph graph(dem);
    auto batch = sample_syndromes(noisy, 200, 17);
    for (size_t shot = 0; shot < batch.shots; shot++) {
        auto s = syndrome_of_shot(batch, shot);
        auto out = decode_mwpm(graph, s);
        std::vector<int> parity(dem.detector_count, 0);
        for (uint32_t mech : out.matched_mechanisms) {
            for (uint32_t det : dem.mechanisms[mech].detectors) {
                parity[det] ^= 1;
            }
        }
        for (uint32_t det = 0; det < dem.detector_count; det++) {
            CHECK(parity[det] == (int)s.get(det));
        }
    }
}

TEST_CASE("matching weight equals the exhaustive minimum on 500 d=3 r=2 syndromes") {
    auto dem = extract_dem(
        attach_noise(build_repetition_circuit(3, 2), {NoiseModel::Depolarizing, 0.02}));
    MatchingGraph graph(dem);
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 500; trial++) {
        uint64_t pattern = rng() % 64;
        auto out = decode_mwpm(graph, syndrome_bits(6, pattern));
        auto brute = brute_force_min_weight(dem, pattern);
        CHECK(out.total_weight == doctest::Approx(brute.weight).epsilon(1e-9));
        if (brute.class_unique) {
            CHECK((out.predicted_class & 1) == (uint64_t)brute.class_bit);
        }
    }
}

TEST_CASE("unsatisfiable syndrome: isolated defect with no incident mechanisms") {
    auto dem = parse_dem(
        "detectors 3\n"
        "detector(0, 0) D0\n"
        "detector(1, 0) D1\n"
        "detector(2, 0) D2\n"
        "error(0.1) D0 L0\n"
        "error(0.1) D0 D1\n"
        "error(0.1) D1\n");
    MatchingGraph graph(dem);
    CHECK_THROWS_AS(decode_mwpm(graph, syndrome_bits(3, 0b100)), UnsatisfiableSyndromeError);
    CHECK_NOTHROW(decode_mwpm(graph, syndrome_bits(3, 0b011)));
}

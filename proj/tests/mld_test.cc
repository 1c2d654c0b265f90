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
#include <map>
#include <random>

#include "repdec/circuit.h"
#include "repdec/code_capacity.h"
#include "repdec/decode_context.h"
#include "repdec/decoder.h"
#include "repdec/frame_sim.h"
#include "repdec/noise.h"

using namespace repdec;

namespace {

DetectorErrorModel rep_dem(uint32_t d, uint32_t r, double p,
                           NoiseModel noise = NoiseModel::Depolarizing) {
    return extract_dem(attach_noise(build_repetition_circuit(d, r), {noise, p}));
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

// Exhaustive coset sums over every mechanism subset, bucketed by syndrome
// and class. Independent of the decoder path.
std::map<std::pair<uint64_t, int>, double> enumerate_cosets(const DetectorErrorModel &model) {
    std::map<std::pair<uint64_t, int>, double> table;
    size_t n = model.mechanisms.size();
    REQUIRE(n <= 24);
    for (uint64_t sub = 0; sub < (uint64_t(1) << n); sub++) {
        double prob = 1.0;
        uint64_t syndrome = 0;
        uint64_t mask = 0;
        for (size_t k = 0; k < n; k++) {
            const auto &m = model.mechanisms[k];
            if (sub >> k & 1) {
                prob *= m.probability;
                for (uint32_t det : m.detectors) {
                    syndrome ^= uint64_t(1) << det;
                }
                mask ^= m.logical_mask;
            } else {
                prob *= 1.0 - m.probability;
            }
        }
        table[{syndrome, (int)(mask & 1)}] += prob;
    }
    return table;
}

// Sum over the primal cycle space of prod exp(J sigma_e), via fundamental
// cycles of a spanning forest over the context's planar mechanisms.
double log_cycle_space_sum(const DecodeContext &ctx, const BitVec &error_subset) {
    const auto &graph = *ctx.primal;
    size_t n_vertices = graph.vertex_count();
    size_t n_edges = graph.edge_count();
    std::vector<int64_t> comp(n_vertices, -1);
    std::vector<uint64_t> vertex_path(n_vertices, 0);  // edge set to component root
    std::vector<uint64_t> cycles;
    REQUIRE(n_edges <= 60);
    // Union-find-free incremental forest with edge-path tracking.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> adj(n_vertices);
    std::vector<uint8_t> in_tree(n_edges, 0);
    {
        // Build spanning forest by BFS.
        std::vector<std::vector<std::pair<uint32_t, uint32_t>>> all(n_vertices);
        for (uint32_t e = 0; e < n_edges; e++) {
            all[graph.edges()[e].u].push_back({graph.edges()[e].v, e});
            all[graph.edges()[e].v].push_back({graph.edges()[e].u, e});
        }
        std::vector<int> seen(n_vertices, 0);
        for (uint32_t root = 0; root < n_vertices; root++) {
            if (seen[root]) {
                continue;
            }
            seen[root] = 1;
            std::vector<uint32_t> stack = {root};
            while (!stack.empty()) {
                uint32_t v = stack.back();
                stack.pop_back();
                for (auto [w, e] : all[v]) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        in_tree[e] = 1;
                        vertex_path[w] = vertex_path[v] ^ (uint64_t(1) << e);
                        stack.push_back(w);
                    }
                }
            }
        }
        for (uint32_t e = 0; e < n_edges; e++) {
            if (!in_tree[e]) {
                cycles.push_back(vertex_path[graph.edges()[e].u] ^
                                 vertex_path[graph.edges()[e].v] ^ (uint64_t(1) << e));
            }
        }
    }
    REQUIRE(cycles.size() <= 22);
    double max_term = -1e300;
    double scaled = 0.0;
    for (uint64_t combo = 0; combo < (uint64_t(1) << cycles.size()); combo++) {
        uint64_t cyc = 0;
        for (size_t k = 0; k < cycles.size(); k++) {
            if (combo >> k & 1) {
                cyc ^= cycles[k];
            }
        }
        double energy = 0.0;
        for (uint32_t e = 0; e < n_edges; e++) {
            double j = ctx.base_coupling[e] * (error_subset.get(e) ? -1.0 : 1.0);
            energy += (cyc >> e & 1) ? -j : j;
        }
        if (energy > max_term) {
            scaled = scaled * std::exp(max_term - energy) + 1.0;
            max_term = energy;
        } else {
            scaled += std::exp(energy - max_term);
        }
    }
    (void)adj;
    (void)comp;
    return max_term + std::log(scaled);
}

}  // namespace

TEST_CASE("coset probabilities match exhaustive enumeration on the d=3 r=2 model") {
    auto dem = rep_dem(3, 2, 0.01);
    REQUIRE(dem.mechanisms.size() == 15);
    auto ctx = build_context(dem);
    auto table = enumerate_cosets(dem);
    std::mt19937_64 rng(404);
    int argmax_agree = 0;
    for (int trial = 0; trial < 20; trial++) {
        uint64_t pattern = rng() % 64;
        BitVec s = syndrome_bits(6, pattern);
        for (int cls = 0; cls < 2; cls++) {
            double got = std::exp(coset_log_prob(ctx, s, cls));
            double want = table[{pattern, cls}];
            CHECK(std::abs(got - want) <= 1e-8 * want);
        }
        auto out = decode(ctx, s);
        int want_cls = table[{pattern, 1}] > table[{pattern, 0}] ? 1 : 0;
        argmax_agree += (int)out.predicted_class == want_cls;
        CHECK(out.llr == doctest::Approx(out.log_coset[1] - out.log_coset[0]));
    }
    CHECK(argmax_agree == 20);
}

TEST_CASE("degenerate single-mechanism model: bridge becomes a scalar factor") {
    auto dem = parse_dem("detector(0, 0) D0\nerror(0.1) D0");
    auto ctx = build_context(dem);
    CHECK(ctx.bridge_mechanisms.size() == 1);
    CHECK(ctx.dual->vertex_count() == 1);  // just the auxiliary spin
    BitVec zero(1);
    CHECK(std::exp(coset_log_prob(ctx, zero, 0)) == doctest::Approx(0.9).epsilon(1e-12));
    BitVec fired = syndrome_bits(1, 1);
    CHECK(std::exp(coset_log_prob(ctx, fired, 0)) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("model with both diagonals in one cell is rejected as non-planar") {
    auto dem = parse_dem(
        "detector(0, 0) D0\n"
        "detector(1, 0) D1\n"
        "detector(0, 1) D2\n"
        "detector(1, 1) D3\n"
        "error(0.1) D0 D1\n"
        "error(0.1) D0 D2\n"
        "error(0.1) D1 D3\n"
        "error(0.1) D2 D3\n"
        "error(0.1) D0 D3\n"
        "error(0.1) D1 D2\n"
        "error(0.1) D0 L0\n"
        "error(0.1) D1\n");
    CHECK_THROWS_AS(build_context(dem), NonPlanarError);
}

TEST_CASE("a declared observable that nothing can flip is rejected") {
    auto dem = parse_dem("observables 1\ndetector(0, 0) D0\nerror(0.1) D0");
    CHECK_THROWS_AS(build_context(dem), NoLogicalRepresentativeError);
}

TEST_CASE("reference error: zero syndrome, verified incidence, unsatisfiable") {
    auto dem = rep_dem(3, 2, 0.01);
    auto ctx = build_context(dem);

    BitVec zero(6);
    auto ref = reference_error(ctx, zero);
    CHECK_FALSE(ref.any());

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 16; trial++) {
        uint64_t pattern = rng() % 64;
        BitVec s = syndrome_bits(6, pattern);
        auto x = reference_error(ctx, s);
        // Re-multiply the incidence matrix.
        uint64_t check = 0;
        for (size_t k = 0; k < ctx.planar_mechanisms.size(); k++) {
            if (x.get(k)) {
                for (uint32_t det : ctx.planar_mechanisms[k].detectors) {
                    check ^= uint64_t(1) << det;
                }
            }
        }
        CHECK(check == pattern);
    }

    auto lonely = parse_dem(
        "detectors 2\n"
        "detector(0, 0) D0\n"
        "detector(1, 0) D1\n"
        "error(0.1) D0 L0\n"
        "error(0.1) D0\n");
    auto lonely_ctx = build_context(lonely);
    CHECK_THROWS_AS(reference_error(lonely_ctx, syndrome_bits(2, 2)), UnsatisfiableSyndromeError);
}

TEST_CASE("coset well-definedness: any reference with equal parity agrees") {
    auto dem = rep_dem(3, 2, 0.02);
    auto ctx = build_context(dem);
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; trial++) {
        BitVec s = syndrome_bits(6, rng() % 64);
        auto ref = reference_error(ctx, s);
        double expect0 = coset_log_prob(ctx, s, 0);
        double expect1 = coset_log_prob(ctx, s, 1);
        // XOR a face cycle into the reference; the coset values cannot move.
        for (size_t f = 0; f < ctx.faces.walks.size(); f++) {
            if (f == ctx.faces.outer_face) {
                continue;
            }
            BitVec alt = ref;
            for (uint32_t dir : ctx.faces.walks[f]) {
                alt.flip(dir / 2);
            }
            // Recompute coset probabilities through the internal pieces.
            double planar0 = log_partition(ctx.instance_for(alt)) + ctx.bridge_log_factor(alt);
            BitVec alt1 = alt;
            alt1 ^= ctx.logical_representative;
            double planar1 = log_partition(ctx.instance_for(alt1)) + ctx.bridge_log_factor(alt1);
            bool parity = false;
            for (size_t k = 0; k < ctx.planar_mechanisms.size(); k++) {
                if (alt.get(k)) {
                    parity ^= ctx.planar_mechanisms[k].logical_mask & 1;
                }
            }
            double got0 = ctx.log_sqrt_pq_sum - std::log(2.0) + (parity ? planar1 : planar0);
            double got1 = ctx.log_sqrt_pq_sum - std::log(2.0) + (parity ? planar0 : planar1);
            CHECK(got0 == doctest::Approx(expect0).epsilon(1e-9));
            CHECK(got1 == doctest::Approx(expect1).epsilon(1e-9));
        }
        break;  // one syndrome with all faces is plenty per run
    }
}

TEST_CASE("class-swap symmetry: flipping the representative couplings swaps classes") {
    auto dem = rep_dem(3, 2, 0.03);
    auto ctx = build_context(dem);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 8; trial++) {
        BitVec s = syndrome_bits(6, rng() % 64);
        auto ref = reference_error(ctx, s);
        BitVec flipped = ref;
        flipped ^= ctx.logical_representative;
        double a_ref = log_partition(ctx.instance_for(ref)) + ctx.bridge_log_factor(ref);
        double a_flip = log_partition(ctx.instance_for(flipped)) + ctx.bridge_log_factor(flipped);
        bool ref_parity = false;
        for (size_t k = 0; k < ctx.planar_mechanisms.size(); k++) {
            if (ref.get(k)) {
                ref_parity ^= ctx.planar_mechanisms[k].logical_mask & 1;
            }
        }
        // The reference instance scores the class equal to its own mask
        // parity; flipping the representative couplings swaps the roles.
        auto out = decode(ctx, s);
        double expect = ref_parity ? a_ref - a_flip : a_flip - a_ref;
        CHECK(out.llr == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("auxiliary spin doubling on every small context") {
    std::vector<DetectorErrorModel> models = {
        rep_dem(3, 1, 0.02),
        rep_dem(3, 2, 0.01),
        rep_dem(5, 1, 0.015),
        rep_dem(3, 1, 0.02, NoiseModel::SI1000),
    };
    {
        auto cc = build_code_capacity_model(CodeFamily::Surface, 3, 0.05, 0.05);
        models.push_back(cc.x_dem);
        auto rsc = build_code_capacity_model(CodeFamily::RotatedSurface, 3, 0.08, 0.08);
        models.push_back(rsc.x_dem);
        models.push_back(rsc.z_dem);
    }
    std::mt19937_64 rng(303);
    for (const auto &model : models) {
        auto ctx = build_context(model);
        REQUIRE(ctx.dual->vertex_count() <= 20);
        BitVec subset(ctx.planar_mechanisms.size());
        for (size_t k = 0; k < ctx.planar_mechanisms.size(); k++) {
            if (rng() % 3 == 0) {
                subset.set(k, true);
            }
        }
        double dual = brute_force_log_partition(ctx.instance_for(subset)) +
                      ctx.bridge_log_factor(subset);
        double cycles = log_cycle_space_sum(ctx, subset);
        CHECK(dual == doctest::Approx(std::log(2.0) + cycles).epsilon(1e-9));
        // And the Kac-Ward value agrees with the brute-force dual sum.
        double kw = log_partition(ctx.instance_for(subset)) + ctx.bridge_log_factor(subset);
        CHECK(kw == doctest::Approx(dual).epsilon(1e-9));
    }
}

TEST_CASE("total probability over syndromes and classes is one") {
    auto dem = parse_dem(
        "detector(0, 0) D0\n"
        "detector(1, 0) D1\n"
        "error(0.1) D0 L0\n"
        "error(0.2) D0 D1\n"
        "error(0.15) D1\n"
        "error(0.05) L0\n");
    auto ctx = build_context(dem);
    double total = 0.0;
    for (uint64_t pattern = 0; pattern < 4; pattern++) {
        BitVec s = syndrome_bits(2, pattern);
        for (int cls = 0; cls < 2; cls++) {
            total += std::exp(coset_log_prob(ctx, s, cls));
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("detached logical channels match enumeration") {
    auto dem = parse_dem(
        "detector(0, 0) D0\n"
        "error(0.1) D0 L0\n"
        "error(0.2) D0\n"
        "error(0.3) L0\n");
    auto ctx = build_context(dem);
    auto table = enumerate_cosets(dem);
    for (uint64_t pattern = 0; pattern < 2; pattern++) {
        BitVec s = syndrome_bits(1, pattern);
        for (int cls = 0; cls < 2; cls++) {
            double got = std::exp(coset_log_prob(ctx, s, cls));
            CHECK(got == doctest::Approx(table[{pattern, cls}]).epsilon(1e-10));
        }
    }
}

TEST_CASE("zero syndrome at small p predicts the trivial class") {
    auto ctx = build_context(rep_dem(3, 2, 0.001));
    auto out = decode(ctx, BitVec(6));
    CHECK(out.predicted_class == 0);
    CHECK(out.llr < 0);
}

TEST_CASE("all couplings at p=0.5 give equal classes and tie-break to zero") {
    DetectorErrorModel dem = rep_dem(3, 1, 0.01);
    for (auto &m : dem.mechanisms) {
        m.probability = 0.5;
    }
    auto ctx = build_context(dem);
    auto out = decode(ctx, BitVec(4));
    CHECK(std::abs(out.llr) < 1e-9);
    CHECK(out.predicted_class == 0);
}

TEST_CASE("single-chain toy model: llr approaches the representative weight") {
    const double p = 1e-6;
    char buf[256];
    snprintf(buf, sizeof buf,
             "detector(0, 0) D0\ndetector(1, 0) D1\n"
             "error(%.12g) D0 L0\nerror(%.12g) D0 D1\nerror(%.12g) D1\n",
             p, p, p);
    auto ctx = build_context(parse_dem(buf));
    auto out = decode(ctx, BitVec(2));
    double expect = 3.0 * std::log(p / (1.0 - p));
    CHECK(std::abs(out.llr - expect) <= 1e-3 * std::abs(expect));
}

TEST_CASE("batch decoding is pure and order-stable") {
    auto noisy = attach_noise(build_repetition_circuit(3, 2), {NoiseModel::Depolarizing, 0.05});
    auto batch = sample_syndromes(noisy, 64, 9);
    auto ctx = build_context(extract_dem(noisy));
    auto res1 = decode_batch(ctx, batch, 1);
    auto res4 = decode_batch(ctx, batch, 4);
    REQUIRE(res1.outcomes.size() == res4.outcomes.size());
    for (size_t k = 0; k < res1.outcomes.size(); k++) {
        CHECK(res1.outcomes[k].predicted_class == res4.outcomes[k].predicted_class);
        CHECK(res1.outcomes[k].llr == doctest::Approx(res4.outcomes[k].llr));
    }
    CHECK(res1.failures == res4.failures);

    // Swapping two shots swaps the outcomes verbatim.
    SyndromeBatch swapped = batch;
    for (uint32_t d = 0; d < batch.detector_count; d++) {
        swapped.detector_bits.set(0, d, batch.detector_bits.get(1, d));
        swapped.detector_bits.set(1, d, batch.detector_bits.get(0, d));
    }
    auto res_swapped = decode_batch(ctx, swapped, 1);
    CHECK(res_swapped.outcomes[0].predicted_class == res1.outcomes[1].predicted_class);
    CHECK(res_swapped.outcomes[1].predicted_class == res1.outcomes[0].predicted_class);
    CHECK(res_swapped.outcomes[0].llr == res1.outcomes[1].llr);
    CHECK(res_swapped.outcomes[1].llr == res1.outcomes[0].llr);
}

TEST_CASE("code capacity: surface d=3 class probabilities match enumeration") {
    auto cc = build_code_capacity_context(CodeFamily::Surface, 3, 0.08, 0.08);
    REQUIRE(cc.model.qubits.size() == 13);
    auto table = enumerate_cosets(cc.model.x_dem);
    for (uint64_t pattern = 0; pattern < 64; pattern++) {
        BitVec s = syndrome_bits(6, pattern);
        for (int cls = 0; cls < 2; cls++) {
            double want = table[{pattern, cls}];
            double got = std::exp(coset_log_prob(cc.x_context, s, cls));
            CHECK(std::abs(got - want) <= 1e-9 * std::max(want, 1e-30));
        }
    }
}

TEST_CASE("code capacity: rotated surface d=3 class probabilities match enumeration") {
    auto cc = build_code_capacity_context(CodeFamily::RotatedSurface, 3, 0.06, 0.09);
    REQUIRE(cc.model.qubits.size() == 9);
    // Qubit-level enumeration; the merged boundary pairs must still agree.
    for (bool z_side : {false, true}) {
        const auto &dem = z_side ? cc.model.z_dem : cc.model.x_dem;
        const auto &ctx = z_side ? cc.z_context : cc.x_context;
        double p = z_side ? 0.09 : 0.06;
        std::map<std::pair<uint64_t, int>, double> table;
        for (uint64_t sub = 0; sub < (uint64_t(1) << 9); sub++) {
            double prob = 1.0;
            uint64_t syndrome = 0;
            int mask = 0;
            for (size_t q = 0; q < 9; q++) {
                const auto &qu = cc.model.qubits[q];
                if (sub >> q & 1) {
                    prob *= p;
                    for (uint32_t det : z_side ? qu.z_detectors : qu.x_detectors) {
                        syndrome ^= uint64_t(1) << det;
                    }
                    mask ^= (int)(z_side ? qu.z_mask : qu.x_mask) & 1;
                } else {
                    prob *= 1.0 - p;
                }
            }
            table[{syndrome, mask}] += prob;
        }
        for (uint64_t pattern = 0; pattern < (uint64_t(1) << dem.detector_count); pattern++) {
            BitVec s = syndrome_bits(dem.detector_count, pattern);
            for (int cls = 0; cls < 2; cls++) {
                double want = table[{pattern, cls}];
                double got = std::exp(coset_log_prob(ctx, s, cls));
                CHECK(std::abs(got - want) <= 1e-9 * std::max(want, 1e-30));
            }
        }
    }
}

TEST_CASE("code capacity: surface qubit count scales as d^2 + (d-1)^2") {
    for (uint32_t d : {3u, 5u, 7u}) {
        auto model = build_code_capacity_model(CodeFamily::Surface, d, 0.05, 0.05);
        CHECK(model.qubits.size() == d * d + (d - 1) * (d - 1));
        auto rsc = build_code_capacity_model(CodeFamily::RotatedSurface, d, 0.05, 0.05);
        CHECK(rsc.qubits.size() == d * d);
    }
}

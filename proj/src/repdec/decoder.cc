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

#include "repdec/decoder.h"

#include <cmath>
#include <limits>
#include <thread>

#include "repdec/linalg.h"

namespace repdec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    if (a == -kInf) {
        return b;
    }
    if (b == -kInf) {
        return a;
    }
    double hi = std::max(a, b);
    return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

bool subset_mask_parity(const DecodeContext &ctx, const BitVec &subset) {
    bool parity = false;
    for (size_t k = 0; k < ctx.planar_mechanisms.size(); k++) {
        if (subset.get(k)) {
            parity ^= (ctx.planar_mechanisms[k].logical_mask & 1) != 0;
        }
    }
    return parity;
}

// A coset whose weight sits so far in the tail that its determinant is
// numerically singular is scored this far below the healthy class; exp() of
// the difference underflows to an exact zero.
constexpr double kSaturatedGap = 1500.0;

/// Unnormalized planar coset scores, without the sqrt(p(1-p)) prefactor:
/// scores[m] = log sum over planar error sets with syndrome gamma and planar
/// mask m of prod ((1-p)/p)^(+-1/2), i.e. log(Z_dual / 2) per class.
void planar_class_scores(const DecodeContext &ctx, const BitVec &reference, double scores[2]) {
    bool ref_parity = subset_mask_parity(ctx, reference);
    scores[0] = scores[1] = -kInf;
    int singular_class = -1;
    for (int m = 0; m < 2; m++) {
        bool need_flip = (m == 1) != ref_parity;
        if (need_flip && !ctx.has_planar_representative) {
            continue;
        }
        BitVec subset = reference;
        if (need_flip) {
            subset ^= ctx.logical_representative;
        }
        try {
            double log_z = log_partition(ctx.instance_for(subset)) + ctx.bridge_log_factor(subset);
            scores[m] = log_z - std::log(2.0);
        } catch (const SingularMatrixError &) {
            if (singular_class >= 0) {
                throw;  // both classes degenerate: a genuine input problem
            }
            singular_class = m;
        }
    }
    if (singular_class >= 0) {
        if (scores[singular_class ^ 1] == -kInf) {
            throw SingularMatrixError("both coset instances are numerically singular");
        }
        scores[singular_class] = scores[singular_class ^ 1] - kSaturatedGap;
    }
}

void total_class_scores(const DecodeContext &ctx, const BitVec &reference, double totals[2]) {
    double planar[2];
    planar_class_scores(ctx, reference, planar);
    for (int l = 0; l < 2; l++) {
        totals[l] = log_sum_exp(planar[0] + ctx.log_detached_parity[l & 1],
                                planar[1] + ctx.log_detached_parity[(l ^ 1) & 1]);
    }
}

}  // namespace

double coset_log_prob(const DecodeContext &ctx, const BitVec &syndrome, int class_bit) {
    BitVec reference = reference_error(ctx, syndrome);
    double totals[2];
    total_class_scores(ctx, reference, totals);
    return ctx.log_sqrt_pq_sum + totals[class_bit & 1];
}

namespace {

DecodeOutcome decode_reference(const DecodeContext &ctx, const BitVec &reference) {
    DecodeOutcome out;
    double totals[2];
    total_class_scores(ctx, reference, totals);
    out.log_coset[0] = ctx.log_sqrt_pq_sum + totals[0];
    out.log_coset[1] = ctx.log_sqrt_pq_sum + totals[1];
    out.llr = totals[1] - totals[0];
    out.predicted_class = out.llr > 0 ? 1 : 0;
    return out;
}

}  // namespace

DecodeOutcome decode(const DecodeContext &ctx, const BitVec &syndrome) {
    return decode_reference(ctx, reference_error(ctx, syndrome));
}

BitVec syndrome_of_shot(const SyndromeBatch &batch, size_t shot) {
    BitVec s(batch.detector_count);
    for (uint32_t d = 0; d < batch.detector_count; d++) {
        if (batch.detector_bits.get(shot, d)) {
            s.set(d, true);
        }
    }
    return s;
}

BatchDecodeResult decode_batch(const DecodeContext &ctx, const SyndromeBatch &batch,
                               uint32_t threads) {
    BatchDecodeResult result;
    result.outcomes.resize(batch.shots);
    result.scored = batch.has_observables;

    // The all-zero syndrome dominates at low error rates; decode it once.
    DecodeOutcome trivial;
    bool have_trivial = false;
    {
        BitVec zero(ctx.detector_count);
        try {
            trivial = decode(ctx, zero);
            have_trivial = true;
        } catch (const UnsatisfiableSyndromeError &) {
        }
    }

    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t shot = lo; shot < hi; shot++) {
            BitVec s = syndrome_of_shot(batch, shot);
            if (have_trivial && !s.any()) {
                result.outcomes[shot] = trivial;
                continue;
            }
            try {
                result.outcomes[shot] = decode(ctx, s);
            } catch (const UnsatisfiableSyndromeError &) {
                result.outcomes[shot] = DecodeOutcome{0, 0.0, {-kInf, -kInf}, true};
            }
        }
    };

    if (threads <= 1 || batch.shots < 2 * threads) {
        run_range(0, batch.shots);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (batch.shots + threads - 1) / threads;
        for (uint32_t t = 0; t < threads; t++) {
            size_t lo = t * chunk;
            size_t hi = std::min(batch.shots, lo + chunk);
            if (lo < hi) {
                pool.emplace_back(run_range, lo, hi);
            }
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    for (size_t shot = 0; shot < batch.shots; shot++) {
        const DecodeOutcome &o = result.outcomes[shot];
        if (o.unsatisfiable) {
            result.unsatisfiable++;
            result.failures++;
        } else if (batch.has_observables &&
                   o.predicted_class != (uint64_t)batch.observable_bits.get(shot, 0)) {
            result.failures++;
        }
    }
    return result;
}

}  // namespace repdec

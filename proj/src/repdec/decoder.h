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

#ifndef REPDEC_DECODER_H
#define REPDEC_DECODER_H

#include "repdec/decode_context.h"
#include "repdec/syndrome.h"

namespace repdec {

struct DecodeOutcome {
    uint64_t predicted_class = 0;   // bit per observable
    double llr = 0.0;               // log P(l=1) - log P(l=0)
    double log_coset[2] = {0, 0};   // per-class log P(l, gamma)
    bool unsatisfiable = false;
};

/// log P(l = class_bit, gamma), exact, including the sqrt(p(1-p)) prefactor
/// and the detached logical channels. -inf when the class is unreachable.
double coset_log_prob(const DecodeContext &ctx, const BitVec &syndrome, int class_bit);

/// Maximum-likelihood class for one syndrome. Ties (llr exactly 0) resolve
/// to class 0. Throws UnsatisfiableSyndrome.
DecodeOutcome decode(const DecodeContext &ctx, const BitVec &syndrome);

struct BatchDecodeResult {
    std::vector<DecodeOutcome> outcomes;
    size_t failures = 0;       // vs observable bits; unsatisfiable shots count
    size_t unsatisfiable = 0;
    bool scored = false;
};

/// Order-stable parallel decoding; unsatisfiable shots are reported, counted
/// as failures, and do not abort the batch.
BatchDecodeResult decode_batch(const DecodeContext &ctx, const SyndromeBatch &batch,
                               uint32_t threads = 1);

BitVec syndrome_of_shot(const SyndromeBatch &batch, size_t shot);

}  // namespace repdec

#endif

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

#ifndef REPDEC_SUBSAMPLE_H
#define REPDEC_SUBSAMPLE_H

#include "repdec/dem.h"
#include "repdec/syndrome.h"

namespace repdec {

struct SubsampleResult {
    SyndromeBatch batch;
    DetectorErrorModel model;
};

/// Restricts a repetition-code dataset and its model to a lower-distance
/// window of data-qubit columns. Kept detector columns are copied verbatim;
/// mechanisms crossing the window edge turn into boundary mechanisms, and
/// parallel leftovers (the beveled edges) are XOR-merged. The window's
/// logical observable is re-derived from the source observable plus the
/// detector columns left of the window.
SubsampleResult subsample(const SyndromeBatch &batch, const DetectorErrorModel &model,
                          uint32_t target_distance, uint32_t offset);

/// Window count for a source distance: source_d - target_d + 1.
uint32_t subsample_window_count(const DetectorErrorModel &model, uint32_t target_distance);

}  // namespace repdec

#endif

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

#ifndef REPDEC_RNG_H
#define REPDEC_RNG_H

#include <cstdint>

namespace repdec {

/// Counter-based splitmix64 stream keyed by (seed, shot). Each shot owns an
/// independent substream, so sampling is reproducible for a fixed seed no
/// matter how shots are split across threads.
class ShotRng {
 public:
    ShotRng(uint64_t seed, uint64_t shot) {
        state_ = mix(seed ^ 0x8e9c2f0b6d3a1547ull);
        state_ = mix(state_ + mix(shot + 0x9e3779b97f4a7c15ull));
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return (double)(next_u64() >> 11) * 0x1.0p-53;
    }

 private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_ = 0;
};

}  // namespace repdec

#endif

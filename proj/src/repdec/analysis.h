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

#ifndef REPDEC_ANALYSIS_H
#define REPDEC_ANALYSIS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "repdec/noise.h"

namespace repdec {

inline constexpr const char *kToolVersion = "repdec 0.1.0";
inline constexpr const char *kReportSchema = "repdec_report_v1";

/// Logical error per syndrome round: [1 - (1 - 2 p_L)^(1/r)] / 2.
/// p_L above one half clamps to one half. r must be positive.
double per_round_rate(double p_l, uint32_t rounds);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};
WilsonInterval wilson_interval(size_t failures, size_t shots, double z = 1.959963984540054);

struct ReportRow {
    std::string decoder;
    std::string code = "rep";
    std::string noise;
    uint32_t d = 0;
    uint32_t r = 0;
    double p = 0.0;
    size_t shots = 0;
    size_t failures = 0;
    double p_l = 0.0;
    double eps_l = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    uint64_t seed = 0;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;
};

void write_report_csv(const ExperimentReport &report, std::ostream &out);
ExperimentReport read_report_csv(std::istream &in);

ReportRow make_row(std::string decoder, std::string code, std::string noise, uint32_t d,
                   uint32_t r, double p, size_t shots, size_t failures, uint64_t seed);

struct LambdaFit {
    double lambda = 0.0;
    double lambda_se = 0.0;
    double intercept = 0.0;
    std::vector<uint32_t> excluded_distances;  // zero-failure rows
    size_t points_used = 0;
};

/// Weighted least squares of log(eps_L) against (d+1)/2; Lambda =
/// exp(-slope). Rows must share decoder/noise/p. Needs >= 3 usable
/// distances.
LambdaFit fit_lambda(const std::vector<ReportRow> &rows);

struct ThresholdEstimate {
    double threshold = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::vector<double> pairwise_crossings;
};

/// Crossing of the per-round error curves: monotone (isotonic) piecewise-
/// linear interpolation of log eps_L in p per distance, pairwise crossings,
/// median and min/max bracket. Throws when no pair of curves crosses.
ThresholdEstimate estimate_threshold(const std::vector<ReportRow> &rows);

enum class DecoderKind {
    Planar,
    Mwpm,
};
DecoderKind parse_decoder(const std::string &name);

/// Memory experiment for one (d, r, p): sample, decode, score.
ReportRow run_repetition_point(DecoderKind decoder, NoiseModel noise, uint32_t d, uint32_t r,
                               double p, size_t shots, uint64_t seed, uint32_t threads);

}  // namespace repdec

#endif

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
#include <sstream>

#include "repdec/analysis.h"

using namespace repdec;

TEST_CASE("per-round rate fixed points") {
    CHECK(per_round_rate(0.0, 1) == 0.0);
    CHECK(per_round_rate(0.0, 17) == 0.0);
    CHECK(per_round_rate(0.23, 1) == doctest::Approx(0.23).epsilon(1e-15));
    CHECK(per_round_rate(0.5, 1) == doctest::Approx(0.5));
    CHECK(per_round_rate(0.5, 100) == doctest::Approx(0.5));
    CHECK(per_round_rate(0.7, 10) == doctest::Approx(0.5));  // clamped above one half
    CHECK_THROWS_AS(per_round_rate(0.1, 0), std::invalid_argument);
}

TEST_CASE("wilson interval covers the point estimate") {
    auto ci = wilson_interval(7, 1000);
    CHECK(ci.lo < 0.007);
    CHECK(ci.hi > 0.007);
    CHECK(ci.lo >= 0.0);
    auto zero = wilson_interval(0, 1000);
    CHECK(zero.lo == doctest::Approx(0.0));
    CHECK(zero.hi > 0.0);
    CHECK_THROWS_AS(wilson_interval(5, 0), std::invalid_argument);
}

namespace {

ReportRow fixture_row(uint32_t d, double eps, size_t shots = 1000000) {
    // Build a row whose per-round rate equals eps exactly (r = 1). The rate
    // fields are set directly so fixtures stay free of rounding noise.
    ReportRow row;
    row.decoder = "planar";
    row.noise = "depolarizing";
    row.d = d;
    row.r = 1;
    row.p = 0.01;
    row.shots = shots;
    row.failures = eps > 0 ? std::max<size_t>(1, (size_t)std::llround(eps * (double)shots)) : 0;
    row.p_l = eps;
    row.eps_l = eps;
    return row;
}

}  // namespace

TEST_CASE("lambda fit recovers an exact exponential to four digits") {
    std::vector<ReportRow> rows;
    for (uint32_t d : {3u, 5u, 7u, 9u}) {
        double eps = 0.4 * std::pow(0.25, (d + 1) / 2.0);
        rows.push_back(fixture_row(d, eps, 100000000));
    }
    auto fit = fit_lambda(rows);
    CHECK(std::abs(fit.lambda - 4.0) < 4.0 * 1e-4);
    CHECK(fit.lambda_se < 1e-9);
    CHECK(fit.points_used == 4);
}

TEST_CASE("lambda fit excludes zero-failure distances") {
    std::vector<ReportRow> rows;
    for (uint32_t d : {3u, 5u, 7u}) {
        rows.push_back(fixture_row(d, 0.3 * std::pow(0.5, (d + 1) / 2.0)));
    }
    rows.push_back(fixture_row(9, 0.0));
    auto fit = fit_lambda(rows);
    CHECK(fit.points_used == 3);
    REQUIRE(fit.excluded_distances.size() == 1);
    CHECK(fit.excluded_distances[0] == 9);

    std::vector<ReportRow> too_few = {rows[0], rows[1]};
    CHECK_THROWS_AS(fit_lambda(too_few), std::invalid_argument);
}

TEST_CASE("threshold estimate on synthetic curves crossing at 0.05") {
    // eps(d, p) = (p / 0.05)^((d+1)/2) * 0.1 crosses exactly at p = 0.05.
    std::vector<ReportRow> rows;
    for (uint32_t d : {5u, 9u, 13u}) {
        for (double p : {0.03, 0.04, 0.045, 0.055, 0.06, 0.07}) {
            double eps = 0.1 * std::pow(p / 0.05, (d + 1) / 2.0);
            ReportRow row = fixture_row(d, eps);
            row.p = p;
            rows.push_back(row);
        }
    }
    auto est = estimate_threshold(rows);
    // Piecewise-linear interpolation between the swept points leaves a small
    // systematic tolerance around the exact crossing.
    CHECK(std::abs(est.threshold - 0.05) < 1e-3);
    CHECK(est.bracket_lo > 0.045);
    CHECK(est.bracket_hi < 0.055);
    CHECK(est.pairwise_crossings.size() == 3);

    std::vector<ReportRow> no_crossing;
    for (uint32_t d : {5u, 9u}) {
        for (double p : {0.01, 0.02}) {
            double eps = 0.1 * std::pow(p / 0.05, (d + 1) / 2.0);
            ReportRow row = fixture_row(d, eps);
            row.p = p;
            no_crossing.push_back(row);
        }
    }
    CHECK_THROWS_AS(estimate_threshold(no_crossing), std::invalid_argument);
}

TEST_CASE("report csv round trip") {
    ExperimentReport report;
    report.rows.push_back(make_row("planar", "rep", "depolarizing", 5, 5, 0.01, 1000, 17, 99));
    report.rows.push_back(make_row("mwpm", "rep", "si1000", 7, 7, 0.002, 2000, 3, 100));
    std::ostringstream out;
    write_report_csv(report, out);
    std::istringstream in(out.str());
    auto round = read_report_csv(in);
    REQUIRE(round.rows.size() == 2);
    CHECK(round.rows[0].decoder == "planar");
    CHECK(round.rows[0].failures == 17);
    CHECK(round.rows[0].p_l == doctest::Approx(0.017));
    CHECK(round.rows[1].noise == "si1000");
    CHECK(round.rows[1].seed == 100);
    CHECK(round.rows[0].ci_lo <= round.rows[0].p_l);
    CHECK(round.rows[0].ci_hi >= round.rows[0].p_l);
}

TEST_CASE("repetition experiment point is reproducible and scored") {
    auto a = run_repetition_point(DecoderKind::Planar, NoiseModel::Depolarizing, 3, 3, 0.02, 2000,
                                  42, 2);
    auto b = run_repetition_point(DecoderKind::Planar, NoiseModel::Depolarizing, 3, 3, 0.02, 2000,
                                  42, 1);
    CHECK(a.failures == b.failures);
    CHECK(a.failures <= a.shots);
    CHECK(a.eps_l <= a.p_l);
    auto m = run_repetition_point(DecoderKind::Mwpm, NoiseModel::Depolarizing, 3, 3, 0.02, 2000,
                                  42, 2);
    CHECK(m.failures <= m.shots);
}

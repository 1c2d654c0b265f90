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

#include "repdec/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "repdec/circuit.h"
#include "repdec/decoder.h"
#include "repdec/frame_sim.h"
#include "repdec/matching.h"

namespace repdec {

double per_round_rate(double p_l, uint32_t rounds) {
    if (rounds == 0) {
        throw std::invalid_argument("rounds must be positive");
    }
    if (!(p_l >= 0.0 && p_l <= 1.0)) {
        throw std::invalid_argument("p_L must be in [0, 1]");
    }
    if (p_l > 0.5) {
        p_l = 0.5;  // per-round conversion saturates; callers are warned via docs
    }
    return (1.0 - std::pow(1.0 - 2.0 * p_l, 1.0 / (double)rounds)) / 2.0;
}

WilsonInterval wilson_interval(size_t failures, size_t shots, double z) {
    if (shots == 0 || failures > shots) {
        throw std::invalid_argument("bad failure/shot counts");
    }
    double n = (double)shots;
    double p = (double)failures / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ReportRow make_row(std::string decoder, std::string code, std::string noise, uint32_t d,
                   uint32_t r, double p, size_t shots, size_t failures, uint64_t seed) {
    ReportRow row;
    row.decoder = std::move(decoder);
    row.code = std::move(code);
    row.noise = std::move(noise);
    row.d = d;
    row.r = r;
    row.p = p;
    row.shots = shots;
    row.failures = failures;
    row.p_l = shots ? (double)failures / (double)shots : 0.0;
    row.eps_l = per_round_rate(row.p_l, r);
    auto ci = wilson_interval(failures, shots);
    row.ci_lo = ci.lo;
    row.ci_hi = ci.hi;
    row.seed = seed;
    return row;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_report_csv(const ExperimentReport &report, std::ostream &out) {
    out << "schema,decoder,code,noise,d,r,p,shots,failures,p_l,eps_l,ci_lo,ci_hi,seed\n";
    for (const auto &row : report.rows) {
        out << kReportSchema << ',' << row.decoder << ',' << row.code << ',' << row.noise << ','
            << row.d << ',' << row.r << ',' << fmt_double(row.p) << ',' << row.shots << ','
            << row.failures << ',' << fmt_double(row.p_l) << ',' << fmt_double(row.eps_l) << ','
            << fmt_double(row.ci_lo) << ',' << fmt_double(row.ci_hi) << ',' << row.seed << "\n";
    }
}

ExperimentReport read_report_csv(std::istream &in) {
    ExperimentReport report;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line.rfind("schema,", 0) != 0) {
                throw std::invalid_argument("missing report header row");
            }
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 14 || fields[0] != kReportSchema) {
            throw std::invalid_argument("unrecognized report row: " + line);
        }
        ReportRow row;
        row.decoder = fields[1];
        row.code = fields[2];
        row.noise = fields[3];
        row.d = (uint32_t)std::stoul(fields[4]);
        row.r = (uint32_t)std::stoul(fields[5]);
        row.p = std::stod(fields[6]);
        row.shots = std::stoull(fields[7]);
        row.failures = std::stoull(fields[8]);
        row.p_l = std::stod(fields[9]);
        row.eps_l = std::stod(fields[10]);
        row.ci_lo = std::stod(fields[11]);
        row.ci_hi = std::stod(fields[12]);
        row.seed = std::stoull(fields[13]);
        report.rows.push_back(std::move(row));
    }
    return report;
}

LambdaFit fit_lambda(const std::vector<ReportRow> &rows) {
    LambdaFit fit;
    std::vector<double> xs, ys, ws;
    for (const auto &row : rows) {
        if (row.failures == 0) {
            fit.excluded_distances.push_back(row.d);
            continue;
        }
        double x = (row.d + 1) / 2.0;
        double eps = row.eps_l;
        if (eps <= 0.0) {
            fit.excluded_distances.push_back(row.d);
            continue;
        }
        // Binomial error on p_L propagated through the per-round map gives
        // the weight for log eps_L.
        double sigma_p = std::sqrt(std::max(row.p_l * (1 - row.p_l), 1e-300) / (double)row.shots);
        double deriv = std::pow(std::max(1.0 - 2.0 * std::min(row.p_l, 0.5), 1e-12),
                                1.0 / (double)row.r - 1.0) /
                       (double)row.r;
        double sigma_eps = std::max(sigma_p * deriv, 1e-300);
        double w = (eps / sigma_eps) * (eps / sigma_eps);
        xs.push_back(x);
        ys.push_back(std::log(eps));
        ws.push_back(w);
    }
    if (xs.size() < 3) {
        throw std::invalid_argument("need at least 3 distances with nonzero failures");
    }
    double w_total = 0, x_bar = 0, y_bar = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        w_total += ws[k];
        x_bar += ws[k] * xs[k];
        y_bar += ws[k] * ys[k];
    }
    x_bar /= w_total;
    y_bar /= w_total;
    double sxx = 0, sxy = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        sxx += ws[k] * (xs[k] - x_bar) * (xs[k] - x_bar);
        sxy += ws[k] * (xs[k] - x_bar) * (ys[k] - y_bar);
    }
    if (sxx <= 0) {
        throw std::invalid_argument("distances are degenerate");
    }
    double slope = sxy / sxx;
    fit.intercept = y_bar - slope * x_bar;
    fit.lambda = std::exp(-slope);
    fit.points_used = xs.size();
    double chi2 = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        double r = ys[k] - (fit.intercept + slope * xs[k]);
        chi2 += ws[k] * r * r;
    }
    double dof = (double)xs.size() - 2.0;
    double slope_var = dof > 0 ? (chi2 / dof) / sxx : 0.0;
    fit.lambda_se = fit.lambda * std::sqrt(std::max(slope_var, 0.0));
    return fit;
}

namespace {

// Monotone non-decreasing fit (pool adjacent violators), then piecewise
// linear interpolation.
struct Curve {
    std::vector<double> ps, ys;

    double eval(double p) const {
        if (p <= ps.front()) {
            return ys.front();
        }
        if (p >= ps.back()) {
            return ys.back();
        }
        size_t k = 1;
        while (ps[k] < p) {
            k++;
        }
        double t = (p - ps[k - 1]) / (ps[k] - ps[k - 1]);
        return ys[k - 1] + t * (ys[k] - ys[k - 1]);
    }
};

Curve isotonic_curve(std::vector<std::pair<double, double>> points) {
    std::sort(points.begin(), points.end());
    std::vector<double> value, weight, start;
    std::vector<size_t> count;
    for (size_t k = 0; k < points.size(); k++) {
        value.push_back(points[k].second);
        weight.push_back(1.0);
        count.push_back(1);
        while (value.size() > 1 && value[value.size() - 2] > value.back()) {
            double w = weight[weight.size() - 2] + weight.back();
            double v = (value[value.size() - 2] * weight[weight.size() - 2] +
                        value.back() * weight.back()) /
                       w;
            value.pop_back();
            weight.pop_back();
            size_t c = count.back();
            count.pop_back();
            value.back() = v;
            weight.back() = w;
            count.back() += c;
        }
    }
    Curve curve;
    size_t pos = 0;
    for (size_t blk = 0; blk < value.size(); blk++) {
        for (size_t i = 0; i < count[blk]; i++) {
            curve.ps.push_back(points[pos].first);
            curve.ys.push_back(value[blk]);
            pos++;
        }
    }
    return curve;
}

}  // namespace

ThresholdEstimate estimate_threshold(const std::vector<ReportRow> &rows) {
    std::map<uint32_t, std::vector<std::pair<double, double>>> by_d;
    for (const auto &row : rows) {
        if (row.failures == 0 || row.eps_l <= 0) {
            continue;
        }
        by_d[row.d].push_back({row.p, std::log(row.eps_l)});
    }
    std::vector<std::pair<uint32_t, Curve>> curves;
    for (auto &[d, pts] : by_d) {
        if (pts.size() >= 2) {
            curves.push_back({d, isotonic_curve(std::move(pts))});
        }
    }
    if (curves.size() < 2) {
        throw std::invalid_argument("need at least 2 distances with usable curves");
    }

    ThresholdEstimate est;
    for (size_t a = 0; a < curves.size(); a++) {
        for (size_t b = a + 1; b < curves.size(); b++) {
            const Curve &ca = curves[a].second;
            const Curve &cb = curves[b].second;
            double lo = std::max(ca.ps.front(), cb.ps.front());
            double hi = std::min(ca.ps.back(), cb.ps.back());
            if (!(lo < hi)) {
                continue;
            }
            std::vector<double> knots;
            for (double p : ca.ps) {
                if (p >= lo && p <= hi) {
                    knots.push_back(p);
                }
            }
            for (double p : cb.ps) {
                if (p >= lo && p <= hi) {
                    knots.push_back(p);
                }
            }
            std::sort(knots.begin(), knots.end());
            knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
            for (size_t k = 0; k + 1 < knots.size(); k++) {
                double d1 = cb.eval(knots[k]) - ca.eval(knots[k]);
                double d2 = cb.eval(knots[k + 1]) - ca.eval(knots[k + 1]);
                if (d1 < 0 && d2 >= 0) {
                    double root = d2 == d1 ? (knots[k] + knots[k + 1]) / 2
                                           : knots[k] + (knots[k + 1] - knots[k]) * (-d1) / (d2 - d1);
                    est.pairwise_crossings.push_back(root);
                    break;
                }
            }
        }
    }
    if (est.pairwise_crossings.empty()) {
        throw std::invalid_argument("no curve crossing found in the swept range");
    }
    std::vector<double> sorted = est.pairwise_crossings;
    std::sort(sorted.begin(), sorted.end());
    est.bracket_lo = sorted.front();
    est.bracket_hi = sorted.back();
    size_t n = sorted.size();
    est.threshold = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
    return est;
}

DecoderKind parse_decoder(const std::string &name) {
    if (name == "planar") {
        return DecoderKind::Planar;
    }
    if (name == "mwpm") {
        return DecoderKind::Mwpm;
    }
    throw std::invalid_argument("unknown decoder: " + name);
}

ReportRow run_repetition_point(DecoderKind decoder, NoiseModel noise, uint32_t d, uint32_t r,
                               double p, size_t shots, uint64_t seed, uint32_t threads) {
    Circuit circuit = build_repetition_circuit(d, r);
    NoisyCircuit noisy = attach_noise(circuit, {noise, p});
    DetectorErrorModel dem = extract_dem(noisy);
    SyndromeBatch batch = sample_syndromes(noisy, shots, seed, threads);

    size_t failures = 0;
    if (decoder == DecoderKind::Planar) {
        DecodeContext ctx = build_context(dem);
        failures = decode_batch(ctx, batch, threads).failures;
    } else {
        MatchingGraph graph(dem);
        std::vector<size_t> tallies(std::max<uint32_t>(threads, 1), 0);
        auto run_range = [&](size_t lo, size_t hi, size_t slot) {
            for (size_t shot = lo; shot < hi; shot++) {
                auto out = decode_mwpm(graph, syndrome_of_shot(batch, shot));
                tallies[slot] +=
                    (out.predicted_class & 1) != (uint64_t)batch.observable_bits.get(shot, 0);
            }
        };
        if (threads <= 1 || shots < 2 * threads) {
            run_range(0, shots, 0);
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (shots + threads - 1) / threads;
            for (uint32_t t = 0; t < threads; t++) {
                size_t lo = t * chunk;
                size_t hi = std::min(shots, lo + chunk);
                if (lo < hi) {
                    pool.emplace_back(run_range, lo, hi, t);
                }
            }
            for (auto &th : pool) {
                th.join();
            }
        }
        for (size_t t : tallies) {
            failures += t;
        }
    }
    return make_row(decoder == DecoderKind::Planar ? "planar" : "mwpm", "rep",
                    noise_model_name(noise), d, r, p, shots, failures, seed);
}

}  // namespace repdec

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

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "repdec/analysis.h"
#include "repdec/calibration.h"
#include "repdec/circuit.h"
#include "repdec/code_capacity.h"
#include "repdec/decoder.h"
#include "repdec/frame_sim.h"
#include "repdec/kac_ward.h"
#include "repdec/matching.h"
#include "repdec/noise.h"
#include "repdec/subsample.h"

using json = nlohmann::json;
using namespace repdec;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitUnsatExcess = 3;

uint32_t resolve_threads(uint32_t flag_value) {
    if (flag_value > 0) {
        return flag_value;
    }
    if (const char *env = std::getenv("PLANAR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return (uint32_t)v;
        }
    }
    return 1;
}

std::ofstream open_out(const std::string &path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) {
        throw std::invalid_argument("cannot open for writing: " + path);
    }
    return out;
}

std::ifstream open_in(const std::string &path, bool binary = false) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) {
        throw std::invalid_argument("cannot open for reading: " + path);
    }
    return in;
}

DetectorErrorModel load_dem(const std::string &path) {
    auto in = open_in(path);
    return parse_dem(in);
}

SyndromeBatch load_batch(const std::string &format, const std::string &dets_path,
                         const std::string &obs_path, uint32_t detector_count,
                         uint32_t observable_count) {
    SyndromeBatch batch;
    if (format == "01") {
        auto in = open_in(dets_path);
        return read_batch_01(in, detector_count, observable_count);
    }
    auto in = open_in(dets_path, true);
    batch.detector_bits = read_bits_b8(in, detector_count);
    batch.shots = batch.detector_bits.rows();
    batch.detector_count = detector_count;
    batch.observable_count = observable_count;
    if (!obs_path.empty()) {
        auto obs_in = open_in(obs_path, true);
        batch.observable_bits = read_bits_b8(obs_in, observable_count);
        if (batch.observable_bits.rows() != batch.shots) {
            throw std::invalid_argument("detector and observable files disagree on shot count");
        }
        batch.has_observables = true;
    }
    return batch;
}

void infer_geometry(const DetectorErrorModel &dem, uint32_t &d, uint32_t &r) {
    if (!dem.has_coords()) {
        return;
    }
    double max_col = 0, max_round = 0;
    for (const auto &c : dem.coords) {
        if (c.present) {
            max_col = std::max(max_col, c.column);
            max_round = std::max(max_round, c.round);
        }
    }
    d = (uint32_t)std::llround(max_col) + 2;
    r = (uint32_t)std::llround(max_round);
}

struct PairedStats {
    size_t shots = 0;
    size_t planar_failures = 0;
    size_t mwpm_failures = 0;
    size_t disagreements = 0;
    double sigma_paired = 0.0;
};

PairedStats run_compare(NoiseModel noise, uint32_t d, uint32_t r, double p, size_t shots,
                        uint64_t seed, uint32_t threads) {
    Circuit circuit = build_repetition_circuit(d, r);
    NoisyCircuit noisy = attach_noise(circuit, {noise, p});
    DetectorErrorModel dem = extract_dem(noisy);
    SyndromeBatch batch = sample_syndromes(noisy, shots, seed, threads);
    DecodeContext ctx = build_context(dem);
    MatchingGraph graph(dem);

    auto planar = decode_batch(ctx, batch, threads);
    PairedStats stats;
    stats.shots = shots;
    stats.planar_failures = planar.failures;
    long long diff_sum = 0;
    long long diff_sq = 0;
    for (size_t shot = 0; shot < shots; shot++) {
        bool truth = batch.observable_bits.get(shot, 0);
        bool mwpm_fail =
            (decode_mwpm(graph, syndrome_of_shot(batch, shot)).predicted_class & 1) != truth;
        bool planar_fail = planar.outcomes[shot].unsatisfiable ||
                           (planar.outcomes[shot].predicted_class & 1) != (uint64_t)truth;
        stats.mwpm_failures += mwpm_fail;
        stats.disagreements += planar_fail != mwpm_fail;
        int dshot = (int)planar_fail - (int)mwpm_fail;
        diff_sum += dshot;
        diff_sq += dshot * dshot;
    }
    double n = (double)shots;
    double mean = (double)diff_sum / n;
    stats.sigma_paired = std::sqrt(std::max(0.0, (double)diff_sq - n * mean * mean));
    return stats;
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(std::stod(item));
        }
    }
    return out;
}

std::vector<uint32_t> parse_uint_list(const std::string &text) {
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back((uint32_t)std::stoul(item));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"repetition-code decoding toolkit"};
    app.require_subcommand(1);

    try {
        // ---- gen-dem ----
        auto *gen = app.add_subcommand("gen-dem", "build a circuit-noise detector error model");
        std::string gen_code = "rep", gen_noise = "depolarizing", gen_out;
        uint32_t gen_d = 3, gen_r = 1;
        double gen_p = 0.001;
        gen->add_option("--code", gen_code)->check(CLI::IsMember({"rep"}));
        gen->add_option("--d", gen_d)->required();
        gen->add_option("--r", gen_r)->required();
        gen->add_option("--noise", gen_noise)->check(CLI::IsMember({"depolarizing", "si1000"}));
        gen->add_option("--p", gen_p)->required();
        gen->add_option("--out", gen_out);
        gen->callback([&] {
            auto dem = extract_dem(
                attach_noise(build_repetition_circuit(gen_d, gen_r), {parse_noise_model(gen_noise), gen_p}));
            if (gen_out.empty()) {
                write_dem(dem, std::cout);
            } else {
                auto out = open_out(gen_out);
                write_dem(dem, out);
            }
        });

        // ---- sample ----
        auto *sample = app.add_subcommand("sample", "sample syndromes by Pauli-frame simulation");
        std::string s_noise = "depolarizing", s_format = "b8", s_out, s_dem_out;
        uint32_t s_d = 3, s_r = 1, s_threads = 0;
        double s_p = 0.001;
        size_t s_shots = 1000;
        uint64_t s_seed = 0;
        sample->add_option("--d", s_d)->required();
        sample->add_option("--r", s_r)->required();
        sample->add_option("--noise", s_noise)->check(CLI::IsMember({"depolarizing", "si1000"}));
        sample->add_option("--p", s_p)->required();
        sample->add_option("--shots", s_shots)->required();
        sample->add_option("--seed", s_seed);
        sample->add_option("--threads", s_threads);
        sample->add_option("--format", s_format)->check(CLI::IsMember({"b8", "01"}));
        sample->add_option("--out", s_out)->required();
        sample->add_option("--dem-out", s_dem_out);
        sample->callback([&] {
            uint32_t threads = resolve_threads(s_threads);
            auto noisy = attach_noise(build_repetition_circuit(s_d, s_r),
                                      {parse_noise_model(s_noise), s_p});
            if (!s_dem_out.empty()) {
                auto dem_out = open_out(s_dem_out);
                write_dem(extract_dem(noisy), dem_out);
            }
            if (s_format == "01") {
                auto out = open_out(s_out + ".01");
                for (size_t done = 0; done < s_shots;) {
                    size_t chunk = std::min<size_t>(8192, s_shots - done);
                    auto batch = sample_syndromes(noisy, chunk, s_seed, threads, done);
                    write_batch_01(batch, out);
                    done += chunk;
                }
            } else {
                auto dets = open_out(s_out + ".dets.b8", true);
                auto obs = open_out(s_out + ".obs.b8", true);
                for (size_t done = 0; done < s_shots;) {
                    size_t chunk = std::min<size_t>(8192, s_shots - done);
                    auto batch = sample_syndromes(noisy, chunk, s_seed, threads, done);
                    write_bits_b8(batch.detector_bits, dets);
                    write_bits_b8(batch.observable_bits, obs);
                    done += chunk;
                }
            }
        });

        // ---- decode ----
        auto *dec = app.add_subcommand("decode", "decode a syndrome stream against a model");
        std::string d_dem, d_in, d_obs, d_format = "b8", d_decoder = "planar", d_out, d_noise = "unknown";
        uint32_t d_threads = 0, d_r_flag = 0;
        uint64_t d_seed = 0;
        double d_p = 0.0;
        dec->add_option("--dem", d_dem)->required();
        dec->add_option("--in", d_in)->required();
        dec->add_option("--obs", d_obs);
        dec->add_option("--format", d_format)->check(CLI::IsMember({"b8", "01"}));
        dec->add_option("--decoder", d_decoder)->check(CLI::IsMember({"planar", "mwpm"}));
        dec->add_option("--threads", d_threads);
        dec->add_option("--seed", d_seed);
        dec->add_option("--r", d_r_flag);
        dec->add_option("--p", d_p);
        dec->add_option("--noise", d_noise);
        dec->add_option("--out", d_out);
        dec->callback([&] {
            uint32_t threads = resolve_threads(d_threads);
            DetectorErrorModel dem = load_dem(d_dem);
            uint32_t geo_d = 0, geo_r = d_r_flag;
            if (geo_r == 0) {
                infer_geometry(dem, geo_d, geo_r);
            } else {
                uint32_t ignored = 0;
                infer_geometry(dem, geo_d, ignored);
            }
            if (geo_r == 0) {
                throw std::invalid_argument("cannot infer rounds; pass --r");
            }
            DecoderKind kind = parse_decoder(d_decoder);
            size_t shots = 0, failures = 0, unsat = 0;

            auto score = [&](const SyndromeBatch &batch) {
                if (kind == DecoderKind::Planar) {
                    static DecodeContext ctx = build_context(dem);
                    auto res = decode_batch(ctx, batch, threads);
                    failures += res.failures;
                    unsat += res.unsatisfiable;
                } else {
                    static MatchingGraph graph(dem);
                    for (size_t s = 0; s < batch.shots; s++) {
                        try {
                            auto out = decode_mwpm(graph, syndrome_of_shot(batch, s));
                            if (batch.has_observables &&
                                (out.predicted_class & 1) !=
                                    (uint64_t)batch.observable_bits.get(s, 0)) {
                                failures++;
                            }
                        } catch (const UnsatisfiableSyndromeError &) {
                            unsat++;
                            failures++;
                        }
                    }
                }
                shots += batch.shots;
            };

            if (d_format == "01") {
                auto in = open_in(d_in);
                score(read_batch_01(in, dem.detector_count, dem.observable_count));
            } else {
                // Stream b8 rows in bounded chunks.
                auto in = open_in(d_in, true);
                std::ifstream obs_in;
                bool with_obs = !d_obs.empty();
                if (with_obs) {
                    obs_in = open_in(d_obs, true);
                }
                size_t det_bytes = (dem.detector_count + 7) / 8;
                size_t obs_bytes = (dem.observable_count + 7) / 8;
                const size_t chunk_rows = 8192;
                std::vector<char> det_buf(det_bytes * chunk_rows), obs_buf(obs_bytes * chunk_rows);
                for (;;) {
                    in.read(det_buf.data(), (std::streamsize)(det_bytes * chunk_rows));
                    size_t got = (size_t)in.gcount();
                    if (got == 0) {
                        break;
                    }
                    if (got % det_bytes != 0) {
                        throw std::invalid_argument("truncated b8 detector stream");
                    }
                    size_t rows = got / det_bytes;
                    SyndromeBatch batch;
                    batch.shots = rows;
                    batch.detector_count = dem.detector_count;
                    batch.observable_count = dem.observable_count;
                    batch.detector_bits = BitMatrix(rows, dem.detector_count);
                    for (size_t s = 0; s < rows; s++) {
                        for (uint32_t b = 0; b < dem.detector_count; b++) {
                            if (det_buf[s * det_bytes + b / 8] >> (b % 8) & 1) {
                                batch.detector_bits.set(s, b, true);
                            }
                        }
                    }
                    if (with_obs) {
                        obs_in.read(obs_buf.data(), (std::streamsize)(obs_bytes * rows));
                        if ((size_t)obs_in.gcount() != obs_bytes * rows) {
                            throw std::invalid_argument("observable stream shorter than detectors");
                        }
                        batch.has_observables = true;
                        batch.observable_bits = BitMatrix(rows, dem.observable_count);
                        for (size_t s = 0; s < rows; s++) {
                            for (uint32_t b = 0; b < dem.observable_count; b++) {
                                if (obs_buf[s * obs_bytes + b / 8] >> (b % 8) & 1) {
                                    batch.observable_bits.set(s, b, true);
                                }
                            }
                        }
                    }
                    score(batch);
                }
            }

            ExperimentReport report;
            report.rows.push_back(make_row(d_decoder, "rep", d_noise, geo_d, geo_r, d_p, shots,
                                           failures, d_seed));
            if (d_out.empty()) {
                write_report_csv(report, std::cout);
            } else {
                auto out = open_out(d_out);
                write_report_csv(report, out);
            }
            if (shots > 0 && (double)unsat > 0.01 * (double)shots) {
                std::exit(kExitUnsatExcess);
            }
        });

        // ---- compare ----
        auto *cmp = app.add_subcommand("compare", "paired planar vs mwpm on identical shots");
        std::string c_noise = "depolarizing", c_out;
        uint32_t c_d = 3, c_r = 1, c_threads = 0;
        double c_p = 0.01;
        size_t c_shots = 10000;
        uint64_t c_seed = 0;
        cmp->add_option("--d", c_d)->required();
        cmp->add_option("--r", c_r)->required();
        cmp->add_option("--noise", c_noise)->check(CLI::IsMember({"depolarizing", "si1000"}));
        cmp->add_option("--p", c_p)->required();
        cmp->add_option("--shots", c_shots)->required();
        cmp->add_option("--seed", c_seed);
        cmp->add_option("--threads", c_threads);
        cmp->add_option("--out", c_out);
        cmp->callback([&] {
            auto stats = run_compare(parse_noise_model(c_noise), c_d, c_r, c_p, c_shots, c_seed,
                                     resolve_threads(c_threads));
            ExperimentReport report;
            report.rows.push_back(make_row("planar", "rep", c_noise, c_d, c_r, c_p, c_shots,
                                           stats.planar_failures, c_seed));
            report.rows.push_back(make_row("mwpm", "rep", c_noise, c_d, c_r, c_p, c_shots,
                                           stats.mwpm_failures, c_seed));
            std::ostringstream summary;
            summary << "planar_failures=" << stats.planar_failures
                    << " mwpm_failures=" << stats.mwpm_failures
                    << " disagreements=" << stats.disagreements
                    << " sigma_paired=" << stats.sigma_paired << "\n";
            std::cout << summary.str();
            if (!c_out.empty()) {
                auto out = open_out(c_out);
                write_report_csv(report, out);
            }
        });

        // ---- calibrate ----
        auto *cal = app.add_subcommand("calibrate", "estimate priors from a detector stream");
        std::string k_skeleton, k_in, k_format = "b8", k_policy = "clamp", k_out, k_log, k_heatmap;
        double k_empirical = 1e-4;
        cal->add_option("--skeleton", k_skeleton)->required();
        cal->add_option("--in", k_in)->required();
        cal->add_option("--format", k_format)->check(CLI::IsMember({"b8", "01"}));
        cal->add_option("--policy", k_policy)->check(CLI::IsMember({"clamp", "reject"}));
        cal->add_option("--empirical", k_empirical);
        cal->add_option("--out", k_out)->required();
        cal->add_option("--log", k_log);
        cal->add_option("--heatmap", k_heatmap);
        cal->callback([&] {
            DetectorErrorModel skeleton = load_dem(k_skeleton);
            SyndromeBatch batch =
                load_batch(k_format, k_in, "", skeleton.detector_count, skeleton.observable_count);
            CorrelationReport report = estimate_pij(batch, skeleton, !k_heatmap.empty());
            auto policy = k_policy == "clamp" ? BoundaryPolicy::ClampToEmpirical
                                              : BoundaryPolicy::Reject;
            CalibratedModel calibrated = correct_boundaries(report, skeleton, policy, k_empirical);
            {
                auto out = open_out(k_out);
                write_dem(calibrated.model, out);
            }
            if (!k_log.empty()) {
                json j;
                j["shots"] = report.shots;
                j["corrections"] = json::array();
                for (const auto &c : calibrated.report.corrections) {
                    j["corrections"].push_back({{"mechanism", c.mechanism},
                                                {"raw", c.raw},
                                                {"corrected", c.corrected},
                                                {"reason", c.reason}});
                }
                auto out = open_out(k_log);
                out << j.dump(2) << "\n";
            }
            if (!k_heatmap.empty() && report.has_heatmap) {
                auto out = open_out(k_heatmap);
                out << "row,col,value\n";
                char buf[64];
                for (uint32_t i = 0; i < report.detector_count; i++) {
                    for (uint32_t j2 = 0; j2 < report.detector_count; j2++) {
                        snprintf(buf, sizeof buf, "%.17g",
                                 report.heatmap[(size_t)i * report.detector_count + j2]);
                        out << i << ',' << j2 << ',' << buf << "\n";
                    }
                }
            }
        });

        // ---- subsample ----
        auto *sub = app.add_subcommand("subsample", "restrict a dataset to a lower distance");
        std::string u_dem, u_in, u_obs, u_format = "b8", u_prefix;
        uint32_t u_target = 3, u_offset = 0;
        sub->add_option("--dem", u_dem)->required();
        sub->add_option("--in", u_in)->required();
        sub->add_option("--obs", u_obs);
        sub->add_option("--format", u_format)->check(CLI::IsMember({"b8", "01"}));
        sub->add_option("--target-d", u_target)->required();
        sub->add_option("--offset", u_offset);
        sub->add_option("--out-prefix", u_prefix)->required();
        sub->callback([&] {
            DetectorErrorModel dem = load_dem(u_dem);
            SyndromeBatch batch =
                load_batch(u_format, u_in, u_obs, dem.detector_count, dem.observable_count);
            auto result = subsample(batch, dem, u_target, u_offset);
            {
                auto out = open_out(u_prefix + ".dem");
                write_dem(result.model, out);
            }
            if (u_format == "01") {
                auto out = open_out(u_prefix + ".01");
                write_batch_01(result.batch, out);
            } else {
                auto dets = open_out(u_prefix + ".dets.b8", true);
                write_bits_b8(result.batch.detector_bits, dets);
                if (result.batch.has_observables) {
                    auto obs = open_out(u_prefix + ".obs.b8", true);
                    write_bits_b8(result.batch.observable_bits, obs);
                }
            }
        });

        // ---- threshold ----
        auto *thr = app.add_subcommand("threshold", "sweep p and d, estimate the crossing");
        std::string t_code = "rep", t_noise = "depolarizing", t_decoder = "planar", t_plist,
                    t_dlist, t_out, t_fit_out;
        size_t t_shots = 10000;
        uint64_t t_seed = 0;
        uint32_t t_threads = 0;
        thr->add_option("--code", t_code)->check(CLI::IsMember({"rep", "surface", "rotated_surface"}));
        thr->add_option("--noise", t_noise)
            ->check(CLI::IsMember({"depolarizing", "si1000", "uncorrelated"}));
        thr->add_option("--decoder", t_decoder)->check(CLI::IsMember({"planar", "mwpm"}));
        thr->add_option("--p-list", t_plist)->required();
        thr->add_option("--d-list", t_dlist)->required();
        thr->add_option("--shots", t_shots)->required();
        thr->add_option("--seed", t_seed);
        thr->add_option("--threads", t_threads);
        thr->add_option("--out", t_out);
        thr->add_option("--fit-out", t_fit_out);
        thr->callback([&] {
            uint32_t threads = resolve_threads(t_threads);
            auto ps = parse_double_list(t_plist);
            auto ds = parse_uint_list(t_dlist);
            ExperimentReport report;
            uint64_t seed = t_seed;
            for (uint32_t d : ds) {
                for (double p : ps) {
                    seed++;
                    if (t_code == "rep") {
                        report.rows.push_back(run_repetition_point(parse_decoder(t_decoder),
                                                                   parse_noise_model(t_noise), d, d,
                                                                   p, t_shots, seed, threads));
                    } else {
                        bool depol = t_noise == "depolarizing";
                        double prior = depol ? 2 * p / 3 : p;
                        auto ctx = build_code_capacity_context(parse_code_family(t_code), d, prior,
                                                               prior);
                        auto stats = run_code_capacity_trial(ctx, depol, p, t_shots, seed, threads);
                        report.rows.push_back(make_row(t_decoder, t_code, t_noise, d, 1, p, t_shots,
                                                       stats.any_failures, seed));
                    }
                    std::cerr << "point d=" << d << " p=" << p << " done\n";
                }
            }
            if (!t_out.empty()) {
                auto out = open_out(t_out);
                write_report_csv(report, out);
            }
            auto est = estimate_threshold(report.rows);
            json j;
            j["threshold"] = est.threshold;
            j["bracket_lo"] = est.bracket_lo;
            j["bracket_hi"] = est.bracket_hi;
            j["pairwise_crossings"] = est.pairwise_crossings;
            std::cout << j.dump(2) << "\n";
            if (!t_fit_out.empty()) {
                auto out = open_out(t_fit_out);
                out << j.dump(2) << "\n";
            }
        });

        // ---- lambda ----
        auto *lam = app.add_subcommand("lambda", "fit the suppression factor from a report");
        std::string l_in, l_out, l_decoder, l_noise;
        double l_p = -1.0;
        lam->add_option("--in", l_in)->required();
        lam->add_option("--decoder", l_decoder);
        lam->add_option("--noise", l_noise);
        lam->add_option("--p", l_p);
        lam->add_option("--out", l_out);
        lam->callback([&] {
            auto in = open_in(l_in);
            auto report = read_report_csv(in);
            std::vector<ReportRow> rows;
            for (const auto &row : report.rows) {
                if (!l_decoder.empty() && row.decoder != l_decoder) {
                    continue;
                }
                if (!l_noise.empty() && row.noise != l_noise) {
                    continue;
                }
                if (l_p >= 0 && std::abs(row.p - l_p) > 1e-15) {
                    continue;
                }
                rows.push_back(row);
            }
            auto fit = fit_lambda(rows);
            json j;
            j["lambda"] = fit.lambda;
            j["lambda_se"] = fit.lambda_se;
            j["points_used"] = fit.points_used;
            j["excluded_distances"] = fit.excluded_distances;
            std::cout << j.dump(2) << "\n";
            if (!l_out.empty()) {
                auto out = open_out(l_out);
                out << j.dump(2) << "\n";
            }
        });

        // ---- bench ----
        auto *bench = app.add_subcommand("bench", "time log-partition vs spin count");
        std::string b_dlist = "5,9,13,17,21,25", b_out;
        uint32_t b_reps = 3;
        bench->add_option("--d-list", b_dlist);
        bench->add_option("--reps", b_reps);
        bench->add_option("--out", b_out);
        bench->callback([&] {
            auto ds = parse_uint_list(b_dlist);
            json points = json::array();
            std::vector<double> log_n, log_t;
            for (uint32_t d : ds) {
                auto dem = extract_dem(
                    attach_noise(build_repetition_circuit(d, d), {NoiseModel::Depolarizing, 0.01}));
                auto ctx = build_context(dem);
                BitVec none(ctx.planar_mechanisms.size());
                auto inst = ctx.instance_for(none);
                double best = 1e300;
                volatile double sink = 0;
                for (uint32_t rep = 0; rep < b_reps; rep++) {
                    auto t0 = std::chrono::steady_clock::now();
                    sink = log_partition(inst);
                    auto t1 = std::chrono::steady_clock::now();
                    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
                }
                (void)sink;
                size_t spins = ctx.dual->vertex_count();
                points.push_back({{"d", d}, {"spins", spins}, {"seconds", best}});
                log_n.push_back(std::log((double)spins));
                log_t.push_back(std::log(best));
                std::cerr << "d=" << d << " spins=" << spins << " t=" << best << "s\n";
            }
            double n = (double)log_n.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (size_t k = 0; k < log_n.size(); k++) {
                sx += log_n[k];
                sy += log_t[k];
                sxx += log_n[k] * log_n[k];
                sxy += log_n[k] * log_t[k];
            }
            double exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            json j;
            j["points"] = points;
            j["fitted_exponent"] = exponent;
            std::cout << j.dump(2) << "\n";
            if (!b_out.empty()) {
                auto out = open_out(b_out);
                out << j.dump(2) << "\n";
            }
        });

        CLI11_PARSE(app, argc, argv);
        return 0;
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

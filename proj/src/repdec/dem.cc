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

#include "repdec/dem.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <sstream>

namespace repdec {

bool DetectorErrorModel::has_coords() const {
    return !coords.empty();
}

void DetectorErrorModel::validate() const {
    if (!coords.empty() && coords.size() != detector_count) {
        throw std::invalid_argument("coords list must be empty or sized detector_count");
    }
    for (size_t k = 0; k < mechanisms.size(); k++) {
        const auto &m = mechanisms[k];
        if (!(m.probability >= 0.0 && m.probability < 1.0)) {
            throw std::invalid_argument(
                "mechanism " + std::to_string(k) + ": probability outside [0, 1)");
        }
        for (size_t i = 0; i < m.detectors.size(); i++) {
            if (m.detectors[i] >= detector_count) {
                throw std::invalid_argument(
                    "mechanism " + std::to_string(k) + ": detector index out of range");
            }
            if (i > 0 && m.detectors[i] <= m.detectors[i - 1]) {
                throw std::invalid_argument(
                    "mechanism " + std::to_string(k) + ": detectors must be distinct and sorted");
            }
        }
        if (observable_count < 64 && (m.logical_mask >> observable_count) != 0) {
            throw std::invalid_argument(
                "mechanism " + std::to_string(k) + ": logical mask bit out of range");
        }
    }
}

namespace {

struct LineScanner {
    const std::string &s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            pos++;
        }
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    bool try_literal(const char *lit) {
        skip_ws();
        size_t n = strlen(lit);
        if (s.compare(pos, n, lit) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    double parse_double(const char *what) {
        skip_ws();
        size_t used = 0;
        double v;
        try {
            v = std::stod(s.substr(pos), &used);
        } catch (const std::exception &) {
            throw ParseError(std::string("expected ") + what);
        }
        pos += used;
        return v;
    }
    uint64_t parse_uint(const char *what) {
        skip_ws();
        if (pos >= s.size() || !isdigit((unsigned char)s[pos])) {
            throw ParseError(std::string("expected ") + what);
        }
        uint64_t v = 0;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            pos++;
        }
        return v;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) {
            throw ParseError(std::string("expected '") + c + "'");
        }
        pos++;
    }
};

}  // namespace

DetectorErrorModel parse_dem(std::istream &in) {
    DetectorErrorModel model;
    std::map<uint32_t, DetectorCoord> coord_map;
    uint64_t max_det = 0;
    bool any_det = false;
    uint64_t max_obs = 0;
    bool any_obs = false;
    uint32_t declared_dets = 0;
    uint32_t declared_obs = 0;

    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        LineScanner sc{line};
        try {
            if (sc.done()) {
                continue;
            }
            if (sc.try_literal("detectors")) {
                declared_dets = std::max<uint32_t>(declared_dets, (uint32_t)sc.parse_uint("count"));
            } else if (sc.try_literal("observables")) {
                declared_obs = std::max<uint32_t>(declared_obs, (uint32_t)sc.parse_uint("count"));
            } else if (sc.try_literal("detector")) {
                sc.expect('(');
                DetectorCoord c;
                c.present = true;
                c.column = sc.parse_double("column");
                sc.expect(',');
                c.round = sc.parse_double("round");
                sc.expect(')');
                sc.skip_ws();
                sc.expect('D');
                uint64_t idx = sc.parse_uint("detector index");
                coord_map[(uint32_t)idx] = c;
                max_det = std::max(max_det, idx);
                any_det = true;
                if (!sc.done()) {
                    throw ParseError("trailing characters");
                }
            } else if (sc.try_literal("error")) {
                sc.expect('(');
                double p = sc.parse_double("probability");
                sc.expect(')');
                if (!(p >= 0.0 && p < 1.0)) {
                    throw ParseError("probability outside [0, 1)");
                }
                ErrorMechanism m;
                m.probability = p;
                while (!sc.done()) {
                    sc.skip_ws();
                    char tag = sc.s[sc.pos];
                    if (tag == 'D') {
                        sc.pos++;
                        uint64_t idx = sc.parse_uint("detector index");
                        if (std::find(m.detectors.begin(), m.detectors.end(), (uint32_t)idx) !=
                            m.detectors.end()) {
                            throw ParseError("duplicate detector in one instruction");
                        }
                        m.detectors.push_back((uint32_t)idx);
                        max_det = std::max(max_det, idx);
                        any_det = true;
                    } else if (tag == 'L') {
                        sc.pos++;
                        uint64_t idx = sc.parse_uint("observable index");
                        if (idx >= 64) {
                            throw ParseError("observable index too large");
                        }
                        m.logical_mask |= uint64_t(1) << idx;
                        max_obs = std::max(max_obs, idx);
                        any_obs = true;
                    } else {
                        throw ParseError("expected D<k> or L<k> target");
                    }
                }
                std::sort(m.detectors.begin(), m.detectors.end());
                model.mechanisms.push_back(std::move(m));
            } else {
                throw ParseError("unrecognized instruction");
            }
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }

    model.detector_count = std::max<uint32_t>(declared_dets, any_det ? (uint32_t)max_det + 1 : 0);
    model.observable_count = std::max<uint32_t>(declared_obs, any_obs ? (uint32_t)max_obs + 1 : 0);
    if (!coord_map.empty()) {
        model.coords.resize(model.detector_count);
        for (const auto &[idx, c] : coord_map) {
            model.coords[idx] = c;
        }
    }
    model.validate();
    return model;
}

DetectorErrorModel parse_dem(const std::string &text) {
    std::istringstream in(text);
    return parse_dem(in);
}

void write_dem(const DetectorErrorModel &model, std::ostream &out) {
    char buf[64];
    out << "detectors " << model.detector_count << "\n";
    out << "observables " << model.observable_count << "\n";
    for (uint32_t k = 0; k < (uint32_t)model.coords.size(); k++) {
        if (!model.coords[k].present) {
            continue;
        }
        snprintf(buf, sizeof buf, "%.17g", model.coords[k].column);
        out << "detector(" << buf << ", ";
        snprintf(buf, sizeof buf, "%.17g", model.coords[k].round);
        out << buf << ") D" << k << "\n";
    }
    for (const auto &m : model.mechanisms) {
        snprintf(buf, sizeof buf, "%.17g", m.probability);
        out << "error(" << buf << ")";
        for (uint32_t d : m.detectors) {
            out << " D" << d;
        }
        for (uint32_t k = 0; k < 64; k++) {
            if (m.logical_mask >> k & 1) {
                out << " L" << k;
            }
        }
        out << "\n";
    }
}

std::string write_dem(const DetectorErrorModel &model) {
    std::ostringstream out;
    write_dem(model, out);
    return out.str();
}

double xor_probability(double p1, double p2) {
    return p1 * (1.0 - p2) + p2 * (1.0 - p1);
}

double clamp_decode_probability(double p) {
    constexpr double lo = 1e-12;
    constexpr double hi = 0.5 - 1e-12;
    return std::min(hi, std::max(lo, p));
}

DetectorErrorModel merge_parallel(const DetectorErrorModel &model) {
    DetectorErrorModel out;
    out.detector_count = model.detector_count;
    out.observable_count = model.observable_count;
    out.coords = model.coords;
    std::map<std::pair<std::vector<uint32_t>, uint64_t>, size_t> seen;
    for (const auto &m : model.mechanisms) {
        auto key = std::make_pair(m.detectors, m.logical_mask);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), out.mechanisms.size());
            out.mechanisms.push_back(m);
        } else {
            auto &dst = out.mechanisms[it->second];
            dst.probability = xor_probability(dst.probability, m.probability);
        }
    }
    return out;
}

void validate_graphlike(const DetectorErrorModel &model) {
    for (size_t k = 0; k < model.mechanisms.size(); k++) {
        if (model.mechanisms[k].detectors.size() > 2) {
            throw NonGraphlikeError(
                "mechanism " + std::to_string(k) + " touches " +
                std::to_string(model.mechanisms[k].detectors.size()) + " detectors");
        }
    }
}

}  // namespace repdec

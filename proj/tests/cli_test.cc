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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "repdec/dem.h"

using namespace repdec;

namespace {

std::string tmp_dir() {
    static std::string dir = [] {
        std::string d = "/tmp/repdec_cli_test";
        std::system(("mkdir -p " + d).c_str());
        return d;
    }();
    return dir;
}

int run_cli(const std::string &args) {
    std::string cmd = std::string(REPDEC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen-dem produces the documented d=3 r=2 model") {
    std::string dem_path = tmp_dir() + "/gen.dem";
    REQUIRE(run_cli("gen-dem --code rep --d 3 --r 2 --noise depolarizing --p 0.01 --out " +
                    dem_path) == 0);
    auto model = parse_dem(slurp(dem_path));
    CHECK(model.detector_count == 6);
    CHECK(model.mechanisms.size() == 15);
}

TEST_CASE("decode runs are byte-identical and exit zero") {
    std::string dir = tmp_dir();
    REQUIRE(run_cli("sample --d 3 --r 2 --noise depolarizing --p 0.02 --shots 300 --seed 7 "
                    "--format b8 --out " +
                    dir + "/s --dem-out " + dir + "/s.dem") == 0);
    for (int round : {1, 2}) {
        REQUIRE(run_cli("decode --dem " + dir + "/s.dem --in " + dir + "/s.dets.b8 --obs " + dir +
                        "/s.obs.b8 --decoder planar --seed 7 --p 0.02 --noise depolarizing --out " +
                        dir + "/report" + std::to_string(round) + ".csv") == 0);
    }
    auto r1 = slurp(dir + "/report1.csv");
    CHECK(!r1.empty());
    CHECK(r1 == slurp(dir + "/report2.csv"));

    REQUIRE(run_cli("decode --dem " + dir + "/s.dem --in " + dir + "/s.dets.b8 --obs " + dir +
                    "/s.obs.b8 --decoder mwpm --out " + dir + "/mwpm.csv") == 0);
    CHECK(!slurp(dir + "/mwpm.csv").empty());
}

TEST_CASE("mixed formats agree") {
    std::string dir = tmp_dir();
    REQUIRE(run_cli("sample --d 3 --r 1 --noise si1000 --p 0.004 --shots 200 --seed 9 "
                    "--format 01 --out " +
                    dir + "/t --dem-out " + dir + "/t.dem") == 0);
    REQUIRE(run_cli("sample --d 3 --r 1 --noise si1000 --p 0.004 --shots 200 --seed 9 "
                    "--format b8 --out " +
                    dir + "/t") == 0);
    REQUIRE(run_cli("decode --dem " + dir + "/t.dem --in " + dir + "/t.01 --format 01 --out " +
                    dir + "/r01.csv") == 0);
    REQUIRE(run_cli("decode --dem " + dir + "/t.dem --in " + dir + "/t.dets.b8 --obs " + dir +
                    "/t.obs.b8 --format b8 --out " + dir + "/rb8.csv") == 0);
    // Same shots, same failures.
    CHECK(slurp(dir + "/r01.csv") == slurp(dir + "/rb8.csv"));
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run_cli("gen-dem --code rep --d 4 --r 2 --p 0.01 --out /tmp/never.dem") == 2);
    CHECK(run_cli("decode --dem /nonexistent.dem --in /nonexistent.b8") == 2);
}

TEST_CASE("calibrate and subsample pipelines produce loadable artifacts") {
    std::string dir = tmp_dir();
    REQUIRE(run_cli("sample --d 5 --r 3 --noise depolarizing --p 0.02 --shots 5000 --seed 11 "
                    "--format b8 --out " +
                    dir + "/c --dem-out " + dir + "/c.dem") == 0);
    REQUIRE(run_cli("calibrate --skeleton " + dir + "/c.dem --in " + dir +
                    "/c.dets.b8 --policy clamp --out " + dir + "/c.cal.dem --log " + dir +
                    "/c.log.json --heatmap " + dir + "/c.heat.csv") == 0);
    auto calibrated = parse_dem(slurp(dir + "/c.cal.dem"));
    CHECK(calibrated.mechanisms.size() > 0);
    CHECK(slurp(dir + "/c.log.json").find("corrections") != std::string::npos);
    CHECK(slurp(dir + "/c.heat.csv").rfind("row,col,value", 0) == 0);

    REQUIRE(run_cli("subsample --dem " + dir + "/c.dem --in " + dir + "/c.dets.b8 --obs " + dir +
                    "/c.obs.b8 --target-d 3 --offset 1 --out-prefix " + dir + "/sub") == 0);
    auto sub = parse_dem(slurp(dir + "/sub.dem"));
    CHECK(sub.detector_count == 8);
    REQUIRE(run_cli("decode --dem " + dir + "/sub.dem --in " + dir + "/sub.dets.b8 --obs " + dir +
                    "/sub.obs.b8 --out " + dir + "/sub.csv") == 0);
}

TEST_CASE("lambda subcommand fits a report") {
    std::string dir = tmp_dir();
    {
        std::ofstream out(dir + "/fit_input.csv");
        out << "schema,decoder,code,noise,d,r,p,shots,failures,p_l,eps_l,ci_lo,ci_hi,seed\n";
        for (uint32_t d : {3u, 5u, 7u}) {
            double eps = 0.4 * std::pow(0.25, (d + 1) / 2.0);
            size_t shots = 100000000;
            size_t fails = (size_t)(eps * shots);
            out << "repdec_report_v1,planar,rep,depolarizing," << d << ",1,0.01," << shots << ","
                << fails << "," << eps << "," << eps << ",0,1,5\n";
        }
    }
    REQUIRE(run_cli("lambda --in " + dir + "/fit_input.csv --out " + dir + "/fit.json") == 0);
    auto fit = slurp(dir + "/fit.json");
    CHECK(fit.find("\"lambda\"") != std::string::npos);
}

TEST_CASE("PLANAR_THREADS fallback leaves results unchanged") {
    std::string dir = tmp_dir();
    REQUIRE(run_cli("sample --d 3 --r 2 --noise depolarizing --p 0.03 --shots 400 --seed 3 "
                    "--format b8 --out " +
                    dir + "/env --dem-out " + dir + "/env.dem") == 0);
    std::string base = std::string(REPDEC_CLI_PATH) + " decode --dem " + dir + "/env.dem --in " +
                       dir + "/env.dets.b8 --obs " + dir + "/env.obs.b8";
    REQUIRE(WEXITSTATUS(std::system(
                (base + " --threads 1 --out " + dir + "/env1.csv > /dev/null 2>&1").c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(
                ("PLANAR_THREADS=3 " + base + " --out " + dir + "/env3.csv > /dev/null 2>&1")
                    .c_str())) == 0);
    CHECK(slurp(dir + "/env1.csv") == slurp(dir + "/env3.csv"));
}

TEST_CASE("unsatisfiable-syndrome excess exits with code 3") {
    std::string dir = tmp_dir();
    REQUIRE(run_cli("sample --d 3 --r 2 --noise depolarizing --p 0.1 --shots 400 --seed 5 "
                    "--format b8 --out " +
                    dir + "/u --dem-out " + dir + "/u.dem") == 0);
    // Strip every mechanism touching detector 0: shots that fire it become
    // unsatisfiable under the crippled model.
    auto model = parse_dem(slurp(dir + "/u.dem"));
    DetectorErrorModel crippled = model;
    crippled.mechanisms.clear();
    for (const auto &m : model.mechanisms) {
        bool touches = false;
        for (uint32_t d : m.detectors) {
            touches |= d == 0;
        }
        if (!touches) {
            crippled.mechanisms.push_back(m);
        }
    }
    {
        std::ofstream out(dir + "/u_crippled.dem");
        write_dem(crippled, out);
    }
    CHECK(run_cli("decode --dem " + dir + "/u_crippled.dem --in " + dir + "/u.dets.b8 --obs " +
                  dir + "/u.obs.b8 --out " + dir + "/u.csv") == 3);
}

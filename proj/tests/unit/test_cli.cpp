/*
   Copyright 2026 The fqcurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fqc/cli.hpp"
#include "fqc/json_io.hpp"

using namespace fqc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("ideal verify") {
    const Run a = run({"ideal", "verify", "-n", "2", "-k", "1", "--field", "2", "--dmax", "6"});
    CHECK(a.code == 0);
    CHECK(a.out.find("PASS") != std::string::npos);
    CHECK(run({"ideal", "verify", "-n", "3", "-k", "2", "--field", "3", "--dmax", "7"}).code == 0);
    CHECK(run({"ideal", "verify", "-n", "2", "-k", "0", "--field", "2"}).code == 1);
    CHECK(run({"ideal", "verify", "-n", "2", "--family", "affine", "--field", "4"}).code == 0);
    CHECK(run({"ideal", "verify", "-n", "2", "--family", "full", "--field", "3"}).code == 0);
    const Run j = run({"ideal", "verify", "-n", "2", "-k", "2", "--field", "3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(Json::parse(j.out)["k"] == 2);
    CHECK(run({"ideal", "verify", "-k", "1", "--field", "2"}).code == 1);
}

TEST_CASE("ideal gens") {
    const Run r = run({"ideal", "gens", "-n", "2", "-k", "1", "--field", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("product") != std::string::npos);
    const Json j = Json::parse(run({"ideal", "gens", "-n", "2", "-k", "1", "--field", "2", "--format", "json"}).out);
    CHECK(j.size() == 4);
}

TEST_CASE("field") {
    const Run r = run({"field", "--field", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("t^2+t+1") != std::string::npos);
    CHECK(run({"field", "--field", "6"}).code == 1);
    const Json j = Json::parse(run({"field", "--field", "3^2", "--ext", "2", "--format", "json"}).out);
    CHECK(j["q"] == 9);
    CHECK(j["extension"]["q"] == 81);
}

TEST_CASE("mindegree") {
    const Run r = run({"mindegree", "--field", "2", "-n", "2", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["threshold"] == 3);
    CHECK(j["passed"] == true);
}

TEST_CASE("curve subcommands") {
    const std::string sz = "(X+Y+Z)^4+(XY+YZ+ZX)^2+XYZ(X+Y+Z)";
    const Run c = run({"curve", "count", "--field", "4", "--poly", sz});
    CHECK(c.code == 0);
    CHECK(c.out.find("14") != std::string::npos);
    CHECK(run({"curve", "sziklai", "--field", "4", "--poly", sz}).out.find("exception-curve") != std::string::npos);
    CHECK(run({"curve", "lines", "--field", "3", "--poly", "XYZ"}).out.rfind("3 ", 0) == 0);
    CHECK(run({"curve", "missing", "--field", "3", "--poly", "X^2+YZ"}).out.rfind("9 ", 0) == 0);
    const Run s = run({"curve", "singular", "--field", "3", "--poly", "X^4-X^2*Z^2+Y^4-Y^2*Z^2", "--ext", "2"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("1 singular point(s) over F_9", 0) == 0);
    const Json j = Json::parse(run({"curve", "count", "--field", "4", "--poly", sz, "--format", "json"}).out);
    CHECK(curve_report_from_json(j).n_points == 14);
    CHECK(run({"curve", "count", "--field", "4", "--poly", "X^2+Y"}).code == 1);
    CHECK(run({"curve", "count", "--field", "4"}).code == 1);
}

TEST_CASE("construct") {
    const Run fc = run({"construct", "fc", "--field", "5", "--degree", "7", "--search-c"});
    CHECK(fc.code == 0);
    CHECK(fc.out.find("N_q(C) = 28") != std::string::npos);
    CHECK(run({"construct", "fc", "--field", "5", "--degree", "7", "--alphas", "0,1,1"}).code == 1);
    CHECK(run({"construct", "fc", "--field", "5", "--degree", "12"}).code == 1);
    CHECK(run({"construct", "remark", "--field", "4", "--degree", "8"}).code == 0);
    CHECK(run({"construct", "remark", "--field", "5", "--degree", "10", "--mult", "1,1,1,1,1"}).code == 1);
    CHECK(run({"construct", "qplus1", "--field", "9"}).code == 0);
    CHECK(run({"construct", "qplus1", "--field", "3", "--matrix", "1,0,0,0,2,0"}).code == 1);
    const Json j = Json::parse(run({"construct", "qplus1", "--field", "4", "--format", "json"}).out);
    CHECK(j["curve"]["n_points"] == 16);
    CHECK(j["verification"]["passed"] == true);
}

TEST_CASE("search") {
    const Run csv = run({"search", "--field", "2", "--degree", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("N,count,witness_rank,witness\r\n", 0) == 0);
    const Json j = Json::parse(run({"search", "--field", "2", "--degree", "3", "--format", "json"}).out);
    CHECK(j["M2"] == 4);
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < 3; ++i) {
        const Json p = Json::parse(run({"search", "--field", "2", "--degree", "3", "--parts", "3", "--part",
                                        std::to_string(i), "--format", "json"})
                                       .out);
        total += p["accepted"].get<std::uint64_t>();
    }
    CHECK(total == 694);
    CHECK(run({"search", "--field", "2", "--degree", "3", "--parts", "3", "--part", "3"}).code == 1);
    CHECK(run({"search", "--field", "2", "--degree", "3", "--budget", "100"}).code == 1);
    CHECK(run({"search", "--field", "2", "--degree", "3", "--filter", "bogus"}).code == 1);
}

TEST_CASE("budget from the environment") {
    setenv("FQC_BUDGET", "100", 1);
    const int limited = run({"search", "--field", "2", "--degree", "3"}).code;
    setenv("FQC_BUDGET", "junk", 1);
    const int junk = run({"search", "--field", "2", "--degree", "3"}).code;
    unsetenv("FQC_BUDGET");
    CHECK(limited == 1);
    CHECK(junk == 1);
    CHECK(run({"search", "--field", "2", "--degree", "3"}).code == 0);
}

TEST_CASE("figure and output files") {
    const Run r = run({"figure", "--field", "5", "--dmax", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("d,N,status\r\n6,26,attained-max\r\n", 0) == 0);
    const auto path = std::filesystem::temp_directory_path() / "fqc_cli_figure.csv";
    CHECK(run({"figure", "--field", "5", "--dmax", "12", "--output", path.string()}).code == 0);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(os.str() == r.out);
    std::filesystem::remove(path);
    CHECK(run({"figure", "--field", "5", "--output", "/nonexistent-dir/x.csv"}).code == 3);
}

TEST_CASE("main theorem") {
    const Run r = run({"main-theorem", "--field", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d = 5 [qplus1]: N_q(C) = 16") != std::string::npos);
    CHECK(r.out.find("d = 6 [fc]: N_q(C) = 19") != std::string::npos);
    CHECK(r.out.find("d = 8 [remark]: N_q(C) = 20") != std::string::npos);
    const Json j = Json::parse(run({"main-theorem", "--field", "2", "--format", "json"}).out);
    CHECK(j["censuses"][0]["M2"] == 4);
    CHECK(j["passed"] == true);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"figure", "--field", "5", "--threads", "0"}).code == 1);
    CHECK(run({"figure", "--field", "5", "--format", "xml"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"figure", "--field", "5", "--threads", "1"}).code == 0);
}

} // TEST_SUITE

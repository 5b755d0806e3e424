// SPDX-License-Identifier: Apache-2.0
//
// irsee - energy-efficiency analysis of IRS-aided links under statistical QoS
// Copyright (C) 2026 The irsee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Runs the command-line tool as a subprocess.

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{
struct Run
{
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(IRSEE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "irsee_cli_test";
    fs::create_directories(dir);
    return dir / name;
}
} // namespace

TEST_CASE("metrics subcommand", "[cli]")
{
    const Run r = run("metrics --preset paper -n 100");
    CHECK(r.code == 0);
    CHECK(r.out.find("regime = low_power_large_n") != std::string::npos);
    CHECK(r.out.find("eb_n0_min_db = ") != std::string::npos);

    const Run w = run("metrics --preset paper --regime wideband_case_i --method monte_carlo --samples 200");
    CHECK(w.code == 0);
    CHECK(w.out.find("method = monte_carlo") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 2", "[cli]")
{
    CHECK(run("metrics --config /nonexistent.cfg").code == 2);
    CHECK(run("metrics --phase-mode discrete:0").code == 2);
    CHECK(run("metrics --regime nonsense").code == 2);
    CHECK(run("sweep --figure 9").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("probe --mu 1").code == 2);

    const fs::path bad = scratch("bad.cfg");
    std::ofstream(bad) << "n_elements = 10\nwavelength = 0.1\n";
    CHECK(run("metrics --config " + bad.string()).code == 2);
}

TEST_CASE("shipped config files load", "[cli]")
{
    for (const char* name : {"paper.cfg", "precise.cfg"})
    {
        const Run r = run(std::string("metrics --config ") + IRSEE_SOURCE_DIR + "/configs/" + name);
        INFO(name);
        CHECK(r.code == 0);
    }
}

TEST_CASE("probe subcommand", "[cli]")
{
    const Run q = run("probe --mu 0.1 --q-max 100");
    CHECK(q.code == 0);
    CHECK(q.out == "probability = 4.53999298e-05\n");
    const Run d = run("probe --mu 1 --delta 2 --d-max 5");
    CHECK(d.out == "probability = 4.53999298e-05\n");
}

TEST_CASE("sweep output files are reproducible across thread counts", "[cli]")
{
    const fs::path a = scratch("fig1_a");
    const fs::path b = scratch("fig1_b");
    const std::string common = "sweep --figure 1 --preset paper --samples 300 --per-decade 5 --out ";
    REQUIRE(run(common + a.string() + " --threads 1").code == 0);
    REQUIRE(run(common + b.string() + " --threads 3").code == 0);
    const std::string csv = slurp(a.string() + ".csv");
    CHECK(csv.rfind("sweep_variable,eb_n0_db,c_e,mu,n,mode,flag\n", 0) == 0);
    CHECK(csv == slurp(b.string() + ".csv"));
    CHECK(slurp(a.string() + "_summary.csv") == slurp(b.string() + "_summary.csv"));
    const std::string meta = slurp(a.string() + ".meta");
    CHECK(meta.find("seed = 1\n") != std::string::npos);
    CHECK(meta.find("samples = 300\n") != std::string::npos);
    CHECK(meta.find("build_id = ") != std::string::npos);
}

TEST_CASE("every figure sweep runs", "[cli]")
{
    for (const char* fig : {"2", "3 --n-list 10 100", "4 --n-list 10 20", "5 --case i", "5 --case ii"})
    {
        const Run r = run(std::string("sweep --preset paper --samples 100 --per-decade 2 --figure ") + fig);
        INFO(fig);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("sweep_variable,", 0) == 0);
    }
}

TEST_CASE("validate subcommand", "[cli]")
{
    const Run r = run("validate --preset paper --mc-samples 50000");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS inequality_suite") != std::string::npos);
}

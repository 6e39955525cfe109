// Copyright 2026 The qtestfn Authors
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


#include <sstream>

#include "gtest/gtest.h"
#include "qtestfn/cli.hpp"

using qtestfn::cli::dispatch;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, solve_and_simulate) {
    EXPECT_EQ(call({"solve", "+10001", "+11101"}).out, "3C3C\n");
    EXPECT_EQ(call({"simulate", "$3333", "+00001"}).out, "+00101\n");
    EXPECT_EQ(call({"simulate", "1111", "+001"}).out, "-001\n");
    EXPECT_EQ(call({"predict", "0110", "-101"}).out, "-011\n");
}

TEST(cli, simulate_vector) {
    EXPECT_EQ(call({"simulate", "1111", "+001", "--vector"}).out, "(0 -1 0 0 0 0 0 0)\n");
}

TEST(cli, gen_lists_positives_then_negatives) {
    Outcome r = call({"gen", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "00 0 0 Positive\n01 1 1 Positive\n11 3 3 Negative\n10 2 2 Negative\n");
}

TEST(cli, classify_and_parity) {
    EXPECT_EQ(call({"classify", "0x3C3C"}).out, "Positive\n");
    Outcome bad = call({"classify", "00010111"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.out, "NotAdmissible\n");
    EXPECT_EQ(call({"parity", "1001"}).out, "mask=11 complement=1 f=~(x1 ^ x2)\n");
    Outcome err = call({"parity", "0111"});
    EXPECT_EQ(err.code, 1);
    EXPECT_NE(err.err.find("NotAdmissible"), std::string::npos);
}

TEST(cli, chart_and_catalog) {
    EXPECT_EQ(call({"chart", "1", "--format", "csv", "--negative"}).out, "y\\x,01,11\n01,-a,-b\n11,-b,-a\n");
    EXPECT_EQ(call({"catalog", "2", "--format", "csv"}).out, "a,0000,0,0\nb,0011,3,3\nc,0101,5,5\nd,0110,6,6\n");
    EXPECT_EQ(call({"chart", "2", "--format", "xml"}).code, 2);
    EXPECT_EQ(call({"chart", "7"}).code, 1);
}

TEST(cli, equiv_verify_matrix) {
    Outcome eq = call({"equiv", "0110"});
    EXPECT_EQ(eq.code, 0);
    EXPECT_NE(eq.out.find("--\nwires=3 sign=+1\nX 0\nX 1\nEQUIVALENT"), std::string::npos);
    EXPECT_EQ(call({"verify", "2"}).out, "PASS 64/64\n");
    EXPECT_EQ(call({"matrix", "01"}).out, "1 0 0 0\n0 1 0 0\n0 0 0 1\n0 0 1 0\n");
}

TEST(cli, fault_and_factor) {
    EXPECT_EQ(call({"fault", "0011", "+001", "none"}).out, "1\n");
    EXPECT_EQ(call({"fault", "0011", "+001", "skip:first:0"}).out, "0.5\n");
    EXPECT_EQ(call({"fault", "0011", "+001", "rotate:first:1:0.5"}).out, "0.77015115293407\n");
    EXPECT_EQ(call({"fault", "0011", "+001", "explode"}).code, 1);
    EXPECT_EQ(call({"factor", "(1 -1 -1 1 -1 1 1 -1)/sqrt(8)"}).out,
              "q0: (1 -1)/sqrt(2)\nq1: (1 -1)/sqrt(2)\nq2: (1 -1)/sqrt(2)\n");
    Outcome bell = call({"factor", "(0.70710678118654752 0 0 0.70710678118654752)"});
    EXPECT_EQ(bell.code, 1);
    EXPECT_NE(bell.err.find("Entangled"), std::string::npos);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"bogus"}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
    EXPECT_EQ(call({"simulate", "0110"}).code, 2);
    Outcome dim = call({"simulate", "0110", "+1010"});
    EXPECT_EQ(dim.code, 1);
    EXPECT_EQ(dim.err.rfind("error: DimensionMismatch: ", 0), 0u);
    EXPECT_EQ(call({"simulate", "0110", "+100"}).code, 1);
    EXPECT_EQ(call({"simulate", "01x0", "+101"}).code, 1);
}

TEST(cli, global_options_anywhere) {
    EXPECT_EQ(call({"simulate", "0011", "+001", "--tolerance", "0.01"}).out, "+101\n");
    EXPECT_EQ(call({"--tolerance", "0.01", "simulate", "0011", "+001"}).out, "+101\n");
    EXPECT_EQ(call({"--tolerance", "-1", "simulate", "0011", "+001"}).code, 2);
    EXPECT_EQ(call({"--max-qubits", "3", "simulate", "$3333", "+00001"}).code, 1);
    EXPECT_EQ(call({"simulate", "$3333", "+00001", "--max-qubits", "5"}).out, "+00101\n");
}

// Copyright 2026 The qlistdec Authors
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

#include "qld/config.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qld/bounds.h"
#include "qld/commands.h"
#include "qld/errors.h"

namespace qld {
namespace {

ExperimentConfig parse(const std::string &text) {
    std::istringstream in(text);
    return ExperimentConfig::parse(in);
}

struct CmdRun {
    int code;
    std::string out;
    std::string err;
};

CmdRun run(const std::string &cmd, const ExperimentConfig &cfg) {
    std::ostringstream out, err;
    int code = run_command(cmd, cfg, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qld_test_" + name)).string();
}

TEST(Config, RoundTrip) {
    ExperimentConfig c;
    c.code = "had";
    c.q = 3;
    c.n = 2;
    c.noise = "symmetric";
    c.rate = 0.1;
    c.eps = 1.0 / 3.0;
    c.delta = 0.9;
    c.trials = 12;
    c.seed = 18446744073709551615ULL;
    c.out = "/tmp/x.csv";
    c.oracle_table = "t.txt";
    ExperimentConfig back = parse(c.serialize());
    EXPECT_EQ(back, c);
    EXPECT_EQ(parse(back.serialize()).serialize(), c.serialize());
}

TEST(Config, CommentsAndWhitespace) {
    ExperimentConfig c = parse("# header\n  code = sls  # trailing\n\np=7\n");
    EXPECT_EQ(c.code, std::optional<std::string>("sls"));
    EXPECT_EQ(c.p, std::optional<uint64_t>(7));
}

TEST(Config, UnknownKeyIsError) {
    EXPECT_THROW(parse("epsilon = 0.1\n"), ConfigError);
    EXPECT_THROW(parse("just words\n"), ConfigError);
}

TEST(Config, RangeValidation) {
    EXPECT_THROW(parse("eps = 1.5\n"), ConfigError);
    EXPECT_THROW(parse("rate = -0.1\n"), ConfigError);
    EXPECT_THROW(parse("q = 1\n"), ConfigError);
    EXPECT_THROW(parse("trials = 0\n"), ConfigError);
    EXPECT_THROW(parse("threads = 1000\n"), ConfigError);
    EXPECT_THROW(parse("code = rs\n"), ConfigError);
    EXPECT_THROW(parse("noise = gaussian\n"), ConfigError);
    EXPECT_THROW(parse("seed = -1\n"), ConfigError);
    EXPECT_THROW(parse("eps = 0.1x\n"), ConfigError);
}

TEST(Config, MergeOverrides) {
    ExperimentConfig a = parse("code = had\nq = 2\nn = 3\n");
    ExperimentConfig b = parse("n = 4\neps = 0.2\n");
    a.merge(b);
    EXPECT_EQ(a.n, std::optional<uint64_t>(4));
    EXPECT_EQ(a.q, std::optional<uint64_t>(2));
    EXPECT_EQ(a.eps, std::optional<double>(0.2));
}

TEST(Config, ProvenanceOmitsExecutionKeys) {
    ExperimentConfig c = parse("code = had\nthreads = 8\nout = a.csv\n");
    std::string p = c.provenance_header();
    EXPECT_EQ(p, "# code = had\n");
}

TEST(Cli, BoundsHadamardExample) {
    CmdRun r = run("bounds", parse("q = 2\nM = 64\nd = 32\neps = 0.25\n"));
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("J = 4\n"), std::string::npos) << r.out;
    // Output is itself a valid config fragment.
    EXPECT_NO_THROW(parse(r.out));
}

TEST(Cli, BoundsBelowThreshold) {
    CmdRun r = run("bounds", parse("q = 2\nM = 8\nd = 2\neps = 0.01\n"));
    EXPECT_EQ(r.code, kExitInapplicable);
    EXPECT_NE(r.err.find("threshold"), std::string::npos);
    EXPECT_NE(r.err.find(format_double(johnson_threshold(8, 2, 2))), std::string::npos) << r.err;
}

TEST(Cli, MissingKeyIsConfigError) {
    EXPECT_EQ(run("bounds", parse("q = 2\n")).code, kExitConfig);
    EXPECT_EQ(run("listdecode", parse("code = had\nq = 2\n")).code, kExitConfig);
    EXPECT_EQ(run("nope", ExperimentConfig{}).code, kExitConfig);
}

TEST(Cli, GenLegendre) {
    EXPECT_EQ(run("gen-legendre", parse("p = 7\nx = 1\nlength = 7\n")).out, "0010110\n");
    EXPECT_EQ(run("gen-legendre", parse("p = 11\nx = 0\nlength = 1\n")).out, "0\n");
    CmdRun r = run("gen-legendre", parse("p = 101\nx = 5\nlength = 40\n"));
    EXPECT_EQ(r.out.size(), 41u);
    EXPECT_EQ(run("gen-legendre", parse("p = 7\nlength = 8\n")).code, kExitConfig);
}

TEST(Cli, DecodeState) {
    CmdRun r = run("decode-state", parse("code = had\nq = 3\nn = 2\nx = 5\nk = 2\nseed = 1\n"));
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("decoded = 5\n"), std::string::npos);
}

TEST(Cli, SeedPrintedWhenMissing) {
    CmdRun r = run("decode-state", parse("code = had\nq = 2\nn = 2\nx = 1\n"));
    EXPECT_EQ(r.err.rfind("seed = ", 0), 0u);
}

TEST(Cli, InvertDemoExitCodes) {
    std::string f = temp_path("identity.txt");
    {
        std::ofstream o(f);
        o << "0 1 2 3\n4 5 6 7\n";
    }
    ExperimentConfig base = parse("code = had\nq = 2\nn = 3\neps = 0.25\ndelta = 0.9\ny = 6\nseed = 4\n");
    base.function = f;
    ExperimentConfig perfect = base;
    perfect.noise = "perfect";
    CmdRun ok = run("invert-demo", perfect);
    EXPECT_EQ(ok.code, kExitOk) << ok.err;
    EXPECT_NE(ok.out.find("preimage = 6\n"), std::string::npos);
    ExperimentConfig uniform = base;
    uniform.noise = "uniform";
    CmdRun miss = run("invert-demo", uniform);
    EXPECT_EQ(miss.code, kExitNotFound);
    EXPECT_NE(miss.out.find("preimage = none"), std::string::npos);
    ExperimentConfig missing = base;
    missing.function = temp_path("does_not_exist.txt");
    EXPECT_EQ(run("invert-demo", missing).code, kExitConfig);
    std::remove(f.c_str());
}

TEST(Cli, ListdecodeDeterministicAcrossThreads) {
    ExperimentConfig c =
        parse("code = had\nq = 2\nn = 4\nnoise = symmetric\nrate = 0.2\neps = 0.25\ndelta = 0.9\ntrials = 9\nseed = 5\n");
    c.threads = 1;
    CmdRun a = run("listdecode", c);
    c.threads = 8;
    CmdRun b = run("listdecode", c);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
    EXPECT_NE(a.out.find("# seed = 5\n"), std::string::npos);
    EXPECT_NE(a.out.find("run_id,k,iteration,outcome_label,is_valid_message,cumulative_queries\n"), std::string::npos);
    EXPECT_NE(a.err.find("hit_frequency["), std::string::npos);
}

TEST(Cli, ListdecodeSigmaReportedBeforeSimulation) {
    CmdRun r = run("listdecode", parse("code = sls\np = 7\neps = 0.45\nseed = 1\n"));
    EXPECT_EQ(r.code, kExitInapplicable);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, PresenceAndJohnsonCheck) {
    CmdRun p = run("presence", parse("code = had\nq = 2\nn = 3\nx = 3\nseed = 1\n"));
    EXPECT_EQ(p.code, kExitOk);
    EXPECT_NE(p.out.find("\n3,1,1,1\n"), std::string::npos) << p.out;
    CmdRun j = run("johnson-check", parse("code = had\nq = 2\nn = 3\nnoise = symmetric\nrate = 0.2\neps = 0.3\nseed = 2\n"));
    EXPECT_EQ(j.code, kExitOk);
    EXPECT_NE(j.out.find("pass = true"), std::string::npos);
}

TEST(Cli, AdversarialTable) {
    std::string t = temp_path("table.txt");
    {
        std::ofstream o(t);
        o << "2 4 0\n";
        for (int r = 0; r < 4; r++) {
            o << r << " 0 0.7071067811865476 0\n" << r << " 1 0.7071067811865476 0\n";
        }
    }
    ExperimentConfig c = parse("code = had\nq = 2\nn = 2\nnoise = adversarial-table\n");
    c.oracle_table = t;
    CmdRun p = run("presence", c);
    EXPECT_EQ(p.code, kExitOk) << p.err;
    EXPECT_NE(p.out.find("\n0,0.5"), std::string::npos) << p.out;
    std::remove(t.c_str());
}

}  // namespace
}  // namespace qld

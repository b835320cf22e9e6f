// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rwa_cli/cli.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "rwa/distributions.hpp"

using namespace rwa;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

TEST(Grammar, Distributions) {
  EXPECT_EQ(cli::parse_distribution("beta:2,3"), IntervalBeta(2, 3, 0, 1));
  EXPECT_EQ(cli::parse_distribution("beta:2,3:-1,4"), IntervalBeta(2, 3, -1, 4));
  EXPECT_EQ(cli::parse_distribution("uniform:0,2"), uniform_law(0, 2));
  EXPECT_EQ(cli::parse_distribution("arcsine:-1,1"), IntervalBeta(0.5, 0.5, -1, 1));
  EXPECT_EQ(cli::parse_distribution("wigner:2"), IntervalBeta(1.5, 1.5, -2, 2));
  EXPECT_EQ(cli::parse_distribution("ps:-0.5,1"), uniform_law(-1, 1));
  for (const char* bad : {"gamma:1,1", "beta", "beta:1", "beta:1,2,3", "beta:1,x", "beta:1,1:0", "wigner:1:2"}) {
    EXPECT_THROW(cli::parse_distribution(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(cli::parse_distribution("beta:-1,1"), std::domain_error);
  EXPECT_THROW(cli::parse_distribution("uniform:1,0"), std::domain_error);
}

TEST(Grammar, Specs) {
  EXPECT_EQ(cli::parse_spec("4:2"), CompositionSpec(4, {2}));
  EXPECT_EQ(cli::parse_spec("6:1,3"), CompositionSpec(6, {1, 3}));
  EXPECT_EQ(cli::parse_spec("3"), CompositionSpec(3, {1, 2}));
  EXPECT_EQ(cli::parse_spec("1"), CompositionSpec(1, {}));
  EXPECT_THROW(cli::parse_spec("4:5"), std::domain_error);
  EXPECT_THROW(cli::parse_spec("x"), std::invalid_argument);
  EXPECT_THROW(cli::parse_spec("4:-1"), std::invalid_argument);
}

TEST(Sample, CsvAndReproducible) {
  const std::vector<std::string> args = {"sample", "--spec", "4:2", "--input", "beta:2,2:0,1",
                                         "--input", "beta:2,2:0,1", "--n", "1000", "--seed", "7"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  const auto rows = lines(a.out);
  ASSERT_EQ(rows.size(), 1001U);
  EXPECT_EQ(rows.front(), "value");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i]);
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
  EXPECT_EQ(run(args).out, a.out);
}

TEST(Sample, SingleBlockPassthrough) {
  const auto r = run({"sample", "--spec", "1", "--input", "beta:1,1:0,1", "--n", "3", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 4U);
}

TEST(Sample, DirichletBlocks) {
  const auto r = run({"sample", "--r", "0.5,1.5", "--input", "uniform:0,1", "--input", "arcsine:0,1", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 6U);
}

TEST(Sample, UsageErrors) {
  EXPECT_EQ(run({"sample", "--spec", "4:5", "--input", "beta:1,1", "--input", "beta:1,1"}).code, 2);
  EXPECT_EQ(run({"sample", "--spec", "4:2", "--input", "beta:1,1"}).code, 2);
  EXPECT_EQ(run({"sample", "--spec", "2", "--r", "1,1", "--input", "beta:1,1", "--input", "beta:1,1"}).code, 2);
  EXPECT_EQ(run({"sample", "--spec", "2", "--input", "nope", "--input", "beta:1,1"}).code, 2);
  EXPECT_EQ(run({"sample", "--spec", "2", "--input", "beta:1,1", "--input", "beta:1,1", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"sample"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Ast, DefaultGridWithClosedForm) {
  const auto r = run({"ast", "--dist", "beta:1.5,1.5:0,1", "--d", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 22U);
  EXPECT_EQ(rows.front(), "z,closed_form,quadrature,moment_series,max_pairwise_diff");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    ASSERT_EQ(f.size(), 5U);
    ASSERT_FALSE(f[1].empty());
    EXPECT_LE(std::stod(f[4]), 1e-9) << rows[i];
  }
  // Centre row is z = 0 where every route gives exactly 1.
  EXPECT_EQ(rows[11], "0,1,1,1,0");
}

TEST(Ast, ExplicitPointsAndAbsentRoute) {
  const auto r = run({"ast", "--dist", "arcsine:-1,1", "--d", "2", "--z", "0.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = fields(lines(r.out).at(1));
  EXPECT_EQ(std::stod(f[0]), 0.6);
  EXPECT_TRUE(f[1].empty());
  // Arcsine order 2: (1 - z^2)^(-3/2) = 1 / 0.512
  EXPECT_NEAR(std::stod(f[2]), 1.953125, 1e-12);
}

TEST(Ast, ArcsineReference) {
  const auto r = run({"ast", "--dist", "beta:0.5,0.5:-1,1", "--d", "1", "--z", "0.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(fields(lines(r.out).at(1))[2]), 1.25, 1e-12);
}

TEST(Ast, OutOfDomain) {
  const auto r = run({"ast", "--dist", "beta:1,1:-2,2", "--d", "1", "--z", "0.1", "--z", "0.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"ast", "--dist", "beta:1,1", "--d", "0", "--z", "0.1"}).code, 2);
}

TEST(Verify, SingleCheckPasses) {
  const auto r = run({"verify", "--check", "thm3.1:r=1,2", "--samples", "20000"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.back().substr(0, 13), "thm3.1:r=1,2\t");
  EXPECT_NE(rows.back().find("\tPASS"), std::string::npos);
}

TEST(Verify, KnownDiscrepancyIsNotAFailure) {
  const auto r = run({"verify", "--check", "example4.2:m=2", "--samples", "20000", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("example4.2:m=2/formula,"), std::string::npos);
  EXPECT_NE(r.out.find(",KNOWN-DISCREPANCY\n"), std::string::npos);
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--check", "thm9.9"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--all", "--format", "xml"}).code, 2);
}

TEST(Verify, OutputFile) {
  const std::string path = ::testing::TempDir() + "rwa_cli_report.txt";
  const auto r = run({"verify", "--check", "cor3.2:n=2", "--samples", "5000", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("cor3.2:n=2\t"), std::string::npos);
}

TEST(Binary, SeedEnvironmentAndByteIdenticalOutput) {
  const std::string bin = RWA_CLI_BINARY;
  const std::string cmd = " sample --spec 3 --input uniform:0,1 --input uniform:0,1 --input uniform:0,1 --n 50";
  const auto explicit_seed = capture("'" + bin + "'" + cmd + " --seed 9");
  ASSERT_FALSE(explicit_seed.empty());
  EXPECT_EQ(capture("RWA_SEED=9 '" + bin + "'" + cmd), explicit_seed);
  EXPECT_EQ(capture("'" + bin + "'" + cmd + " --seed 9"), explicit_seed);
  EXPECT_NE(capture("'" + bin + "'" + cmd), explicit_seed);
  EXPECT_EQ(capture("'" + bin + "'" + cmd), capture("'" + bin + "'" + cmd + " --seed 42"));
}

TEST(Binary, HelpAndExitCodes) {
  const std::string bin = RWA_CLI_BINARY;
  EXPECT_EQ(std::system(("'" + bin + "' --help > /dev/null").c_str()), 0);
  EXPECT_NE(capture("'" + bin + "' verify --help").find("--check"), std::string::npos);
  const int status = std::system(("'" + bin + "' verify --check bogus 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

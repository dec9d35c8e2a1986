#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& arguments, const std::string& env = "") {
  const std::string command =
      env + " " + std::string(DUMAS_CLI_PATH) + " " + arguments + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

TEST(CliNewton, TextRendering) {
  const RunResult r = run("newton --poly \"4,2,1\" --prime 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("segment_count: 2"), std::string::npos);
}

TEST(CliNewton, JsonOutput) {
  const RunResult r = run("newton --poly \"x^2+2x+2\" --prime 2 --format json");
  EXPECT_EQ(r.exit_code, 0);
  const auto envelope = nlohmann::json::parse(r.output);
  EXPECT_EQ(envelope["command"], "newton");
  EXPECT_EQ(envelope["result"]["segment_count"], 1);
  EXPECT_TRUE(envelope.contains("elapsed_ms"));
  EXPECT_EQ(envelope["parameters"]["prime"], 2);
}

TEST(CliNewton, ErrorExitCodes) {
  EXPECT_EQ(run("newton --poly \"1,1\" --prime 4").exit_code, 2);  // not prime
  EXPECT_EQ(run("newton --poly \"0,1,1\" --prime 2").exit_code, 3);  // A0 = 0
  EXPECT_EQ(run("newton --poly \"x^+\" --prime 2").exit_code, 2);
  EXPECT_EQ(run("newton --prime 2").exit_code, 2);  // missing --poly
}

TEST(CliCheck, DumasVerdicts) {
  const RunResult hit = run("check --criterion dumas --poly \"4x^2+4x+2\"");
  EXPECT_EQ(hit.exit_code, 0);
  const auto envelope = nlohmann::json::parse(hit.output);
  EXPECT_TRUE(envelope["result"]["satisfied"].get<bool>());
  EXPECT_EQ(envelope["result"]["witness_prime"], 2);

  const RunResult miss = run("check --criterion dumas --poly \"x^2+x+1\"");
  EXPECT_EQ(miss.exit_code, 1);
  const auto missed = nlohmann::json::parse(miss.output);
  EXPECT_EQ(missed["result"]["reason"], "no-candidate-primes");
}

TEST(CliCheck, TotalVerdictsForDegenerateInputs) {
  // zero constant term and degree 1 yield unsatisfied verdicts, not errors
  const RunResult zero = run("check --criterion dumas --poly \"0,1,1\"");
  EXPECT_EQ(zero.exit_code, 1);
  EXPECT_EQ(nlohmann::json::parse(zero.output)["result"]["reason"],
            "zero-endpoint");

  const RunResult linear = run("check --criterion dumas --poly \"x+1\"");
  EXPECT_EQ(linear.exit_code, 1);
  EXPECT_EQ(nlohmann::json::parse(linear.output)["result"]["reason"],
            "degree-too-small");
}

TEST(CliCheck, EisensteinVerdict) {
  const RunResult r = run("check --criterion eisenstein --poly \"x^2+2x+2\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.output)["result"]["witness_prime"], 2);
}

TEST(CliCheck, JsonRoundTripsByteIdentically) {
  const RunResult r = run("check --criterion dumas --poly \"x^3+2\"");
  const std::string text = r.output.substr(0, r.output.rfind('\n'));
  EXPECT_EQ(nlohmann::json::parse(text).dump(2), text);
}

TEST(CliCensus, KnownCounts) {
  const RunResult zero = run("census --kind dumas --degree 2 --height 1");
  EXPECT_EQ(zero.exit_code, 0);
  EXPECT_NE(zero.output.find("2,1,dumas,0,"), std::string::npos);
  EXPECT_EQ(zero.output.find("n,H,kind,count,total,density"), 0u);

  const RunResult triples = run("census --kind pairwise-coprime --height 4");
  EXPECT_NE(triples.output.find("3,4,pairwise-coprime,22,64,"), std::string::npos);

  const RunResult pairs = run("census --kind coprime --k 2 --height 10");
  EXPECT_NE(pairs.output.find("2,10,coprime,37,100,"), std::string::npos);
}

TEST(CliCensus, HeightRangeStreamsRows) {
  const RunResult r = run("census --kind eisenstein --degree 2 --height 1:3");
  EXPECT_EQ(r.exit_code, 0);
  int rows = 0;
  for (const char c : r.output)
    if (c == '\n') ++rows;
  EXPECT_EQ(rows, 4);  // header + 3 rows
}

TEST(CliCensus, ThreadCountDoesNotChangeOutput) {
  const std::string args = "census --kind dumas --degree 2 --height 12";
  const RunResult t1 = run(args + " --threads 1");
  const RunResult t3 = run(args + " --threads 3");
  const RunResult env = run(args, "DUMAS_THREADS=2");
  EXPECT_EQ(t1.output, t3.output);
  EXPECT_EQ(t1.output, env.output);
}

TEST(CliCensus, JsonEnvelope) {
  const RunResult r =
      run("census --kind dumas --degree 2 --height 2 --format json");
  const auto envelope = nlohmann::json::parse(r.output);
  EXPECT_EQ(envelope["command"], "census");
  EXPECT_EQ(envelope["result"][0]["count"], "24");
}

TEST(CliCensus, InvalidRangesExitTwo) {
  EXPECT_EQ(run("census --kind dumas --degree 1 --height 5").exit_code, 2);
  EXPECT_EQ(run("census --kind dumas --degree 2 --height 0").exit_code, 2);
  EXPECT_EQ(run("census --kind coprime --height 5").exit_code, 2);  // missing --k
  EXPECT_EQ(run("census --kind irreducible --degree 2 --height 25").exit_code, 2);
  EXPECT_EQ(run("census --height 5").exit_code, 2);  // missing --kind
}

TEST(CliConstants, TableOutput) {
  const RunResult r = run("constants --degrees 2:10");
  EXPECT_EQ(r.exit_code, 0);
  int rows = 0;
  for (const char c : r.output)
    if (c == '\n') ++rows;
  EXPECT_EQ(rows, 10);  // header + 9 rows
  EXPECT_NE(r.output.find("0.7133"), std::string::npos);

  const RunResult single = run("constants --degrees 3:3 --format json");
  const auto envelope = nlohmann::json::parse(single.output);
  const double tau3 = envelope["result"][0]["tau"].get<double>();
  EXPECT_NEAR(tau3, 0.392073, 1e-4);
}

TEST(CliConstants, TruncationConvergence) {
  const RunResult coarse = run("constants --degrees 2:2 --prime-limit 1000 --format json");
  const RunResult fine = run("constants --degrees 2:2 --format json");
  const double coarse_tau =
      nlohmann::json::parse(coarse.output)["result"][0]["tau"].get<double>();
  const double fine_tau =
      nlohmann::json::parse(fine.output)["result"][0]["tau"].get<double>();
  EXPECT_LT(std::fabs(coarse_tau - fine_tau), 1e-3);
}

TEST(CliVerify, SuitesPass) {
  EXPECT_EQ(run("verify table1").exit_code, 0);
  EXPECT_EQ(run("verify lemmas --degree 3 --height 5").exit_code, 0);
  EXPECT_EQ(run("verify lemmas --degree 2 --height 6").exit_code, 0);
  const RunResult imps = run("verify implications --height 4");
  EXPECT_EQ(imps.exit_code, 0);
  EXPECT_NE(imps.output.find("all checks passed"), std::string::npos);
}

TEST(CliGeneral, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("verify nosuchsuite").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

}  // namespace

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "amt/cli.hpp"

using namespace amt;
using nlohmann::json;

namespace {

std::string sample(const std::string& name) { return std::string(AMT_SAMPLES_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(cli::Command command, const std::string& file, cli::RunConfig config = {}) {
  config.command = command;
  config.input = sample(file);
  std::ostringstream out, err;
  int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary and returns its exit status and stdout.
Outcome shell(const std::string& args) {
  std::string cmd = std::string(AMT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST(Cli, VerifyPassesOnFixtures) {
  for (const char* f : {"s1.json", "merge.json", "s2.json", "rp2.json", "halves.json"}) {
    auto r = run(cli::Command::Verify, f);
    EXPECT_EQ(r.code, cli::kExitOk) << f << "\n" << r.err;
    auto doc = json::parse(r.out);
    EXPECT_TRUE(doc["pass"].get<bool>());
    EXPECT_FALSE(doc["reports"].empty());
    for (const auto& rep : doc["reports"]) {
      EXPECT_TRUE(rep["pass"].get<bool>()) << rep.dump();
      EXPECT_EQ(rep["lhs"], rep["rhs"]);
      for (const char* key : {"claim", "lhs", "rhs", "pass", "degree", "level"}) EXPECT_TRUE(rep.contains(key)) << key;
    }
  }
}

TEST(Cli, BarcodesOnMerge) {
  auto r = run(cli::Command::Barcodes, "merge.json");
  ASSERT_EQ(r.code, cli::kExitOk);
  auto doc = json::parse(r.out);
  json expected = json::parse(R"([
    {"degree": 0, "kind": "closed", "left": "0", "right": "2", "multiplicity": 1},
    {"degree": 0, "kind": "closed-open", "left": "1", "right": "2", "multiplicity": 1}
  ])");
  EXPECT_EQ(doc["bars"], expected);
  EXPECT_EQ(doc["critical_values"], json::parse(R"(["0", "1", "2"])"));
}

TEST(Cli, BarcodesOnS1IncludeOpenBar) {
  auto doc = json::parse(run(cli::Command::Barcodes, "s1.json").out);
  ASSERT_EQ(doc["bars"].size(), 2u);
  EXPECT_EQ(doc["bars"][1]["kind"], "open");
  EXPECT_EQ(doc["bars"][1]["degree"], 0);
}

TEST(Cli, RationalValuesSerializeExactly) {
  auto doc = json::parse(run(cli::Command::Barcodes, "halves.json").out);
  EXPECT_EQ(doc["critical_values"][0], "-1/2");
  for (const auto& b : doc["bars"]) {
    EXPECT_TRUE(b["left"].is_string());
    EXPECT_TRUE(b["right"].is_string());
  }
}

TEST(Cli, FieldOverride) {
  cli::RunConfig config;
  config.field = 3;
  auto doc = json::parse(run(cli::Command::Barcodes, "rp2.json", config).out);
  EXPECT_EQ(doc["field_char"], 3);
  // over GF(3) only the component survives; the remaining bars are finite
  std::size_t from_delta = 0;
  for (const auto& b : doc["bars"])
    if (b["kind"] != "closed-open") ++from_delta;
  EXPECT_EQ(from_delta, 1u);

  config.field = 4;
  EXPECT_EQ(run(cli::Command::Barcodes, "rp2.json", config).code, cli::kExitInput);
}

TEST(Cli, MaxDegreeLimitsOutput) {
  cli::RunConfig config;
  config.max_degree = 0;
  auto doc = json::parse(run(cli::Command::Barcodes, "s2.json", config).out);
  EXPECT_EQ(doc["support"]["degrees"].size(), 1u);
  EXPECT_EQ(run(cli::Command::Verify, "s2.json", config).code, cli::kExitOk);
  EXPECT_EQ(run(cli::Command::Oracle, "s2.json", config).code, cli::kExitOk);
  config.max_degree = -1;
  EXPECT_EQ(run(cli::Command::Barcodes, "s2.json", config).code, cli::kExitInput);
}

TEST(Cli, WitnessesOnRequest) {
  cli::RunConfig config;
  config.witness = true;
  auto doc = json::parse(run(cli::Command::Barcodes, "s1.json", config).out);
  ASSERT_TRUE(doc.contains("witnesses"));
  EXPECT_FALSE(json::parse(run(cli::Command::Barcodes, "s1.json").out).contains("witnesses"));
}

TEST(Cli, ComplexReportsStages) {
  cli::RunConfig config;
  config.thresholds = {"1", "2"};
  auto r = run(cli::Command::Complex, "merge.json", config);
  ASSERT_EQ(r.code, cli::kExitOk);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["blocks"][0]["dim"], 2);
  EXPECT_EQ(doc["blocks"][1]["dim"], 1);
  ASSERT_EQ(doc["stages"].size(), 2u);
  EXPECT_EQ(doc["stages"][0]["t"], "1");
  EXPECT_EQ(doc["stages"][0]["blocks"][0]["homology"], 2);
  EXPECT_EQ(doc["stages"][1]["hodge"][0]["beta"], 1);
  config.thresholds = {"x"};
  EXPECT_EQ(run(cli::Command::Complex, "merge.json", config).code, cli::kExitInput);
}

TEST(Cli, OracleCrosscheck) {
  auto doc = json::parse(run(cli::Command::Oracle, "merge.json").out);
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(doc["pairs"][0]["finite_pairs"], json::parse(R"([["1", "2"]])"));
}

TEST(Cli, InputErrorsExitTwo) {
  for (const char* f : {"broken_face.json", "does_not_exist.json"}) {
    auto r = run(cli::Command::Verify, f);
    EXPECT_EQ(r.code, cli::kExitInput) << f;
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_NE(run(cli::Command::Verify, "broken_face.json").err.find("face missing"), std::string::npos);
}

TEST(Cli, SvgOnlyForBarcodes) {
  cli::RunConfig config;
  config.format = cli::Format::Svg;
  auto r = run(cli::Command::Barcodes, "s1.json", config);
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("fill=\"white\""), std::string::npos);  // open end
  EXPECT_NE(r.out.find("fill=\"black\""), std::string::npos);  // closed end
  EXPECT_EQ(run(cli::Command::Verify, "s1.json", config).code, cli::kExitInput);
}

TEST(Cli, OutputIsDeterministic) {
  for (auto cmd : {cli::Command::Barcodes, cli::Command::Complex, cli::Command::Verify, cli::Command::Oracle})
    EXPECT_EQ(run(cmd, "rp2.json").out, run(cmd, "rp2.json").out);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(shell("verify " + sample("s1.json")).code, 0);
  EXPECT_EQ(shell("verify " + sample("broken_face.json")).code, 2);
  EXPECT_EQ(shell("barcodes").code, 2);
  EXPECT_EQ(shell("frobnicate " + sample("s1.json")).code, 2);
  EXPECT_EQ(shell("barcodes " + sample("s1.json") + " --format pdf").code, 2);
  EXPECT_EQ(shell("oracle " + sample("merge.json") + " --field 4").code, 2);
  EXPECT_EQ(shell("--help").code, 0);
}

TEST(CliBinary, BarcodesMatchInProcessRun) {
  auto a = shell("barcodes " + sample("merge.json"));
  auto b = shell("barcodes " + sample("merge.json"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run(cli::Command::Barcodes, "merge.json").out);
  auto c = shell("complex " + sample("merge.json") + " --at 1 --at 3/2");
  EXPECT_EQ(json::parse(c.out)["stages"].size(), 2u);
}

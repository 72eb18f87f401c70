#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "knotcert/diagram.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(KNOTCERT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Invariants) {
  const CliResult r = run("invariants --braid \"1 1 1\" -n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "sigma           -2")) << r.out;
  EXPECT_TRUE(has(r.out, "det             3")) << r.out;
  const CliResult j = run("--json invariants --braid \"1 1 1\" -n 2");
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["s"], 2);
  EXPECT_EQ(parsed["sigma"], -2);
  EXPECT_EQ(parsed["genus"], 1);
  EXPECT_EQ(parsed["det"], "3");
  const CliResult u = run("--json invariants --braid \"\" -n 1");
  EXPECT_EQ(nlohmann::json::parse(u.out)["det"], "1");
  const CliResult f = run("invariants --braid \"1 -2 1 -2\" -n 3");
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(has(f.out, "unavailable (diagram is neither positive nor negative)")) << f.out;
  const CliResult p = run("--json invariants --pretzel -1,-1,-1");
  EXPECT_EQ(nlohmann::json::parse(p.out)["sigma"], -2);
}

TEST(Cli, InputErrors) {
  const CliResult bad = run("invariants --braid \"1 q\" -n 2");
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(has(bad.out, "offset 2")) << bad.out;
  EXPECT_EQ(run("invariants --braid \"1\" -n 2 --pretzel 1,1,1").code, 2);
  EXPECT_EQ(run("invariants").code, 2);
  EXPECT_EQ(run("homfly --braid \"1\" -n 8").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("invariants --pd /nonexistent/file").code, 2);
}

TEST(Cli, PdFileInputAndOutFile) {
  const auto pd = std::filesystem::temp_directory_path() / "knotcert_cli_trefoil.pd";
  const auto out = std::filesystem::temp_directory_path() / "knotcert_cli_out.txt";
  {
    std::ofstream f(pd);
    f << "# right trefoil\n"
      << knotcert::to_pd_string(knotcert::braid_closure(knotcert::BraidWord(2, {1, 1, 1})));
  }
  const CliResult r = run("--out " + out.string() + " invariants --pd " + pd.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty()) << r.out;
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_TRUE(has(text, "sigma           -2")) << text;
  EXPECT_TRUE(has(text, "det             3")) << text;
  std::filesystem::remove(pd);
  std::filesystem::remove(out);
}

TEST(Cli, NormalForm) {
  EXPECT_TRUE(has(run("nf --braid \"1 2 1\" -n 3 --equal \"2 1 2\"").out, "equal"));
  const CliResult ne = run("nf --braid \"1\" -n 3 --equal \"2\"");
  EXPECT_TRUE(has(ne.out, "not equal")) << ne.out;
  const CliResult rw = run("--seed 99 nf --braid \"1 2 -1 3 2\" -n 4 --rewrites 300");
  EXPECT_EQ(rw.code, 0);
  EXPECT_TRUE(has(rw.out, "normal form preserved")) << rw.out;
  EXPECT_EQ(run("--seed 99 nf --braid \"1 2 -1 3 2\" -n 4 --rewrites 300").out, rw.out) << "seeded runs replay";
}

TEST(Cli, Homfly) {
  const CliResult u = run("homfly --braid \"\" -n 1");
  EXPECT_EQ(u.out, "1\nMFW braid index bound: 1\n");
  EXPECT_TRUE(has(run("homfly --braid \"1 1 1\" -n 2").out, "bound: 2"));
}

TEST(Cli, CertifyExitCodes) {
  for (const char* args : {"certify 3 3", "certify 5 3", "certify 2 3", "certify 4 5"}) {
    const CliResult r = run(args);
    EXPECT_EQ(r.code, 0) << args << "\n" << r.out;
    EXPECT_FALSE(has(r.out, "inconclusive")) << r.out;
  }
  const CliResult bad = run("certify 3 2");
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(has(bad.out, "q must be odd")) << bad.out;
  EXPECT_EQ(run("certify 3").code, 2);
  EXPECT_EQ(run("certify 1 3").code, 2);
  EXPECT_EQ(run("certify --self-test").code, 0);
}

TEST(Cli, CertifyJson) {
  const CliResult r = run("--json certify 2 3");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["conclusion"], "certified");
  EXPECT_EQ(j["slopes"].size(), 2U);
}

TEST(Cli, Grid) {
  const auto dir = std::filesystem::temp_directory_path() / "knotcert_grid_reports";
  std::filesystem::remove_all(dir);
  const CliResult r = run("--json certify --grid 2..4 2..5 --report-dir " + dir.string());
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["valid"], 6);
  EXPECT_EQ(j["certified"], 6);
  ASSERT_EQ(j["cells"].size(), 12U);
  EXPECT_EQ(j["cells"][0]["p"], 2);
  EXPECT_EQ(j["cells"][0]["q"], 2);
  EXPECT_EQ(j["cells"][0]["result"], "skipped");
  EXPECT_TRUE(std::filesystem::exists(dir / "P_3_5.json"));
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run("certify --grid 2..3").code, 2);
  EXPECT_EQ(run("certify --grid 3..2 3..3").code, 2);
  EXPECT_EQ(run("certify --grid 2..2 4..4").code, 2) << "no valid cell";
}

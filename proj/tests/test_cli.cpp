#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef DEGEN_CLI_PATH
#error "DEGEN_CLI_PATH must point at the degen executable"
#endif

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DEGEN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, AnalyzeDiagonal) {
  auto r = run(R"(analyze --matrix '{"entries":[[1,0,0],[0,1,0],[0,0,2]]}')");
  ASSERT_EQ(r.exit_code, 0);
  auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["command"], "analyze");
  EXPECT_EQ(body["centralizer_dim"], 5);
}

TEST(Cli, RegularNilpotentHasNoFixedDimensions) {
  auto r = run(R"(analyze --matrix '{"entries":[[2,1],[0,2]]}')");
  ASSERT_EQ(r.exit_code, 0);
  auto body = nlohmann::json::parse(r.out);
  EXPECT_EQ(body["centralizer_dim"], 2);
  EXPECT_EQ(body["fixed_dims"], nlohmann::json::parse("[0]"));
}

TEST(Cli, CountFixedIdentity) {
  auto r = run(R"(--output tsv count-fixed --matrix '{"entries":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}' --d 2 --q 2)");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\t35\t"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--field F_3 analyze --matrix '{\"entries\":[[0,-1],[1,0]]}'").exit_code, 2);
  EXPECT_EQ(run("analyze --matrix '{\"entries\":'").exit_code, 64);
  EXPECT_EQ(run("no-such-command").exit_code, 64);
  EXPECT_EQ(run("--max-enum 10 count-fixed --descriptor '{\"kind\":\"U\",\"partition\":[2,2]}' --d 2 --q 7")
                .exit_code,
            2);
  EXPECT_EQ(run("dimension --descriptor '{\"kind\":\"S\",\"partition\":[2,1,1]}' --d 2").exit_code, 2);
  EXPECT_EQ(run("--field F_3 witness --delta '[[1],[1],[1]]' --mode ss-to-x").exit_code, 2);
  EXPECT_EQ(run("verify-sum --n 3 --s 2").exit_code, 0);
  EXPECT_EQ(run("--primes 2,3,5 dimension --descriptor '{\"kind\":\"U\",\"partition\":[3,1]}' --d 2").exit_code,
            2);
}

TEST(Cli, SameSeedSameBytes) {
  const std::string args = "--seed 5 witness --delta '[[2],[1,1]]' --mode x-to-u";
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string sandwich = "verify-sandwich --delta '[[2],[1,1]]'";
  auto c = run(sandwich);
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(c.out, run(sandwich).out);
  EXPECT_EQ(nlohmann::json::parse(c.out)["pass"], true);
}

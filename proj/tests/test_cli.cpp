// Runs the installed command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome sh(const std::string& args) {
  const std::string cmd = std::string(WWM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(WWM_FIXTURES) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wwm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateWritesWordsToStdout) {
  const auto r = sh("generate --lexicon " + fixture("receive_family.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "perceive,V\n");
}

TEST_F(Cli, LearnWritesStrategyTable) {
  const auto r = sh("learn --lexicon " + fixture("receive_family.txt") + " --out-strategies " +
                    tmp("s.tsv"));
  EXPECT_EQ(r.code, 0);
  const std::string table = slurp(tmp("s.tsv"));
  EXPECT_EQ(table.rfind("dif1\tcat1\tdif2\tcat2\tsim1\tsim2\tcount\texamples\n", 0), 0u);
  EXPECT_NE(table.find("Xption\tNs\tXive\tV\t*##ce#####\t*##ce###\t3\t"), std::string::npos);
}

TEST_F(Cli, BlockingFlagChangesOutput) {
  const auto free = sh("generate --lexicon " + fixture("conjugation.txt"));
  EXPECT_NE(free.out.find("conjuguere,INF"), std::string::npos);
  const auto blocked = sh("generate --blocking --lexicon " + fixture("conjugation.txt") +
                          " --out-blocked " + tmp("b.txt"));
  EXPECT_EQ(blocked.code, 0);
  EXPECT_EQ(blocked.out, "");
  EXPECT_NE(slurp(tmp("b.txt")).find("conjuguere,INF\tconjugues,V2s\tconjuguer,INF"),
            std::string::npos);
}

TEST_F(Cli, EvalStructuredReport) {
  const auto r = sh("eval --lexicon " + fixture("receive_family.txt") + " --reference " +
                    fixture("receive_reference.txt") + " --format structured");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"schema\": \"wwm-report/1\""), std::string::npos);
  EXPECT_NE(r.out.find("\"value\": 1.0"), std::string::npos);
}

TEST_F(Cli, EvalOnEmptyLexicon) {
  const auto r = sh("eval --lexicon " + fixture("empty.txt") + " --reference " +
                    fixture("receive_reference.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n/a (no new words)"), std::string::npos);
}

TEST_F(Cli, CyclesFlag) {
  const auto one = sh("generate --lexicon " + fixture("cycles.txt"));
  EXPECT_EQ(one.out.find("walking,GER"), std::string::npos);
  const auto two = sh("generate --cycles 2 --reapply-only --lexicon " + fixture("cycles.txt"));
  EXPECT_NE(two.out.find("walking,GER"), std::string::npos);
}

TEST_F(Cli, ErrorsUseDistinctExitCodes) {
  EXPECT_EQ(sh("generate --lexicon " + fixture("malformed.txt")).code, 2);
  EXPECT_EQ(sh("generate --lexicon " + tmp("missing.txt")).code, 2);
  EXPECT_EQ(sh("generate").code, 1);
  EXPECT_EQ(sh("bogus").code, 1);
  EXPECT_EQ(sh("generate --lexicon " + fixture("receive_family.txt") + " --min-support 0").code, 1);
  EXPECT_EQ(sh("generate --lexicon " + fixture("receive_family.txt") + " --out-words " +
               tmp("x") + " --out-blocked " + tmp("x"))
                .code,
            1);
}

TEST_F(Cli, OutputIsDeterministicAcrossJobs) {
  const std::string base = "generate --blocking --lexicon " + fixture("conjugation.txt") +
                           " --format structured --out-report ";
  sh(base + tmp("a.json") + " --jobs 1");
  sh(base + tmp("b.json") + " --jobs 4");
  EXPECT_EQ(slurp(tmp("a.json")), slurp(tmp("b.json")));
  EXPECT_FALSE(slurp(tmp("a.json")).empty());
}

TEST_F(Cli, LearnOnEmptyLexiconGivesHeaderOnly) {
  const auto r = sh("learn --lexicon " + fixture("empty.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dif1\tcat1\tdif2\tcat2\tsim1\tsim2\tcount\texamples\n");
}

TEST_F(Cli, EvalAgainstRegularClosure) {
  const auto r = sh("eval --lexicon " + fixture("regular_lexicon.txt") + " --reference " +
                    fixture("regular_closure.txt") + " --match-tags");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("precision:       1.0000"), std::string::npos) << r.out;
}

TEST_F(Cli, RerunsAreByteIdentical) {
  for (const char* name : {"a", "b"}) {
    sh("generate --blocking --lexicon " + fixture("english.txt") + " --out-words " + tmp(std::string(name) + ".w") +
       " --out-blocked " + tmp(std::string(name) + ".b") + " --out-strategies " +
       tmp(std::string(name) + ".s") + " --out-report " + tmp(std::string(name) + ".r"));
  }
  for (const char* ext : {".w", ".b", ".s", ".r"}) {
    EXPECT_EQ(slurp(tmp(std::string("a") + ext)), slurp(tmp(std::string("b") + ext))) << ext;
    EXPECT_FALSE(slurp(tmp(std::string("a") + ext)).empty()) << ext;
  }
}

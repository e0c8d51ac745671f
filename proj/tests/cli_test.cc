#include "corefkit/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace corefkit {
namespace {

namespace fs = std::filesystem;
using testing::DataPath;

int Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "corefkit");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data());
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("corefkit_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Out(const std::string &name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ValidateWellFormedFixture) {
  EXPECT_EQ(Cli({"validate", DataPath("basic.conllu"), "-o", Out("v.tsv")}), kExitOk);
  EXPECT_NE(Slurp(Out("v.tsv")).find("\tok"), std::string::npos);
}

TEST_F(CliTest, ValidateBrokenFileIsDataError) {
  std::ofstream(Out("bad.conllu")) << "# sent_id = 1\n1\tx\n\n";
  EXPECT_EQ(Cli({"validate", Out("bad.conllu"), "-o", Out("v.tsv")}), kExitData);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}), kExitUsage);
  EXPECT_EQ(Cli({"stats", "--no-such-flag"}), kExitUsage);
  EXPECT_EQ(Cli({"stats", Out("missing")}), kExitUsage);
  EXPECT_EQ(Cli({"score", "--gold", DataPath("basic.conllu")}), kExitUsage);
  EXPECT_EQ(Cli({"analyze", DataPath("basic.conllu"), "--stat", "semantic-distance"}),
            kExitUsage);
}

TEST_F(CliTest, ScoreIdentityIsOne) {
  ASSERT_EQ(Cli({"score", "--gold", DataPath("basic.conllu"), "--pred",
                 DataPath("basic.conllu"), "-o", Out("s.tsv")}),
            kExitOk);
  const std::string text = Slurp(Out("s.tsv"));
  EXPECT_NE(text.find("basic\t1.000000\t1.000000\t1.000000\t1.000000\t1.000000\t"
                      "1.000000\t1.000000\t1.000000\t1.000000\t1.000000\n"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("macro\t"), std::string::npos);
}

TEST_F(CliTest, ErrorsTableAndDetails) {
  ASSERT_EQ(Cli({"errors", "--gold", DataPath("basic.conllu"), "--pred",
                 DataPath("pred/basic.conllu"), "--details", Out("d.json"), "-o",
                 Out("e.tsv")}),
            kExitOk);
  EXPECT_EQ(Slurp(Out("e.tsv")),
            "dataset\tA\tB\tC\tD\tE\tF\nbasic\t50.00\t100.00\t50.00\t0.00\t50.00\t3.00\n");
  EXPECT_NE(Slurp(Out("d.json")).find("\"entity_id\": \"e4\""), std::string::npos);
}

TEST_F(CliTest, OutputIndependentOfJobs) {
  for (const std::string &cmd : {"stats", "analyze", "export-features"}) {
    std::vector<std::string> base = {cmd, COREFKIT_TEST_DATA};
    if (cmd == "export-features") {
      base.insert(base.end(), {"--word-order", Out("wo.tsv"), "--vocabulary",
                               Out("vocab.tsv"), "--target", "all-spans",
                               "--max-width", "3"});
      std::ofstream(Out("wo.tsv")) << "basic\tSVO\ndiscontinuous\tSVO\n";
    }
    auto one = base, four = base;
    one.insert(one.end(), {"-j", "1", "-o", Out("one")});
    four.insert(four.end(), {"-j", "4", "-o", Out("four")});
    ASSERT_EQ(Cli(one), kExitOk) << cmd;
    ASSERT_EQ(Cli(four), kExitOk) << cmd;
    EXPECT_EQ(Slurp(Out("one")), Slurp(Out("four"))) << cmd;
    EXPECT_FALSE(Slurp(Out("one")).empty());
  }
}

TEST_F(CliTest, AnalyzeFigureDataAndJson) {
  ASSERT_EQ(Cli({"analyze", DataPath("basic.conllu"), "--stat", "head-position,genre",
                 "--format", "json", "--figure-data", Out("fig.tsv"), "-o",
                 Out("a.json")}),
            kExitOk);
  EXPECT_NE(Slurp(Out("a.json")).find("premodified.multi_token"), std::string::npos);
  EXPECT_NE(Slurp(Out("fig.tsv")).find("basic\tpronouns_per_8000\tblog\t2000.00"),
            std::string::npos);
}

TEST_F(CliTest, ExportFeaturesWritesVocabulary) {
  std::ofstream(Out("wo.tsv")) << "basic\tSVO\n";
  ASSERT_EQ(Cli({"export-features", DataPath("basic.conllu"), "--word-order",
                 Out("wo.tsv"), "-o", Out("f.jsonl")}),
            kExitOk);
  const std::string records = Slurp(Out("f.jsonl"));
  EXPECT_EQ(std::count(records.begin(), records.end(), '\n'), 11);
  EXPECT_NE(Slurp(Out("f.jsonl.vocab.tsv")).find("word_order\tSVO"), std::string::npos);
  EXPECT_EQ(Cli({"export-features", DataPath("basic.conllu"), "-o", Out("f.jsonl")}),
            kExitUsage);
}

TEST_F(CliTest, TaxonomyDump) {
  ASSERT_EQ(Cli({"taxonomy", "-o", Out("t.tsv")}), kExitOk);
  EXPECT_NE(Slurp(Out("t.tsv")).find("nsubj\tS\t"), std::string::npos);
}

TEST_F(CliTest, InputsDefaultToEnvironment) {
  ::setenv("COREFUD_DATA", COREFKIT_TEST_DATA, 1);
  EXPECT_EQ(Cli({"stats", "-o", Out("s.tsv")}), kExitOk);
  ::unsetenv("COREFUD_DATA");
  EXPECT_EQ(Cli({"stats", "-o", Out("s.tsv")}), kExitUsage);
}

}  // namespace
}  // namespace corefkit

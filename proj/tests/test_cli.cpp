#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "temp_dir.hpp"
#include "taptest/cli.hpp"
#include "taptest/csv.hpp"
#include "taptest/segmentation.hpp"
#include "taptest/wav.hpp"
#include "support.hpp"

using namespace taptest;
using taptest::testing::TempDir;

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

TEST(Cli, SimulateDefaults) {
  TempDir d;
  const auto r = run_cli({"--output-dir", d.path().string(), "simulate"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_csv_table(d / "simulated.csv").m(), 150U);
}

TEST(Cli, SimulateOneRow) {
  TempDir d;
  const auto r = run_cli({"simulate", "--classes", "1", "--count", "1", "--out", (d / "one.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_csv_table(d / "one.csv").m(), 1U);
}

TEST(Cli, SameSeedSameFile) {
  TempDir d;
  run_cli({"--seed", "5", "simulate", "--out", (d / "a.csv").string()});
  run_cli({"--seed", "5", "simulate", "--out", (d / "b.csv").string()});
  run_cli({"--seed", "6", "simulate", "--out", (d / "c.csv").string()});
  EXPECT_EQ(slurp(d / "a.csv"), slurp(d / "b.csv"));
  EXPECT_NE(slurp(d / "a.csv"), slurp(d / "c.csv"));
}

TEST(Cli, CustomClassesAndWav) {
  TempDir d;
  const auto r = run_cli({"--output-dir", d.path().string(), "simulate", "--class", "1.0:20:rock a", "--class",
                          "0.5:30:rock b", "--count", "2", "--wav"});
  ASSERT_EQ(r.code, 0) << r.err;
  const TapTable t = read_csv_table(d / "simulated.csv");
  EXPECT_EQ(t.distinct_labels(), (std::vector<std::string>{"rock a", "rock b"}));
  EXPECT_TRUE(std::filesystem::exists(d / "wav" / "rock a_1.wav"));
  EXPECT_TRUE(std::filesystem::exists(d / "wav" / "rock a_1.json"));
}

TEST(Cli, FullPipeline) {
  TempDir d;
  const std::string out = d.path().string();
  ASSERT_EQ(run_cli({"--output-dir", out, "simulate"}).code, 0);
  const auto train = run_cli({"--output-dir", out, "train", "--input", (d / "simulated.csv").string()});
  ASSERT_EQ(train.code, 0) << train.err;
  EXPECT_NE(train.out.find("Training taps"), std::string::npos);
  EXPECT_NE(train.out.find("PC1 explains"), std::string::npos);
  for (const char* f : {"model.json", "train.csv", "test.csv", "train_scores.csv", "report.txt"})
    EXPECT_TRUE(std::filesystem::exists(d / f)) << f;

  const auto model = (d / "model.json").string();
  const auto ev = run_cli({"--output-dir", out, "evaluate", "--model", model, "--input", (d / "test.csv").string()});
  ASSERT_EQ(ev.code, 0) << ev.err;
  EXPECT_NE(ev.out.find("correct 60 of 60"), std::string::npos) << ev.out;
  EXPECT_TRUE(std::filesystem::exists(d / "confusion.csv"));

  const auto cl = run_cli({"--output-dir", out, "classify", "--model", model, "--input", (d / "test.csv").string()});
  ASSERT_EQ(cl.code, 0) << cl.err;
  std::ifstream pred(d / "predictions.csv");
  std::string header;
  std::getline(pred, header);
  EXPECT_EQ(header.rfind("label,predicted,pc1,pc2,dist_", 0), 0U) << header;

  const auto pr = run_cli({"--output-dir", out, "project", "--model", model, "--input", (d / "test.csv").string()});
  ASSERT_EQ(pr.code, 0) << pr.err;
  EXPECT_NE(pr.out.find("mean normalized distance"), std::string::npos);

  const auto pl = run_cli({"--output-dir", out, "plot", "--model", model, "--scores", (d / "train_scores.csv").string(),
                           "--scores", (d / "test_scores.csv").string()});
  ASSERT_EQ(pl.code, 0) << pl.err;
  EXPECT_NE(slurp(d / "plot.svg").find("</svg>"), std::string::npos);
}

TEST(Cli, TrainIsDeterministic) {
  TempDir d;
  run_cli({"--output-dir", d.path().string(), "simulate"});
  const auto in = (d / "simulated.csv").string();
  run_cli({"--output-dir", (d / "a").string(), "train", "--input", in});
  run_cli({"--output-dir", (d / "b").string(), "train", "--input", in});
  EXPECT_EQ(slurp(d / "a" / "model.json"), slurp(d / "b" / "model.json"));
}

TEST(Cli, ReplicaTrainCounts) {
  TempDir d;
  // Two classes with 73 and 72 taps.
  run_cli({"simulate", "--classes", "2", "--count", "73", "--out", (d / "s.csv").string()});
  const TapTable all = read_csv_table(d / "s.csv");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < all.m(); ++i)
    if (i != all.m() - 1) keep.push_back(i);
  write_csv_table(d / "t.csv", all.select(keep));
  const auto r = run_cli({"--output-dir", d.path().string(), "train", "--input", (d / "t.csv").string(), "--table1-replica"});
  ASSERT_EQ(r.code, 0) << r.err;
  const TapTable train = read_csv_table(d / "train.csv");
  EXPECT_EQ(train.rows_with_label("class1").size(), 44U);
  EXPECT_EQ(train.rows_with_label("class2").size(), 43U);
  EXPECT_EQ(read_csv_table(d / "test.csv").m(), 58U);
}

TEST(Cli, ConfigFileAndPrecedence) {
  TempDir d;
  std::ofstream(d / "cfg.json") << R"({"seed": 3, "synthesis": {"count": 4, "classes": 2}})";
  auto r = run_cli({"--config", (d / "cfg.json").string(), "simulate", "--out", (d / "a.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_csv_table(d / "a.csv").m(), 8U);
  r = run_cli({"--config", (d / "cfg.json").string(), "simulate", "--count", "1", "--out", (d / "b.csv").string()});
  EXPECT_EQ(read_csv_table(d / "b.csv").m(), 2U);
  std::ofstream(d / "bad.json") << R"({"sede": 3})";
  EXPECT_EQ(run_cli({"--config", (d / "bad.json").string(), "simulate"}).code, 1);
}

TEST(Cli, Segment) {
  TempDir d;
  std::vector<double> x(static_cast<std::size_t>(3 * 44100), 0.0);
  const auto tmpl = taptest::testing::tap_template();
  for (int i = 0; i < 5; ++i) taptest::testing::stamp(x, tmpl, static_cast<std::size_t>((0.1 + 0.55 * i) * 44100), 0.5);
  write_wav_float32(d / "rec.wav", x, 44100);
  const auto r = run_cli({"segment", "--input", (d / "rec.wav").string(), "--label", "rock", "--out", (d / "taps.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const TapTable t = read_csv_table(d / "taps.csv");
  EXPECT_EQ(t.m(), 5U);
  EXPECT_EQ(t.labels[0], "rock");
}

TEST(Cli, ExitCodes) {
  TempDir d;
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"simulate", "--bogus"}).code, 1);
  EXPECT_EQ(run_cli({"simulate", "--classes", "9"}).code, 1);
  EXPECT_EQ(run_cli({"train", "--input", (d / "missing.csv").string()}).code, 3);

  std::ofstream(d / "ragged.csv") << "label,v1,v2\na,1\n";
  const auto ragged = run_cli({"train", "--input", (d / "ragged.csv").string()});
  EXPECT_EQ(ragged.code, 2);
  EXPECT_NE(ragged.err.find("line 2"), std::string::npos);
  EXPECT_EQ(std::count(ragged.err.begin(), ragged.err.end(), '\n'), 1);

  run_cli({"simulate", "--classes", "1", "--out", (d / "one.csv").string()});
  EXPECT_EQ(run_cli({"--output-dir", d.path().string(), "train", "--input", (d / "one.csv").string()}).code, 2);

  std::ofstream(d / "model.json") << "{\"version\": \"1\"";
  EXPECT_EQ(run_cli({"classify", "--model", (d / "model.json").string(), "--input", (d / "one.csv").string()}).code, 2);
  std::vector<double> silent(44100, 0.0);
  write_wav_pcm16(d / "silent.wav", silent, 44100);
  EXPECT_EQ(run_cli({"segment", "--input", (d / "silent.wav").string(), "--out", (d / "x.csv").string()}).code, 2);
}

/*
Copyright 2026 The Amodal Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "app/image_io.h"
#include "app/pipeline.h"
#include "support/scenes.h"

namespace amodal::app {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "amodal_app_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& p, const std::string& bytes) {
  std::ofstream(p, std::ios::binary) << bytes;
}

TEST(ImageIoTest, Pgm8RoundTrip) {
  const GrayImage img{3, 2, 255, {0, 1, 2, 128, 254, 255}};
  const fs::path p = scratch("eight.pgm");
  write_pgm(p, img);
  const GrayImage back = read_image(p);
  EXPECT_EQ(back.width, 3);
  EXPECT_EQ(back.height, 2);
  EXPECT_EQ(back.values, img.values);
}

TEST(ImageIoTest, Pgm16RoundTrip) {
  const GrayImage img{2, 2, 65535, {0, 300, 40000, 65535}};
  const fs::path p = scratch("sixteen.pgm");
  write_pgm(p, img);
  const GrayImage back = read_image(p);
  EXPECT_EQ(back.max_value, 65535);
  EXPECT_EQ(back.values, img.values);
}

TEST(ImageIoTest, PgmHeaderComments) {
  const fs::path p = scratch("comment.pgm");
  write_bytes(p, std::string("P5\n# made by hand\n2 1\n# depth\n255\n") + '\x07' + '\x09');
  const GrayImage img = read_image(p);
  EXPECT_EQ(img.values, (std::vector<std::uint16_t>{7, 9}));
}

TEST(ImageIoTest, MaskRoundTripIsBitIdentical) {
  const BinaryMask m = testing::random_mask(37, 23, 0.4, 11);
  const fs::path a = scratch("mask_a.pgm"), b = scratch("mask_b.pgm");
  write_mask(a, m);
  EXPECT_EQ(read_mask(a), m);
  write_mask(b, read_mask(a));
  EXPECT_EQ(read_bytes(a), read_bytes(b));
}

TEST(ImageIoTest, DecodesPng) {
  // 3x2 8-bit gray: rows {0, 255, 128} and {16, 32, 48}.
  const unsigned char png[] = {
      0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a, 0x00, 0x00, 0x00, 0x0d, 0x49, 0x48,
      0x44, 0x52, 0x00, 0x00, 0x00, 0x03, 0x00, 0x00, 0x00, 0x02, 0x08, 0x00, 0x00, 0x00,
      0x00, 0xb8, 0x1f, 0x39, 0xc6, 0x00, 0x00, 0x00, 0x10, 0x49, 0x44, 0x41, 0x54, 0x78,
      0x9c, 0x63, 0x60, 0xf8, 0xdf, 0xc0, 0x20, 0xa0, 0x60, 0x00, 0x00, 0x09, 0x22, 0x01,
      0xe0, 0xed, 0x58, 0x1d, 0x49, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4e, 0x44, 0xae,
      0x42, 0x60, 0x82};
  const fs::path p = scratch("tiny.png");
  write_bytes(p, std::string(reinterpret_cast<const char*>(png), sizeof png));
  const GrayImage img = read_image(p);
  EXPECT_EQ(img.width, 3);
  EXPECT_EQ(img.height, 2);
  EXPECT_EQ(img.values, (std::vector<std::uint16_t>{0, 255, 128, 16, 32, 48}));
}

TEST(ImageIoTest, MalformedInputsThrow) {
  const fs::path p = scratch("bad.img");
  for (const std::string& bytes :
       {std::string("hello"), std::string("P5\n4 4\n255\n\x01"), std::string("P5\n-1 2\n255\n"),
        std::string("P5\n1 1\n9\n\x0a"), std::string("\x89PNG\r\n\x1a\n\x00\x00", 10)}) {
    write_bytes(p, bytes);
    EXPECT_THROW(read_image(p), ImageError) << bytes;
  }
  EXPECT_THROW(read_image(scratch("does_not_exist.pgm")), ImageError);
}

TEST(PipelineTest, ConfigValidation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.beta = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.fit_window = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.thresholds = std::vector<double>{3, 2};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

class ReportTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    result_ = new RunResult(run(testing::abutting_rectangles(), RunConfig{}));
  }
  static void TearDownTestSuite() { delete result_; }
  static RunResult* result_;
};
RunResult* ReportTest::result_ = nullptr;

TEST_F(ReportTest, SchemaAndKeyOrder) {
  const auto j = report_json(result_->report, RunConfig{});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"hypotheses", "selected", "omega1", "omega2", "config"}));
  ASSERT_EQ(j["hypotheses"].size(), 3u);
  std::vector<std::string> hkeys;
  for (const auto& [k, v] : j["hypotheses"][0].items()) hkeys.push_back(k);
  EXPECT_EQ(hkeys, (std::vector<std::string>{"index", "E_B", "compl", "like_tilde", "prior_tilde",
                                             "posterior", "unconverged"}));
  EXPECT_EQ(j["hypotheses"][2]["index"], 3);
  EXPECT_EQ(j["hypotheses"][0]["compl"].size(), 2u);
  EXPECT_TRUE(j["config"]["thresholds"].is_null());
  EXPECT_TRUE(j["config"]["labels"].is_null());
  EXPECT_EQ(j["config"]["max_iters"], 500);
}

TEST_F(ReportTest, OutputsAreDeterministic) {
  const fs::path a = scratch("run_a"), b = scratch("run_b");
  write_outputs(a, *result_, RunConfig{}, true);
  const RunResult again = run(testing::abutting_rectangles(), RunConfig{});
  write_outputs(b, again, RunConfig{}, true);
  for (const char* name : {"report.json", "h1_layer1.pgm", "h1_layer2.pgm", "h1_completed.pgm",
                           "h2_layer1.pgm", "h2_layer2.pgm", "h2_completed.pgm", "h3_layer1.pgm",
                           "h3_layer2.pgm"}) {
    ASSERT_TRUE(fs::exists(a / name)) << name;
    EXPECT_EQ(read_bytes(a / name), read_bytes(b / name)) << name;
  }
  EXPECT_FALSE(fs::exists(a / "h3_completed.pgm"));
  EXPECT_EQ(read_mask(a / "h3_layer2.pgm"), testing::abutting_rectangles().x2);
}

TEST(PipelineTest, LoadSceneFromImage) {
  const GrayImage img = compose_image(testing::square_over_disk(), 0, 255, 128);
  const SceneInput s = load_scene(img, RunConfig{});
  EXPECT_EQ(s.x1, testing::square_over_disk().x2);
  RunConfig labelled;
  labelled.labels = std::pair{255, 128};
  EXPECT_EQ(load_scene(img, labelled).x1, testing::square_over_disk().x1);
}

#ifdef AMODAL_CLI_PATH
int cli(const std::string& args) {
  const std::string cmd = std::string(AMODAL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, ExitCodes) {
  const fs::path img = scratch("cli_scene.pgm");
  write_pgm(img, compose_image(testing::abutting_rectangles(), 0, 255, 128));
  EXPECT_EQ(cli("--help"), 0);
  EXPECT_EQ(cli(img.string()), 0);
  EXPECT_EQ(cli(scratch("missing.pgm").string()), 1);
  EXPECT_EQ(cli(img.string() + " --beta -1"), 1);
  EXPECT_EQ(cli(img.string() + " --render"), 1);
  EXPECT_EQ(cli(img.string() + " --labels 1,2,3"), 1);
  EXPECT_EQ(cli(""), 1);
}
#endif

}  // namespace
}  // namespace amodal::app

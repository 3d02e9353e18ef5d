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

// amodal: ranks the depth interpretations of a two-object image.
//
//   amodal INPUT [--beta B] [--thresholds a,b,c | --labels a,b] [--out DIR]
//                [--render]
//
// The report is printed to stdout and, with --out, written to
// DIR/report.json. Exit status: 0 on success, 1 on bad input, 2 otherwise.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "app/image_io.h"
#include "app/pipeline.h"

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Amodal completion and depth-order selection for binary scenes"};
  amodal::app::RunConfig cfg;
  std::string input;
  std::string out_dir;
  std::vector<double> thresholds;
  std::vector<int> labels;
  bool render = false;

  cli.add_option("input", input, "PGM (8/16 bit) or PNG image")->required();
  cli.add_option("--beta", cfg.beta, "elastica length weight")->capture_default_str();
  cli.add_option("--alpha", cfg.alpha, "Grzibovskis-Heintz scale ratio")->capture_default_str();
  cli.add_option("--dt", cfg.dt, "diffusion time step")->capture_default_str();
  cli.add_option("--stop-tol", cfg.stop_tol, "fraction of changed pixels at a fixpoint")
      ->capture_default_str();
  cli.add_option("--max-iters", cfg.max_iters, "iteration cap")->capture_default_str();
  cli.add_option("--fit-window", cfg.fit_window, "contour pixels per tangent fit")
      ->capture_default_str();
  auto* th = cli.add_option("--thresholds", thresholds, "bi-level thresholds, ascending")
                 ->delimiter(',');
  auto* lb = cli.add_option("--labels", labels, "two labels of a label map")
                 ->delimiter(',')
                 ->expected(2);
  th->excludes(lb);
  cli.add_option("--out", out_dir, "output directory");
  cli.add_flag("--render", render, "also write layer and completion masks (needs --out)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (render && out_dir.empty()) {
    std::cerr << "--render requires --out\n";
    return kInputError;
  }
  if (!thresholds.empty()) cfg.thresholds = thresholds;
  if (!labels.empty()) cfg.labels = std::pair{labels[0], labels[1]};

  amodal::app::RunResult result;
  try {
    cfg.validate();
    const amodal::GrayImage image = amodal::app::read_image(input);
    result = amodal::app::run(amodal::app::load_scene(image, cfg), cfg);
  } catch (const amodal::app::ImageError& e) {
    std::cerr << "amodal: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "amodal: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "amodal: internal error: " << e.what() << '\n';
    return kInternalError;
  }

  try {
    std::cout << amodal::app::report_text(result.report, cfg);
    if (!out_dir.empty()) amodal::app::write_outputs(out_dir, result, cfg, render);
  } catch (const std::exception& e) {
    std::cerr << "amodal: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}

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

#ifndef AMODAL_APP_PIPELINE_H_
#define AMODAL_APP_PIPELINE_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "amodal/bilevel.h"
#include "amodal/hypothesis.h"

namespace amodal::app {

struct RunConfig {
  double beta = 0.6;
  double alpha = 0.99;
  double dt = 12.0;
  double stop_tol = 1e-3;
  int max_iters = 500;
  int fit_window = kDefaultFitWindow;
  std::optional<std::vector<double>> thresholds;
  std::optional<std::pair<int, int>> labels;

  // Throws std::invalid_argument.
  void validate() const;
  HypothesisConfig hypothesis_config() const;
};

// The two regions of `image`: the labelled pair when `labels` is set,
// otherwise the two largest non-background bi-level sets.
SceneInput load_scene(const GrayImage& image, const RunConfig& cfg);

struct RunResult {
  SceneInput scene;
  std::array<Hypothesis, 3> hypotheses;
  InterpretationReport report;
};

RunResult run(const SceneInput& scene, const RunConfig& cfg);

// Stable key order: hypotheses, selected, omega1, omega2, config.
nlohmann::ordered_json report_json(const InterpretationReport& report,
                                   const RunConfig& cfg);

// Pretty-printed report followed by a newline.
std::string report_text(const InterpretationReport& report, const RunConfig& cfg);

// report.json and, with `render`, per hypothesis h<i>_layer1.pgm,
// h<i>_layer2.pgm and, for H1 and H2, h<i>_completed.pgm. Creates `dir`.
void write_outputs(const std::filesystem::path& dir, const RunResult& result,
                   const RunConfig& cfg, bool render);

}  // namespace amodal::app

#endif  // AMODAL_APP_PIPELINE_H_

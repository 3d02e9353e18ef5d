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

#include "app/pipeline.h"

#include <fstream>
#include <stdexcept>

#include "app/image_io.h"

namespace amodal::app {

void RunConfig::validate() const {
  hypothesis_config().dynamics.validate();
  if (fit_window < 1) throw std::invalid_argument("fit-window must be >= 1");
  if (thresholds) {
    if (thresholds->size() < 2) throw std::invalid_argument("need at least two thresholds");
    for (std::size_t i = 1; i < thresholds->size(); ++i) {
      if (!((*thresholds)[i - 1] < (*thresholds)[i])) {
        throw std::invalid_argument("thresholds must be strictly increasing");
      }
    }
  }
  if (labels && labels->first == labels->second) {
    throw std::invalid_argument("labels must differ");
  }
}

HypothesisConfig RunConfig::hypothesis_config() const {
  HypothesisConfig h;
  h.dynamics.alpha = alpha;
  h.dynamics.dt = dt;
  h.dynamics.beta = beta;
  h.dynamics.stop_tol = stop_tol;
  h.dynamics.max_iters = max_iters;
  h.fit_window = fit_window;
  return h;
}

SceneInput load_scene(const GrayImage& image, const RunConfig& cfg) {
  if (cfg.labels) return scene_from_labels(image, cfg.labels->first, cfg.labels->second);
  const std::vector<double> t = cfg.thresholds ? *cfg.thresholds : level_thresholds(image);
  const auto sets = decompose_bilevel(image, t);
  return select_scene(sets);
}

RunResult run(const SceneInput& scene, const RunConfig& cfg) {
  cfg.validate();
  const HypothesisConfig hc = cfg.hypothesis_config();
  RunResult result{scene, build_hypotheses(scene, hc), {}};
  result.report = interpret(result.hypotheses, hc);
  return result;
}

nlohmann::ordered_json report_json(const InterpretationReport& report,
                                   const RunConfig& cfg) {
  nlohmann::ordered_json hyps = nlohmann::ordered_json::array();
  for (const HypothesisReport& h : report.hypotheses) {
    nlohmann::ordered_json j;
    j["index"] = h.index;
    j["E_B"] = h.energy;
    j["compl"] = {h.complexity[0], h.complexity[1]};
    j["like_tilde"] = h.like_tilde;
    j["prior_tilde"] = h.prior_tilde;
    j["posterior"] = h.posterior;
    j["unconverged"] = h.unconverged;
    hyps.push_back(std::move(j));
  }

  nlohmann::ordered_json config;
  config["beta"] = cfg.beta;
  config["alpha"] = cfg.alpha;
  config["dt"] = cfg.dt;
  config["stop_tol"] = cfg.stop_tol;
  config["max_iters"] = cfg.max_iters;
  config["fit_window"] = cfg.fit_window;
  config["thresholds"] = cfg.thresholds ? nlohmann::ordered_json(*cfg.thresholds) : nullptr;
  config["labels"] = cfg.labels ? nlohmann::ordered_json{cfg.labels->first, cfg.labels->second}
                                : nullptr;

  nlohmann::ordered_json out;
  out["hypotheses"] = std::move(hyps);
  out["selected"] = report.selected;
  out["omega1"] = report.omega1;
  out["omega2"] = report.omega2;
  out["config"] = std::move(config);
  return out;
}

std::string report_text(const InterpretationReport& report, const RunConfig& cfg) {
  return report_json(report, cfg).dump(2) + "\n";
}

void write_outputs(const std::filesystem::path& dir, const RunResult& result,
                   const RunConfig& cfg, bool render) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "report.json", std::ios::binary);
    out << report_text(result.report, cfg);
    if (!out) throw ImageError("cannot write " + (dir / "report.json").string());
  }
  if (!render) return;
  for (const Hypothesis& h : result.hypotheses) {
    const std::string stem = "h" + std::to_string(h.index) + "_";
    write_mask(dir / (stem + "layer1.pgm"), h.layer1);
    write_mask(dir / (stem + "layer2.pgm"), h.layer2);
    if (h.index != 3) write_mask(dir / (stem + "completed.pgm"), h.completed);
  }
}

}  // namespace amodal::app

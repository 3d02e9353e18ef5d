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

#include "amodal/hypothesis.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "amodal/mask_init.h"

namespace amodal {

namespace {

struct Completion {
  BinaryMask shape;
  bool converged = false;
  int iterations = 0;
};

Completion complete(const BinaryMask& occluder, const BinaryMask& visible,
                    const HypothesisConfig& cfg) {
  const VoteThreshold init = initialize_fill(visible, occluder, cfg.fit_window);
  InpaintResult res = inpaint(visible, occluder, init.fill, cfg.dynamics);
  return {std::move(res.shape), res.converged, res.iterations};
}

Hypothesis occlusion(int index, const BinaryMask& occluder,
                     const BinaryMask& visible, Completion done,
                     const SceneInput& scene) {
  Hypothesis h;
  h.index = index;
  h.occluder = occluder;
  h.visible = visible;
  h.completed = std::move(done.shape);
  h.layer1 = occluder;
  h.layer2 = h.completed;
  h.boundary = occlusion_boundary_sets(occluder, visible, h.completed, scene.x1, scene.x2);
  h.unconverged = !done.converged;
  h.iterations = done.iterations;
  return h;
}

}  // namespace

void SceneInput::validate() const {
  if (!x1.same_shape(x2)) throw DimensionMismatch("scene regions differ in size");
  if (x1.empty() || x2.empty()) throw std::invalid_argument("scene region is empty");
  if (!masks_disjoint(x1, x2)) throw std::invalid_argument("scene regions overlap");
}

BoundarySets mosaic_boundary_sets(const BinaryMask& x1, const BinaryMask& x2) {
  const PixelSet shared =
      near_intersection(external_boundary(x1), external_boundary(x2), x1.width(), x1.height());
  const ScalarField curv = curvature_field(x1);
  return {shared, shared, curv, curv};
}

BoundarySets occlusion_boundary_sets(const BinaryMask& occluder,
                                     const BinaryMask& visible,
                                     const BinaryMask& completed,
                                     const BinaryMask& x1, const BinaryMask& x2) {
  if (completed == visible) return mosaic_boundary_sets(x1, x2);
  const PixelSet completed_edge = external_boundary(completed);
  const ScalarField curv = curvature_field(completed);
  return {near_intersection(external_boundary(occluder), completed_edge,
                            completed.width(), completed.height()),
          set_difference(completed_edge, external_boundary(visible)), curv, curv};
}

std::array<Hypothesis, 3> build_hypotheses(const SceneInput& scene,
                                           const HypothesisConfig& cfg) {
  scene.validate();
  cfg.dynamics.validate();

  Completion d2, d1;
  if (cfg.parallel) {
    auto pending = std::async(std::launch::async, complete, std::cref(scene.x1),
                              std::cref(scene.x2), std::cref(cfg));
    d1 = complete(scene.x2, scene.x1, cfg);
    d2 = pending.get();
  } else {
    d2 = complete(scene.x1, scene.x2, cfg);
    d1 = complete(scene.x2, scene.x1, cfg);
  }

  Hypothesis h3;
  h3.index = 3;
  h3.layer1 = scene.x1;
  h3.layer2 = scene.x2;
  h3.boundary = mosaic_boundary_sets(scene.x1, scene.x2);

  return {occlusion(1, scene.x1, scene.x2, std::move(d2), scene),
          occlusion(2, scene.x2, scene.x1, std::move(d1), scene), std::move(h3)};
}

Scores normalized_scores(const std::array<double, 3>& raw) {
  Scores s;
  s.raw = raw;
  const double top = *std::max_element(raw.begin(), raw.end());
  if (top > 0.0) s.omega = 1.0 / top;
  for (int i = 0; i < 3; ++i) s.tilde[i] = top > 0.0 ? std::exp(-raw[i] / top) : 1.0;
  return s;
}

Scores likelihood_scores(const std::array<Hypothesis, 3>& hyps,
                         ElasticaParams params) {
  std::array<double, 3> energy{};
  for (int i = 0; i < 3; ++i) {
    const BoundarySets& b = hyps[i].boundary;
    energy[i] = elastica_energy(b.common, b.common_curvature, params) +
                elastica_energy(b.disoccluded, b.disoccluded_curvature, params);
  }
  return normalized_scores(energy);
}

PriorScores prior_scores(const std::array<Hypothesis, 3>& hyps,
                         const ComplexityParams& params) {
  PriorScores out;
  std::array<double, 3> total{};
  for (int i = 0; i < 3; ++i) {
    out.complexity[i] = {shape_complexity(hyps[i].layer1, params),
                         shape_complexity(hyps[i].layer2, params)};
    total[i] = out.complexity[i][0] + out.complexity[i][1];
  }
  out.scores = normalized_scores(total);
  return out;
}

Selection select(const std::array<double, 3>& likes,
                 const std::array<double, 3>& priors) {
  std::array<double, 3> joint{};
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (const double v : {likes[i], priors[i]}) {
      if (!(v > 0.0 && v <= 1.0)) throw std::invalid_argument("score outside (0, 1]");
    }
    joint[i] = likes[i] * priors[i];
    sum += joint[i];
  }
  Selection s;
  for (int i = 0; i < 3; ++i) {
    s.posterior[i] = joint[i] / sum;
    if (joint[i] > joint[s.selected - 1]) s.selected = i + 1;
  }
  return s;
}

InterpretationReport interpret(const std::array<Hypothesis, 3>& hyps,
                               const HypothesisConfig& cfg) {
  const Scores likes = likelihood_scores(hyps, {cfg.dynamics.beta});
  const PriorScores priors = prior_scores(hyps, cfg.complexity);
  const Selection choice = select(likes.tilde, priors.scores.tilde);

  InterpretationReport report;
  for (int i = 0; i < 3; ++i) {
    report.hypotheses[i] = {hyps[i].index,          likes.raw[i],
                            priors.complexity[i],   likes.tilde[i],
                            priors.scores.tilde[i], choice.posterior[i],
                            hyps[i].unconverged};
  }
  report.selected = choice.selected;
  report.omega1 = likes.omega;
  report.omega2 = priors.scores.omega;
  return report;
}

}  // namespace amodal

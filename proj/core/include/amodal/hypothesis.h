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

#ifndef AMODAL_HYPOTHESIS_H_
#define AMODAL_HYPOTHESIS_H_

#include <array>

#include "amodal/complexity.h"
#include "amodal/disocclusion.h"
#include "amodal/geometry.h"
#include "amodal/raster.h"

namespace amodal {

// Two disjoint, nonempty regions seen at adjacent depths.
struct SceneInput {
  BinaryMask x1;
  BinaryMask x2;

  // Throws DimensionMismatch or std::invalid_argument.
  void validate() const;
};

struct HypothesisConfig {
  ThresholdDynamicsConfig dynamics;
  int fit_window = kDefaultFitWindow;
  ComplexityParams complexity;
  bool parallel = true;  // build H1 and H2 concurrently
};

// B^c and B^d with the curvature fields their pixels are sampled from.
struct BoundarySets {
  PixelSet common;
  PixelSet disoccluded;
  ScalarField common_curvature;
  ScalarField disoccluded_curvature;
};

// H1: x1 in front of the completed x2. H2: x2 in front of the completed x1.
// H3: the two regions side by side at one depth.
struct Hypothesis {
  int index = 0;             // 1, 2 or 3
  BinaryMask occluder;       // empty for H3
  BinaryMask visible;        // occluded object as seen; empty for H3
  BinaryMask completed;      // its completion; empty for H3
  BinaryMask layer1;
  BinaryMask layer2;
  BoundarySets boundary;
  bool unconverged = false;
  int iterations = 0;
};

// Common boundary of two side-by-side regions: pixels of the boundary of
// `x1` that touch the boundary of `x2` (8-adjacency); the disoccluded set
// coincides with it. Curvature is sampled from x1.
BoundarySets mosaic_boundary_sets(const BinaryMask& x1, const BinaryMask& x2);

// Boundary sets of an occlusion hypothesis. B^d is the boundary of
// `completed` minus the boundary of `visible`; B^c is the part of the
// occluder's boundary touching the completed boundary, which for a genuine
// completion is a neighbourhood of the T-junctions. Curvature is that of
// `completed`. When nothing was completed the mosaic sets of (x1, x2) are
// returned, so the hypothesis ties with H3.
BoundarySets occlusion_boundary_sets(const BinaryMask& occluder,
                                     const BinaryMask& visible,
                                     const BinaryMask& completed,
                                     const BinaryMask& x1, const BinaryMask& x2);

// Runs mask initialisation and disocclusion for H1 and H2 and assembles H3.
std::array<Hypothesis, 3> build_hypotheses(const SceneInput& scene,
                                           const HypothesisConfig& cfg = {});

struct Scores {
  std::array<double, 3> raw{};    // E_B or total complexity
  std::array<double, 3> tilde{};  // exp(-omega * raw)
  double omega = 0.0;             // 1 / max raw, 0 when all raw are 0
};

// exp(-omega x) with omega = 1 / max x.
Scores normalized_scores(const std::array<double, 3>& raw);

// Boundary elastica E_B = E(B^c) + E(B^d) of each hypothesis.
Scores likelihood_scores(const std::array<Hypothesis, 3>& hyps,
                         ElasticaParams params);

struct PriorScores {
  Scores scores;
  std::array<std::array<double, 2>, 3> complexity{};  // per layer
};

PriorScores prior_scores(const std::array<Hypothesis, 3>& hyps,
                         const ComplexityParams& params = {});

struct Selection {
  std::array<double, 3> posterior{};
  int selected = 1;  // ties go to the lowest index
};

// Normalised products likes * priors. Throws std::invalid_argument unless
// every value lies in (0, 1].
Selection select(const std::array<double, 3>& likes,
                 const std::array<double, 3>& priors);

struct HypothesisReport {
  int index = 0;
  double energy = 0.0;
  std::array<double, 2> complexity{};
  double like_tilde = 0.0;
  double prior_tilde = 0.0;
  double posterior = 0.0;
  bool unconverged = false;
};

struct InterpretationReport {
  std::array<HypothesisReport, 3> hypotheses;
  int selected = 1;
  double omega1 = 0.0;
  double omega2 = 0.0;
};

// Scores already built hypotheses.
InterpretationReport interpret(const std::array<Hypothesis, 3>& hyps,
                               const HypothesisConfig& cfg = {});

}  // namespace amodal

#endif  // AMODAL_HYPOTHESIS_H_

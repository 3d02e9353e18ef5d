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

#ifndef AMODAL_DISOCCLUSION_H_
#define AMODAL_DISOCCLUSION_H_

#include <functional>

#include "amodal/heat.h"
#include "amodal/raster.h"

namespace amodal {

// Parameters of the elastica threshold-dynamics scheme.
struct ThresholdDynamicsConfig {
  double alpha = 0.99;    // in (0, 1), close to 1
  double dt = 12.0;       // diffusion time of the Grzibovskis-Heintz step
  double beta = 0.6;      // elastica length weight
  double stop_tol = 1e-3; // fraction of pixels allowed to change at a fixpoint
  int max_iters = 500;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

// The three diffusions one iteration needs, built once per grid size.
class ThresholdDynamics {
 public:
  ThresholdDynamics(int width, int height, const ThresholdDynamicsConfig& cfg);

  const ThresholdDynamicsConfig& config() const { return cfg_; }

  // {x : 2a G_{sqrt(dt)} * 1_S - 2 G_{a^2 sqrt(dt)} * 1_S <= a - 1}, i.e.
  // diffusion times dt and a^4 dt.
  BinaryMask gh_step(const BinaryMask& shape) const;

  // {x : G * 1_S >= 1/2} with diffusion time beta * dt, the length part of
  // the elastica flow advanced over one step of size dt.
  BinaryMask mbo_step(const BinaryMask& shape) const;

 private:
  ThresholdDynamicsConfig cfg_;
  HeatKernel outer_;   // time dt
  HeatKernel inner_;   // time alpha^4 dt
  HeatKernel length_;  // time beta dt
};

BinaryMask gh_step(const BinaryMask& shape, const ThresholdDynamicsConfig& cfg);
BinaryMask mbo_step(const BinaryMask& shape, const ThresholdDynamicsConfig& cfg);

struct InpaintResult {
  BinaryMask shape;
  bool converged = false;
  int iterations = 0;
  double last_change = 0.0;  // fraction of pixels changed by the last step
};

// Called with the iteration number (1-based) and the iterate after the
// fidelity step.
using InpaintObserver = std::function<void(int, const BinaryMask&)>;

// Completes `visible` inside `inpaint_mask` by alternating one
// Grzibovskis-Heintz step, one Merriman-Bence-Osher step and a fidelity step
// that restores every pixel outside the mask from the input. Starts from
// visible + init_fill and stops once the fraction of changed pixels is at
// most cfg.stop_tol, or after cfg.max_iters iterations (converged = false).
InpaintResult inpaint(const BinaryMask& visible, const BinaryMask& inpaint_mask,
                      const BinaryMask& init_fill,
                      const ThresholdDynamicsConfig& cfg,
                      const InpaintObserver& observer = {});

}  // namespace amodal

#endif  // AMODAL_DISOCCLUSION_H_

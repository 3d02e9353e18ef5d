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

#include "amodal/disocclusion.h"

#include <cmath>
#include <stdexcept>

namespace amodal {

void ThresholdDynamicsConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  if (!(stop_tol > 0.0)) throw std::invalid_argument("stop_tol must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
}

ThresholdDynamics::ThresholdDynamics(int width, int height,
                                     const ThresholdDynamicsConfig& cfg)
    : cfg_((cfg.validate(), cfg)),
      outer_(HeatKernel::from_time(width, height, cfg.dt)),
      inner_(HeatKernel::from_time(width, height, std::pow(cfg.alpha, 4) * cfg.dt)),
      length_(HeatKernel::from_time(width, height, cfg.beta * cfg.dt)) {}

BinaryMask ThresholdDynamics::gh_step(const BinaryMask& shape) const {
  const ScalarField wide = outer_.apply(shape);
  const ScalarField narrow = inner_.apply(shape);
  const double a = cfg_.alpha;
  BinaryMask out(shape.width(), shape.height());
  for (int r = 0; r < shape.height(); ++r) {
    for (int c = 0; c < shape.width(); ++c) {
      out(r, c) = 2.0 * a * wide(r, c) - 2.0 * narrow(r, c) <= a - 1.0;
    }
  }
  return out;
}

BinaryMask ThresholdDynamics::mbo_step(const BinaryMask& shape) const {
  const ScalarField smooth = length_.apply(shape);
  BinaryMask out(shape.width(), shape.height());
  for (int r = 0; r < shape.height(); ++r) {
    for (int c = 0; c < shape.width(); ++c) out(r, c) = smooth(r, c) >= 0.5;
  }
  return out;
}

BinaryMask gh_step(const BinaryMask& shape, const ThresholdDynamicsConfig& cfg) {
  return ThresholdDynamics(shape.width(), shape.height(), cfg).gh_step(shape);
}

BinaryMask mbo_step(const BinaryMask& shape, const ThresholdDynamicsConfig& cfg) {
  return ThresholdDynamics(shape.width(), shape.height(), cfg).mbo_step(shape);
}

InpaintResult inpaint(const BinaryMask& visible, const BinaryMask& inpaint_mask,
                      const BinaryMask& init_fill,
                      const ThresholdDynamicsConfig& cfg,
                      const InpaintObserver& observer) {
  if (!visible.same_shape(inpaint_mask) || !visible.same_shape(init_fill)) {
    throw DimensionMismatch("inpainting inputs differ in size");
  }
  if (!masks_disjoint(visible, inpaint_mask)) {
    throw std::invalid_argument("visible shape overlaps the inpainting mask");
  }
  if (count_differences(mask_intersection(init_fill, inpaint_mask), init_fill) != 0) {
    throw std::invalid_argument("initial fill leaves the inpainting mask");
  }

  const ThresholdDynamics dynamics(visible.width(), visible.height(), cfg);
  const auto total = static_cast<double>(visible.size());

  InpaintResult result;
  result.shape = mask_union(visible, init_fill);
  for (int it = 1; it <= cfg.max_iters; ++it) {
    const BinaryMask moved = dynamics.mbo_step(dynamics.gh_step(result.shape));
    // Fidelity: outside the mask the iterate equals the input.
    BinaryMask next = mask_union(mask_intersection(moved, inpaint_mask), visible);
    result.last_change =
        static_cast<double>(count_differences(next, result.shape)) / total;
    result.shape = std::move(next);
    result.iterations = it;
    if (observer) observer(it, result.shape);
    if (result.last_change <= cfg.stop_tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace amodal

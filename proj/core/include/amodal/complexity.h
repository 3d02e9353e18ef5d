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

#ifndef AMODAL_COMPLEXITY_H_
#define AMODAL_COMPLEXITY_H_

#include <vector>

#include "amodal/raster.h"

namespace amodal {

struct ComplexityParams {
  int bins = 16;          // histogram bins for both entropies
  int angle_stride = 3;   // contour offset of the turning-angle triplets
  int arc_samples = 64;   // samples per arc for the asymmetry term
  double w_min = 0.6;
  double w_max = 0.07;
  double w_roughness = 0.33;
};

// The terms of one traced contour.
struct ContourComplexity {
  double distance_entropy = 0.0;  // normalised, in [0, 1]
  double angle_entropy = 0.0;     // normalised, in [0, 1]
  double roughness = 0.0;         // mean of |theta - pi| / pi
  double asymmetry = 0.0;         // max arc deviation over the diameter
  double value = 0.0;
};

// Complexity of a closed contour as produced by trace_outer_contour.
// Contours of fewer than two distinct pixels score 0.
ContourComplexity contour_complexity(const std::vector<Pixel>& contour,
                                     const ComplexityParams& params = {});

// Sum of contour_complexity over the outer contours of the 4-connected
// components of `shape`. Exactly invariant under translation and rotation by
// multiples of 90 degrees. Throws std::invalid_argument on an empty shape.
double shape_complexity(const BinaryMask& shape,
                        const ComplexityParams& params = {});

}  // namespace amodal

#endif  // AMODAL_COMPLEXITY_H_

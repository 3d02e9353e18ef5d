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

#ifndef AMODAL_TESTS_SUPPORT_ORACLES_H_
#define AMODAL_TESTS_SUPPORT_ORACLES_H_

#include <vector>

#include "amodal/raster.h"

// Slow, obviously correct reference implementations.
namespace amodal::testing {

// Depth-first flood fill from each unvisited pixel in row-major order.
std::vector<PixelSet> flood_fill_components(const BinaryMask& mask, int connectivity);

// 1-pixels with a 0 or off-grid 4-neighbour, by direct scan.
PixelSet scan_boundary(const BinaryMask& mask);

// Signed distance by exhaustive search over all opposite-valued pixels.
ScalarField brute_force_signed_distance(const BinaryMask& mask);

// exp(t L) field with L the dense 5-point Neumann Laplacian, via Eigen's
// matrix exponential.
ScalarField dense_heat(const ScalarField& field, double time);

}  // namespace amodal::testing

#endif  // AMODAL_TESTS_SUPPORT_ORACLES_H_

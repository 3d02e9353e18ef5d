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

#ifndef AMODAL_TESTS_SUPPORT_SCENES_H_
#define AMODAL_TESTS_SUPPORT_SCENES_H_

#include <cstdint>

#include "amodal/hypothesis.h"
#include "amodal/raster.h"

namespace amodal::testing {

inline constexpr int kGrid = 128;

BinaryMask disk(int n, double cy, double cx, double r);
BinaryMask rect(int n, int row0, int col0, int rows, int cols);
BinaryMask ellipse(int n, double cy, double cx, double ax, double ay);
BinaryMask random_mask(int width, int height, double density, std::uint32_t seed);

// Disk of radius 28 at (64, 64) with the quadrant {row < 64, col > 64}
// covered by a 40 x 40 square. x1 is the square, x2 the visible disk.
SceneInput square_over_disk();
BinaryMask square_over_disk_truth();  // the full disk

// 40 x 30 and 40 x 20 rectangles sharing a 40-pixel edge.
SceneInput abutting_rectangles();

// A shape to complete and the region hiding part of it.
struct Occlusion {
  BinaryMask visible;
  BinaryMask mask;
};

// The visible part of the square-over-disk disk, masked by the square.
Occlusion notched_disk();

// Horizontal ellipse behind a vertical bar: two relatable pairs.
Occlusion relatable_halves();

// Same halves with the right one lowered by 20 pixels: no relatable pair.
Occlusion misaligned_halves();

}  // namespace amodal::testing

#endif  // AMODAL_TESTS_SUPPORT_SCENES_H_

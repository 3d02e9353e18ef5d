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

#ifndef AMODAL_BILEVEL_H_
#define AMODAL_BILEVEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "amodal/hypothesis.h"
#include "amodal/raster.h"

namespace amodal {

// Single-channel image, 8 or 16 bits per sample.
struct GrayImage {
  int width = 0;
  int height = 0;
  int max_value = 255;
  std::vector<std::uint16_t> values;  // row-major

  std::uint16_t operator()(int row, int col) const {
    return values[static_cast<std::size_t>(row) * width + col];
  }
};

// {x : t[n] <= I(x) < t[n+1]} for each consecutive pair of thresholds.
// Throws std::invalid_argument unless there are at least two strictly
// increasing thresholds.
std::vector<BinaryMask> decompose_bilevel(const GrayImage& image,
                                          std::span<const double> thresholds);

// One threshold per distinct value plus one past the largest, so that every
// gray level becomes its own set.
std::vector<double> level_thresholds(const GrayImage& image);

// Index of the set holding the most frame pixels, or -1 if no set touches
// the frame. Ties go to the lower index.
int background_index(std::span<const BinaryMask> sets);

// Drops the background and keeps the two largest remaining sets, in their
// original order (ties by lower index). Throws std::invalid_argument
// ("need two proximal objects") when fewer than two nonempty sets remain.
SceneInput select_scene(std::span<const BinaryMask> sets);

// Pixels labelled `a` and `b`. Throws std::invalid_argument when a label is
// absent or the labels coincide.
SceneInput scene_from_labels(const GrayImage& labels, int a, int b);

// Paints x1 as `v1` and x2 as `v2` on a `background` canvas.
GrayImage compose_image(const SceneInput& scene, std::uint16_t background,
                        std::uint16_t v1, std::uint16_t v2);

}  // namespace amodal

#endif  // AMODAL_BILEVEL_H_

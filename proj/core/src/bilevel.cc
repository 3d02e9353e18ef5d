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

#include "amodal/bilevel.h"

#include <algorithm>
#include <stdexcept>

namespace amodal {

std::vector<BinaryMask> decompose_bilevel(const GrayImage& image,
                                          std::span<const double> thresholds) {
  if (thresholds.size() < 2) throw std::invalid_argument("need at least two thresholds");
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i - 1] < thresholds[i])) {
      throw std::invalid_argument("thresholds must be strictly increasing");
    }
  }
  std::vector<BinaryMask> sets(thresholds.size() - 1,
                               BinaryMask(image.width, image.height));
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      const double v = image(r, c);
      const auto above = std::upper_bound(thresholds.begin(), thresholds.end(), v);
      if (above == thresholds.begin() || above == thresholds.end()) continue;
      sets[above - thresholds.begin() - 1](r, c) = 1;
    }
  }
  return sets;
}

std::vector<double> level_thresholds(const GrayImage& image) {
  std::vector<std::uint16_t> levels = image.values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<double> out(levels.begin(), levels.end());
  if (!out.empty()) out.push_back(out.back() + 1.0);
  return out;
}

int background_index(std::span<const BinaryMask> sets) {
  int best = -1;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const BinaryMask& m = sets[i];
    std::size_t frame = 0;
    for (int r = 0; r < m.height(); ++r) {
      for (int c = 0; c < m.width(); ++c) {
        const bool edge = r == 0 || c == 0 || r == m.height() - 1 || c == m.width() - 1;
        if (edge && m(r, c)) ++frame;
      }
    }
    if (frame > best_count) {
      best = static_cast<int>(i);
      best_count = frame;
    }
  }
  return best;
}

SceneInput select_scene(std::span<const BinaryMask> sets) {
  const int background = background_index(sets);
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    if (i != background && !sets[i].empty()) candidates.push_back(i);
  }
  if (candidates.size() < 2) throw std::invalid_argument("need two proximal objects");
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return sets[a].count() > sets[b].count();
  });
  const int first = std::min(candidates[0], candidates[1]);
  const int second = std::max(candidates[0], candidates[1]);
  return {sets[first], sets[second]};
}

SceneInput scene_from_labels(const GrayImage& labels, int a, int b) {
  if (a == b) throw std::invalid_argument("labels must differ");
  SceneInput scene{BinaryMask(labels.width, labels.height),
                   BinaryMask(labels.width, labels.height)};
  for (int r = 0; r < labels.height; ++r) {
    for (int c = 0; c < labels.width; ++c) {
      scene.x1(r, c) = labels(r, c) == a;
      scene.x2(r, c) = labels(r, c) == b;
    }
  }
  if (scene.x1.empty() || scene.x2.empty()) {
    throw std::invalid_argument("label not present in the image");
  }
  return scene;
}

GrayImage compose_image(const SceneInput& scene, std::uint16_t background,
                        std::uint16_t v1, std::uint16_t v2) {
  GrayImage img{scene.x1.width(), scene.x1.height(),
                std::max<int>({255, background, v1, v2}),
                std::vector<std::uint16_t>(scene.x1.size(), background)};
  for (std::size_t i = 0; i < img.values.size(); ++i) {
    if (scene.x1.values()[i]) img.values[i] = v1;
    if (scene.x2.values()[i]) img.values[i] = v2;
  }
  return img;
}

}  // namespace amodal

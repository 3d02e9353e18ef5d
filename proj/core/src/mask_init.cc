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

#include "amodal/mask_init.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amodal {

namespace {

constexpr double kSideTolerance = 1e-9;

std::size_t component_count(const BinaryMask& mask) {
  return connected_components(mask, Connectivity::kFour).size();
}

}  // namespace

VoteField::VoteField(int width, int height)
    : width_(width),
      height_(height),
      votes_(static_cast<std::size_t>(width) * height, 0) {}

bool VoteField::all_zero() const {
  return std::all_of(votes_.begin(), votes_.end(), [](int v) { return v == 0; });
}

ScalarField VoteField::to_field() const {
  std::vector<double> values(votes_.begin(), votes_.end());
  return ScalarField(width_, height_, std::move(values));
}

VoteField halfspace_votes(const std::vector<EndpointPair>& pairs,
                          const BinaryMask& inpaint_mask,
                          const BinaryMask& visible) {
  if (!masks_disjoint(visible, inpaint_mask)) {
    throw std::invalid_argument("visible shape overlaps the inpainting mask");
  }
  const int w = inpaint_mask.width();
  const int h = inpaint_mask.height();
  VoteField votes(w, h);
  const PixelSet shape = PixelSet::from_mask(visible);
  const PixelSet region = PixelSet::from_mask(inpaint_mask);

  const auto vote_for = [&](const ContourEndpoint& e) {
    const Vec2 normal{-e.tangent.y, e.tangent.x};
    const Vec2 origin = to_vec(e.position);
    std::size_t positive = 0;
    std::size_t negative = 0;
    for (const Pixel& p : shape) {
      const double side = dot(normal, to_vec(p) - origin);
      if (side > kSideTolerance) ++positive;
      if (side < -kSideTolerance) ++negative;
    }
    const double sign = negative > positive ? -1.0 : 1.0;
    for (const Pixel& p : region) {
      if (sign * dot(normal, to_vec(p) - origin) >= -kSideTolerance) {
        ++votes(p.row, p.col);
      }
    }
  };

  for (const auto& [a, b] : pairs) {
    vote_for(a);
    vote_for(b);
  }
  return votes;
}

VoteThreshold binarize_votes(const VoteField& votes,
                             const BinaryMask& inpaint_mask,
                             const BinaryMask& visible) {
  const int w = inpaint_mask.width();
  const int h = inpaint_mask.height();
  if (votes.width() != w || votes.height() != h || !visible.same_shape(inpaint_mask)) {
    throw DimensionMismatch("votes and masks differ in size");
  }

  VoteThreshold result{BinaryMask(w, h), visible, 0, 0.0};
  std::vector<int> positive;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (inpaint_mask(r, c) && votes(r, c) > 0) positive.push_back(votes(r, c));
    }
  }
  if (positive.empty()) return result;
  std::sort(positive.begin(), positive.end());

  // Nearest-rank percentile.
  const std::size_t n = positive.size();
  const auto rank = static_cast<std::size_t>(
      std::ceil(kStartPercentile / 100.0 * static_cast<double>(n)));
  int threshold = positive[std::max<std::size_t>(rank, 1) - 1];

  const std::size_t baseline = component_count(visible);
  while (true) {
    BinaryMask fill(w, h);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        fill(r, c) = inpaint_mask(r, c) && votes(r, c) >= threshold;
      }
    }
    BinaryMask shape = mask_union(visible, fill);
    if (component_count(shape) <= baseline) {
      const auto below = std::lower_bound(positive.begin(), positive.end(), threshold);
      result.fill = std::move(fill);
      result.shape = std::move(shape);
      result.threshold = threshold;
      result.percentile =
          100.0 * static_cast<double>(below - positive.begin()) / static_cast<double>(n);
      return result;
    }
    const auto lower = std::lower_bound(positive.begin(), positive.end(), threshold);
    if (lower == positive.begin()) return result;  // nothing acceptable
    threshold = *(lower - 1);
  }
}

VoteThreshold initialize_fill(const BinaryMask& visible,
                              const BinaryMask& inpaint_mask, int fit_window) {
  const auto endpoints = find_endpoints(visible, inpaint_mask, fit_window);
  std::vector<EndpointPair> pairs;
  for (const auto& [i, j] : relatable_pairs(endpoints)) {
    pairs.emplace_back(endpoints[i], endpoints[j]);
  }
  const VoteField votes = halfspace_votes(pairs, inpaint_mask, visible);
  return binarize_votes(votes, inpaint_mask, visible);
}

}  // namespace amodal

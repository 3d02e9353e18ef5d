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

#ifndef AMODAL_MASK_INIT_H_
#define AMODAL_MASK_INIT_H_

#include <utility>
#include <vector>

#include "amodal/geometry.h"
#include "amodal/raster.h"

namespace amodal {

// Per-pixel vote counts, nonzero only inside the inpainting mask.
class VoteField {
 public:
  VoteField() = default;
  VoteField(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  int operator()(int row, int col) const {
    return votes_[static_cast<std::size_t>(row) * width_ + col];
  }
  int& operator()(int row, int col) {
    return votes_[static_cast<std::size_t>(row) * width_ + col];
  }
  const std::vector<int>& values() const { return votes_; }

  bool all_zero() const;
  ScalarField to_field() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<int> votes_;
};

using EndpointPair = std::pair<ContourEndpoint, ContourEndpoint>;

// Every endpoint of every relatable pair casts one vote for each mask pixel
// in the closed half-plane bounded by the line through the endpoint along its
// tangent, on the side holding most of the visible shape. Votes accumulate
// per pair occurrence.
VoteField halfspace_votes(const std::vector<EndpointPair>& pairs,
                          const BinaryMask& inpaint_mask,
                          const BinaryMask& visible);

struct VoteThreshold {
  BinaryMask fill;           // accepted pixels, inside the mask only
  BinaryMask shape;          // visible plus fill
  int threshold = 0;         // accepted vote count, 0 when fill is empty
  double percentile = 0.0;   // rank of `threshold` among positive votes, %
};

inline constexpr double kStartPercentile = 75.0;

// Thresholds the votes starting at the 75th percentile of the positive vote
// values and lowering to the next distinct smaller value while the fill
// would add 4-connected components to the visible shape.
VoteThreshold binarize_votes(const VoteField& votes,
                             const BinaryMask& inpaint_mask,
                             const BinaryMask& visible);

// Endpoints, relatable pairs, votes and threshold in one call.
VoteThreshold initialize_fill(const BinaryMask& visible,
                              const BinaryMask& inpaint_mask, int fit_window);

}  // namespace amodal

#endif  // AMODAL_MASK_INIT_H_

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

#ifndef AMODAL_HEAT_H_
#define AMODAL_HEAT_H_

#include <vector>

#include "amodal/raster.h"

namespace amodal {

// Discrete heat semigroup exp(t * L) on a width x height grid, where L is the
// 5-point Laplacian with zero-flux (reflecting) walls. This is Lindeberg's
// discrete scale-space: L splits into row and column second differences, so
// the operator factors into two 1-D kernels, each diagonalised exactly by the
// DCT-II basis.
//
// The kernels are built once and can be applied to any number of fields of
// the same size; construction is O(n^3), application O(w*h*(w+h)) at worst.
class HeatKernel {
 public:
  // `scale` is the Gaussian subscript s; the diffusion time is s * s.
  HeatKernel(int width, int height, double scale);

  static HeatKernel from_time(int width, int height, double time);

  int width() const { return width_; }
  int height() const { return height_; }
  double time() const { return time_; }

  ScalarField apply(const ScalarField& field) const;
  ScalarField apply(const BinaryMask& mask) const;

 private:
  // Symmetric n x n kernel stored row-major, plus the nonzero column span of
  // each row.
  struct Kernel1d {
    int n = 0;
    std::vector<double> weights;
    std::vector<int> first;
    std::vector<int> last;  // exclusive
  };

  HeatKernel(int width, int height, double time, int /*tag*/);
  static Kernel1d build(int n, double time);

  int width_;
  int height_;
  double time_;
  Kernel1d rows_;  // acts along each row (length width)
  Kernel1d cols_;  // acts along each column (length height)
};

// G_s * field under the conventions of HeatKernel. Throws
// std::invalid_argument for negative s.
ScalarField heat_convolve(const ScalarField& field, double scale);

}  // namespace amodal

#endif  // AMODAL_HEAT_H_

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

#include "amodal/heat.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amodal {

namespace {

// Entries below this are dropped from the 1-D kernels. Kernel rows sum to
// one, so the mass lost per application is bounded by n * kDropBelow.
constexpr double kDropBelow = 1e-18;

}  // namespace

HeatKernel::HeatKernel(int width, int height, double scale)
    : HeatKernel(width, height, scale * scale, 0) {
  if (!(scale >= 0.0)) {
    throw std::invalid_argument("diffusion scale must be non-negative");
  }
}

HeatKernel HeatKernel::from_time(int width, int height, double time) {
  if (!(time >= 0.0)) {
    throw std::invalid_argument("diffusion time must be non-negative");
  }
  return HeatKernel(width, height, time, 0);
}

HeatKernel::HeatKernel(int width, int height, double time, int)
    : width_(width), height_(height), time_(time) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("heat kernel dimensions must be positive");
  }
  rows_ = build(width, time);
  cols_ = build(height, time);
}

// exp(t * L1) for the 1-D Neumann second difference. Its eigenvectors are the
// DCT-II cosines v_k(i) = cos(pi k (i + 1/2) / n) with eigenvalues
// -4 sin^2(pi k / 2n).
HeatKernel::Kernel1d HeatKernel::build(int n, double time) {
  Kernel1d k;
  k.n = n;
  k.weights.assign(static_cast<std::size_t>(n) * n, 0.0);
  k.first.assign(n, 0);
  k.last.assign(n, n);
  if (time == 0.0) {
    for (int i = 0; i < n; ++i) {
      k.weights[static_cast<std::size_t>(i) * n + i] = 1.0;
      k.first[i] = i;
      k.last[i] = i + 1;
    }
    return k;
  }

  const double pi = std::numbers::pi;
  std::vector<double> decay(n);
  for (int m = 0; m < n; ++m) {
    const double s = std::sin(pi * m / (2.0 * n));
    decay[m] = std::exp(-4.0 * time * s * s) * (m == 0 ? 1.0 : 2.0) / n;
  }
  // Basis table, cos(pi m (i + 1/2) / n).
  std::vector<double> basis(static_cast<std::size_t>(n) * n);
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      basis[static_cast<std::size_t>(m) * n + i] =
          std::cos(pi * m * (i + 0.5) / n);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int m = 0; m < n; ++m) {
        acc += decay[m] * basis[static_cast<std::size_t>(m) * n + i] *
               basis[static_cast<std::size_t>(m) * n + j];
      }
      // The exact operator is entrywise positive; clamp round-off.
      if (acc < kDropBelow) acc = 0.0;
      k.weights[static_cast<std::size_t>(i) * n + j] = acc;
      k.weights[static_cast<std::size_t>(j) * n + i] = acc;
    }
  }
  for (int i = 0; i < n; ++i) {
    const double* row = &k.weights[static_cast<std::size_t>(i) * n];
    int lo = 0;
    while (lo < n && row[lo] == 0.0) ++lo;
    int hi = n;
    while (hi > lo && row[hi - 1] == 0.0) --hi;
    k.first[i] = lo;
    k.last[i] = hi;
  }
  return k;
}

ScalarField HeatKernel::apply(const ScalarField& field) const {
  if (field.width() != width_ || field.height() != height_) {
    throw DimensionMismatch("field does not match heat kernel dimensions");
  }
  if (time_ == 0.0) return field;

  const int w = width_;
  const int h = height_;
  auto in = field.values();

  // Along rows: tmp(r, :) = K_w * in(r, :).
  std::vector<double> tmp(in.size(), 0.0);
  for (int r = 0; r < h; ++r) {
    const double* src = in.data() + static_cast<std::size_t>(r) * w;
    double* dst = tmp.data() + static_cast<std::size_t>(r) * w;
    for (int c = 0; c < w; ++c) {
      const double* kr = rows_.weights.data() + static_cast<std::size_t>(c) * w;
      double acc = 0.0;
      for (int j = rows_.first[c]; j < rows_.last[c]; ++j) acc += kr[j] * src[j];
      dst[c] = acc;
    }
  }

  // Along columns: out(:, c) = K_h * tmp(:, c), accumulated row by row so
  // the inner loop is contiguous.
  ScalarField out(w, h, 0.0);
  auto dst = out.values();
  for (int r = 0; r < h; ++r) {
    const double* kr = cols_.weights.data() + static_cast<std::size_t>(r) * h;
    double* orow = dst.data() + static_cast<std::size_t>(r) * w;
    for (int j = cols_.first[r]; j < cols_.last[r]; ++j) {
      const double weight = kr[j];
      const double* trow = tmp.data() + static_cast<std::size_t>(j) * w;
      for (int c = 0; c < w; ++c) orow[c] += weight * trow[c];
    }
  }
  return out;
}

ScalarField HeatKernel::apply(const BinaryMask& mask) const {
  return apply(ScalarField::from_mask(mask));
}

ScalarField heat_convolve(const ScalarField& field, double scale) {
  return HeatKernel(field.width(), field.height(), scale).apply(field);
}

}  // namespace amodal

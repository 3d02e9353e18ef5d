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

#ifndef AMODAL_RASTER_H_
#define AMODAL_RASTER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace amodal {

// Grid coordinate. Rows grow downwards, columns to the right.
struct Pixel {
  int row = 0;
  int col = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
  // Row-major order.
  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

// Thrown when two rasters that must share a shape do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rectangular {0,1} grid holding a shape or an inpainting region.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height);
  BinaryMask(int width, int height, std::vector<std::uint8_t> values);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }

  bool contains(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }
  bool contains(Pixel p) const { return contains(p.row, p.col); }

  std::uint8_t operator()(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t& operator()(int row, int col) {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t operator[](Pixel p) const { return (*this)(p.row, p.col); }
  std::uint8_t& operator[](Pixel p) { return (*this)(p.row, p.col); }

  // Value at (row, col), 0 when off-grid.
  std::uint8_t at_or_zero(int row, int col) const {
    return contains(row, col) ? (*this)(row, col) : std::uint8_t{0};
  }

  std::span<const std::uint8_t> values() const& { return values_; }
  // A view into a temporary would dangle.
  std::span<const std::uint8_t> values() const&& = delete;

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool same_shape(const BinaryMask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> values_;
};

// Rectangular grid of finite reals.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(int width, int height, double fill = 0.0);
  ScalarField(int width, int height, std::vector<double> values);

  static ScalarField from_mask(const BinaryMask& mask);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }

  double operator()(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  double& operator()(int row, int col) {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }
  double operator[](Pixel p) const { return (*this)(p.row, p.col); }

  std::span<const double> values() const& { return values_; }
  std::span<double> values() & { return values_; }
  // A view into a temporary would dangle.
  std::span<const double> values() const&& = delete;

  double sum() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

// Sorted (row-major), duplicate-free set of grid coordinates.
class PixelSet {
 public:
  PixelSet() = default;
  explicit PixelSet(std::vector<Pixel> members);

  static PixelSet from_mask(const BinaryMask& mask);

  const std::vector<Pixel>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Pixel p) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  BinaryMask to_mask(int width, int height) const;

  friend bool operator==(const PixelSet&, const PixelSet&) = default;

 private:
  std::vector<Pixel> members_;
};

// Elementwise set algebra; all operands must share dimensions.
BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b);
BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b);
BinaryMask mask_difference(const BinaryMask& a, const BinaryMask& b);
bool masks_disjoint(const BinaryMask& a, const BinaryMask& b);
std::size_t count_differences(const BinaryMask& a, const BinaryMask& b);

PixelSet set_difference(const PixelSet& a, const PixelSet& b);

// Members of `a` that equal or 8-neighbour some member of `b`.
PixelSet near_intersection(const PixelSet& a, const PixelSet& b, int width,
                           int height);

enum class Connectivity { kFour = 4, kEight = 8 };

// Maximal connected sets of 1-pixels, ordered by their smallest member in
// row-major order. Each set's members are sorted.
std::vector<PixelSet> connected_components(const BinaryMask& mask,
                                           Connectivity connectivity);

// 1-pixels with at least one 4-neighbour that is 0 or off-grid.
PixelSet external_boundary(const BinaryMask& mask);

// Exact Euclidean distance from each pixel to the nearest pixel of the
// opposite value, negative inside the mask. Throws std::domain_error on a
// uniform mask.
ScalarField signed_distance(const BinaryMask& mask);

// Squared Euclidean distance from each pixel to the nearest 1-pixel of
// `targets` (Meijster, Roerdink and Hesselink). Pixels are -1 when `targets`
// is empty.
std::vector<std::int64_t> squared_distance_transform(const BinaryMask& targets);

}  // namespace amodal

#endif  // AMODAL_RASTER_H_

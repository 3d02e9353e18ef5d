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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "amodal/complexity.h"
#include "amodal/contour.h"
#include "support/scenes.h"

namespace amodal {
namespace {

using testing::disk;
using testing::rect;

BinaryMask star(int n, double cy, double cx, double r_in, double r_out, int points) {
  BinaryMask m(n, n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double a = std::atan2(y - cy, x - cx);
      const double t = 0.5 + 0.5 * std::cos(points * a);
      m(y, x) = std::hypot(y - cy, x - cx) <= r_in + (r_out - r_in) * t;
    }
  }
  return m;
}

BinaryMask shifted(const BinaryMask& m, int dr, int dc) {
  BinaryMask out(m.width(), m.height());
  for (int r = 0; r < m.height(); ++r) {
    for (int c = 0; c < m.width(); ++c) {
      if (m(r, c)) out(r + dr, c + dc) = 1;
    }
  }
  return out;
}

BinaryMask rotated90(const BinaryMask& m) {
  BinaryMask out(m.height(), m.width());
  for (int r = 0; r < m.height(); ++r) {
    for (int c = 0; c < m.width(); ++c) out(c, m.height() - 1 - r) = m(r, c);
  }
  return out;
}

TEST(ComplexityTest, EmptyShapeThrows) {
  EXPECT_THROW(shape_complexity(BinaryMask(8, 8)), std::invalid_argument);
}

TEST(ComplexityTest, SinglePixelScoresZero) {
  BinaryMask m(5, 5);
  m(2, 2) = 1;
  EXPECT_EQ(shape_complexity(m), 0.0);
}

TEST(ComplexityTest, DiskIsSimplestOfEqualAreaShapes) {
  const BinaryMask round = disk(128, 64, 64, 20);  // about 1257 pixels
  const double c_disk = shape_complexity(round);
  const BinaryMask square = rect(128, 46, 46, 36, 36);
  const BinaryMask ell = mask_difference(rect(128, 40, 40, 41, 41), rect(128, 40, 61, 20, 20));
  const BinaryMask spiky = star(128, 64, 64, 14, 27, 5);
  for (const BinaryMask* other : {&square, &ell, &spiky}) {
    EXPECT_NEAR(static_cast<double>(other->count()), round.count(), 0.2 * round.count());
    EXPECT_LT(c_disk, shape_complexity(*other));
  }
  const auto contour = trace_component_contours(round).front();
  EXPECT_LT(contour_complexity(contour).distance_entropy, 0.3);
}

TEST(ComplexityTest, TranslationAndRotationInvariant) {
  const BinaryMask shapes[] = {
      star(96, 40, 44, 10, 22, 5),
      mask_difference(rect(96, 20, 20, 41, 41), rect(96, 20, 41, 20, 20)),
      disk(96, 40.3, 41.7, 17),
      testing::random_mask(96, 96, 0.05, 3),
  };
  for (int i = 0; i < 4; ++i) {
    const BinaryMask& s = shapes[i];
    const double c = shape_complexity(s);
    // The random mask fills the grid and cannot move.
    if (i < 3) EXPECT_NEAR(shape_complexity(shifted(s, 13, 9)), c, 1e-12);
    BinaryMask r = s;
    for (int k = 0; k < 4; ++k) {
      r = rotated90(r);
      EXPECT_NEAR(shape_complexity(r), c, 1e-12) << k;
    }
  }
}

TEST(ComplexityTest, AdditiveOverComponents) {
  const BinaryMask a = disk(128, 30, 30, 12);
  const BinaryMask b = star(128, 90, 90, 10, 20, 4);
  EXPECT_NEAR(shape_complexity(mask_union(a, b)), shape_complexity(a) + shape_complexity(b),
              1e-12);
}

TEST(ComplexityTest, TermsStayInRange) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const BinaryMask m = testing::random_mask(40, 40, 0.5, seed);
    for (const auto& contour : trace_component_contours(m)) {
      const ContourComplexity c = contour_complexity(contour);
      EXPECT_GE(c.distance_entropy, 0.0);
      EXPECT_LE(c.distance_entropy, 1.0 + 1e-12);
      EXPECT_GE(c.angle_entropy, 0.0);
      EXPECT_LE(c.angle_entropy, 1.0 + 1e-12);
      EXPECT_GE(c.roughness, 0.0);
      EXPECT_LE(c.roughness, 1.0);
      EXPECT_GE(c.asymmetry, 0.0);
      EXPECT_GE(c.value, 0.0);
    }
  }
}

// A square mirrors onto itself across its diagonal; a generic rectangle does not.
TEST(ComplexityTest, SquareHasNoArcAsymmetry) {
  const auto contour = trace_component_contours(rect(64, 10, 10, 20, 20)).front();
  EXPECT_NEAR(contour_complexity(contour).asymmetry, 0.0, 1e-12);
}

}  // namespace
}  // namespace amodal

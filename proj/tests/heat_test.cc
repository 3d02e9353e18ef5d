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

#include <algorithm>
#include <cmath>
#include <random>

#include "amodal/heat.h"
#include "support/oracles.h"

namespace amodal {
namespace {

ScalarField impulse(int w, int h, int r, int c) {
  ScalarField f(w, h);
  f(r, c) = 1.0;
  return f;
}

double linf(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  }
  return m;
}

ScalarField random_field(int w, int h, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  ScalarField f(w, h);
  for (double& v : f.values()) v = u(rng);
  return f;
}

TEST(HeatTest, ZeroScaleIsIdentity) {
  const ScalarField f = random_field(9, 7, 1);
  EXPECT_EQ(linf(heat_convolve(f, 0.0), f), 0.0);
}

TEST(HeatTest, NegativeScaleThrows) {
  EXPECT_THROW(heat_convolve(ScalarField(4, 4), -0.1), std::invalid_argument);
}

TEST(HeatTest, ConservesMass) {
  for (const double s : {0.3, 1.0, std::sqrt(3.0), 4.0, 20.0}) {
    EXPECT_NEAR(heat_convolve(impulse(16, 16, 3, 11), s).sum(), 1.0, 1e-10) << s;
  }
  const ScalarField f = random_field(23, 17, 5);
  EXPECT_NEAR(heat_convolve(f, 2.5).sum(), f.sum(), 1e-10 * std::abs(f.sum()));
}

TEST(HeatTest, MatchesMatrixExponential) {
  const ScalarField got = heat_convolve(impulse(16, 16, 5, 9), std::sqrt(3.0));
  EXPECT_LE(linf(got, testing::dense_heat(impulse(16, 16, 5, 9), 3.0)), 1e-6);

  const ScalarField f = random_field(12, 20, 7);
  EXPECT_LE(linf(HeatKernel::from_time(12, 20, 5.5).apply(f), testing::dense_heat(f, 5.5)),
            1e-6);
}

TEST(HeatTest, SubscriptIsSquaredIntoTime) {
  EXPECT_DOUBLE_EQ(HeatKernel(8, 8, 3.0).time(), 9.0);
}

TEST(HeatTest, LinearAndPositive) {
  const ScalarField a = random_field(10, 10, 2), b = random_field(10, 10, 3);
  ScalarField sum(10, 10);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum.values()[i] = 2.0 * a.values()[i] - b.values()[i];
  }
  const HeatKernel k(10, 10, 1.7);
  const ScalarField ka = k.apply(a), kb = k.apply(b), ks = k.apply(sum);
  for (std::size_t i = 0; i < sum.size(); ++i) {
    EXPECT_NEAR(ks.values()[i], 2.0 * ka.values()[i] - kb.values()[i], 1e-12);
  }
  const ScalarField pos = k.apply(impulse(10, 10, 0, 0));
  for (const double v : pos.values()) EXPECT_GE(v, 0.0);
}

TEST(HeatTest, ConstantFieldIsFixed) {
  BinaryMask ones(6, 9);
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 6; ++c) ones(r, c) = 1;
  }
  const ScalarField out = HeatKernel(6, 9, 5.0).apply(ones);
  for (const double v : out.values()) EXPECT_NEAR(v, 1.0, 1e-12);
}

}  // namespace
}  // namespace amodal

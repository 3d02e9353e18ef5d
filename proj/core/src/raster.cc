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

#include "amodal/raster.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace amodal {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("raster dimensions must be positive, got " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

void require_same_shape(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_shape(b)) throw DimensionMismatch("mask dimensions differ");
}

constexpr std::array<Pixel, 4> kFourNeighbours = {
    {{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};
constexpr std::array<Pixel, 8> kEightNeighbours = {
    {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

}  // namespace

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height) {
  check_dims(width, height);
  values_.assign(static_cast<std::size_t>(width) * height, 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dims(width, height);
  if (values_.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionMismatch("mask value count does not match dimensions");
  }
  for (auto& v : values_) {
    if (v > 1) throw std::invalid_argument("mask values must be 0 or 1");
  }
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(
      std::count(values_.begin(), values_.end(), std::uint8_t{1}));
}

ScalarField::ScalarField(int width, int height, double fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  values_.assign(static_cast<std::size_t>(width) * height, fill);
}

ScalarField::ScalarField(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dims(width, height);
  if (values_.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionMismatch("field value count does not match dimensions");
  }
}

ScalarField ScalarField::from_mask(const BinaryMask& mask) {
  std::vector<double> values(mask.values().begin(), mask.values().end());
  return ScalarField(mask.width(), mask.height(), std::move(values));
}

double ScalarField::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

PixelSet::PixelSet(std::vector<Pixel> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

PixelSet PixelSet::from_mask(const BinaryMask& mask) {
  PixelSet out;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (mask(r, c)) out.members_.push_back({r, c});
    }
  }
  return out;
}

bool PixelSet::contains(Pixel p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

BinaryMask PixelSet::to_mask(int width, int height) const {
  BinaryMask mask(width, height);
  for (const Pixel& p : members_) {
    if (!mask.contains(p)) throw std::out_of_range("pixel outside grid");
    mask[p] = 1;
  }
  return mask;
}

BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b);
  BinaryMask out(a.width(), a.height());
  for (int r = 0; r < a.height(); ++r)
    for (int c = 0; c < a.width(); ++c) out(r, c) = a(r, c) | b(r, c);
  return out;
}

BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b);
  BinaryMask out(a.width(), a.height());
  for (int r = 0; r < a.height(); ++r)
    for (int c = 0; c < a.width(); ++c) out(r, c) = a(r, c) & b(r, c);
  return out;
}

BinaryMask mask_difference(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b);
  BinaryMask out(a.width(), a.height());
  for (int r = 0; r < a.height(); ++r)
    for (int c = 0; c < a.width(); ++c) out(r, c) = a(r, c) & (1 - b(r, c));
  return out;
}

bool masks_disjoint(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b);
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (av[i] && bv[i]) return false;
  }
  return true;
}

std::size_t count_differences(const BinaryMask& a, const BinaryMask& b) {
  require_same_shape(a, b);
  auto av = a.values();
  auto bv = b.values();
  std::size_t n = 0;
  for (std::size_t i = 0; i < av.size(); ++i) n += av[i] != bv[i];
  return n;
}

PixelSet set_difference(const PixelSet& a, const PixelSet& b) {
  std::vector<Pixel> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return PixelSet(std::move(out));
}

PixelSet near_intersection(const PixelSet& a, const PixelSet& b, int width,
                           int height) {
  const BinaryMask bmask = b.to_mask(width, height);
  std::vector<Pixel> out;
  for (const Pixel& p : a) {
    bool hit = bmask.at_or_zero(p.row, p.col) != 0;
    for (int k = 0; k < 8 && !hit; ++k) {
      hit = bmask.at_or_zero(p.row + kEightNeighbours[k].row,
                             p.col + kEightNeighbours[k].col) != 0;
    }
    if (hit) out.push_back(p);
  }
  return PixelSet(std::move(out));
}

std::vector<PixelSet> connected_components(const BinaryMask& mask,
                                           Connectivity connectivity) {
  const std::span<const Pixel> offsets =
      connectivity == Connectivity::kFour
          ? std::span<const Pixel>(kFourNeighbours)
          : std::span<const Pixel>(kEightNeighbours);
  std::vector<std::uint8_t> seen(mask.size(), 0);
  const auto index = [&](int r, int c) {
    return static_cast<std::size_t>(r) * mask.width() + c;
  };

  std::vector<PixelSet> components;
  std::deque<Pixel> queue;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask(r, c) || seen[index(r, c)]) continue;
      std::vector<Pixel> members;
      seen[index(r, c)] = 1;
      queue.push_back({r, c});
      while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        members.push_back(p);
        for (const Pixel& d : offsets) {
          const int nr = p.row + d.row;
          const int nc = p.col + d.col;
          if (!mask.contains(nr, nc) || !mask(nr, nc) || seen[index(nr, nc)])
            continue;
          seen[index(nr, nc)] = 1;
          queue.push_back({nr, nc});
        }
      }
      components.emplace_back(std::move(members));
    }
  }
  return components;
}

PixelSet external_boundary(const BinaryMask& mask) {
  std::vector<Pixel> out;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask(r, c)) continue;
      for (const Pixel& d : kFourNeighbours) {
        if (!mask.at_or_zero(r + d.row, c + d.col)) {
          out.push_back({r, c});
          break;
        }
      }
    }
  }
  return PixelSet(std::move(out));
}

std::vector<std::int64_t> squared_distance_transform(
    const BinaryMask& targets) {
  const int w = targets.width();
  const int h = targets.height();
  const std::int64_t inf = static_cast<std::int64_t>(w) + h + 1;
  std::vector<std::int64_t> out(targets.size(), -1);
  if (targets.empty()) return out;

  // Phase 1: per column, distance to the nearest target in that column.
  std::vector<std::int64_t> g(targets.size());
  const auto at = [w](int r, int c) { return static_cast<std::size_t>(r) * w + c; };
  for (int c = 0; c < w; ++c) {
    g[at(0, c)] = targets(0, c) ? 0 : inf;
    for (int r = 1; r < h; ++r) {
      g[at(r, c)] = targets(r, c) ? 0 : g[at(r - 1, c)] + 1;
    }
    for (int r = h - 2; r >= 0; --r) {
      if (g[at(r + 1, c)] < g[at(r, c)]) g[at(r, c)] = g[at(r + 1, c)] + 1;
    }
  }

  // Phase 2: per row, lower envelope of parabolas (x - i)^2 + g(i)^2.
  std::vector<int> s(w);
  std::vector<std::int64_t> t(w);
  for (int r = 0; r < h; ++r) {
    const auto f = [&](std::int64_t x, int i) {
      const std::int64_t gi = g[at(r, i)];
      return (x - i) * (x - i) + gi * gi;
    };
    const auto sep = [&](int i, int u) {
      const std::int64_t gi = g[at(r, i)];
      const std::int64_t gu = g[at(r, u)];
      const std::int64_t num = static_cast<std::int64_t>(u) * u -
                               static_cast<std::int64_t>(i) * i + gu * gu -
                               gi * gi;
      const std::int64_t den = 2 * (static_cast<std::int64_t>(u) - i);
      // Floor division; the numerator may be negative.
      return num >= 0 ? num / den : -((-num + den - 1) / den);
    };
    int q = 0;
    s[0] = 0;
    t[0] = 0;
    for (int u = 1; u < w; ++u) {
      while (q >= 0 && f(t[q], s[q]) > f(t[q], u)) --q;
      if (q < 0) {
        q = 0;
        s[0] = u;
      } else {
        const std::int64_t wsep = 1 + sep(s[q], u);
        if (wsep < w) {
          ++q;
          s[q] = u;
          t[q] = wsep;
        }
      }
    }
    for (int u = w - 1; u >= 0; --u) {
      out[at(r, u)] = f(u, s[q]);
      if (u == t[q]) --q;
    }
  }
  return out;
}

ScalarField signed_distance(const BinaryMask& mask) {
  const std::size_t ones = mask.count();
  if (ones == 0 || ones == mask.size()) {
    throw std::domain_error("no boundary");
  }
  BinaryMask outside(mask.width(), mask.height());
  for (int r = 0; r < mask.height(); ++r)
    for (int c = 0; c < mask.width(); ++c) outside(r, c) = 1 - mask(r, c);

  const auto to_inside = squared_distance_transform(mask);
  const auto to_outside = squared_distance_transform(outside);
  ScalarField out(mask.width(), mask.height());
  auto values = out.values();
  auto bits = mask.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = bits[i] ? -std::sqrt(static_cast<double>(to_outside[i]))
                        : std::sqrt(static_cast<double>(to_inside[i]));
  }
  return out;
}

}  // namespace amodal

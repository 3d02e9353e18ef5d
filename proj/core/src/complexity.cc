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

#include "amodal/complexity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "amodal/contour.h"

namespace amodal {

namespace {

__extension__ typedef __int128 Wide;

struct Offset {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

Offset between(Pixel from, Pixel to) { return {to.col - from.col, to.row - from.row}; }

double entropy(const std::vector<int>& counts) {
  const int total = std::accumulate(counts.begin(), counts.end(), 0);
  if (total == 0 || counts.size() < 2) return 0.0;
  double h = 0.0;
  for (const int c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h / std::log2(static_cast<double>(counts.size()));
}

int bin_of(double unit, int bins) {
  return std::clamp(static_cast<int>(unit * bins), 0, bins - 1);
}

double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0);
}

// Distance of each of `samples` arc-length-uniform points of `arc` from the
// line through arc.front() and arc.back(), unnormalised (times the chord
// length). Coordinates are taken relative to arc.front().
std::vector<double> chord_offsets(const std::vector<Pixel>& arc, int samples) {
  const Pixel origin = arc.front();
  const Offset chord = between(origin, arc.back());
  std::vector<double> cumulative(arc.size(), 0.0);
  for (std::size_t i = 1; i < arc.size(); ++i) {
    const Offset d = between(arc[i - 1], arc[i]);
    cumulative[i] = cumulative[i - 1] + std::sqrt(static_cast<double>(d.x * d.x + d.y * d.y));
  }
  const double length = cumulative.back();

  std::vector<double> out(samples, 0.0);
  std::size_t seg = 0;
  for (int k = 0; k < samples; ++k) {
    const double s = samples > 1 ? length * k / (samples - 1) : 0.0;
    while (seg + 2 < arc.size() && cumulative[seg + 1] < s) ++seg;
    double x = 0.0, y = 0.0;
    if (arc.size() > 1) {
      const double span = cumulative[seg + 1] - cumulative[seg];
      const double t = span > 0.0 ? std::clamp((s - cumulative[seg]) / span, 0.0, 1.0) : 0.0;
      const Offset a = between(origin, arc[seg]);
      const Offset b = between(origin, arc[seg + 1]);
      x = static_cast<double>(a.x) + t * static_cast<double>(b.x - a.x);
      y = static_cast<double>(a.y) + t * static_cast<double>(b.y - a.y);
    }
    out[k] = std::abs(x * static_cast<double>(chord.y) - y * static_cast<double>(chord.x));
  }
  return out;
}

// Largest offset difference between the two arcs joining contour[i] and
// contour[j], over the chord length squared.
double arc_deviation(const std::vector<Pixel>& contour, std::size_t i,
                     std::size_t j, int samples) {
  const std::size_t n = contour.size();
  std::vector<Pixel> forward, backward;
  for (std::size_t k = i;; k = (k + 1) % n) {
    forward.push_back(contour[k]);
    if (k == j) break;
  }
  for (std::size_t k = i;; k = (k + n - 1) % n) {
    backward.push_back(contour[k]);
    if (k == j) break;
  }
  const auto a = chord_offsets(forward, samples);
  const auto b = chord_offsets(backward, samples);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  const Offset chord = between(contour[i], contour[j]);
  return worst / static_cast<double>(chord.x * chord.x + chord.y * chord.y);
}

// Vertices of the convex hull, monotone chain, collinear points dropped.
std::vector<Pixel> hull(std::vector<Pixel> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  const auto turn = [](Pixel o, Pixel a, Pixel b) {
    const Offset u = between(o, a), v = between(o, b);
    return u.x * v.y - u.y * v.x;
  };
  std::vector<Pixel> h(2 * pts.size());
  std::size_t k = 0;
  for (const Pixel& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double asymmetry(const std::vector<Pixel>& contour, int samples) {
  const auto vertices = hull(contour);
  std::int64_t best = -1;
  std::vector<std::pair<Pixel, Pixel>> diameters;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const Offset d = between(vertices[a], vertices[b]);
      const std::int64_t d2 = d.x * d.x + d.y * d.y;
      if (d2 > best) diameters.clear();
      if (d2 >= best) {
        best = d2;
        diameters.emplace_back(vertices[a], vertices[b]);
      }
    }
  }

  // Tied diameters and repeated visits are all tried; the smallest deviation
  // keeps the value independent of where tracing started.
  double r = std::numeric_limits<double>::infinity();
  for (const auto& [p, q] : diameters) {
    for (std::size_t i = 0; i < contour.size(); ++i) {
      if (contour[i] != p) continue;
      for (std::size_t j = 0; j < contour.size(); ++j) {
        if (contour[j] != q) continue;
        r = std::min({r, arc_deviation(contour, i, j, samples),
                      arc_deviation(contour, j, i, samples)});
      }
    }
  }
  return std::isfinite(r) ? r : 0.0;
}

}  // namespace

ContourComplexity contour_complexity(const std::vector<Pixel>& contour,
                                     const ComplexityParams& params) {
  if (params.bins < 1 || params.angle_stride < 1 || params.arc_samples < 2) {
    throw std::invalid_argument("invalid complexity parameters");
  }
  ContourComplexity out;
  const std::size_t n = contour.size();
  if (n < 2 || std::all_of(contour.begin(), contour.end(),
                           [&](Pixel p) { return p == contour.front(); })) {
    return out;
  }

  // Centroid distances as exact integer ratios |n p - S|^2 / max.
  Offset sum;
  for (const Pixel& p : contour) {
    sum.x += p.col;
    sum.y += p.row;
  }
  const auto count = static_cast<std::int64_t>(n);
  std::vector<Wide> radial(n);
  Wide widest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Wide dx = static_cast<Wide>(count) * contour[i].col - sum.x;
    const Wide dy = static_cast<Wide>(count) * contour[i].row - sum.y;
    radial[i] = dx * dx + dy * dy;
    widest = std::max(widest, radial[i]);
  }
  std::vector<int> dist_hist(params.bins, 0);
  for (const Wide r : radial) {
    const double unit =
        widest > 0 ? std::sqrt(static_cast<double>(r) / static_cast<double>(widest)) : 0.0;
    ++dist_hist[bin_of(unit, params.bins)];
  }
  out.distance_entropy = entropy(dist_hist);

  std::vector<int> angle_hist(params.bins, 0);
  std::vector<double> rough;
  const std::size_t k = static_cast<std::size_t>(params.angle_stride) % n;
  for (std::size_t i = 0; i < n; ++i) {
    const Offset a = between(contour[i], contour[(i + n - k) % n]);
    const Offset b = between(contour[i], contour[(i + k) % n]);
    if ((a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0)) continue;
    const double theta = std::atan2(static_cast<double>(std::abs(a.x * b.y - a.y * b.x)),
                                    static_cast<double>(a.x * b.x + a.y * b.y));
    ++angle_hist[bin_of(theta / std::numbers::pi, params.bins)];
    rough.push_back((std::numbers::pi - theta) / std::numbers::pi);
  }
  out.angle_entropy = entropy(angle_hist);
  if (!rough.empty()) out.roughness = sorted_sum(rough) / static_cast<double>(rough.size());

  out.asymmetry = asymmetry(contour, params.arc_samples);
  const double lo = std::min(out.distance_entropy, out.angle_entropy);
  const double hi = std::max(out.distance_entropy, out.angle_entropy);
  out.value = (1.0 + out.asymmetry) *
              (params.w_min * lo + params.w_max * hi + params.w_roughness * out.roughness);
  return out;
}

double shape_complexity(const BinaryMask& shape, const ComplexityParams& params) {
  if (shape.empty()) throw std::invalid_argument("complexity of an empty shape");
  std::vector<double> parts;
  for (const auto& contour : trace_component_contours(shape)) {
    parts.push_back(contour_complexity(contour, params).value);
  }
  return sorted_sum(std::move(parts));
}

}  // namespace amodal

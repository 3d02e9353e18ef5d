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

#include "amodal/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amodal/contour.h"
#include "amodal/heat.h"

namespace amodal {

namespace {

constexpr double kGradientFloor = 1e-8;
constexpr double kAngleTolerance = 1e-9;
constexpr double kParallelTolerance = 1e-12;

bool touches(const BinaryMask& mask, Pixel p) {
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if ((dr || dc) && mask.at_or_zero(p.row + dr, p.col + dc)) return true;
    }
  }
  return false;
}

// Unit principal direction of `points`, oriented so that it points from their
// centroid towards `target`.
Vec2 fit_direction(const std::vector<Pixel>& points, Pixel target) {
  Vec2 centroid;
  for (const Pixel& p : points) centroid = centroid + to_vec(p);
  centroid = (1.0 / points.size()) * centroid;

  Vec2 dir;
  if (points.size() == 1) {
    dir = to_vec(target) - centroid;
    dir = (1.0 / norm(dir)) * dir;
  } else {
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const Pixel& p : points) {
      const Vec2 d = to_vec(p) - centroid;
      sxx += d.x * d.x;
      syy += d.y * d.y;
      sxy += d.x * d.y;
    }
    const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    dir = {std::cos(theta), std::sin(theta)};
  }
  double along = dot(dir, to_vec(target) - centroid);
  if (along == 0.0) along = dot(dir, to_vec(target) - to_vec(points.back()));
  return along < 0.0 ? -dir : dir;
}

// Whether the ray from `p` along `dir` reaches a mask pixel within 1.5 px,
// i.e. whether the contour actually continues into the mask.
bool enters(const BinaryMask& mask, Pixel p, Vec2 dir) {
  for (const double step : {0.5, 1.0, 1.5}) {
    const int r = static_cast<int>(std::lround(p.row + step * dir.y));
    const int c = static_cast<int>(std::lround(p.col + step * dir.x));
    if (mask.at_or_zero(r, c)) return true;
  }
  return false;
}

}  // namespace

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

ScalarField curvature_field(const BinaryMask& mask) {
  // The exact distance follows the pixel staircase, whose level sets are flat
  // between corners; a short diffusion restores the underlying curve.
  const ScalarField u =
      HeatKernel::from_time(mask.width(), mask.height(), kCurvatureSmoothing)
          .apply(signed_distance(mask));
  const int w = mask.width();
  const int h = mask.height();

  // Forward-difference unit normals; the difference across the far wall is 0.
  ScalarField nx(w, h), ny(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double ux = c + 1 < w ? u(r, c + 1) - u(r, c) : 0.0;
      const double uy = r + 1 < h ? u(r + 1, c) - u(r, c) : 0.0;
      const double g = std::hypot(ux, uy);
      if (g >= kGradientFloor) {
        nx(r, c) = ux / g;
        ny(r, c) = uy / g;
      }
    }
  }

  // Backward-difference divergence; the difference across the near wall is 0.
  ScalarField kappa(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double dx = c > 0 ? nx(r, c) - nx(r, c - 1) : 0.0;
      const double dy = r > 0 ? ny(r, c) - ny(r - 1, c) : 0.0;
      kappa(r, c) = std::clamp(dx + dy, -kCurvatureClamp, kCurvatureClamp);
    }
  }
  return kappa;
}

double elastica_energy(const PixelSet& boundary, const ScalarField& curv,
                       ElasticaParams params) {
  double energy = 0.0;
  for (const Pixel& p : boundary) {
    if (p.row < 0 || p.row >= curv.height() || p.col < 0 ||
        p.col >= curv.width()) {
      throw std::out_of_range("boundary pixel outside curvature field");
    }
    const double k = curv[p];
    energy += k * k + params.beta;
  }
  return energy;
}

std::vector<ContourEndpoint> find_endpoints(const BinaryMask& visible,
                                            const BinaryMask& inpaint_mask,
                                            int fit_window) {
  if (!masks_disjoint(visible, inpaint_mask)) {
    throw std::invalid_argument("visible shape overlaps the inpainting mask");
  }
  if (fit_window < 1) throw std::invalid_argument("fit_window must be >= 1");

  std::vector<ContourEndpoint> endpoints;
  for (const auto& contour : trace_component_contours(visible)) {
    const int n = static_cast<int>(contour.size());
    std::vector<char> contact(n);
    int contacts = 0;
    for (int i = 0; i < n; ++i) {
      contact[i] = touches(inpaint_mask, contour[i]);
      contacts += contact[i];
    }
    if (contacts == 0 || contacts == n) continue;

    const auto at = [n](int i) { return ((i % n) + n) % n; };
    // Collects up to `fit_window` free contour pixels walking away from
    // `from` in direction `step`.
    const auto window = [&](int from, int step) {
      std::vector<Pixel> pts;
      for (int k = 1; k <= fit_window; ++k) {
        const int i = at(from + step * k);
        if (contact[i]) break;
        pts.push_back(contour[i]);
      }
      return pts;
    };

    for (int s = 0; s < n; ++s) {
      if (!contact[s] || contact[at(s - 1)]) continue;
      int e = s;
      while (contact[at(e + 1)]) e = at(e + 1);
      for (const auto& [tip, step] : {std::pair{s, -1}, std::pair{e, +1}}) {
        const auto pts = window(tip, step);
        if (pts.empty()) continue;
        const Vec2 tangent = fit_direction(pts, contour[tip]);
        if (!enters(inpaint_mask, contour[tip], tangent)) continue;
        endpoints.push_back({contour[tip], tangent});
      }
    }
  }
  return endpoints;
}

bool relatable(const ContourEndpoint& a, const ContourEndpoint& b) {
  // Outer angle from t_a to -t_b at most 90 degrees.
  if (dot(a.tangent, -b.tangent) < -kAngleTolerance) return false;

  const Vec2 d = to_vec(b.position) - to_vec(a.position);
  const double denom = cross(a.tangent, b.tangent);
  if (std::abs(denom) <= kParallelTolerance) {
    // Parallel rays meet only when collinear and overlapping.
    if (std::max(std::abs(cross(d, a.tangent)),
                 std::abs(cross(d, b.tangent))) > kAngleTolerance) {
      return false;
    }
    if (dot(a.tangent, b.tangent) > 0.0) return true;
    return dot(d, a.tangent - b.tangent) >= -kAngleTolerance;
  }
  const double la = cross(d, b.tangent) / denom;
  const double lb = cross(d, a.tangent) / denom;
  return la >= -kAngleTolerance && lb >= -kAngleTolerance;
}

std::vector<std::pair<int, int>> relatable_pairs(
    const std::vector<ContourEndpoint>& endpoints) {
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(endpoints.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (relatable(endpoints[i], endpoints[j])) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

}  // namespace amodal

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

#ifndef AMODAL_GEOMETRY_H_
#define AMODAL_GEOMETRY_H_

#include <utility>
#include <vector>

#include "amodal/raster.h"

namespace amodal {

// Plane vector in image axes: x along columns, y along rows (downwards).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);
inline Vec2 to_vec(Pixel p) {
  return {static_cast<double>(p.col), static_cast<double>(p.row)};
}

// Weight of the length term in the elastica integral of (kappa^2 + beta) ds.
struct ElasticaParams {
  double beta = 0.6;
};

// A visible contour arriving at the inpainting region. `tangent` is a unit
// vector pointing along the direction in which the contour must continue,
// i.e. into the region.
struct ContourEndpoint {
  Pixel position;
  Vec2 tangent;
};

inline constexpr double kCurvatureClamp = 2.0;
// Diffusion time applied to the signed distance before differencing.
inline constexpr double kCurvatureSmoothing = 4.0;
inline constexpr int kDefaultFitWindow = 7;

// div(grad u / |grad u|) of the (lightly diffused) signed distance u of
// `mask`, forward
// differences for the gradient and backward differences for the divergence.
// Zero-length gradients normalise to zero; values are clamped to [-2, 2].
// Throws std::domain_error on a uniform mask.
ScalarField curvature_field(const BinaryMask& mask);

// Sum over `boundary` of curv(x)^2 + beta, one unit of arc length per pixel.
double elastica_energy(const PixelSet& boundary, const ScalarField& curv,
                       ElasticaParams params);

// Endpoints of the visible contours that run into `inpaint_mask`. Along each
// component's outer contour, maximal runs of pixels 8-adjacent to the mask
// are located; each run extremity becomes an endpoint whose tangent is the
// total-least-squares direction of the `fit_window` contour pixels leading
// up to it, oriented towards the run. Extremities whose tangent does not
// point into the mask (a straight edge running along the occluder) are
// dropped.
std::vector<ContourEndpoint> find_endpoints(const BinaryMask& visible,
                                            const BinaryMask& inpaint_mask,
                                            int fit_window = kDefaultFitWindow);

// Relatability of two contour endpoints: the rays x_a + l t_a and x_b + l t_b
// (l >= 0) meet, and the outer angle between t_a and -t_b is at most 90
// degrees. Symmetric in its arguments.
bool relatable(const ContourEndpoint& a, const ContourEndpoint& b);

// All index pairs (i < j) of mutually relatable endpoints.
std::vector<std::pair<int, int>> relatable_pairs(
    const std::vector<ContourEndpoint>& endpoints);

}  // namespace amodal

#endif  // AMODAL_GEOMETRY_H_

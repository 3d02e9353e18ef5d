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

#ifndef AMODAL_CONTOUR_H_
#define AMODAL_CONTOUR_H_

#include <vector>

#include "amodal/raster.h"

namespace amodal {

// Outer contour of the connected shape containing `start`, as a closed
// sequence of boundary pixels (the first pixel is not repeated at the end).
// Moore-neighbour tracing with Jacob's stopping criterion; the traversal is
// clockwise on screen. `start` must be the row-major first pixel of its
// component. Pixels of one-pixel-wide parts are visited once per side.
std::vector<Pixel> trace_outer_contour(const BinaryMask& shape, Pixel start);

// Outer contour of each 4-connected component of `shape`, in component order.
std::vector<std::vector<Pixel>> trace_component_contours(const BinaryMask& shape);

}  // namespace amodal

#endif  // AMODAL_CONTOUR_H_

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

#include "amodal/contour.h"

#include <array>
#include <stdexcept>

namespace amodal {

namespace {

// Clockwise on screen, starting west.
constexpr std::array<Pixel, 8> kRing = {{{0, -1},
                                         {-1, -1},
                                         {-1, 0},
                                         {-1, 1},
                                         {0, 1},
                                         {1, 1},
                                         {1, 0},
                                         {1, -1}}};

int ring_index(int dr, int dc) {
  for (int k = 0; k < 8; ++k) {
    if (kRing[k].row == dr && kRing[k].col == dc) return k;
  }
  throw std::logic_error("not an 8-neighbour offset");
}

}  // namespace

std::vector<Pixel> trace_outer_contour(const BinaryMask& shape, Pixel start) {
  if (!shape.contains(start) || !shape[start]) {
    throw std::invalid_argument("contour start must be a shape pixel");
  }
  std::vector<Pixel> contour{start};

  // The west neighbour of a row-major first pixel is background.
  Pixel current = start;
  int backtrack = 0;
  int first_move = -1;
  // Bounded by the number of (pixel, entry direction) states.
  const std::size_t max_steps = 8 * shape.size() + 8;
  for (std::size_t step = 0; step < max_steps; ++step) {
    int move = -1;
    for (int k = 1; k <= 8; ++k) {
      const int dir = (backtrack + k) % 8;
      const int nr = current.row + kRing[dir].row;
      const int nc = current.col + kRing[dir].col;
      if (shape.at_or_zero(nr, nc)) {
        move = dir;
        break;
      }
    }
    if (move < 0) return contour;  // isolated pixel

    if (current == start) {
      if (first_move < 0) {
        first_move = move;
      } else if (move == first_move) {
        contour.pop_back();  // `start` was re-appended on arrival
        return contour;
      }
    }

    // The ring position checked just before `move` is background; it becomes
    // the backtrack of the next pixel.
    const int prev = (move + 7) % 8;
    const Pixel back{current.row + kRing[prev].row,
                     current.col + kRing[prev].col};
    const Pixel next{current.row + kRing[move].row,
                     current.col + kRing[move].col};
    backtrack = ring_index(back.row - next.row, back.col - next.col);
    current = next;
    contour.push_back(current);
  }
  throw std::logic_error("contour tracing did not terminate");
}

std::vector<std::vector<Pixel>> trace_component_contours(
    const BinaryMask& shape) {
  std::vector<std::vector<Pixel>> contours;
  for (const PixelSet& component :
       connected_components(shape, Connectivity::kFour)) {
    const BinaryMask own = component.to_mask(shape.width(), shape.height());
    contours.push_back(trace_outer_contour(own, component.members().front()));
  }
  return contours;
}

}  // namespace amodal

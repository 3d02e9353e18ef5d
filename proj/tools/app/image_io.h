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

#ifndef AMODAL_APP_IMAGE_IO_H_
#define AMODAL_APP_IMAGE_IO_H_

#include <filesystem>
#include <stdexcept>

#include "amodal/bilevel.h"
#include "amodal/raster.h"

namespace amodal::app {

// Unreadable, malformed or unsupported image file.
class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary PGM (P5, 8 or 16 bit) or PNG. Colour PNGs are converted to gray,
// alpha is dropped and 16-bit samples are kept.
GrayImage read_image(const std::filesystem::path& path);

// Binary PGM; 16 bit when max_value exceeds 255.
void write_pgm(const std::filesystem::path& path, const GrayImage& image);

// 8-bit PGM with 0 outside and 255 inside the mask.
void write_mask(const std::filesystem::path& path, const BinaryMask& mask);

// Nonzero samples of an image file.
BinaryMask read_mask(const std::filesystem::path& path);

}  // namespace amodal::app

#endif  // AMODAL_APP_IMAGE_IO_H_

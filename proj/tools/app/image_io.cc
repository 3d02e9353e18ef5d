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

#include "app/image_io.h"

#include <png.h>

#include <array>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

namespace amodal::app {

namespace {

constexpr std::array<unsigned char, 8> kPngMagic = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::vector<unsigned char> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class PgmParser {
 public:
  explicit PgmParser(const std::vector<unsigned char>& bytes) : bytes_(bytes) {}

  GrayImage parse() {
    if (bytes_.size() < 2 || bytes_[0] != 'P' || bytes_[1] != '5') {
      throw ImageError("not a binary PGM");
    }
    pos_ = 2;
    GrayImage img;
    img.width = number();
    img.height = number();
    img.max_value = number();
    if (img.width <= 0 || img.height <= 0) throw ImageError("bad PGM size");
    if (img.max_value < 1 || img.max_value > 65535) throw ImageError("bad PGM maxval");
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw ImageError("truncated PGM header");
    }
    ++pos_;

    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    const std::size_t depth = img.max_value > 255 ? 2 : 1;
    if (bytes_.size() - pos_ < n * depth) throw ImageError("truncated PGM data");
    img.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned char* p = &bytes_[pos_ + i * depth];
      img.values[i] = depth == 2 ? static_cast<std::uint16_t>(p[0] << 8 | p[1]) : p[0];
      if (img.values[i] > img.max_value) throw ImageError("PGM sample exceeds maxval");
    }
    return img;
  }

 private:
  int number() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_++] - '0');
      if (value > 1'000'000) throw ImageError("PGM header value too large");
      ++digits;
    }
    if (digits == 0) throw ImageError("malformed PGM header");
    return static_cast<int>(value);
  }

  const std::vector<unsigned char>& bytes_;
  std::size_t pos_ = 0;
};

struct PngSource {
  const std::vector<unsigned char>* bytes;
  std::size_t pos;
};

void png_read_bytes(png_structp png, png_bytep out, png_size_t len) {
  auto* src = static_cast<PngSource*>(png_get_io_ptr(png));
  if (src->bytes->size() - src->pos < len) png_error(png, "truncated PNG");
  std::copy_n(src->bytes->data() + src->pos, len, out);
  src->pos += len;
}

void png_fail(png_structp png, png_const_charp msg) {
  auto* message = static_cast<std::string*>(png_get_error_ptr(png));
  *message = msg;
  std::longjmp(png_jmpbuf(png), 1);
}

void png_quiet(png_structp, png_const_charp) {}

GrayImage decode_png(const std::vector<unsigned char>& bytes) {
  std::string message;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &message, png_fail, png_quiet);
  if (!png) throw ImageError("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  PngSource src{&bytes, 0};
  GrayImage img;
  std::vector<png_bytep> rows;
  std::vector<unsigned char> pixels;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ImageError("PNG decode failed: " + message);
  }
  if (!info) png_error(png, "out of memory");
  png_set_read_fn(png, &src, png_read_bytes);
  png_read_info(png, info);

  const int color = png_get_color_type(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (color & PNG_COLOR_MASK_COLOR || color == PNG_COLOR_TYPE_PALETTE) {
    png_set_rgb_to_gray_fixed(png, 1, -1, -1);
  }
  png_read_update_info(png, info);

  img.width = static_cast<int>(png_get_image_width(png, info));
  img.height = static_cast<int>(png_get_image_height(png, info));
  const int depth = png_get_bit_depth(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  if (png_get_channels(png, info) != 1) png_error(png, "unexpected channel count");
  pixels.resize(stride * img.height);
  rows.resize(img.height);
  for (int r = 0; r < img.height; ++r) rows[r] = pixels.data() + stride * r;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  img.max_value = depth == 16 ? 65535 : 255;
  img.values.resize(static_cast<std::size_t>(img.width) * img.height);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      const unsigned char* p = rows[r] + (depth == 16 ? 2 * c : c);
      img.values[static_cast<std::size_t>(r) * img.width + c] =
          depth == 16 ? static_cast<std::uint16_t>(p[0] << 8 | p[1]) : p[0];
    }
  }
  return img;
}

}  // namespace

GrayImage read_image(const std::filesystem::path& path) {
  const auto bytes = slurp(path);
  if (bytes.size() >= kPngMagic.size() &&
      std::equal(kPngMagic.begin(), kPngMagic.end(), bytes.begin())) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    return PgmParser(bytes).parse();
  }
  throw ImageError("unsupported image format: " + path.string());
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ImageError("cannot write " + path.string());
  const bool wide = image.max_value > 255;
  out << "P5\n" << image.width << ' ' << image.height << '\n'
      << (wide ? std::max(image.max_value, 256) : 255) << '\n';
  std::vector<char> data;
  data.reserve(image.values.size() * (wide ? 2 : 1));
  for (const std::uint16_t v : image.values) {
    if (wide) data.push_back(static_cast<char>(v >> 8));
    data.push_back(static_cast<char>(v & 0xff));
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw ImageError("write failed: " + path.string());
}

void write_mask(const std::filesystem::path& path, const BinaryMask& mask) {
  GrayImage img{mask.width(), mask.height(), 255,
                std::vector<std::uint16_t>(mask.size())};
  for (std::size_t i = 0; i < img.values.size(); ++i) {
    img.values[i] = mask.values()[i] ? 255 : 0;
  }
  write_pgm(path, img);
}

BinaryMask read_mask(const std::filesystem::path& path) {
  const GrayImage img = read_image(path);
  BinaryMask mask(img.width, img.height);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) mask(r, c) = img(r, c) != 0;
  }
  return mask;
}

}  // namespace amodal::app

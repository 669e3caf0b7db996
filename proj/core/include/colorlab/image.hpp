#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "colorlab/transforms.hpp"
#include "colorlab/types.hpp"

namespace colorlab {

/// Row-major pixel grid. Construction enforces pixels.size() == width * height.
template <typename Pixel>
class Image {
 public:
  Image() = default;

  Image(std::size_t width, std::size_t height, Pixel fill = {})
      : width_(width), height_(height), pixels_(width * height, fill) {
    check_dimensions();
  }

  Image(std::size_t width, std::size_t height, std::vector<Pixel> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions();
    if (pixels_.size() != width_ * height_) {
      throw std::invalid_argument("pixel count does not match width * height");
    }
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  Pixel& at(std::size_t x, std::size_t y) { return pixels_.at(y * width_ + x); }
  const Pixel& at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }

  std::span<Pixel> pixels() { return pixels_; }
  std::span<const Pixel> pixels() const { return pixels_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  void check_dimensions() const {
    if (width_ == 0 || height_ == 0) throw std::invalid_argument("image dimensions must be positive");
  }

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Pixel> pixels_;
};

using PixelBuffer = Image<Rgb8>;
using CoordBuffer = Image<ColorCoord>;

/// Applies the model's forward kernel to every pixel. Rows may be split
/// across `threads` workers; the result is identical for any thread count.
CoordBuffer convert_image(const PixelBuffer& buf, ColorModel model, const ConversionOptions& opts = {},
                          unsigned threads = 1);

/// convert_image writing into a caller-owned buffer, resized if its shape differs.
void convert_image_into(const PixelBuffer& buf, ColorModel model, CoordBuffer& out,
                        const ConversionOptions& opts = {}, unsigned threads = 1);

/// Inverse of convert_image, quantized back to 8 bits.
PixelBuffer render_image(const CoordBuffer& buf, const ConversionOptions& opts = {});

void render_image_into(const CoordBuffer& buf, PixelBuffer& out, const ConversionOptions& opts = {});

}  // namespace colorlab

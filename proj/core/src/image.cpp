#include "colorlab/image.hpp"

#include <algorithm>
#include <thread>

namespace colorlab {

void convert_image_into(const PixelBuffer& buf, ColorModel model, CoordBuffer& out, const ConversionOptions& opts,
                        unsigned threads) {
  if (out.width() != buf.width() || out.height() != buf.height()) out = CoordBuffer(buf.width(), buf.height());
  const auto in = buf.pixels();
  const auto dst = out.pixels();

  auto convert_rows = [&](std::size_t row_begin, std::size_t row_end) {
    const std::size_t begin = row_begin * buf.width();
    const std::size_t count = (row_end - row_begin) * buf.width();
    convert_pixels(in.subspan(begin, count), dst.subspan(begin, count), model, opts);
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, buf.height());
  if (workers == 1) {
    convert_rows(0, buf.height());
    return;
  }
  const std::size_t rows_per_worker = (buf.height() + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t first = w * rows_per_worker;
    const std::size_t last = std::min(buf.height(), first + rows_per_worker);
    if (first >= last) break;
    pool.emplace_back(convert_rows, first, last);
  }
}

CoordBuffer convert_image(const PixelBuffer& buf, ColorModel model, const ConversionOptions& opts,
                          unsigned threads) {
  CoordBuffer out(buf.width(), buf.height());
  convert_image_into(buf, model, out, opts, threads);
  return out;
}

void render_image_into(const CoordBuffer& buf, PixelBuffer& out, const ConversionOptions& opts) {
  if (out.width() != buf.width() || out.height() != buf.height()) out = PixelBuffer(buf.width(), buf.height());
  const auto src = buf.pixels();
  const auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = to_rgb8(src[i], opts);
}

PixelBuffer render_image(const CoordBuffer& buf, const ConversionOptions& opts) {
  PixelBuffer out(buf.width(), buf.height());
  render_image_into(buf, out, opts);
  return out;
}

}  // namespace colorlab

#include "colorlab/tools/ppm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

namespace colorlab::tools {

namespace {

void skip_space_and_comments(std::istream& in) {
  while (true) {
    const int c = in.peek();
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

std::size_t read_header_number(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  std::size_t value = 0;
  bool any = false;
  while (std::isdigit(in.peek())) {
    value = value * 10 + static_cast<std::size_t>(in.get() - '0');
    any = true;
    if (value > 1'000'000) throw PpmError(std::string("PPM ") + what + " is too large");
  }
  if (!any) throw PpmError(std::string("PPM header: missing ") + what);
  return value;
}

}  // namespace

PixelBuffer read_ppm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '6') throw PpmError("not a binary PPM (expected magic P6)");
  const std::size_t width = read_header_number(in, "width");
  const std::size_t height = read_header_number(in, "height");
  const std::size_t maxval = read_header_number(in, "maxval");
  if (width == 0 || height == 0) throw PpmError("PPM dimensions must be positive");
  if (maxval != 255) throw PpmError("only maxval 255 is supported, got " + std::to_string(maxval));
  if (!std::isspace(in.get())) throw PpmError("PPM header must end with a single whitespace byte");

  const std::size_t bytes = 3 * width * height;
  std::vector<char> raw(bytes);
  in.read(raw.data(), static_cast<std::streamsize>(bytes));
  if (static_cast<std::size_t>(in.gcount()) != bytes) {
    throw PpmError("truncated PPM payload: expected " + std::to_string(bytes) + " bytes, got " +
                   std::to_string(in.gcount()));
  }
  std::vector<Rgb8> pixels(width * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = {static_cast<std::uint8_t>(raw[3 * i]), static_cast<std::uint8_t>(raw[3 * i + 1]),
                 static_cast<std::uint8_t>(raw[3 * i + 2])};
  }
  return PixelBuffer(width, height, std::move(pixels));
}

PixelBuffer read_ppm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PpmError("cannot open " + path);
  return read_ppm(in);
}

void write_ppm(std::ostream& out, const PixelBuffer& image) {
  out << "P6\n" << image.width() << ' ' << image.height() << "\n255\n";
  std::vector<char> raw;
  raw.reserve(3 * image.size());
  for (const auto& p : image.pixels()) {
    raw.push_back(static_cast<char>(p.r));
    raw.push_back(static_cast<char>(p.g));
    raw.push_back(static_cast<char>(p.b));
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
}

void write_ppm_file(const std::string& path, const PixelBuffer& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PpmError("cannot write " + path);
  write_ppm(out, image);
  if (!out) throw PpmError("write failed for " + path);
}

}  // namespace colorlab::tools

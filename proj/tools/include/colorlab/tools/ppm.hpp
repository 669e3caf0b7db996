#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "colorlab/image.hpp"

namespace colorlab::tools {

class PpmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a binary PPM (P6, maxval 255). Header comments are accepted.
/// Throws PpmError on a bad magic number, bad header or truncated payload.
PixelBuffer read_ppm(std::istream& in);
PixelBuffer read_ppm_file(const std::string& path);

/// Writes "P6\n<w> <h>\n255\n" followed by the raw pixels.
void write_ppm(std::ostream& out, const PixelBuffer& image);
void write_ppm_file(const std::string& path, const PixelBuffer& image);

}  // namespace colorlab::tools

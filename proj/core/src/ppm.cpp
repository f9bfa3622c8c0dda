#include "clifft/ppm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace clifft {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("ppm: " + msg); }

// Read one header token, skipping whitespace and '#' comments.
std::string header_token(std::istream& in) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (std::isspace(ch)) {
      ch = in.get();
    } else {
      break;
    }
  }
  if (ch == EOF) fail("truncated header");
  std::string tok;
  while (ch != EOF && !std::isspace(ch) && ch != '#') {
    tok.push_back(char(ch));
    ch = in.get();
  }
  // Leave the terminator in the stream: after the maxval token it doubles as
  // the single whitespace byte separating header from samples.
  if (ch != EOF) in.unget();
  return tok;
}

int header_int(std::istream& in, const char* what) {
  const std::string tok = header_token(in);
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    fail(std::string("invalid ") + what + " '" + tok + "'");
  }
  if (pos != tok.size() || value <= 0) fail(std::string("invalid ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

RgbImage read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  if (header_token(in) != "P6") fail("not a binary PPM (expected magic P6)");
  RgbImage img;
  img.width = header_int(in, "width");
  img.height = header_int(in, "height");
  const int maxval = header_int(in, "maxval");
  if (maxval != 255) fail("unsupported maxval " + std::to_string(maxval) + " (only 255)");
  // Exactly one whitespace byte separates the header from the samples.
  const int sep = in.get();
  if (sep == EOF || !std::isspace(sep)) fail("missing sample separator");
  img.data.resize(3 * size_t(img.width) * size_t(img.height));
  in.read(reinterpret_cast<char*>(img.data.data()), std::streamsize(img.data.size()));
  if (size_t(in.gcount()) != img.data.size()) fail("truncated sample data");
  return img;
}

void write_ppm(const std::string& path, const RgbImage& img) {
  if (img.width <= 0 || img.height <= 0) fail("refusing to write an empty image");
  if (img.data.size() != 3 * size_t(img.width) * size_t(img.height))
    fail("data size does not match dimensions");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()), std::streamsize(img.data.size()));
  if (!out) fail("write failed for '" + path + "'");
}

}  // namespace clifft

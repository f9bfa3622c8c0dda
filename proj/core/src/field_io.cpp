#include "clifft/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace clifft {
namespace {

constexpr char kMagic[4] = {'C', 'L', 'F', 'F'};
constexpr std::uint32_t kVersion = 1;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("clff: " + msg); }

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
T take(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof value);
  if (!in) fail("truncated file");
  return value;
}

}  // namespace

void write_field(const std::string& path, const MultivectorField& f) {
  if (f.grid.m == 0) fail("refusing to write an uninitialized field");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  out.write(kMagic, 4);
  put(out, kVersion);
  put(out, std::uint32_t(f.grid.m));
  put(out, std::uint32_t(f.grid.mode == GridMode::calibrated ? 1 : 0));
  for (int n : f.grid.n) put(out, std::uint32_t(n));
  for (double d : f.grid.delta) put(out, d);
  out.write(reinterpret_cast<const char*>(f.data.data()),
            std::streamsize(f.data.size() * sizeof(cplx)));
  if (!out) fail("write failed for '" + path + "'");
}

MultivectorField read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) fail("bad magic (not a CLFF file)");
  const auto version = take<std::uint32_t>(in);
  if (version != kVersion) fail("unsupported version " + std::to_string(version));
  const auto m = take<std::uint32_t>(in);
  if (m == 0 || m > 16) fail("unreasonable generator count " + std::to_string(m));
  const auto mode_raw = take<std::uint32_t>(in);
  if (mode_raw > 1) fail("unknown grid mode " + std::to_string(mode_raw));
  std::vector<int> sizes(m);
  for (auto& n : sizes) {
    const auto v = take<std::uint32_t>(in);
    if (v < 2 || v > (1u << 24)) fail("unreasonable axis size " + std::to_string(v));
    n = int(v);
  }
  std::vector<double> delta(m);
  for (auto& d : delta) d = take<double>(in);
  GridSpec grid;
  try {
    grid = make_grid(int(m), mode_raw ? GridMode::calibrated : GridMode::periodic, sizes, delta);
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid grid header: ") + e.what());
  }
  MultivectorField f(grid);
  in.read(reinterpret_cast<char*>(f.data.data()), std::streamsize(f.data.size() * sizeof(cplx)));
  if (size_t(in.gcount()) != f.data.size() * sizeof(cplx)) fail("truncated sample data");
  return f;
}

}  // namespace clifft

#pragma once
// CLFF container: flat binary serialization of a MultivectorField.
//
// Layout (all integers and doubles little-endian, as on every platform this
// library targets):
//   bytes 0-3   magic "CLFF"
//   u32         version (currently 1)
//   u32         m (number of generators)
//   u32         mode (0 = periodic, 1 = calibrated)
//   u32[m]      samples per axis
//   f64[m]      grid step per axis (zeros in periodic mode)
//   c128[...]   2^m blade planes of points() complex samples (re, im), each
//               plane flat row-major (axis m-1 fastest) — the in-memory
//               layout of MultivectorField::data.

#include <string>

#include "clifft/grid.hpp"

namespace clifft {

/// Throws std::runtime_error on I/O failure.
void write_field(const std::string& path, const MultivectorField& f);

/// Throws std::runtime_error on I/O failure or a malformed file.
MultivectorField read_field(const std::string& path);

}  // namespace clifft

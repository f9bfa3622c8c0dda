#pragma once
// Sampled multivector fields over Cl(0,m) on m-dimensional grids.
//
// Two grid modes:
//  * periodic   — plain index grid, circular topology, unnormalized DFT phases
//                 2*pi*n*j/N per axis; transforms carry symmetric N^{-1/2}
//                 weights per axis so round trips are exact.
//  * calibrated — centered samples x_n = (n - N/2) * delta with the dual grid
//                 u_j = (j - N/2) * (2*pi / (N * delta)); transforms carry
//                 delta/sqrt(2*pi) (forward) and delta_u/sqrt(2*pi) (inverse)
//                 per-axis weights, approximating the continuum integrals.
//
// Field storage is blade-major: 2^m coefficient planes, each a row-major
// scalar array over the grid (axis 0 slowest, axis m-1 fastest).

#include <cstdint>
#include <functional>
#include <vector>

#include "clifft/algebra.hpp"

namespace clifft {

enum class GridMode { periodic, calibrated };

struct GridSpec {
  int m = 0;
  GridMode mode = GridMode::periodic;
  std::vector<int> n;        // per-axis sizes
  std::vector<double> delta; // per-axis spacing; ignored (may be empty) in periodic mode

  size_t points() const {
    size_t p = 1;
    for (int nk : n) p *= size_t(nk);
    return p;
  }
  double dual_delta(int axis) const;   // 2*pi / (n * delta), calibrated only
  double coord(int axis, int i) const; // sample coordinate x_i on an axis
  double freq(int axis, int j) const;  // dual coordinate u_j on an axis
  /// Phase x*u entering transform kernels: 2*pi*n*j/N (periodic) or x_n*u_j.
  double phase(int axis, int i, int j) const;
};

GridSpec make_grid(int m, GridMode mode, std::vector<int> sizes, std::vector<double> delta = {});

bool same_grid(const GridSpec& a, const GridSpec& b);

struct MultivectorField {
  GridSpec grid;
  std::vector<cplx> data; // size 2^m * points, blade-major

  MultivectorField() = default;
  explicit MultivectorField(GridSpec g);

  int m() const { return grid.m; }
  int blades() const { return 1 << grid.m; }
  size_t points() const { return grid.points(); }

  cplx* plane(int blade) { return data.data() + size_t(blade) * points(); }
  const cplx* plane(int blade) const { return data.data() + size_t(blade) * points(); }

  /// Row-major flattening of per-axis indices.
  size_t flat_index(const std::vector<int>& idx) const;

  Multivector at_flat(size_t p) const;
  void set_flat(size_t p, const Multivector& mv);
  Multivector at(const std::vector<int>& idx) const { return at_flat(flat_index(idx)); }
  void set(const std::vector<int>& idx, const Multivector& mv) { set_flat(flat_index(idx), mv); }
};

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b);
MultivectorField operator-(const MultivectorField& a, const MultivectorField& b);
MultivectorField operator*(const MultivectorField& a, cplx s);
MultivectorField& operator+=(MultivectorField& a, const MultivectorField& b);
MultivectorField& operator-=(MultivectorField& a, const MultivectorField& b);

/// Pointwise geometric product of two fields on the same grid.
MultivectorField pointwise_product(const MultivectorField& a, const MultivectorField& b);
/// Pointwise sandwich: c * f (left) or f * c (right) by a constant multivector.
MultivectorField const_mul_left(const Multivector& c, const MultivectorField& f);
MultivectorField const_mul_right(const MultivectorField& f, const Multivector& c);

/// f reflected along the axes selected by bitmask: index i -> (N - i) mod N.
MultivectorField reflect_axes(const MultivectorField& f, unsigned axis_mask);

/// Circular translate by integer grid offsets: out(x) = f(x - shift), wrapped.
MultivectorField circular_shift(const MultivectorField& f, const std::vector<int>& shift);

double field_norm(const MultivectorField& f);
/// || a - b ||_F / max(||a||_F, ||b||_F, tiny).
double field_rel_gap(const MultivectorField& a, const MultivectorField& b);

/// Deterministic pseudo-random field.  Generator: std::mt19937_64 seeded with
/// `seed`; each draw maps (x >> 11) * 2^-53 to [0,1) and then to [-1,1).
/// Coefficients are filled in blade-major storage order; imaginary parts are
/// zero unless complex_coeffs is set.
MultivectorField random_field(const GridSpec& grid, std::uint64_t seed, bool complex_coeffs = false);

/// Scalar field from a function of the sample coordinates (calibrated grids).
MultivectorField sample_scalar_field(const GridSpec& grid, const std::function<double(const std::vector<double>&)>& f);

}  // namespace clifft

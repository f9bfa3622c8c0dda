#include "clifft/grid.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace clifft {

double GridSpec::dual_delta(int axis) const {
  if (mode != GridMode::calibrated) throw std::logic_error("dual_delta: periodic grids have no calibrated dual spacing");
  return 2.0 * std::numbers::pi / (double(n[size_t(axis)]) * delta[size_t(axis)]);
}

double GridSpec::coord(int axis, int i) const {
  if (mode == GridMode::periodic) return double(i);
  return (double(i) - double(n[size_t(axis)]) / 2.0) * delta[size_t(axis)];
}

double GridSpec::freq(int axis, int j) const {
  if (mode == GridMode::periodic) return double(j);
  return (double(j) - double(n[size_t(axis)]) / 2.0) * dual_delta(axis);
}

double GridSpec::phase(int axis, int i, int j) const {
  if (mode == GridMode::periodic)
    return 2.0 * std::numbers::pi * double(i) * double(j) / double(n[size_t(axis)]);
  return coord(axis, i) * freq(axis, j);
}

GridSpec make_grid(int m, GridMode mode, std::vector<int> sizes, std::vector<double> delta) {
  make_algebra(m); // validates m
  if (int(sizes.size()) != m) throw std::invalid_argument("make_grid: need one size per axis");
  for (int nk : sizes) {
    if (nk < 2) throw std::invalid_argument("make_grid: axis sizes must be >= 2");
    if (mode == GridMode::calibrated && (nk % 2) != 0)
      throw std::invalid_argument("make_grid: calibrated axes must have even size (centered sampling)");
  }
  if (mode == GridMode::calibrated) {
    if (int(delta.size()) != m) throw std::invalid_argument("make_grid: calibrated grids need one delta per axis");
    for (double d : delta)
      if (!(d > 0.0)) throw std::invalid_argument("make_grid: delta must be > 0");
  } else {
    delta.assign(size_t(m), 1.0);
  }
  GridSpec g;
  g.m = m;
  g.mode = mode;
  g.n = std::move(sizes);
  g.delta = std::move(delta);
  return g;
}

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.m == b.m && a.mode == b.mode && a.n == b.n && (a.mode == GridMode::periodic || a.delta == b.delta);
}

MultivectorField::MultivectorField(GridSpec g) : grid(std::move(g)) {
  data.assign((size_t(1) << grid.m) * grid.points(), cplx{0.0, 0.0});
}

size_t MultivectorField::flat_index(const std::vector<int>& idx) const {
  if (int(idx.size()) != grid.m) throw std::invalid_argument("flat_index: index arity mismatch");
  size_t p = 0;
  for (int a = 0; a < grid.m; ++a) {
    const int nk = grid.n[size_t(a)];
    const int i = idx[size_t(a)];
    if (i < 0 || i >= nk) throw std::out_of_range("flat_index: index outside grid");
    p = p * size_t(nk) + size_t(i);
  }
  return p;
}

Multivector MultivectorField::at_flat(size_t p) const {
  Multivector mv(grid.m);
  const size_t np = points();
  for (int b = 0; b < blades(); ++b) mv.c[size_t(b)] = data[size_t(b) * np + p];
  return mv;
}

void MultivectorField::set_flat(size_t p, const Multivector& mv) {
  if (mv.m != grid.m) throw std::invalid_argument("set_flat: multivector algebra mismatch");
  const size_t np = points();
  for (int b = 0; b < blades(); ++b) data[size_t(b) * np + p] = mv.c[size_t(b)];
}

static void check_same_field_grid(const MultivectorField& a, const MultivectorField& b, const char* what) {
  if (!same_grid(a.grid, b.grid)) throw std::invalid_argument(std::string(what) + ": fields live on different grids");
}

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b) {
  check_same_field_grid(a, b, "field add");
  MultivectorField out = a;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

MultivectorField operator-(const MultivectorField& a, const MultivectorField& b) {
  check_same_field_grid(a, b, "field sub");
  MultivectorField out = a;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

MultivectorField operator*(const MultivectorField& a, cplx s) {
  MultivectorField out = a;
  for (auto& x : out.data) x *= s;
  return out;
}

MultivectorField& operator+=(MultivectorField& a, const MultivectorField& b) {
  check_same_field_grid(a, b, "field add");
  for (size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
  return a;
}

MultivectorField& operator-=(MultivectorField& a, const MultivectorField& b) {
  check_same_field_grid(a, b, "field sub");
  for (size_t i = 0; i < a.data.size(); ++i) a.data[i] -= b.data[i];
  return a;
}

MultivectorField pointwise_product(const MultivectorField& a, const MultivectorField& b) {
  check_same_field_grid(a, b, "pointwise_product");
  MultivectorField out(a.grid);
  const size_t np = a.points();
  const int nb = a.blades();
  for (int i = 0; i < nb; ++i) {
    const cplx* pa = a.plane(i);
    for (int j = 0; j < nb; ++j) {
      const cplx* pb = b.plane(j);
      const int s = blade_sign(unsigned(i), unsigned(j));
      cplx* po = out.plane(i ^ j);
      if (s > 0)
        for (size_t p = 0; p < np; ++p) po[p] += pa[p] * pb[p];
      else
        for (size_t p = 0; p < np; ++p) po[p] -= pa[p] * pb[p];
    }
  }
  return out;
}

MultivectorField const_mul_left(const Multivector& c, const MultivectorField& f) {
  if (c.m != f.m()) throw std::invalid_argument("const_mul_left: algebra mismatch");
  MultivectorField out(f.grid);
  const size_t np = f.points();
  for (int i = 0; i < f.blades(); ++i) {
    const cplx ci = c.c[size_t(i)];
    if (ci == cplx{0.0, 0.0}) continue;
    for (int j = 0; j < f.blades(); ++j) {
      const cplx* pf = f.plane(j);
      const int s = blade_sign(unsigned(i), unsigned(j));
      const cplx w = (s > 0) ? ci : -ci;
      cplx* po = out.plane(i ^ j);
      for (size_t p = 0; p < np; ++p) po[p] += w * pf[p];
    }
  }
  return out;
}

MultivectorField const_mul_right(const MultivectorField& f, const Multivector& c) {
  if (c.m != f.m()) throw std::invalid_argument("const_mul_right: algebra mismatch");
  MultivectorField out(f.grid);
  const size_t np = f.points();
  for (int j = 0; j < f.blades(); ++j) {
    const cplx cj = c.c[size_t(j)];
    if (cj == cplx{0.0, 0.0}) continue;
    for (int i = 0; i < f.blades(); ++i) {
      const cplx* pf = f.plane(i);
      const int s = blade_sign(unsigned(i), unsigned(j));
      const cplx w = (s > 0) ? cj : -cj;
      cplx* po = out.plane(i ^ j);
      for (size_t p = 0; p < np; ++p) po[p] += w * pf[p];
    }
  }
  return out;
}

/// Apply an index permutation per point: out[flat] = in[mapped flat].
template <typename MapFn>
static MultivectorField remap_points(const MultivectorField& f, MapFn&& map) {
  MultivectorField out(f.grid);
  const size_t np = f.points();
  std::vector<size_t> lut(np);
  std::vector<int> idx(size_t(f.m()), 0);
  for (size_t p = 0; p < np; ++p) {
    lut[p] = map(idx);
    // advance row-major multi-index
    for (int a = f.m() - 1; a >= 0; --a) {
      if (++idx[size_t(a)] < f.grid.n[size_t(a)]) break;
      idx[size_t(a)] = 0;
    }
  }
  for (int b = 0; b < f.blades(); ++b) {
    const cplx* src = f.plane(b);
    cplx* dst = out.plane(b);
    for (size_t p = 0; p < np; ++p) dst[p] = src[lut[p]];
  }
  return out;
}

MultivectorField reflect_axes(const MultivectorField& f, unsigned axis_mask) {
  if (axis_mask >= (1u << f.m())) throw std::invalid_argument("reflect_axes: axis mask outside grid arity");
  std::vector<int> tmp(size_t(f.m()));
  return remap_points(f, [&](const std::vector<int>& idx) {
    size_t p = 0;
    for (int a = 0; a < f.m(); ++a) {
      const int nk = f.grid.n[size_t(a)];
      int i = idx[size_t(a)];
      if (axis_mask & (1u << a)) i = (nk - i) % nk;
      p = p * size_t(nk) + size_t(i);
    }
    return p;
  });
}

MultivectorField circular_shift(const MultivectorField& f, const std::vector<int>& shift) {
  if (int(shift.size()) != f.m()) throw std::invalid_argument("circular_shift: need one offset per axis");
  return remap_points(f, [&](const std::vector<int>& idx) {
    size_t p = 0;
    for (int a = 0; a < f.m(); ++a) {
      const int nk = f.grid.n[size_t(a)];
      const int i = int((long(idx[size_t(a)]) - long(shift[size_t(a)])) % nk + nk) % nk;
      p = p * size_t(nk) + size_t(i);
    }
    return p;
  });
}

double field_norm(const MultivectorField& f) {
  double s = 0.0;
  for (const auto& x : f.data) s += std::norm(x);
  return std::sqrt(s);
}

double field_rel_gap(const MultivectorField& a, const MultivectorField& b) {
  check_same_field_grid(a, b, "field_rel_gap");
  double num = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) num += std::norm(a.data[i] - b.data[i]);
  const double den = std::max({field_norm(a), field_norm(b), 1e-300});
  return std::sqrt(num) / den;
}

MultivectorField random_field(const GridSpec& grid, std::uint64_t seed, bool complex_coeffs) {
  MultivectorField out(grid);
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    // Exactly (x >> 11) * 2^-53 in [0,1), then affine to [-1,1).
    const double u = double(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  };
  for (auto& x : out.data) {
    const double re = draw();
    const double im = complex_coeffs ? draw() : 0.0;
    x = cplx{re, im};
  }
  return out;
}

MultivectorField sample_scalar_field(const GridSpec& grid, const std::function<double(const std::vector<double>&)>& f) {
  MultivectorField out(grid);
  const size_t np = grid.points();
  std::vector<int> idx(size_t(grid.m), 0);
  std::vector<double> x(size_t(grid.m));
  cplx* plane0 = out.plane(0);
  for (size_t p = 0; p < np; ++p) {
    for (int a = 0; a < grid.m; ++a) x[size_t(a)] = grid.coord(a, idx[size_t(a)]);
    plane0[p] = f(x);
    for (int a = grid.m - 1; a >= 0; --a) {
      if (++idx[size_t(a)] < grid.n[size_t(a)]) break;
      idx[size_t(a)] = 0;
    }
  }
  return out;
}

}  // namespace clifft

#include "clifft/gft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clifft/coupling.hpp"
#include "clifft/fft.hpp"

namespace clifft {

MixTable make_mix_table(const RootOfMinusOne& root) {
  const int m = root.i.m;
  const int B = 1 << m;
  MixTable t;
  t.m = m;
  t.left.assign(size_t(B) * size_t(B), cplx{0.0, 0.0});
  t.right.assign(size_t(B) * size_t(B), cplx{0.0, 0.0});
  for (int b = 0; b < B; ++b) {
    for (int a = 0; a < B; ++a) {
      const cplx ra = root.i.c[size_t(a)];
      if (ra == cplx{0.0, 0.0}) continue;
      const int sl = blade_sign(unsigned(a), unsigned(b));
      const int sr = blade_sign(unsigned(b), unsigned(a));
      t.left[size_t(a ^ b) * size_t(B) + size_t(b)] += (sl > 0) ? ra : -ra;
      t.right[size_t(a ^ b) * size_t(B) + size_t(b)] += (sr > 0) ? ra : -ra;
    }
  }
  return t;
}

GftPlan make_plan(GridSpec grid, std::vector<RootOfMinusOne> left, std::vector<RootOfMinusOne> right) {
  if (int(left.size()) + int(right.size()) != grid.m)
    throw std::invalid_argument("make_plan: need exactly one root per grid axis");
  GftPlan plan;
  plan.grid = std::move(grid);
  plan.left_roots = std::move(left);
  plan.right_roots = std::move(right);
  for (int axis = 0; axis < plan.grid.m; ++axis) {
    const RootOfMinusOne& r = plan.root(axis);
    if (r.i.m != plan.grid.m) throw std::invalid_argument("make_plan: root algebra does not match the grid dimension");
    plan.mix.push_back(make_mix_table(r));
  }
  return plan;
}

namespace {

struct AxisGeometry {
  int n = 0;
  size_t stride = 1;
  size_t lines = 1;  // number of 1-D lines along the axis

  AxisGeometry(const GridSpec& g, int axis) {
    n = g.n[size_t(axis)];
    for (int a = axis + 1; a < g.m; ++a) stride *= size_t(g.n[size_t(a)]);
    lines = g.points() / size_t(n);
  }
  /// Base offset of line l; elements sit at base + t * stride, t = 0..n-1.
  size_t base(size_t l) const {
    const size_t outer = l / stride;
    const size_t inner = l % stride;
    return outer * size_t(n) * stride + inner;
  }
};

/// Nonzero entries of one side of a mixing table.
struct SparseMix {
  struct Entry {
    int out_blade, in_blade;
    cplx w;
  };
  std::vector<Entry> entries;

  SparseMix(const MixTable& t, Side side) {
    const int B = 1 << t.m;
    const std::vector<cplx>& full = (side == Side::left) ? t.left : t.right;
    for (int c = 0; c < B; ++c)
      for (int b = 0; b < B; ++b) {
        const cplx w = full[size_t(c) * size_t(B) + size_t(b)];
        if (w != cplx{0.0, 0.0}) entries.push_back({c, b, w});
      }
  }
};

MultivectorField axis_fast(const MultivectorField& f, int axis, const MixTable& mix, Side side, int sign,
                           double weight) {
  const GridSpec& g = f.grid;
  const AxisGeometry geo(g, axis);
  const int N = geo.n;
  const int B = f.blades();
  const bool calibrated = (g.mode == GridMode::calibrated);
  const double s0 = (calibrated && ((N / 2) & 1)) ? -1.0 : 1.0;

  MultivectorField cos_part(g);  // C(u) = sum_n cos(theta) f_n, times weight
  MultivectorField sin_part(g);  // S(u) = sum_n sin(theta) f_n, times weight
  std::vector<cplx> line(static_cast<size_t>(N));
  for (int c = 0; c < B; ++c) {
    const cplx* src = f.plane(c);
    cplx* pc = cos_part.plane(c);
    cplx* ps = sin_part.plane(c);
    for (size_t l = 0; l < geo.lines; ++l) {
      const size_t base = geo.base(l);
      for (int t = 0; t < N; ++t) line[size_t(t)] = src[base + size_t(t) * geo.stride];
      if (calibrated)
        for (int t = 1; t < N; t += 2) line[size_t(t)] = -line[size_t(t)];
      fft_inplace(line.data(), N, -1);
      for (int j = 0; j < N; ++j) {
        // Sums of exp(-i theta) and exp(+i theta) against the line, recovered
        // from one FFT by index reversal (and (-1)^j de-modulation when the
        // grid is calibrated/centered).
        cplx dm = line[size_t(j)];
        cplx dp = line[size_t((N - j) % N)];
        if (calibrated) {
          const double fac = s0 * ((j & 1) ? -1.0 : 1.0);
          dm *= fac;
          dp *= fac;
        }
        const size_t pos = base + size_t(j) * geo.stride;
        pc[pos] = weight * 0.5 * (dm + dp);
        ps[pos] = weight * 0.5 * (cplx{0.0, 1.0} * (dm - dp));
      }
    }
  }

  // out = C + sign * (root .side. S), recombined plane by plane.
  MultivectorField out = std::move(cos_part);
  const SparseMix sm(mix, side);
  const size_t np = out.points();
  for (const auto& e : sm.entries) {
    const cplx w = (sign > 0) ? e.w : -e.w;
    cplx* po = out.plane(e.out_blade);
    const cplx* pi = sin_part.plane(e.in_blade);
    for (size_t p = 0; p < np; ++p) po[p] += w * pi[p];
  }
  return out;
}

MultivectorField axis_reference(const MultivectorField& f, int axis, const MixTable& mix, Side side, int sign,
                                double weight) {
  const GridSpec& g = f.grid;
  const AxisGeometry geo(g, axis);
  const int N = geo.n;
  const int B = f.blades();

  // Both grid modes have phases that are exact multiples of 2*pi/N:
  // periodic n*j, calibrated (n - N/2)*(j - N/2).
  std::vector<double> ctab(static_cast<size_t>(N)), stab(static_cast<size_t>(N));
  for (int t = 0; t < N; ++t) {
    const double ang = 2.0 * std::numbers::pi * double(t) / double(N);
    ctab[size_t(t)] = std::cos(ang);
    stab[size_t(t)] = std::sin(ang);
  }
  const bool calibrated = (g.mode == GridMode::calibrated);
  auto phase_index = [&](int n_, int j_) {
    long t = calibrated ? (long(n_) - N / 2) * (long(j_) - N / 2) : long(n_) * long(j_);
    t %= N;
    if (t < 0) t += N;
    return size_t(t);
  };

  const SparseMix sm(mix, side);
  MultivectorField out(g);
  std::vector<cplx> fl(size_t(N) * size_t(B));  // f values, element-major
  std::vector<cplx> gl(size_t(N) * size_t(B));  // root .side. f values
  std::vector<cplx> acc(static_cast<size_t>(B));
  for (size_t l = 0; l < geo.lines; ++l) {
    const size_t base = geo.base(l);
    for (int t = 0; t < N; ++t)
      for (int c = 0; c < B; ++c) fl[size_t(t) * size_t(B) + size_t(c)] = f.plane(c)[base + size_t(t) * geo.stride];
    std::fill(gl.begin(), gl.end(), cplx{0.0, 0.0});
    for (int t = 0; t < N; ++t)
      for (const auto& e : sm.entries)
        gl[size_t(t) * size_t(B) + size_t(e.out_blade)] += e.w * fl[size_t(t) * size_t(B) + size_t(e.in_blade)];
    for (int j = 0; j < N; ++j) {
      std::fill(acc.begin(), acc.end(), cplx{0.0, 0.0});
      for (int t = 0; t < N; ++t) {
        const size_t ti = phase_index(t, j);
        const double w1 = ctab[ti];
        const double w2 = double(sign) * stab[ti];
        const cplx* pf = fl.data() + size_t(t) * size_t(B);
        const cplx* pg = gl.data() + size_t(t) * size_t(B);
        for (int c = 0; c < B; ++c) acc[size_t(c)] += w1 * pf[c] + w2 * pg[c];
      }
      for (int c = 0; c < B; ++c) out.plane(c)[base + size_t(j) * geo.stride] = weight * acc[size_t(c)];
    }
  }
  return out;
}

double axis_weight(const GridSpec& g, int axis, bool forward) {
  if (g.mode == GridMode::periodic) return 1.0 / std::sqrt(double(g.n[size_t(axis)]));
  const double step = forward ? g.delta[size_t(axis)] : g.dual_delta(axis);
  return step / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

MultivectorField axis_transform(const MultivectorField& f, int axis, const RootOfMinusOne& root, Side side,
                                int sign, double weight, Path path) {
  if (axis < 0 || axis >= f.m()) throw std::invalid_argument("axis_transform: axis outside grid arity");
  if (sign != -1 && sign != 1) throw std::invalid_argument("axis_transform: sign must be -1 or +1");
  if (root.i.m != f.m()) throw std::invalid_argument("axis_transform: root algebra does not match the field");
  const MixTable mix = make_mix_table(root);
  return (path == Path::fast) ? axis_fast(f, axis, mix, side, sign, weight)
                              : axis_reference(f, axis, mix, side, sign, weight);
}

namespace {

MultivectorField run_axis(const GftPlan& plan, const MultivectorField& f, int axis, int sign, bool forward,
                          Path path) {
  const double w = axis_weight(plan.grid, axis, forward);
  const MixTable& mix = plan.mix[size_t(axis)];
  return (path == Path::fast) ? axis_fast(f, axis, mix, plan.side(axis), sign, w)
                              : axis_reference(f, axis, mix, plan.side(axis), sign, w);
}

void check_plan_field(const GftPlan& plan, const MultivectorField& f, const char* what) {
  if (!same_grid(plan.grid, f.grid)) throw std::invalid_argument(std::string(what) + ": field grid does not match the plan");
}

}  // namespace

MultivectorField gft_forward(const GftPlan& plan, const MultivectorField& f, Path path) {
  check_plan_field(plan, f, "gft_forward");
  MultivectorField out = f;
  // Left kernel factors with axis 0 outermost: apply axes mu-1 .. 0.
  for (int axis = plan.mu() - 1; axis >= 0; --axis) out = run_axis(plan, out, axis, -1, true, path);
  // Right kernel factors with axis mu innermost-left: apply axes mu .. m-1.
  for (int axis = plan.mu(); axis < plan.m(); ++axis) out = run_axis(plan, out, axis, -1, true, path);
  return out;
}

MultivectorField gft_inverse(const GftPlan& plan, const MultivectorField& f, Path path) {
  check_plan_field(plan, f, "gft_inverse");
  MultivectorField out = f;
  // Conjugate factors peel the forward kernel inside out: left axes ascending,
  // right axes descending, positive phase sign.
  for (int axis = 0; axis < plan.mu(); ++axis) out = run_axis(plan, out, axis, +1, false, path);
  for (int axis = plan.m() - 1; axis >= plan.mu(); --axis) out = run_axis(plan, out, axis, +1, false, path);
  return out;
}

namespace {

/// Pointwise multiply by exp(sign * root * theta_j) on one axis, where
/// theta_j = y * u_j depends only on the axis index j of each point.
MultivectorField axis_phase_multiply(const MultivectorField& f, int axis, const MixTable& mix, Side side, int sign,
                                     int shift) {
  const GridSpec& g = f.grid;
  const AxisGeometry geo(g, axis);
  const int N = geo.n;
  std::vector<double> ctab(static_cast<size_t>(N)), stab(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) {
    double theta;
    if (g.mode == GridMode::periodic)
      theta = 2.0 * std::numbers::pi * double(shift) * double(j) / double(N);
    else
      theta = double(shift) * g.delta[size_t(axis)] * g.freq(axis, j);
    ctab[size_t(j)] = std::cos(theta);
    stab[size_t(j)] = double(sign) * std::sin(theta);
  }

  // mixed = root .side. f, then out = cos .* f + sin .* mixed elementwise.
  MultivectorField mixed(g);
  const SparseMix sm(mix, side);
  const size_t np = f.points();
  for (const auto& e : sm.entries) {
    cplx* po = mixed.plane(e.out_blade);
    const cplx* pi = f.plane(e.in_blade);
    for (size_t p = 0; p < np; ++p) po[p] += e.w * pi[p];
  }
  MultivectorField out(g);
  for (int c = 0; c < f.blades(); ++c) {
    const cplx* pf = f.plane(c);
    const cplx* pm = mixed.plane(c);
    cplx* po = out.plane(c);
    for (size_t p = 0; p < np; ++p) {
      const size_t j = (p / geo.stride) % size_t(N);
      po[p] = ctab[j] * pf[p] + stab[j] * pm[p];
    }
  }
  return out;
}

}  // namespace

Multivector ordered_root_product(const GftPlan& plan, const std::vector<int>& axes, const std::vector<int>& expo,
                                 bool negate) {
  Multivector out = scalar_mv(plan.m(), 1.0);
  for (size_t t = 0; t < axes.size(); ++t) {
    if (expo[size_t(axes[t])] == 0) continue;
    Multivector r = plan.root(axes[t]).i;
    if (negate) r = -r;
    out = out * r;
  }
  return out;
}

MultivectorField translate_spectrum(const GftPlan& plan, const MultivectorField& spectrum,
                                    const std::vector<int>& shift) {
  check_plan_field(plan, spectrum, "translate_spectrum");
  if (int(shift.size()) != plan.m()) throw std::invalid_argument("translate_spectrum: need one offset per axis");
  MultivectorField G = spectrum;
  // Left product with axis-0 factor outermost; right product ascending.
  for (int axis = plan.mu() - 1; axis >= 0; --axis)
    G = axis_phase_multiply(G, axis, plan.mix[size_t(axis)], Side::left, -1, shift[size_t(axis)]);
  for (int axis = plan.mu(); axis < plan.m(); ++axis)
    G = axis_phase_multiply(G, axis, plan.mix[size_t(axis)], Side::right, -1, shift[size_t(axis)]);
  return G;
}

MultivectorField generalized_translate(const GftPlan& plan, const MultivectorField& f, const std::vector<int>& shift,
                                       TranslateRoute route) {
  check_plan_field(plan, f, "generalized_translate");
  if (int(shift.size()) != plan.m()) throw std::invalid_argument("generalized_translate: need one offset per axis");

  if (route == TranslateRoute::spectral)
    return gft_inverse(plan, translate_spectrum(plan, gft_forward(plan, f), shift));

  // Closed form: 4^-m sum over couplings and reflections of constant
  // sandwiches around reflected translates of reflected fields.
  const int m = plan.m();
  const int mu = plan.mu();
  const int B = 1 << m;
  const size_t ncomb = size_t(1) << (2 * m);  // 4^m coupling rows

  std::vector<int> axes_left_desc, axes_left_asc, axes_right_asc, axes_right_desc;
  for (int a = mu - 1; a >= 0; --a) axes_left_desc.push_back(a);
  for (int a = 0; a < mu; ++a) axes_left_asc.push_back(a);
  for (int a = mu; a < m; ++a) axes_right_asc.push_back(a);
  for (int a = m - 1; a >= mu; --a) axes_right_desc.push_back(a);

  // T_rows[in] = C(j) e_in D(j) for each coupling multi-index j.
  std::vector<std::vector<Multivector>> T(ncomb);
  std::vector<std::vector<int>> row_sets(ncomb, std::vector<int>(static_cast<size_t>(m)));
  std::vector<int> e1(static_cast<size_t>(m)), e2(static_cast<size_t>(m)), e3(static_cast<size_t>(m));
  for (size_t comb = 0; comb < ncomb; ++comb) {
    auto& rows = row_sets[comb];
    for (int a = 0; a < m; ++a) rows[size_t(a)] = int((comb >> (2 * a)) & 3u);
    for (int a = 0; a < m; ++a) {
      const AxisTriple& t = kAxisTriples[size_t(rows[size_t(a)])];
      e1[size_t(a)] = t.j1;
      e2[size_t(a)] = t.j2;
      e3[size_t(a)] = t.j3;
    }
    const Multivector C = ordered_root_product(plan, axes_left_desc, e1, false) *
                          ordered_root_product(plan, axes_left_asc, e2, true) *
                          ordered_root_product(plan, axes_left_asc, e3, true);
    const Multivector D = ordered_root_product(plan, axes_right_asc, e3, true) *
                          ordered_root_product(plan, axes_right_asc, e2, true) *
                          ordered_root_product(plan, axes_right_desc, e1, false);
    T[comb].reserve(size_t(B));
    for (int in = 0; in < B; ++in) T[comb].push_back(C * basis_blade(m, unsigned(in)) * D);
  }

  MultivectorField out(plan.grid);
  const size_t np = f.points();
  std::vector<int> sshift(static_cast<size_t>(m));
  for (unsigned phi = 0; phi < (1u << m); ++phi) {
    for (int a = 0; a < m; ++a) sshift[size_t(a)] = (phi >> a) & 1u ? -shift[size_t(a)] : shift[size_t(a)];
    for (unsigned gamma = 0; gamma < (1u << m); ++gamma) {
      // U[in] = sum_j c(j,phi,gamma) T_j[in]
      std::vector<Multivector> U(static_cast<size_t>(B), Multivector(m));
      for (size_t comb = 0; comb < ncomb; ++comb) {
        const int s = sign_c(row_sets[comb], phi, gamma);
        for (int in = 0; in < B; ++in) {
          if (s > 0)
            U[size_t(in)] += T[comb][size_t(in)];
          else
            U[size_t(in)] -= T[comb][size_t(in)];
        }
      }
      const MultivectorField shifted = circular_shift(reflect_axes(f, gamma), sshift);
      for (int in = 0; in < B; ++in) {
        const cplx* pi = shifted.plane(in);
        for (int c = 0; c < B; ++c) {
          const cplx w = U[size_t(in)].c[size_t(c)];
          if (w == cplx{0.0, 0.0}) continue;
          cplx* po = out.plane(c);
          for (size_t p = 0; p < np; ++p) po[p] += w * pi[p];
        }
      }
    }
  }
  const double scale = 1.0 / double(size_t(1) << (2 * m));
  return out * cplx{scale, 0.0};
}

}  // namespace clifft

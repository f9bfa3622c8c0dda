#include "clifft/mustard.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifft/fft.hpp"

namespace clifft {

size_t coupling_count(int m) {
  if (m < 1 || m > 8) throw std::invalid_argument("coupling_count: m must be in 1..8");
  return size_t(1) << (2 * m);
}

namespace {

/// Unnormalized per-blade DFT along every axis (sign -1 forward, +1 inverse).
void fft_all_axes(MultivectorField& F, int sign) {
  const GridSpec& g = F.grid;
  for (int axis = 0; axis < g.m; ++axis) {
    const int N = g.n[size_t(axis)];
    size_t stride = 1;
    for (int a = axis + 1; a < g.m; ++a) stride *= size_t(g.n[size_t(a)]);
    const size_t lines = F.points() / size_t(N);
    std::vector<cplx> line(static_cast<size_t>(N));
    for (int c = 0; c < F.blades(); ++c) {
      cplx* plane = F.plane(c);
      for (size_t l = 0; l < lines; ++l) {
        const size_t outer = l / stride;
        const size_t inner = l % stride;
        const size_t base = outer * size_t(N) * stride + inner;
        for (int t = 0; t < N; ++t) line[size_t(t)] = plane[base + size_t(t) * stride];
        fft_inplace(line.data(), N, sign);
        for (int t = 0; t < N; ++t) plane[base + size_t(t) * stride] = line[size_t(t)];
      }
    }
  }
}

void check_convolve_grids(const MultivectorField& a, const MultivectorField& b, const char* what) {
  if (!same_grid(a.grid, b.grid)) throw std::invalid_argument(std::string(what) + ": operand grids do not match");
}

void check_plan_pair(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g, const char* what,
                     bool periodic_only) {
  if (!same_grid(plan.grid, f.grid) || !same_grid(plan.grid, g.grid))
    throw std::invalid_argument(std::string(what) + ": operand grids do not match the plan");
  if (periodic_only && plan.grid.mode != GridMode::periodic)
    throw std::invalid_argument(std::string(what) + ": closed form requires a periodic grid");
}

/// One admissible coupling multi-index: the sandwich constants of its
/// classical-convolution term (CL f^phi CR) * (DL g^gamma DR) plus the
/// per-axis rows feeding the sign.
struct CouplingTerm {
  std::vector<int> rows;
  Multivector CL, CR, DL, DR;
};

/// Expand the coupling sum for either product.  Both have the same admissible
/// set and sign; they differ in where the root powers sit:
///  * Mustard:  (i^{j1}desc.left * (-i)^{j2}asc.left) f^phi ((-i)^{j2}asc.right)
///            * ((-i)^{j3}asc.left) g^gamma ((-i)^{j3}asc.right * i^{j1}desc.right)
///  * tau:      f^phi (i^{j1}desc.left * (-i)^{j2}asc.left * (-i)^{j3}asc.left)
///            * g^gamma ((-i)^{j3}asc.right * (-i)^{j2}asc.right * i^{j1}desc.right)
std::vector<CouplingTerm> make_coupling_terms(const GftPlan& plan, bool tau) {
  const int m = plan.m();
  const int mu = plan.mu();
  std::vector<int> dl, al, ar, dr;
  for (int a = mu - 1; a >= 0; --a) dl.push_back(a);
  for (int a = 0; a < mu; ++a) al.push_back(a);
  for (int a = mu; a < m; ++a) ar.push_back(a);
  for (int a = m - 1; a >= mu; --a) dr.push_back(a);

  const size_t ncomb = coupling_count(m);
  std::vector<CouplingTerm> terms(ncomb);
  std::vector<int> e1(static_cast<size_t>(m)), e2(static_cast<size_t>(m)), e3(static_cast<size_t>(m));
  for (size_t comb = 0; comb < ncomb; ++comb) {
    CouplingTerm& t = terms[comb];
    t.rows.resize(size_t(m));
    for (int a = 0; a < m; ++a) {
      t.rows[size_t(a)] = int((comb >> (2 * a)) & 3u);
      const AxisTriple& tri = kAxisTriples[size_t(t.rows[size_t(a)])];
      e1[size_t(a)] = tri.j1;
      e2[size_t(a)] = tri.j2;
      e3[size_t(a)] = tri.j3;
    }
    if (tau) {
      t.CL = scalar_mv(m, 1.0);
      t.CR = ordered_root_product(plan, dl, e1, false) * ordered_root_product(plan, al, e2, true) *
             ordered_root_product(plan, al, e3, true);
      t.DL = scalar_mv(m, 1.0);
      t.DR = ordered_root_product(plan, ar, e3, true) * ordered_root_product(plan, ar, e2, true) *
             ordered_root_product(plan, dr, e1, false);
    } else {
      t.CL = ordered_root_product(plan, dl, e1, false) * ordered_root_product(plan, al, e2, true);
      t.CR = ordered_root_product(plan, ar, e2, true);
      t.DL = ordered_root_product(plan, al, e3, true);
      t.DR = ordered_root_product(plan, ar, e3, true) * ordered_root_product(plan, dr, e1, false);
    }
  }
  return terms;
}

/// Grouped evaluation of 4^-m sum_j sum_{phi,gamma} c * (CL f^phi CR)*(DL g^gamma DR):
/// one spectral accumulation pass, one inverse FFT.  The spectrum of each term
/// is CL Fhat(sigma_phi u) CR DL Ghat(sigma_gamma u) DR, so everything groups
/// into blade-pair weights W[a][b] = sum_j c * CL e_a (CR DL) e_b DR.
MultivectorField coupled_convolve_grouped(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g,
                                          const std::vector<CouplingTerm>& terms) {
  const int m = plan.m();
  const int B = f.blades();
  const size_t np = f.points();
  const size_t nrefl = size_t(1) << m;

  MultivectorField Fhat = f;
  fft_all_axes(Fhat, -1);
  MultivectorField Ghat = g;
  fft_all_axes(Ghat, -1);
  std::vector<MultivectorField> refF, refG;
  refF.reserve(nrefl);
  refG.reserve(nrefl);
  for (unsigned r = 0; r < nrefl; ++r) {
    refF.push_back(reflect_axes(Fhat, r));
    refG.push_back(reflect_axes(Ghat, r));
  }

  // T[comb][a*B+b] = CL e_a (CR DL) e_b DR, independent of (phi, gamma).
  std::vector<std::vector<Multivector>> T(terms.size());
  for (size_t c = 0; c < terms.size(); ++c) {
    const CouplingTerm& t = terms[c];
    const Multivector M = t.CR * t.DL;
    std::vector<Multivector> left(static_cast<size_t>(B), Multivector(m));
    for (int a = 0; a < B; ++a) left[size_t(a)] = t.CL * basis_blade(m, unsigned(a)) * M;
    T[c].reserve(size_t(B) * size_t(B));
    for (int a = 0; a < B; ++a)
      for (int b = 0; b < B; ++b) T[c].push_back(left[size_t(a)] * basis_blade(m, unsigned(b)) * t.DR);
  }

  MultivectorField P(plan.grid);
  std::vector<cplx> W(size_t(B) * size_t(B) * size_t(B));
  std::vector<const cplx*> fp(static_cast<size_t>(B)), gp(static_cast<size_t>(B));
  std::vector<cplx*> pp(static_cast<size_t>(B));
  std::vector<cplx> fa(static_cast<size_t>(B)), gb(static_cast<size_t>(B)), acc(static_cast<size_t>(B));
  for (int c = 0; c < B; ++c) pp[size_t(c)] = P.plane(c);
  for (unsigned phi = 0; phi < nrefl; ++phi) {
    for (int c = 0; c < B; ++c) fp[size_t(c)] = refF[phi].plane(c);
    for (unsigned gamma = 0; gamma < nrefl; ++gamma) {
      for (int c = 0; c < B; ++c) gp[size_t(c)] = refG[gamma].plane(c);
      std::fill(W.begin(), W.end(), cplx{0.0, 0.0});
      for (size_t t = 0; t < terms.size(); ++t) {
        const double s = double(sign_c(terms[t].rows, phi, gamma));
        for (size_t ab = 0; ab < size_t(B) * size_t(B); ++ab)
          for (int c = 0; c < B; ++c) W[ab * size_t(B) + size_t(c)] += s * T[t][ab].c[size_t(c)];
      }
      for (size_t p = 0; p < np; ++p) {
        for (int c = 0; c < B; ++c) {
          fa[size_t(c)] = fp[size_t(c)][p];
          gb[size_t(c)] = gp[size_t(c)][p];
          acc[size_t(c)] = cplx{0.0, 0.0};
        }
        for (int a = 0; a < B; ++a) {
          if (fa[size_t(a)] == cplx{0.0, 0.0}) continue;
          for (int b = 0; b < B; ++b) {
            const cplx s = fa[size_t(a)] * gb[size_t(b)];
            const cplx* w = W.data() + (size_t(a) * size_t(B) + size_t(b)) * size_t(B);
            for (int c = 0; c < B; ++c) acc[size_t(c)] += s * w[size_t(c)];
          }
        }
        for (int c = 0; c < B; ++c) pp[size_t(c)][p] += acc[size_t(c)];
      }
    }
  }

  fft_all_axes(P, +1);
  const double scale = 1.0 / (double(np) * double(size_t(1) << (2 * m)));
  return P * cplx{scale, 0.0};
}

MultivectorField coupled_convolve_per_term(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g,
                                           const std::vector<CouplingTerm>& terms) {
  const int m = plan.m();
  const size_t nrefl = size_t(1) << m;
  MultivectorField out(plan.grid);
  for (unsigned phi = 0; phi < nrefl; ++phi) {
    const MultivectorField frefl = reflect_axes(f, phi);
    for (unsigned gamma = 0; gamma < nrefl; ++gamma) {
      const MultivectorField grefl = reflect_axes(g, gamma);
      for (const CouplingTerm& t : terms) {
        const double s = double(sign_c(t.rows, phi, gamma));
        const MultivectorField A = const_mul_right(const_mul_left(t.CL, frefl), t.CR);
        const MultivectorField Bf = const_mul_right(const_mul_left(t.DL, grefl), t.DR);
        out += classical_convolve(A, Bf) * cplx{s, 0.0};
      }
    }
  }
  const double scale = 1.0 / double(size_t(1) << (2 * m));
  return out * cplx{scale, 0.0};
}

}  // namespace

MultivectorField classical_convolve(const MultivectorField& a, const MultivectorField& b) {
  check_convolve_grids(a, b, "classical_convolve");
  MultivectorField A = a;
  fft_all_axes(A, -1);
  MultivectorField Bf = b;
  fft_all_axes(Bf, -1);
  MultivectorField P = pointwise_product(A, Bf);
  fft_all_axes(P, +1);
  double scale = 1.0 / double(P.points());
  if (a.grid.mode == GridMode::calibrated) {
    // Centered coordinates: x_n - x_k lands on sample (n - k + N/2) mod N, and
    // the Riemann sum carries the volume element.
    std::vector<int> shift(size_t(a.grid.m));
    for (int ax = 0; ax < a.grid.m; ++ax) {
      scale *= a.grid.delta[size_t(ax)];
      shift[size_t(ax)] = -a.grid.n[size_t(ax)] / 2;
    }
    P = circular_shift(P, shift);
  }
  return P * cplx{scale, 0.0};
}

MultivectorField classical_convolve_reference(const MultivectorField& a, const MultivectorField& b) {
  check_convolve_grids(a, b, "classical_convolve_reference");
  const GridSpec& g = a.grid;
  const int m = g.m;
  const int B = a.blades();
  const size_t np = a.points();
  const bool calibrated = (g.mode == GridMode::calibrated);
  double weight = 1.0;
  if (calibrated)
    for (int ax = 0; ax < m; ++ax) weight *= g.delta[size_t(ax)];

  MultivectorField out(g);
  std::vector<int> dx(static_cast<size_t>(m)), dy(static_cast<size_t>(m)), dz(static_cast<size_t>(m));
  Multivector va(m), vb(m);
  for (size_t x = 0; x < np; ++x) {
    size_t rem = x;
    for (int ax = m - 1; ax >= 0; --ax) {
      dx[size_t(ax)] = int(rem % size_t(g.n[size_t(ax)]));
      rem /= size_t(g.n[size_t(ax)]);
    }
    Multivector acc(m);
    for (size_t y = 0; y < np; ++y) {
      size_t remy = y;
      for (int ax = m - 1; ax >= 0; --ax) {
        dy[size_t(ax)] = int(remy % size_t(g.n[size_t(ax)]));
        remy /= size_t(g.n[size_t(ax)]);
      }
      size_t z = 0;
      for (int ax = 0; ax < m; ++ax) {
        const int N = g.n[size_t(ax)];
        int d = dx[size_t(ax)] - dy[size_t(ax)] + (calibrated ? N / 2 : 0);
        d %= N;
        if (d < 0) d += N;
        z = z * size_t(N) + size_t(d);
      }
      for (int c = 0; c < B; ++c) {
        va.c[size_t(c)] = a.plane(c)[y];
        vb.c[size_t(c)] = b.plane(c)[z];
      }
      acc += va * vb;
    }
    for (int c = 0; c < B; ++c) out.plane(c)[x] = weight * acc.c[size_t(c)];
  }
  return out;
}

MultivectorField mustard_convolve_spectral(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g) {
  check_plan_pair(plan, f, g, "mustard_convolve_spectral", false);
  const MultivectorField P = pointwise_product(gft_forward(plan, f), gft_forward(plan, g));
  double prefactor = 1.0;
  if (plan.grid.mode == GridMode::periodic)
    for (int ax = 0; ax < plan.m(); ++ax) prefactor *= std::sqrt(double(plan.grid.n[size_t(ax)]));
  else
    prefactor = std::pow(2.0 * std::numbers::pi, 0.5 * double(plan.m()));
  return gft_inverse(plan, P) * cplx{prefactor, 0.0};
}

MultivectorField mustard_convolve_reversed(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g) {
  return mustard_convolve_spectral(plan, g, f);
}

MultivectorField mustard_convolve_direct(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g,
                                         DirectOptions opts) {
  check_plan_pair(plan, f, g, "mustard_convolve_direct", true);
  const std::vector<CouplingTerm> terms = make_coupling_terms(plan, false);
  return opts.per_term ? coupled_convolve_per_term(plan, f, g, terms) : coupled_convolve_grouped(plan, f, g, terms);
}

MultivectorField tau_convolve(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g,
                              TauRoute route) {
  check_plan_pair(plan, f, g, "tau_convolve", true);
  if (route == TauRoute::closed_form)
    return coupled_convolve_grouped(plan, f, g, make_coupling_terms(plan, true));

  // Literal sum over grid translates: out(x) = sum_y f(y) [tau_y g](x).
  const int m = plan.m();
  const int B = f.blades();
  const size_t np = f.points();
  const MultivectorField Ghat = gft_forward(plan, g);
  MultivectorField out(plan.grid);
  Multivector fy(m);
  std::vector<int> shift(static_cast<size_t>(m));
  for (size_t y = 0; y < np; ++y) {
    size_t rem = y;
    for (int ax = m - 1; ax >= 0; --ax) {
      shift[size_t(ax)] = int(rem % size_t(plan.grid.n[size_t(ax)]));
      rem /= size_t(plan.grid.n[size_t(ax)]);
    }
    const MultivectorField ty = gft_inverse(plan, translate_spectrum(plan, Ghat, shift));
    for (int c = 0; c < B; ++c) fy.c[size_t(c)] = f.plane(c)[y];
    out += const_mul_left(fy, ty);
  }
  return out;
}

}  // namespace clifft

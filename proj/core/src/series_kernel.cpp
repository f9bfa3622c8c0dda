#include "clifft/series_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace clifft {

namespace {

using std::numbers::pi;

constexpr cplx kI{0.0, 1.0};
// Last-term estimate above this (relative to the kernel magnitude) means the
// series was truncated before it converged.
constexpr double kSeriesTol = 1e-6;

cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

cplx unit_ipow(cplx z, int k) {
  cplx acc{1.0, 0.0};
  for (int i = 0; i < k; ++i) acc *= z;
  return acc;
}

double vec_norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double vec_dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void check_point(const SeriesKernel& spec, const std::vector<double>& x, const char* what) {
  if (static_cast<int>(x.size()) != spec.m)
    throw std::invalid_argument(std::string(what) + ": point dimension does not match the kernel spec");
}

void check_weights(const RadialProfile& f, const char* what) {
  if (f.r.empty()) throw std::invalid_argument(std::string(what) + ": empty profile");
  if (f.w.size() != f.r.size() || f.v.size() != f.r.size())
    throw std::invalid_argument(std::string(what) + ": profile needs values and quadrature weights");
}

// e^{ sign * (i/2) cot(alpha) * q }
cplx chirp(const SeriesKernel& spec, double q) {
  const double cot = std::cos(spec.alpha) / std::sin(spec.alpha);
  return cis(0.5 * spec.sign() * cot * q);
}

// (1 - e^{-2 sign i alpha})^{m/2}, the orientation-aware normalization base.
cplx one_minus_exp_pow(const SeriesKernel& spec) {
  const cplx base = 1.0 - cis(-2.0 * spec.sign() * spec.alpha);
  return std::pow(base, 0.5 * spec.m);
}

// Scalar-series weight entering eigenvalues, radial transforms and the
// invertibility factors:  lam/(lam+k) a_k - sin(alpha) k / (2(lam+k)) b_k.
cplx combo_even(const SeriesKernel& spec, int k) {
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  return lam / (lam + k) * spec.a[k] - sa * k / (2.0 * (lam + k)) * spec.b[k];
}

// Odd-family weight: lam/(lam+k+1) a_{k+1} + sin(alpha)(k+1+2lam)/(2(lam+k+1)) b_{k+1}.
cplx combo_odd(const SeriesKernel& spec, int k) {
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  return lam / (lam + k + 1) * spec.a[k + 1] +
         sa * (k + 1 + 2.0 * lam) / (2.0 * (lam + k + 1)) * spec.b[k + 1];
}

// Gauss-Chebyshev (second kind) rule: integrates h(w) sqrt(1 - w^2) on [-1, 1].
QuadratureRule chebyshev2(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 1; i <= n; ++i) {
    const double th = i * pi / (n + 1);
    rule.nodes[i - 1] = std::cos(th);
    rule.weights[i - 1] = pi / (n + 1) * std::sin(th) * std::sin(th);
  }
  return rule;
}

// Catmull-Rom interpolation on a uniform table over [0, h*(n-1)].
cplx interp_uniform(const std::vector<cplx>& tab, double h, double s) {
  const int n = static_cast<int>(tab.size());
  double t = s / h;
  t = std::clamp(t, 0.0, static_cast<double>(n - 1));
  int i = static_cast<int>(std::floor(t));
  i = std::clamp(i, 1, n - 3);
  const double u = t - i;
  const cplx p0 = tab[i - 1], p1 = tab[i], p2 = tab[i + 1], p3 = tab[i + 2];
  return p1 + 0.5 * u *
                  (p2 - p0 +
                   u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + u * (3.0 * (p1 - p2) + p3 - p0)));
}

}  // namespace

SeriesKernel make_series_kernel(int m, double alpha, std::vector<cplx> a, std::vector<cplx> b,
                                bool inverse) {
  if (m != 4)
    throw std::invalid_argument("series kernel: only dimension m = 4 (lam = 1) is supported");
  if (!(std::abs(alpha) > 1e-12) || !(std::abs(alpha) < pi - 1e-12))
    throw std::invalid_argument("series kernel: angle must lie in (-pi, pi) excluding 0 and +-pi");
  if (a.empty()) throw std::invalid_argument("series kernel: need at least the k = 0 coefficient");
  if (b.size() != a.size())
    throw std::invalid_argument("series kernel: coefficient arrays must have equal length");
  if (std::abs(b[0]) != 0.0)
    throw std::invalid_argument("series kernel: the k = 0 bivector coefficient must be zero");
  SeriesKernel spec;
  spec.m = m;
  spec.alpha = alpha;
  spec.a = std::move(a);
  spec.b = std::move(b);
  spec.inverse = inverse;
  return spec;
}

SeriesKernel preset_classical(int kmax) {
  const double lam = 1.0;  // m = 4
  std::vector<cplx> a(kmax + 1), b(kmax + 1, cplx{0.0, 0.0});
  for (int k = 0; k <= kmax; ++k)
    a[k] = std::pow(2.0, lam) * std::tgamma(lam) * (k + lam) * unit_ipow(-kI, k);
  return make_series_kernel(4, pi / 2, std::move(a), std::move(b));
}

SeriesKernel preset_clifford_minus(int kmax) {
  const double lam = 1.0;  // m = 4
  const cplx rot = unit_ipow(kI, static_cast<int>(2 * lam) + 2);
  std::vector<cplx> a(kmax + 1), b(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    const double par = (k & 1) ? -1.0 : 1.0;
    a[k] = std::pow(2.0, lam - 1) * std::tgamma(lam + 1) * (rot + par) -
           std::pow(2.0, lam - 1) * std::tgamma(lam) * (k + lam) * (rot - par);
    b[k] = -std::pow(2.0, lam) * std::tgamma(lam + 1) * (rot + par);
  }
  b[0] = 0.0;  // unused by the kernel; zero keeps the inverse well-defined
  return make_series_kernel(4, pi / 2, std::move(a), std::move(b));
}

SeriesKernel preset_fractional_cft(double alpha, double beta, int kmax) {
  const double lam = 1.0;  // m = 4
  const double sa = std::sin(alpha);
  std::vector<cplx> a(kmax + 1), b(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    const cplx inv_ik = unit_ipow(-kI, k);  // i^{-k}
    const cplx plus = cis(beta * (k + 2.0 * lam)) + cis(-beta * k);
    const cplx minus = cis(beta * (k + 2.0 * lam)) - cis(-beta * k);
    a[k] = std::pow(2.0, lam - 1) * std::tgamma(lam) * (k + lam) * inv_ik * plus -
           std::pow(2.0, lam - 1) * std::tgamma(lam + 1) * inv_ik * minus;
    b[k] = std::pow(2.0, lam) * std::tgamma(lam + 1) / sa * inv_ik * minus;
  }
  b[0] = 0.0;  // unused by the kernel; zero keeps the inverse well-defined
  return make_series_kernel(4, alpha, std::move(a), std::move(b));
}

SeriesKernel preset_by_name(const std::string& name, double alpha, double beta, int kmax) {
  if (name == "classical") return preset_classical(kmax);
  if (name == "clifford_minus") return preset_clifford_minus(kmax);
  if (name == "fractional_cft") return preset_fractional_cft(alpha, beta, kmax);
  throw std::invalid_argument("unknown preset '" + name +
                              "' (expected classical, clifford_minus or fractional_cft)");
}

std::vector<std::string> preset_names() { return {"classical", "clifford_minus", "fractional_cft"}; }

std::string kernel_coefficients_csv(const SeriesKernel& spec) {
  const InverseCoeffs ic = inverse_coeffs(spec);
  std::ostringstream out;
  out.precision(17);
  out << "k,re_a,im_a,re_b,im_b,re_n,im_n\n";
  for (int k = 0; k <= spec.kmax(); ++k) {
    out << k << ',' << spec.a[k].real() << ',' << spec.a[k].imag() << ',' << spec.b[k].real()
        << ',' << spec.b[k].imag() << ',' << ic.n[k].real() << ',' << ic.n[k].imag() << '\n';
  }
  return out.str();
}

cplx kernel_prefactor(const SeriesKernel& spec) {
  const cplx base = pi * (1.0 - cis(-2.0 * spec.sign() * spec.alpha));
  return std::pow(base, -0.5 * spec.m);
}

KernelValue kernel_eval(const SeriesKernel& spec, const std::vector<double>& x,
                        const std::vector<double>& y) {
  check_point(spec, x, "kernel_eval");
  check_point(spec, y, "kernel_eval");
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  const double rx = vec_norm(x), ry = vec_norm(y);
  const double zt = rx * ry / sa;
  const double w = (rx * ry > 0.0) ? std::clamp(vec_dot(x, y) / (rx * ry), -1.0, 1.0) : 1.0;
  const int K = spec.kmax();

  cplx A{0.0, 0.0}, B{0.0, 0.0};
  double last_a = 0.0, last_b = 0.0;
  for (int k = 0; k <= K; ++k) {
    const cplx term = spec.a[k] * scaled_bessel_j(k + lam, lam, zt) * gegenbauer(k, lam, w);
    A += term;
    if (k == K) last_a = std::abs(term);
  }
  for (int k = 1; k <= K; ++k) {
    const cplx term =
        spec.b[k] * scaled_bessel_j(k + lam, lam + 1, zt) * gegenbauer(k - 1, lam + 1, w);
    B += term;
    if (k == K) last_b = std::abs(term);
  }

  const Multivector wxy = wedge(vector_mv(spec.m, x), vector_mv(spec.m, y));
  const cplx phase = chirp(spec, rx * rx + ry * ry);
  KernelValue out{(scalar_mv(spec.m, A) + wxy * B) * phase, last_a + mv_norm(wxy) * last_b};
  if (out.truncation > kSeriesTol * std::max(1.0, mv_norm(out.value)))
    throw std::domain_error("kernel_eval: series not converged at z = " + std::to_string(zt) +
                            " (last-term estimate " + std::to_string(out.truncation) +
                            "); increase kmax or reduce |x||y|");
  return out;
}

cplx kernel_eigenvalue(const SeriesKernel& spec, Parity parity, int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("kernel_eigenvalue: indices must be >= 0");
  const int need = (parity == Parity::even) ? k : k + 1;
  if (need > spec.kmax())
    throw std::invalid_argument("kernel_eigenvalue: mode exceeds the stored coefficients");
  const double lam = spec.lambda();
  const int s = spec.sign();
  cplx combo;
  int p, q;
  if (parity == Parity::even) {
    combo = combo_even(spec, k);
    p = k;
    q = k + 2 * j;
  } else {
    combo = combo_odd(spec, k);
    p = k + 1;
    q = k + 2 * j + 1;
  }
  return std::pow(2.0, -lam) / std::tgamma(lam + 1) * combo * unit_ipow(cplx{0.0, double(s)}, p) *
         cis(-s * spec.alpha * q);
}

InverseCoeffs inverse_coeffs(const SeriesKernel& spec) {
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  const int K = spec.kmax();
  InverseCoeffs out;
  out.a.resize(K + 1);
  out.b.resize(K + 1);
  out.n.resize(K + 1);
  const double norm = std::pow(2.0, 2.0 * lam) * std::tgamma(lam + 1) * std::tgamma(lam + 1);
  for (int k = 0; k <= K; ++k) {
    const cplx c2 =
        lam / (lam + k) * spec.a[k] + sa * (k + 2.0 * lam) / (2.0 * (lam + k)) * spec.b[k];
    out.n[k] = combo_even(spec, k) * c2 / norm;
    if (std::abs(out.n[k]) <= 1e-13 * (1.0 + std::norm(spec.a[k]) + std::norm(spec.b[k])))
      throw std::domain_error("transform not invertible at mode k = " + std::to_string(k));
    out.a[k] = (spec.a[k] + spec.b[k] * sa) / out.n[k];
    out.b[k] = -spec.b[k] / out.n[k];
  }
  return out;
}

SeriesKernel inverse_kernel(const SeriesKernel& spec) {
  InverseCoeffs ic = inverse_coeffs(spec);
  SeriesKernel out = spec;
  out.a = std::move(ic.a);
  out.b = std::move(ic.b);
  out.inverse = !spec.inverse;
  return out;
}

RadialProfile radial_transform(const SeriesKernel& spec, const RadialProfile& f0, int k,
                               Parity parity, const std::vector<double>& s_nodes) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("radial_transform: monogenic degree must be 0 or 1");
  check_weights(f0, "radial_transform");
  if (spec.kmax() < k + 1)
    throw std::invalid_argument("radial_transform: spec stores too few coefficients");
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  const cplx combo = (parity == Parity::even) ? combo_even(spec, k) : combo_odd(spec, k);
  const double nu = (parity == Parity::even) ? k + lam : k + 1 + lam;
  const double rpow = (parity == Parity::even) ? spec.m + k - 1 : spec.m + k;
  const cplx cm = 2.0 / (std::tgamma(0.5 * spec.m) * one_minus_exp_pow(spec));

  RadialProfile out;
  out.r = s_nodes.empty() ? f0.r : s_nodes;
  if (s_nodes.empty()) out.w = f0.w;
  out.v.resize(out.r.size());

  // Cache the r-side factors shared by every output node.
  std::vector<cplx> pre(f0.r.size());
  for (size_t i = 0; i < f0.r.size(); ++i)
    pre[i] = f0.w[i] * f0.v[i] * std::pow(f0.r[i], rpow) * chirp(spec, f0.r[i] * f0.r[i]);

  for (size_t jn = 0; jn < out.r.size(); ++jn) {
    const double s = out.r[jn];
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < f0.r.size(); ++i)
      acc += pre[i] * scaled_bessel_j(nu, lam, f0.r[i] * s / sa);
    out.v[jn] = cm * combo * chirp(spec, s * s) * acc;
  }
  return out;
}

RadialProfile fractional_radial_ft(int m, double alpha, const RadialProfile& f0,
                                   const std::vector<double>& s_nodes) {
  const SeriesKernel spec = preset_fractional_cft(alpha, 0.0, 4);
  if (spec.m != m) throw std::invalid_argument("fractional_radial_ft: only m = 4 is supported");
  const double lam = spec.lambda();
  // The beta = 0 preset's a0 makes this scale exactly 1; keep it explicit so
  // the normalization (classical FT at alpha = pi/2) is true by construction.
  const cplx scale = std::pow(2.0, lam) * std::tgamma(lam + 1) / spec.a[0];
  RadialProfile out = radial_transform(spec, f0, 0, Parity::even, s_nodes);
  for (auto& v : out.v) v *= scale;
  return out;
}

SphereProductCheck sphere_product_check(const SeriesKernel& spec, double r,
                                        const std::vector<double>& x,
                                        const std::vector<double>& y, int terms) {
  check_point(spec, x, "sphere_product_check");
  check_point(spec, y, "sphere_product_check");
  if (terms < 0 || terms > spec.kmax())
    throw std::invalid_argument("sphere_product_check: terms must lie in [0, kmax]");
  const InverseCoeffs ic = inverse_coeffs(spec);
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  const double cot = std::cos(spec.alpha) / sa;
  const double rx = vec_norm(x), ry = vec_norm(y);
  const double w = (rx * ry > 0.0) ? std::clamp(vec_dot(x, y) / (rx * ry), -1.0, 1.0) : 1.0;
  const double z1 = r * rx / sa, z2 = r * ry / sa;

  cplx S{0.0, 0.0}, W{0.0, 0.0};
  for (int k = 0; k <= terms; ++k) {
    const cplx coeff = lam / (lam + k) * ic.a[k] * spec.a[k] +
                       sa * sa * k * (k + 2.0 * lam) / (4.0 * lam * (lam + k)) * ic.b[k] * spec.b[k];
    S += coeff * scaled_bessel_j(k + lam, lam, z1) * scaled_bessel_j(k + lam, lam, z2) *
         gegenbauer(k, lam, w);
  }
  for (int k = 1; k <= terms; ++k) {
    const cplx coeff =
        lam / (lam + k) * (ic.b[k] * spec.a[k] + ic.a[k] * spec.b[k] + sa * ic.b[k] * spec.b[k]);
    W += coeff * scaled_bessel_j(k + lam, lam, z1) * scaled_bessel_j(k + lam, lam, z2) *
         gegenbauer(k - 1, lam + 1, w);
  }
  W *= -sa;

  std::vector<double> diff(x.size());
  for (size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  const double u = r * vec_norm(diff) / sa;
  const cplx phase = cis(-0.5 * cot * (rx * rx - ry * ry));

  SphereProductCheck out;
  out.lhs = S * phase;
  out.rhs = std::pow(2.0, lam) * std::tgamma(lam + 1) * scaled_bessel_j(lam, lam, u) * phase;
  out.gap = std::abs(out.lhs - out.rhs);
  out.wedge = std::abs(W);
  return out;
}

std::vector<cplx> translate_radial(const SeriesKernel& spec, const RadialProfile& f0,
                                   const std::vector<double>& y,
                                   const std::vector<std::vector<double>>& x_eval,
                                   RadialTranslateRoute route, int terms) {
  if (spec.inverse)
    throw std::invalid_argument("translate_radial: expects a forward (non-inverse) spec");
  check_point(spec, y, "translate_radial");
  check_weights(f0, "translate_radial");
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  const double cot = std::cos(spec.alpha) / sa;
  const double ry = vec_norm(y);
  const RadialProfile spectrum = fractional_radial_ft(spec.m, spec.alpha, f0);

  std::vector<cplx> out(x_eval.size());
  if (route == RadialTranslateRoute::closed_form) {
    const cplx c = 2.0 * spec.a[0] / std::tgamma(lam + 1) *
                   std::pow(1.0 - cis(2.0 * spec.alpha), -0.5 * spec.m);
    std::vector<double> s_vals(x_eval.size());
    for (size_t i = 0; i < x_eval.size(); ++i) {
      check_point(spec, x_eval[i], "translate_radial");
      std::vector<double> diff(y.size());
      for (size_t d = 0; d < y.size(); ++d) diff[d] = x_eval[i][d] - y[d];
      s_vals[i] = vec_norm(diff) / std::abs(sa);  // the order-lam kernel is even in s
    }
    const RadialProfile hk = hankel_transform(spectrum, lam, s_vals);
    for (size_t i = 0; i < x_eval.size(); ++i) {
      const double rx = vec_norm(x_eval[i]);
      out[i] = c * cis(-0.5 * cot * (rx * rx - ry * ry)) * hk.v[i];
    }
    return out;
  }

  // Series route: radial quadrature of the spectrum against the truncated
  // sphere-product series (scalar part; the bivector part cancels mode by mode).
  if (terms < 0 || terms > spec.kmax())
    throw std::invalid_argument("translate_radial: terms must lie in [0, kmax]");
  const InverseCoeffs ic = inverse_coeffs(spec);
  const cplx c2 = std::pow(2.0, 1.0 - lam) * spec.a[0] /
                  (std::tgamma(lam + 1) * std::tgamma(lam + 1)) *
                  std::pow(1.0 - cis(2.0 * spec.alpha), -0.5 * spec.m);
  std::vector<cplx> coeff(terms + 1);
  for (int k = 0; k <= terms; ++k)
    coeff[k] = lam / (lam + k) * ic.a[k] * spec.a[k] +
               sa * sa * k * (k + 2.0 * lam) / (4.0 * lam * (lam + k)) * ic.b[k] * spec.b[k];
  for (size_t i = 0; i < x_eval.size(); ++i) {
    check_point(spec, x_eval[i], "translate_radial");
    const double rx = vec_norm(x_eval[i]);
    const double w =
        (rx * ry > 0.0) ? std::clamp(vec_dot(x_eval[i], y) / (rx * ry), -1.0, 1.0) : 1.0;
    cplx acc{0.0, 0.0};
    for (size_t n = 0; n < spectrum.r.size(); ++n) {
      const double r = spectrum.r[n];
      const double z1 = r * rx / sa, z2 = r * ry / sa;
      cplx S{0.0, 0.0};
      for (int k = 0; k <= terms; ++k)
        S += coeff[k] * scaled_bessel_j(k + lam, lam, z1) * scaled_bessel_j(k + lam, lam, z2) *
             gegenbauer(k, lam, w);
      acc += spectrum.w[n] * spectrum.v[n] * std::pow(r, spec.m - 1) * S;
    }
    out[i] = c2 * cis(-0.5 * cot * (rx * rx - ry * ry)) * acc;
  }
  return out;
}

cplx translate_collapse_constant(const SeriesKernel& spec) {
  return std::pow(2.0, -spec.lambda()) * spec.a[0] / std::tgamma(spec.lambda() + 1);
}

std::vector<cplx> convolve_radial(const SeriesKernel& spec, const RadialProfile& f0,
                                  const RadialProfile& g0, RadialVariant variant,
                                  const std::vector<double>& radii) {
  if (spec.inverse)
    throw std::invalid_argument("convolve_radial: expects a forward (non-inverse) spec");
  check_weights(f0, "convolve_radial");
  check_weights(g0, "convolve_radial");
  for (double s : radii)
    if (s < 0.0) throw std::invalid_argument("convolve_radial: radii must be >= 0");

  if (variant == RadialVariant::spectral_left || variant == RadialVariant::spectral_right) {
    const RadialProfile ff = radial_transform(spec, f0, 0, Parity::even);
    const RadialProfile fg = radial_transform(spec, g0, 0, Parity::even, f0.r);
    RadialProfile h;
    h.r = f0.r;
    h.w = f0.w;
    h.v.resize(ff.v.size());
    for (size_t i = 0; i < ff.v.size(); ++i)
      h.v[i] = (variant == RadialVariant::spectral_left) ? ff.v[i] * fg.v[i] : fg.v[i] * ff.v[i];
    const RadialProfile outp = radial_transform(inverse_kernel(spec), h, 0, Parity::even, radii);
    const cplx scale = 1.0 / kernel_prefactor(spec);
    std::vector<cplx> out(outp.v.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = scale * outp.v[i];
    return out;
  }

  // Translation routes: the translated factor is tabulated through its
  // fractional spectrum's Hankel transform on a dense uniform grid, then the
  // m-dimensional integral reduces to (radius x cosine) quadrature.
  const RadialProfile& mover = (variant == RadialVariant::translate_left) ? f0 : g0;
  const RadialProfile& stayer = (variant == RadialVariant::translate_left) ? g0 : f0;
  const double lam = spec.lambda();
  const double sa = std::sin(spec.alpha);
  const double cot = std::cos(spec.alpha) / sa;
  const RadialProfile spectrum = fractional_radial_ft(spec.m, spec.alpha, mover);
  const cplx c = 2.0 * spec.a[0] / std::tgamma(lam + 1) *
                 std::pow(1.0 - cis(2.0 * spec.alpha), -0.5 * spec.m);

  double x_max = 0.0;
  for (double s : radii) x_max = std::max(x_max, s);
  const double rho_max = *std::max_element(stayer.r.begin(), stayer.r.end());
  const double s_max = (x_max + rho_max) / std::abs(sa) + 1e-9;
  const int table_n = 4096;
  const double step = s_max / (table_n - 1);
  std::vector<double> s_grid(table_n);
  for (int i = 0; i < table_n; ++i) s_grid[i] = i * step;
  const RadialProfile table = hankel_transform(spectrum, lam, s_grid);

  const QuadratureRule wrule = chebyshev2(64);
  const double sphere_area = 2.0 * std::pow(pi, 0.5 * spec.m) / std::tgamma(0.5 * spec.m);

  std::vector<cplx> out(radii.size());
  for (size_t ix = 0; ix < radii.size(); ++ix) {
    const double rx = radii[ix];
    cplx acc{0.0, 0.0};
    for (size_t j = 0; j < stayer.r.size(); ++j) {
      const double rho = stayer.r[j];
      cplx avg{0.0, 0.0};
      for (size_t iw = 0; iw < wrule.nodes.size(); ++iw) {
        const double d2 = std::max(0.0, rx * rx + rho * rho - 2.0 * rx * rho * wrule.nodes[iw]);
        avg += wrule.weights[iw] * interp_uniform(table.v, step, std::sqrt(d2) / std::abs(sa));
      }
      avg *= 2.0 / pi;  // normalized cosine weight for m = 4
      acc += stayer.w[j] * stayer.v[j] * std::pow(rho, spec.m - 1) *
             cis(-0.5 * cot * (rx * rx - rho * rho)) * avg;
    }
    out[ix] = sphere_area * c * acc;
  }
  return out;
}

}  // namespace clifft

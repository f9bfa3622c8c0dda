#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "clifft/series_kernel.hpp"
#include "clifft/special.hpp"

using namespace clifft;
using std::numbers::pi;

namespace {

const cplx kI{0.0, 1.0};

RadialProfile gaussian_profile() {
  return make_radial_profile(512, 12.0, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
}

// Laguerre-weighted Gaussian: the radial factor of the even basis family at
// radial index j and monogenic degree k (m = 4).
RadialProfile basis_profile(int j, int k, Parity parity) {
  const double a = (parity == Parity::even) ? 1.0 + k : 2.0 + k;
  return make_radial_profile(512, 12.0, [=](double r) {
    return cplx(laguerre(j, a, r * r) * std::exp(-0.5 * r * r));
  });
}

std::vector<double> probe_radii(int n, double r_max) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = r_max * (i + 1) / n;
  return out;
}

double dot4(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double dist4(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(s);
}

// Deterministic scattered points filling a ball of the given radius.
std::vector<std::vector<double>> scattered_points(int n, double radius) {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < n; ++i) {
    const double t = 0.37 * i + 0.21;
    const double scale = radius * (0.15 + 0.85 * ((i * 29) % 97) / 96.0);
    std::vector<double> p{std::cos(t), std::sin(1.7 * t + 0.4), std::cos(2.3 * t + 1.1),
                          std::sin(0.9 * t + 2.0)};
    double nrm = std::sqrt(dot4(p, p));
    for (auto& c : p) c *= scale / nrm;
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("spec validation rejects bad inputs") {
  std::vector<cplx> a{cplx(1.0), cplx(1.0)}, b{cplx(0.0), cplx(0.0)};
  CHECK_THROWS_AS(make_series_kernel(2, pi / 2, a, b), std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(3, pi / 2, a, b), std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(4, 0.0, a, b), std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(4, pi, a, b), std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(4, -pi, a, b), std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(4, pi / 2, std::vector<cplx>{}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(4, pi / 2, a, std::vector<cplx>{cplx(0.0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_series_kernel(4, pi / 2, a, std::vector<cplx>{cplx(1.0), cplx(0.0)}),
                  std::invalid_argument);
  CHECK_NOTHROW(make_series_kernel(4, -pi / 3, a, b));
  CHECK_THROWS_AS(preset_by_name("no_such_preset", pi / 2, 0.0, 8), std::invalid_argument);
  CHECK(preset_names().size() == 3);
}

TEST_CASE("fractional family at beta = 0, alpha = pi/2 is the classical preset") {
  const SeriesKernel cla = preset_classical(32);
  const SeriesKernel fr = preset_fractional_cft(pi / 2, 0.0, 32);
  for (int k = 0; k <= 32; ++k) {
    CHECK(std::abs(fr.a[k] - cla.a[k]) < 1e-12 * (1.0 + std::abs(cla.a[k])));
    CHECK(std::abs(fr.b[k]) == 0.0);
  }
}

TEST_CASE("classical kernel is the plane wave exp(-i<x,y>)") {
  const SeriesKernel cla = preset_classical(64);
  const auto pts = scattered_points(6, 1.8);
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto kv = kernel_eval(cla, pts[i], pts[i + 1]);
    const cplx oracle = std::exp(-kI * dot4(pts[i], pts[i + 1]));
    CHECK(std::abs(scalar_part(kv.value) - oracle) < 1e-8);
    // beta_k = 0: the value is purely scalar.
    double rest = 0.0;
    for (size_t bl = 1; bl < kv.value.c.size(); ++bl) rest += std::abs(kv.value.c[bl]);
    CHECK(rest == 0.0);
    CHECK(kv.truncation < 1e-10);
  }
}

TEST_CASE("kernel value at x = 0 is the k = 0 limiting coefficient") {
  for (const std::string& name : preset_names()) {
    const SeriesKernel spec = preset_by_name(name, pi / 2, 0.3, 32);
    const auto kv = kernel_eval(spec, {0.0, 0.0, 0.0, 0.0}, {0.7, -0.2, 0.5, 0.1});
    const cplx want = spec.a[0] * std::pow(2.0, -spec.lambda()) / std::tgamma(spec.lambda() + 1);
    CHECK(std::abs(scalar_part(kv.value) - want) < 1e-14);
    double rest = 0.0;
    for (size_t bl = 1; bl < kv.value.c.size(); ++bl) rest += std::abs(kv.value.c[bl]);
    CHECK(rest == 0.0);
  }
}

TEST_CASE("bivector kernel carries a nonzero wedge part") {
  const SeriesKernel cm = preset_clifford_minus(64);
  const auto kv = kernel_eval(cm, {0.9, -0.3, 0.4, 0.2}, {0.1, 0.8, -0.5, 0.6});
  double wedge_mag = 0.0;
  for (size_t bl = 1; bl < kv.value.c.size(); ++bl) wedge_mag += std::abs(kv.value.c[bl]);
  CHECK(wedge_mag > 0.1);
}

TEST_CASE("kernel evaluation reports non-convergence for out-of-range arguments") {
  const SeriesKernel small = preset_classical(8);
  CHECK_THROWS_AS(kernel_eval(small, {3.0, 3.0, 3.0, 3.0}, {3.0, 3.0, 3.0, 3.0}),
                  std::domain_error);
  CHECK_THROWS_AS(kernel_eval(small, {1.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("closed-form eigenvalues: fixed values") {
  const SeriesKernel cla = preset_classical(64);
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= 6; ++k) {
      const cplx want = std::pow(-kI, 2 * j + k);
      CHECK(std::abs(kernel_eigenvalue(cla, Parity::even, j, k) - want) < 1e-13);
    }
  // j = k = 0 (even): every k-dependent factor drops, leaving the k = 0
  // coefficient times the series normalization.
  for (const std::string& name : preset_names()) {
    const SeriesKernel spec = preset_by_name(name, pi / 2, 0.0, 16);
    const cplx want = std::pow(2.0, -spec.lambda()) / std::tgamma(spec.lambda() + 1) * spec.a[0] *
                      std::exp(-kI * spec.alpha * 0.0);
    CHECK(std::abs(kernel_eigenvalue(spec, Parity::even, 0, 0) - want) < 1e-13);
  }
  // Bivector preset, first odd coefficient: both stated values are exactly -1.
  const SeriesKernel cm = preset_clifford_minus(64);
  CHECK(std::abs(kernel_eigenvalue(cm, Parity::even, 0, 1) - cplx(-1.0)) < 1e-13);
  CHECK(std::abs(kernel_eigenvalue(cm, Parity::odd, 0, 0) - cplx(-1.0)) < 1e-13);
  CHECK_THROWS_AS(kernel_eigenvalue(cm, Parity::even, 0, 65), std::invalid_argument);
  CHECK_THROWS_AS(kernel_eigenvalue(cm, Parity::odd, -1, 0), std::invalid_argument);
}

TEST_CASE("quadrature transform matches closed-form eigenvalues on the basis") {
  const std::vector<double> probe = probe_radii(40, 5.0);
  for (const std::string& name : preset_names()) {
    const SeriesKernel spec = preset_by_name(name, pi / 2, pi / 4, 64);
    for (Parity parity : {Parity::even, Parity::odd})
      for (int k = 0; k <= 1; ++k)
        for (int j = 0; j <= 3; ++j) {
          const RadialProfile f0 = basis_profile(j, k, parity);
          const RadialProfile g = radial_transform(spec, f0, k, parity, probe);
          const cplx lam = kernel_eigenvalue(spec, parity, j, k);
          const int spow = (parity == Parity::even) ? k : k + 1;
          const double a = (parity == Parity::even) ? 1.0 + k : 2.0 + k;
          double num = 0.0, den = 0.0;
          for (size_t i = 0; i < probe.size(); ++i) {
            const double s = probe[i];
            const cplx want =
                lam * std::pow(s, spow) * laguerre(j, a, s * s) * std::exp(-0.5 * s * s);
            num += std::norm(g.v[i] - want);
            den += std::norm(want);
          }
          CHECK(std::sqrt(num / den) < 1e-6);
        }
  }
}

TEST_CASE("radial transform edge cases") {
  const SeriesKernel cla = preset_classical(64);
  const RadialProfile gauss = gaussian_profile();
  const std::vector<double> probe = probe_radii(24, 4.0);

  // Gaussian is a fixed point of the classical transform.
  const RadialProfile g = radial_transform(cla, gauss, 0, Parity::even, probe);
  for (size_t i = 0; i < probe.size(); ++i)
    CHECK(std::abs(g.v[i] - cplx(std::exp(-0.5 * probe[i] * probe[i]))) < 1e-10);

  // Zero input -> zero output.
  const RadialProfile zero = make_radial_profile(64, 12.0, [](double) { return cplx(0.0); });
  const RadialProfile gz = radial_transform(cla, zero, 0, Parity::even, probe);
  for (const auto& v : gz.v) CHECK(std::abs(v) == 0.0);

  CHECK_THROWS_AS(radial_transform(cla, gauss, 2, Parity::even, probe), std::invalid_argument);
  RadialProfile noweights = gauss;
  noweights.w.clear();
  CHECK_THROWS_AS(radial_transform(cla, noweights, 0, Parity::even, probe), std::invalid_argument);
}

TEST_CASE("inverse coefficients reproduce the conjugate classical kernel") {
  const SeriesKernel cla = preset_classical(64);
  const SeriesKernel inv = inverse_kernel(cla);
  CHECK(inv.inverse);
  const auto pts = scattered_points(4, 1.5);
  const auto kv = kernel_eval(inv, pts[0], pts[1]);
  CHECK(std::abs(scalar_part(kv.value) - std::exp(kI * dot4(pts[0], pts[1]))) < 1e-8);

  // beta = 0 propagates to the inverse.
  for (const auto& tb : inv.b) CHECK(std::abs(tb) == 0.0);

  // The per-mode factors alternate sign for the classical preset.
  const InverseCoeffs ic = inverse_coeffs(cla);
  for (int k = 0; k <= 20; ++k) {
    const cplx want = (k & 1) ? cplx(-1.0) : cplx(1.0);
    CHECK(std::abs(ic.n[k] - want) < 1e-12);
  }

  // Inversion is an involution on the stored coefficients.
  const SeriesKernel back = inverse_kernel(inv);
  CHECK_FALSE(back.inverse);
  for (int k = 0; k <= 64; ++k) {
    CHECK(std::abs(back.a[k] - cla.a[k]) < 1e-10 * (1.0 + std::abs(cla.a[k])));
    CHECK(std::abs(back.b[k]) < 1e-10);
  }
}

TEST_CASE("forward times inverse eigenvalue is 1 for every mode") {
  for (const std::string& name : preset_names()) {
    const SeriesKernel spec = preset_by_name(name, pi / 2, pi / 4, 64);
    const SeriesKernel inv = inverse_kernel(spec);
    for (int k = 0; k <= 20; ++k)
      for (int j = 0; j <= 2; ++j)
        for (Parity parity : {Parity::even, Parity::odd}) {
          const cplx prod =
              kernel_eigenvalue(spec, parity, j, k) * kernel_eigenvalue(inv, parity, j, k);
          CHECK(std::abs(prod - cplx(1.0)) < 1e-10);
        }
  }
}

TEST_CASE("non-invertible mode is reported") {
  // Coefficients tuned so the k = 1 invertibility factor vanishes:
  // a1/2 + (3/4) b1 = 0.
  std::vector<cplx> a{cplx(2.0), cplx(3.0)}, b{cplx(0.0), cplx(-2.0)};
  const SeriesKernel spec = make_series_kernel(4, pi / 2, a, b);
  CHECK_THROWS_WITH_AS(inverse_coeffs(spec), "transform not invertible at mode k = 1",
                       std::domain_error);
}

TEST_CASE("sphere product: series matches the closed form") {
  const std::vector<double> x{1.1, -0.6, 0.4, 0.9}, y{-0.5, 0.8, 1.2, 0.3};
  for (double alpha : {pi / 2, pi / 3}) {
    for (const std::string& name : preset_names()) {
      const SeriesKernel spec = preset_by_name(name, alpha, 0.3, 64);
      if (std::abs(spec.alpha - alpha) > 1e-12) continue;  // fixed-angle presets at pi/3
      const SphereProductCheck chk = sphere_product_check(spec, 1.7, x, y, 40);
      CHECK(chk.gap < 1e-6);
      CHECK(chk.wedge < 1e-8);
    }
    const SeriesKernel fr = preset_fractional_cft(alpha, 0.45, 64);

    // x = y makes the closed form exactly 1.
    const SphereProductCheck same = sphere_product_check(fr, 1.3, x, x, 40);
    CHECK(std::abs(same.rhs - cplx(1.0)) < 1e-14);
    CHECK(same.gap < 1e-6);

    // Truncation sweep: the gap never grows as more modes are kept.
    double prev = -1.0;
    for (int terms : {10, 20, 30, 40}) {
      const SphereProductCheck c = sphere_product_check(fr, 2.0, x, y, terms);
      if (prev >= 0.0) CHECK(c.gap <= prev + 1e-14);
      prev = c.gap;
    }
    CHECK(prev < 1e-6);
  }
  const SeriesKernel cla = preset_classical(16);
  CHECK_THROWS_AS(sphere_product_check(cla, 1.0, x, y, 17), std::invalid_argument);
}

TEST_CASE("generalized translation collapses to the geometric shift at alpha = pi/2") {
  const SeriesKernel cla = preset_classical(64);
  CHECK(std::abs(translate_collapse_constant(cla) - cplx(1.0)) < 1e-10);

  const RadialProfile gauss = gaussian_profile();
  const std::vector<double> y{0.8, -0.5, 1.1, 0.3};
  const auto xs = scattered_points(24, 4.0);
  const auto tv = translate_radial(cla, gauss, y, xs);
  for (size_t i = 0; i < xs.size(); ++i) {
    const double d = dist4(xs[i], y);
    CHECK(std::abs(tv[i] - cplx(std::exp(-0.5 * d * d))) < 1e-6);
  }

  // y = 0 recovers the profile itself.
  const auto t0 = translate_radial(cla, gauss, {0.0, 0.0, 0.0, 0.0}, xs);
  for (size_t i = 0; i < xs.size(); ++i) {
    const double r = std::sqrt(dot4(xs[i], xs[i]));
    CHECK(std::abs(t0[i] - cplx(std::exp(-0.5 * r * r))) < 1e-8);
  }
}

TEST_CASE("translation: Hankel closed form agrees with the series route") {
  const SeriesKernel fr = preset_fractional_cft(pi / 3, 0.0, 64);
  const RadialProfile gauss = gaussian_profile();
  const std::vector<double> y{0.8, -0.5, 1.1, 0.3};
  const auto xs = scattered_points(12, 2.5);
  const auto closed = translate_radial(fr, gauss, y, xs, RadialTranslateRoute::closed_form);
  const auto series = translate_radial(fr, gauss, y, xs, RadialTranslateRoute::series, 40);
  for (size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(closed[i] - series[i]) < 1e-6);
}

TEST_CASE("translation input validation") {
  const SeriesKernel cla = preset_classical(64);
  const RadialProfile gauss = gaussian_profile();
  const std::vector<double> y{0.5, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(translate_radial(inverse_kernel(cla), gauss, y, {{1.0, 0.0, 0.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(translate_radial(cla, gauss, {0.5, 0.0}, {{1.0, 0.0, 0.0, 0.0}}),
                  std::invalid_argument);
  // A profile that does not decay has no convergent radial spectrum.
  const RadialProfile flat = make_radial_profile(256, 12.0, [](double) { return cplx(1.0); });
  CHECK_THROWS_AS(translate_radial(cla, flat, y, {{1.0, 0.0, 0.0, 0.0}}), std::domain_error);
}

TEST_CASE("fractional radial spectrum at pi/2 is the classical radial transform") {
  const RadialProfile gauss = gaussian_profile();
  const std::vector<double> probe = probe_radii(20, 4.0);
  const RadialProfile fa = fractional_radial_ft(4, pi / 2, gauss, probe);
  const RadialProfile hk = hankel_transform(gauss, 1.0, probe);
  for (size_t i = 0; i < probe.size(); ++i) CHECK(std::abs(fa.v[i] - hk.v[i]) < 1e-12);
}

TEST_CASE("four radial convolution variants coincide (Gaussian x Gaussian)") {
  const SeriesKernel cla = preset_classical(64);
  const RadialProfile gauss = gaussian_profile();
  const std::vector<double> radii = probe_radii(16, 4.5);

  std::vector<std::vector<cplx>> res;
  for (RadialVariant v : {RadialVariant::spectral_left, RadialVariant::spectral_right,
                          RadialVariant::translate_left, RadialVariant::translate_right})
    res.push_back(convolve_radial(cla, gauss, gauss, v, radii));

  // Closed-form oracle: the classical convolution of two unit Gaussians.
  for (size_t i = 0; i < radii.size(); ++i) {
    const cplx want = pi * pi * std::exp(-radii[i] * radii[i] / 4.0);
    for (const auto& r : res) CHECK(std::abs(r[i] - want) < 1e-7);
  }
  for (size_t a = 0; a < res.size(); ++a)
    for (size_t b = a + 1; b < res.size(); ++b)
      for (size_t i = 0; i < radii.size(); ++i) CHECK(std::abs(res[a][i] - res[b][i]) < 1e-8);
}

TEST_CASE("four radial convolution variants coincide (Gaussian x Laguerre-weighted Gaussian)") {
  const SeriesKernel cla = preset_classical(64);
  const RadialProfile gauss = gaussian_profile();
  const RadialProfile lag = basis_profile(1, 0, Parity::even);  // (2 - r^2) e^{-r^2/2}
  const std::vector<double> radii = probe_radii(16, 4.5);

  std::vector<std::vector<cplx>> res;
  for (RadialVariant v : {RadialVariant::spectral_left, RadialVariant::spectral_right,
                          RadialVariant::translate_left, RadialVariant::translate_right})
    res.push_back(convolve_radial(cla, gauss, lag, v, radii));
  for (size_t a = 0; a < res.size(); ++a)
    for (size_t b = a + 1; b < res.size(); ++b)
      for (size_t i = 0; i < radii.size(); ++i) CHECK(std::abs(res[a][i] - res[b][i]) < 1e-8);

  // Spectral-left vs translate-right and spectral-right vs translate-left are
  // the scalar-input identities; state them explicitly.
  for (size_t i = 0; i < radii.size(); ++i) {
    CHECK(std::abs(res[0][i] - res[3][i]) < 1e-8);
    CHECK(std::abs(res[1][i] - res[2][i]) < 1e-8);
  }
}

TEST_CASE("convolution edge cases") {
  const SeriesKernel cla = preset_classical(64);
  const RadialProfile gauss = gaussian_profile();
  const RadialProfile zero = make_radial_profile(128, 12.0, [](double) { return cplx(0.0); });
  const std::vector<double> radii = probe_radii(8, 3.0);
  for (RadialVariant v : {RadialVariant::spectral_left, RadialVariant::translate_left}) {
    const auto out = convolve_radial(cla, gauss, zero, v, radii);
    for (const auto& c : out) CHECK(std::abs(c) < 1e-12);
  }
  CHECK_THROWS_AS(convolve_radial(inverse_kernel(cla), gauss, gauss,
                                  RadialVariant::spectral_left, radii),
                  std::invalid_argument);
  CHECK_THROWS_AS(convolve_radial(cla, gauss, gauss, RadialVariant::spectral_left, {-1.0}),
                  std::invalid_argument);
}

TEST_CASE("coefficient CSV dump") {
  const SeriesKernel cla = preset_classical(8);
  const std::string csv = kernel_coefficients_csv(cla);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,re_a,im_a,re_b,im_b,re_n,im_n");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9);
  // First row: k = 0, a0 = 2, b0 = 0, n0 = 1.
  CHECK(csv.find("0,2,0,0,0,1,0") != std::string::npos);
}

#include "clifft/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace clifft {

double bessel_j(double nu, double z) {
  if (nu < 0.0) throw std::invalid_argument("bessel_j: order must be >= 0");
  if (z < 0.0) throw std::invalid_argument("bessel_j: argument must be >= 0");
  return std::cyl_bessel_j(nu, z);
}

double scaled_bessel_j(double nu, double lam, double z) {
  if (nu < lam) throw std::invalid_argument("scaled_bessel_j: needs nu >= lam for a finite z -> 0 limit");
  if (z < 0.0) {
    // Every series term carries z^{nu-lam+2j}, so the function extends to z < 0
    // with parity (-1)^{nu-lam} whenever nu-lam is an integer.
    const double p = nu - lam;
    const double p_round = std::round(p);
    if (std::abs(p - p_round) > 1e-12)
      throw std::invalid_argument("scaled_bessel_j: argument must be >= 0 unless nu - lam is an integer");
    const double refl = scaled_bessel_j(nu, lam, -z);
    return (static_cast<long long>(p_round) & 1) ? -refl : refl;
  }
  if (z > 0.5) return bessel_j(nu, z) / std::pow(z, lam);
  // Ascending series of z^{-lam} J_nu(z); converges in a few terms for z <= 0.5.
  double sum = 0.0;
  for (int j = 0; j < 30; ++j) {
    const double lg = -std::lgamma(j + 1.0) - std::lgamma(nu + j + 1.0) - (nu + 2 * j) * std::numbers::ln2;
    double term;
    if (z == 0.0) {
      if (nu - lam + 2 * j != 0.0) continue;
      term = std::exp(lg);
    } else {
      term = std::exp(lg + (nu - lam + 2 * j) * std::log(z));
    }
    sum += (j & 1) ? -term : term;
    if (term < 1e-18 * std::max(1.0, std::abs(sum)) && j > 2) break;
  }
  return sum;
}

double gegenbauer(int k, double lam, double w) {
  if (k < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
  if (lam <= 0.0) throw std::invalid_argument("gegenbauer: parameter lam must be > 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lam * w;
  for (int n = 1; n < k; ++n) {
    const double next = (2.0 * (n + lam) * w * cur - (n + 2.0 * lam - 1.0) * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double alpha, double t) {
  if (n < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre: parameter alpha must be > -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - t;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - t) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_poly(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_poly: degree must be >= 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int n = 1; n < k; ++n) {
    const double next = 2.0 * x * cur - 2.0 * n * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_fn(int k, double x) { return hermite_poly(k, x) * std::exp(-0.5 * x * x); }

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  if (!(b > a)) throw std::invalid_argument("gauss_legendre: need b > a");
  QuadratureRule rule;
  rule.nodes.resize(size_t(n));
  rule.weights.resize(size_t(n));
  // Roots of P_n on [-1, 1] by Newton iteration from the Chebyshev guess.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Re-evaluate P' at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double wgt = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1,1] -> [a,b]; Chebyshev guesses descend, store ascending.
    rule.nodes[size_t(n - 1 - i)] = 0.5 * (b - a) * x + 0.5 * (a + b);
    rule.weights[size_t(n - 1 - i)] = 0.5 * (b - a) * wgt;
  }
  return rule;
}

RadialProfile make_radial_profile(int n, double r_max, const std::function<std::complex<double>(double)>& f) {
  if (!(r_max > 0.0)) throw std::invalid_argument("make_radial_profile: r_max must be > 0");
  const QuadratureRule rule = gauss_legendre(n, 0.0, r_max);
  RadialProfile p;
  p.r = rule.nodes;
  p.w = rule.weights;
  p.v.resize(p.r.size());
  for (size_t i = 0; i < p.r.size(); ++i) p.v[i] = f(p.r[i]);
  return p;
}

std::complex<double> radial_integral(const RadialProfile& f) {
  if (f.w.size() != f.r.size()) throw std::invalid_argument("radial_integral: profile carries no quadrature weights");
  std::complex<double> s{0.0, 0.0};
  for (size_t i = 0; i < f.r.size(); ++i) s += f.w[i] * f.v[i];
  return s;
}

static void check_profile_decays(const RadialProfile& f, const char* what) {
  double overall = 0.0;
  for (const auto& x : f.v) overall = std::max(overall, std::abs(x));
  if (overall == 0.0) return;
  double tail = 0.0;
  const size_t start = f.v.size() - std::max<size_t>(1, f.v.size() / 20);
  for (size_t i = start; i < f.v.size(); ++i) tail = std::max(tail, std::abs(f.v[i]));
  if (tail > 1e-8 * overall)
    throw std::domain_error(std::string(what) + ": profile does not decay at the truncation radius (tail/max = " +
                            std::to_string(tail / overall) + "); enlarge r_max");
}

RadialProfile hankel_transform(const RadialProfile& f, double lam, const std::vector<double>& s_nodes) {
  if (f.w.size() != f.r.size()) throw std::invalid_argument("hankel_transform: profile carries no quadrature weights");
  check_profile_decays(f, "hankel_transform");
  RadialProfile out;
  out.r = s_nodes;
  out.v.assign(s_nodes.size(), {0.0, 0.0});
  for (size_t j = 0; j < s_nodes.size(); ++j) {
    const double s = s_nodes[j];
    if (s < 0.0) throw std::invalid_argument("hankel_transform: evaluation points must be >= 0");
    std::complex<double> acc{0.0, 0.0};
    for (size_t i = 0; i < f.r.size(); ++i) {
      const double r = f.r[i];
      // J_lam(rs)/(rs)^lam * r^{2lam+1} = scaled_bessel_j(lam, lam, rs) * s^{-lam} ... keep it
      // in the numerically safe scaled form: kernel = scaled(rs) where scaled(z) = z^{-lam}J_lam(z).
      const double kern = scaled_bessel_j(lam, lam, r * s);
      acc += f.w[i] * f.v[i] * kern * std::pow(r, 2.0 * lam + 1.0);
    }
    out.v[j] = acc;
  }
  return out;
}

}  // namespace clifft

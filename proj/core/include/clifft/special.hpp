#pragma once
// Scalar special functions and 1-D quadrature: Bessel J_nu, Gegenbauer and
// Laguerre polynomials, Hermite functions, Gauss-Legendre rules, radial
// profiles and the Hankel transform of order lambda.

#include <complex>
#include <functional>
#include <vector>

namespace clifft {

/// Bessel function of the first kind, nu >= 0, z >= 0.
double bessel_j(double nu, double z);

/// z^{-lam} * J_{nu}(z), finite for z -> 0 when nu >= lam (series used for
/// small z to avoid 0/0). Defined for z < 0 via the parity (-1)^{nu-lam} of
/// the power series when nu - lam is an integer.
double scaled_bessel_j(double nu, double lam, double z);

/// Gegenbauer polynomial C_k^lam(w), lam > 0.
double gegenbauer(int k, double lam, double w);

/// Generalized Laguerre polynomial L_n^alpha(t), alpha > -1.
double laguerre(int n, double alpha, double t);

/// Physicists' Hermite polynomial H_k (H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}).
double hermite_poly(int k, double x);

/// Hermite function psi_k(x) = H_k(x) exp(-x^2/2); the k-th iterate of
/// (x - d/dx) applied to exp(-x^2/2).
double hermite_fn(int k, double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// A function of radius sampled on a positive quadrature grid; values may be
/// complex (transforms of real profiles generally are).
struct RadialProfile {
  std::vector<double> r;                   // nodes, strictly increasing, > 0
  std::vector<std::complex<double>> v;     // samples f(r_i)
  std::vector<double> w;                   // quadrature weights (may be empty for
                                           // evaluation-only profiles)
};

/// Profile sampled on an n-node Gauss-Legendre rule over [0, r_max].
RadialProfile make_radial_profile(int n, double r_max, const std::function<std::complex<double>(double)>& f);

/// Weighted dot <f, g> = sum w_i f_i g_i; f must carry weights.
std::complex<double> radial_integral(const RadialProfile& f);

/// Hankel transform of order lam:
///   (H_lam f)(s) = int_0^inf f(r) J_lam(r s) / (r s)^lam r^{2 lam + 1} dr,
/// evaluated at s_nodes by the profile's own quadrature rule.  Throws if the
/// profile does not decay at its outer truncation radius (truncation would
/// dominate the result).
RadialProfile hankel_transform(const RadialProfile& f, double lam, const std::vector<double>& s_nodes);

}  // namespace clifft

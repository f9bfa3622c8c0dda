#pragma once
// Radial series kernels on R^4: integral kernels of the form
//
//     K(x, y) = ( A(w, z) + (x ^ y) B(w, z) ) * e^{(i/2) cot(alpha) (|x|^2 + |y|^2)}
//
// with A, B given by Bessel-Gegenbauer coefficient series in z = |x||y|/sin(alpha)
// and w = <x,y>/(|x||y|).  The induced integral transform diagonalizes on
// Laguerre-monogenic profiles; this module provides
//
//  * coefficient presets (classical FT kernel, a Clifford bivector kernel,
//    and a two-parameter fractional family) addressable by name,
//  * pointwise kernel evaluation with a truncation estimate,
//  * closed-form eigenvalues on the Laguerre-monogenic basis,
//  * inverse-kernel coefficients and the inverse spec itself,
//  * the 1-D radial reduction of the transform (Gauss-Legendre quadrature),
//  * the sphere average of (inverse kernel) * (kernel), series vs closed form,
//  * the generalized translation of radial profiles (Hankel closed form and a
//    series route), and
//  * four radial convolution products (two spectral, two translation-based).
//
// All angles alpha lie in (-pi, pi) excluding 0; inversion is represented by a
// flag on the spec (conjugated chirp and prefactor), never by a negative angle,
// so z stays on the branch the coefficient series was built for.

#include "clifft/algebra.hpp"
#include "clifft/special.hpp"

#include <string>
#include <vector>

namespace clifft {

struct SeriesKernel {
  int m = 4;             // ambient dimension; lam = (m - 2)/2
  double alpha = 0.0;    // angle in (-pi, pi) \ {0}
  std::vector<cplx> a;   // scalar-series coefficients, k = 0..kmax
  std::vector<cplx> b;   // bivector-series coefficients; b[0] == 0 (unused by the kernel)
  bool inverse = false;  // reversed orientation: conjugated chirp and prefactor

  double lambda() const { return 0.5 * (m - 2); }
  int kmax() const { return static_cast<int>(a.size()) - 1; }
  int sign() const { return inverse ? -1 : +1; }
};

/// Validates and assembles a spec.  Only m = 4 (lam = 1) is supported: m = 2
/// degenerates the Gegenbauer weight and the series normalization.
SeriesKernel make_series_kernel(int m, double alpha, std::vector<cplx> a, std::vector<cplx> b,
                                bool inverse = false);

/// Presets (m = 4).  `classical` is the plane-wave kernel e^{-i<x,y>} at
/// alpha = pi/2; `clifford_minus` the bivector-valued kernel with the same
/// angle; `fractional_cft(alpha, beta)` a two-parameter family with
/// fractional_cft(alpha, 0) the classical kernel continued to angle alpha.
SeriesKernel preset_classical(int kmax = 64);
SeriesKernel preset_clifford_minus(int kmax = 64);
SeriesKernel preset_fractional_cft(double alpha, double beta, int kmax = 64);

/// Registry used by the CLI: name in {classical, clifford_minus,
/// fractional_cft}; alpha/beta are consumed by fractional_cft only.
SeriesKernel preset_by_name(const std::string& name, double alpha, double beta, int kmax = 64);
std::vector<std::string> preset_names();

/// CSV dump: k, re_a, im_a, re_b, im_b, re_n, im_n (n = invertibility factors).
std::string kernel_coefficients_csv(const SeriesKernel& spec);

/// Normalization in front of the integral transform:
/// (pi (1 - e^{-2 i alpha}))^{-m/2}, conjugated for inverse specs.
cplx kernel_prefactor(const SeriesKernel& spec);

struct KernelValue {
  Multivector value;  // scalar part + bivector (x ^ y) part, chirp included
  double truncation;  // magnitude of the last retained series terms
};

/// Evaluates the kernel at points x, y (size m).  Throws std::domain_error
/// when the last-term estimate shows the series has not converged at
/// z = |x||y|/sin(alpha) (enlarge kmax or shrink the arguments).
KernelValue kernel_eval(const SeriesKernel& spec, const std::vector<double>& x,
                        const std::vector<double>& y);

enum class Parity { even, odd };

/// Eigenvalue of the transform on the Laguerre-monogenic basis element with
/// radial index j and monogenic degree k; `parity` selects the plain (even)
/// or vector-valued (odd) family.
cplx kernel_eigenvalue(const SeriesKernel& spec, Parity parity, int j, int k);

struct InverseCoeffs {
  std::vector<cplx> a;  // scalar-series coefficients of the inverse kernel
  std::vector<cplx> b;  // bivector-series coefficients of the inverse kernel
  std::vector<cplx> n;  // per-mode invertibility factors
};

/// Coefficients of the inverse kernel.  Throws std::domain_error
/// ("transform not invertible at mode k") when some n[k] vanishes.
InverseCoeffs inverse_coeffs(const SeriesKernel& spec);

/// The inverse transform's spec: inverse coefficients + flipped orientation.
/// Involutive: inverse_kernel(inverse_kernel(s)) reproduces s.
SeriesKernel inverse_kernel(const SeriesKernel& spec);

/// Radial reduction of the transform on f0(|x|) M_k (even) or
/// f0(|x|) x M_k(x) (odd), monogenic degrees k in {0, 1}.  Returns the output
/// profile relative to the same angular factor, evaluated at `s_nodes`
/// (default: f0's own nodes, keeping f0's quadrature weights so transforms
/// chain).  f0 must carry quadrature weights.
RadialProfile radial_transform(const SeriesKernel& spec, const RadialProfile& f0, int k,
                               Parity parity, const std::vector<double>& s_nodes = {});

/// Radial profile of the fractional classical transform at angle alpha of a
/// radial scalar function (the k = 0 even radial_transform of the beta = 0
/// fractional preset, normalized so alpha = pi/2 is the classical FT).
RadialProfile fractional_radial_ft(int m, double alpha, const RadialProfile& f0,
                                   const std::vector<double>& s_nodes = {});

struct SphereProductCheck {
  cplx lhs;      // truncated series for the sphere average of K~(r eta, x) K(y, r eta)
  cplx rhs;      // closed form 2^lam Gamma(lam+1) u^{-lam} J_lam(u) * chirp
  double gap;    // |lhs - rhs|
  double wedge;  // magnitude of the bivector coefficient of lhs (cancels exactly)
};

/// Series-vs-closed-form check of the sphere average of the product of the
/// inverse kernel and the kernel, truncated at `terms` <= kmax.
SphereProductCheck sphere_product_check(const SeriesKernel& spec, double r,
                                        const std::vector<double>& x,
                                        const std::vector<double>& y, int terms);

enum class RadialTranslateRoute {
  closed_form,  // Hankel transform of the fractional radial spectrum
  series        // radial quadrature against the sphere-product series
};

/// Generalized translation of a radial profile: values of tau_y f at the
/// evaluation points.  `terms` applies to the series route only.
std::vector<cplx> translate_radial(const SeriesKernel& spec, const RadialProfile& f0,
                                   const std::vector<double>& y,
                                   const std::vector<std::vector<double>>& x_eval,
                                   RadialTranslateRoute route = RadialTranslateRoute::closed_form,
                                   int terms = 40);

/// At alpha = pi/2 the translation collapses to this constant times the
/// geometric translate f0(|x - y|); equals 2^{-lam} a0 / Gamma(lam + 1)
/// (= 1 for the classical preset).
cplx translate_collapse_constant(const SeriesKernel& spec);

enum class RadialVariant {
  spectral_left,   // prefactor^{-1} * inverse transform of F(f) F(g)
  spectral_right,  // prefactor^{-1} * inverse transform of F(g) F(f)
  translate_left,  // integral of [tau_y f](x) g(y) dy
  translate_right  // integral of f(y) [tau_y g](x) dy
};

/// Generalized convolution of radial scalar profiles, evaluated at `radii`.
/// All four variants coincide for radial real inputs.
std::vector<cplx> convolve_radial(const SeriesKernel& spec, const RadialProfile& f0,
                                  const RadialProfile& g0, RadialVariant variant,
                                  const std::vector<double>& radii);

}  // namespace clifft

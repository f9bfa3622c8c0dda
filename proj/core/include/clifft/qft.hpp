#pragma once
// Quaternion (Cl(0,2)) view of the geometric Fourier transform plus a color
// image filtering pipeline built on it:
//  * Quaternion / QuaternionImage value types with 8-bit RGB encode/decode
//  * make_qft_plan / qft / qft_inverse — two-sided transform, one root per side
//  * qft_conv_theorem_rhs — split expansion equal to the transform of the
//    classical circular convolution
//  * mustard_q — symmetric sixteen-term reflection form of the Mustard
//    convolution
//  * filter_field / filter_image and the shipped frequency multipliers
//
// The quaternion units are identified with blades as i = e1, j = e2,
// k = e1 e2; real-coefficient multivectors in Cl(0,2) are exactly the
// quaternions under this identification.

#include <string>
#include <vector>

#include "clifft/algebra.hpp"
#include "clifft/gft.hpp"
#include "clifft/grid.hpp"
#include "clifft/ppm.hpp"

namespace clifft {

/// q = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Extract a quaternion from a Cl(0,2) multivector whose coefficients are
/// real up to imag_tol. Throws std::invalid_argument when a.m != 2 and
/// std::domain_error when an imaginary part exceeds the tolerance.
Quaternion quaternion_from_mv(const Multivector& a, double imag_tol = 1e-12);
Multivector quaternion_to_mv(const Quaternion& q);

/// Row-major raster of quaternion samples. encoded_rgb marks rasters created
/// by encode_rgb; those are pure quaternions (zero scalar part).
struct QuaternionImage {
  int width = 0;
  int height = 0;
  std::vector<Quaternion> pix;
  bool encoded_rgb = false;

  Quaternion& at(int x, int y) { return pix[size_t(y) * width + x]; }
  const Quaternion& at(int x, int y) const { return pix[size_t(y) * width + x]; }
};

/// (r, g, b) -> (r/255) i + (g/255) j + (b/255) k per pixel.
QuaternionImage encode_rgb(const RgbImage& img);

struct DecodeResult {
  RgbImage image;
  double max_scalar_residue = 0.0;  // largest |scalar part| discarded
};

/// Clamp the i, j, k channels to [0, 1], quantize to 8 bits, and drop the
/// scalar channel, reporting its largest magnitude.
DecodeResult decode_rgb(const QuaternionImage& img);

/// Quaternion raster -> Cl(0,2) field on a periodic {height, width} grid.
/// Axis 0 runs over rows and axis 1 over columns, so the flat row-major
/// layouts of raster and field planes coincide.
MultivectorField image_to_field(const QuaternionImage& img);

/// Inverse of image_to_field for (numerically) real fields. Throws
/// std::domain_error when an imaginary part exceeds imag_tol; when max_imag
/// is non-null the largest |imaginary part| seen is stored there.
QuaternionImage image_from_field(const MultivectorField& f, double imag_tol = 1e-9,
                                 double* max_imag = nullptr);

/// Two-sided quaternion transform plan on an m = 2 grid: kernel factor
/// exp(-mu x1 u1) on the left of the signal and exp(-nu x2 u2) on the right.
/// Any unit pure-quaternion (or other) roots of -1 are accepted, including
/// non-orthogonal pairs.
GftPlan make_qft_plan(GridSpec grid, const RootOfMinusOne& mu, const RootOfMinusOne& nu);

/// Forward / inverse transform. Thin wrappers over the general engine that
/// insist the plan has the one-root-per-side quaternion shape.
MultivectorField qft(const GftPlan& plan, const MultivectorField& f);
MultivectorField qft_inverse(const GftPlan& plan, const MultivectorField& f);

/// Right-hand side of the convolution theorem for the classical circular
/// convolution. With W = (N1 N2)^{-1/2} the total transform weight,
///   F^{mu,nu}(f * g) = W^{-1} sum_{j,k in {0,1}}
///       (F^{mu,(-1)^k nu} f)_{c^j(mu)} . F^{(-1)^j mu, nu}(g_{c^k(nu)})
/// where (.)_{c^0(b)} / (.)_{c^1(b)} are the commuting / anticommuting parts
/// with respect to b. Periodic grids only.
MultivectorField qft_conv_theorem_rhs(const GftPlan& plan, const MultivectorField& f,
                                      const MultivectorField& g);

/// Symmetric sixteen-term form of the Mustard convolution:
///   (1/4) sum_{j1 j2 k1 k2} c . (mu^{j1} f^{k1} nu^{j2}) * (mu^{j1} g^{k2} nu^{j2})
/// where f^{k1}(x1, x2) = f(x1, (-1)^{k1} x2), g^{k2}(x1, x2) = g((-1)^{k2} x1, x2),
/// c = (-1)^{(k2+1)[j1=1]} (-1)^{(k1+1)[j2=1]}, and * is the classical
/// circular convolution. Equals mustard_convolve_spectral(plan, f, g).
/// Periodic grids only.
MultivectorField mustard_q(const GftPlan& plan, const MultivectorField& f,
                           const MultivectorField& g);

/// Number of classical convolutions mustard_q evaluates (the index ranges
/// j1, j2, k1, k2 each run over {0, 1}).
int mustard_q_term_count();

/// Frequency-domain filtering: inverse(multiplier . forward(f)). The field
/// and multiplier grids must match the plan's.
MultivectorField filter_field(const GftPlan& plan, const MultivectorField& f,
                              const MultivectorField& multiplier);

struct FilterResult {
  RgbImage image;
  double max_scalar_residue = 0.0;  // discarded by decode_rgb
  double max_imag_residue = 0.0;    // discarded when realizing the field
};

/// Full image pipeline: decode(inverse(multiplier . forward(encode(img)))).
FilterResult filter_image(const RgbImage& img, const MultivectorField& multiplier,
                          const RootOfMinusOne& mu, const RootOfMinusOne& nu);

/// Scalar Gaussian low-pass multiplier exp(-d(u)^2 / (2 sigma^2)) where d is
/// the centered index distance on the periodic frequency torus.
MultivectorField lowpass_multiplier(const GridSpec& grid, double sigma);

/// Directional phase multiplier exp(-mu theta(u)) = cos(theta) - sin(theta) mu
/// with theta(u) = atan2(d2, d1) over the centered index offsets (d1 along
/// axis 0, d2 along axis 1); the zero frequency gets multiplier 1.
MultivectorField directional_phase_multiplier(const GridSpec& grid, const RootOfMinusOne& mu);

/// Per-pixel basis rotation q -> r q r^{-1} by a (nonzero) quaternion r.
/// Pure quaternions stay pure, so RGB data can be aligned with an arbitrary
/// grey-line axis before filtering.
QuaternionImage rotate_basis(const QuaternionImage& img, const Quaternion& r);

}  // namespace clifft

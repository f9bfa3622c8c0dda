#include "clifft/qft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clifft/mustard.hpp"

namespace clifft {
namespace {

void require_qft_plan(const GftPlan& plan, const char* who) {
  if (plan.grid.m != 2 || plan.left_roots.size() != 1 || plan.right_roots.size() != 1)
    throw std::invalid_argument(std::string(who) +
                                ": plan must be two-dimensional with one root per side");
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* who) {
  if (!same_grid(a, b)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

void require_periodic(const GridSpec& g, const char* who) {
  if (g.mode != GridMode::periodic)
    throw std::invalid_argument(std::string(who) + ": periodic grids only");
}

// Part of f commuting (which = 0) or anticommuting (which = 1) with the
// constant root b, computed as (f -+ b f b) / 2 since b^{-1} = -b.
MultivectorField split_part(const MultivectorField& f, const RootOfMinusOne& b, int which) {
  MultivectorField conj = const_mul_right(const_mul_left(b.i, f), b.i);
  return (which == 0) ? (f - conj) * cplx(0.5, 0.0) : (f + conj) * cplx(0.5, 0.0);
}

// Centered index offset on a periodic axis: 0, 1, ..., N/2, -(N/2 - 1), ..., -1.
double centered_offset(int j, int n) { return (j <= n / 2) ? double(j) : double(j - n); }

unsigned char quantize_channel(double v) {
  const double clamped = std::clamp(v, 0.0, 1.0);
  return static_cast<unsigned char>(std::lround(clamped * 255.0));
}

}  // namespace

Quaternion quaternion_from_mv(const Multivector& a, double imag_tol) {
  if (a.m != 2) throw std::invalid_argument("quaternion_from_mv: multivector must live in Cl(0,2)");
  double worst = 0.0;
  for (const auto& x : a.c) worst = std::max(worst, std::abs(x.imag()));
  if (worst > imag_tol)
    throw std::domain_error("quaternion_from_mv: imaginary residue " + std::to_string(worst) +
                            " exceeds tolerance");
  return Quaternion{a.c[0].real(), a.c[1].real(), a.c[2].real(), a.c[3].real()};
}

Multivector quaternion_to_mv(const Quaternion& q) {
  Multivector a(2);
  a.c[0] = q.w;
  a.c[1] = q.x;
  a.c[2] = q.y;
  a.c[3] = q.z;
  return a;
}

QuaternionImage encode_rgb(const RgbImage& img) {
  QuaternionImage out;
  out.width = img.width;
  out.height = img.height;
  out.encoded_rgb = true;
  out.pix.resize(size_t(img.width) * size_t(img.height));
  for (size_t p = 0; p < out.pix.size(); ++p) {
    out.pix[p] = Quaternion{0.0, img.data[3 * p + 0] / 255.0, img.data[3 * p + 1] / 255.0,
                            img.data[3 * p + 2] / 255.0};
  }
  return out;
}

DecodeResult decode_rgb(const QuaternionImage& img) {
  DecodeResult res;
  res.image.width = img.width;
  res.image.height = img.height;
  res.image.data.resize(3 * img.pix.size());
  for (size_t p = 0; p < img.pix.size(); ++p) {
    const Quaternion& q = img.pix[p];
    res.max_scalar_residue = std::max(res.max_scalar_residue, std::abs(q.w));
    res.image.data[3 * p + 0] = quantize_channel(q.x);
    res.image.data[3 * p + 1] = quantize_channel(q.y);
    res.image.data[3 * p + 2] = quantize_channel(q.z);
  }
  return res;
}

MultivectorField image_to_field(const QuaternionImage& img) {
  if (img.width < 2 || img.height < 2)
    throw std::invalid_argument("image_to_field: image must be at least 2x2");
  if (img.pix.size() != size_t(img.width) * size_t(img.height))
    throw std::invalid_argument("image_to_field: pixel count does not match dimensions");
  MultivectorField f(make_grid(2, GridMode::periodic, {img.height, img.width}));
  for (size_t p = 0; p < img.pix.size(); ++p) {
    f.plane(0)[p] = img.pix[p].w;
    f.plane(1)[p] = img.pix[p].x;
    f.plane(2)[p] = img.pix[p].y;
    f.plane(3)[p] = img.pix[p].z;
  }
  return f;
}

QuaternionImage image_from_field(const MultivectorField& f, double imag_tol, double* max_imag) {
  if (f.m() != 2) throw std::invalid_argument("image_from_field: field must live in Cl(0,2)");
  double worst = 0.0;
  for (const auto& x : f.data) worst = std::max(worst, std::abs(x.imag()));
  if (max_imag) *max_imag = worst;
  if (worst > imag_tol)
    throw std::domain_error("image_from_field: imaginary residue " + std::to_string(worst) +
                            " exceeds tolerance");
  QuaternionImage img;
  img.height = f.grid.n[0];
  img.width = f.grid.n[1];
  img.pix.resize(f.points());
  for (size_t p = 0; p < img.pix.size(); ++p) {
    img.pix[p] = Quaternion{f.plane(0)[p].real(), f.plane(1)[p].real(), f.plane(2)[p].real(),
                            f.plane(3)[p].real()};
  }
  return img;
}

GftPlan make_qft_plan(GridSpec grid, const RootOfMinusOne& mu, const RootOfMinusOne& nu) {
  if (grid.m != 2) throw std::invalid_argument("make_qft_plan: grid must be two-dimensional");
  return make_plan(std::move(grid), {mu}, {nu});
}

MultivectorField qft(const GftPlan& plan, const MultivectorField& f) {
  require_qft_plan(plan, "qft");
  return gft_forward(plan, f);
}

MultivectorField qft_inverse(const GftPlan& plan, const MultivectorField& f) {
  require_qft_plan(plan, "qft_inverse");
  return gft_inverse(plan, f);
}

MultivectorField qft_conv_theorem_rhs(const GftPlan& plan, const MultivectorField& f,
                                      const MultivectorField& g) {
  require_qft_plan(plan, "qft_conv_theorem_rhs");
  require_periodic(plan.grid, "qft_conv_theorem_rhs");
  require_same_grid(plan.grid, f.grid, "qft_conv_theorem_rhs");
  require_same_grid(plan.grid, g.grid, "qft_conv_theorem_rhs");
  const RootOfMinusOne& mu = plan.left_roots[0];
  const RootOfMinusOne& nu = plan.right_roots[0];
  const RootOfMinusOne mu_neg(-mu.i);
  const RootOfMinusOne nu_neg(-nu.i);
  MultivectorField rhs(plan.grid);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const GftPlan plan_f = make_plan(plan.grid, {mu}, {k ? nu_neg : nu});
      const GftPlan plan_g = make_plan(plan.grid, {j ? mu_neg : mu}, {nu});
      const MultivectorField Ff = split_part(gft_forward(plan_f, f), mu, j);
      const MultivectorField Fg = gft_forward(plan_g, split_part(g, nu, k));
      rhs += pointwise_product(Ff, Fg);
    }
  }
  return rhs * cplx(std::sqrt(double(plan.grid.points())), 0.0);
}

MultivectorField mustard_q(const GftPlan& plan, const MultivectorField& f,
                           const MultivectorField& g) {
  require_qft_plan(plan, "mustard_q");
  require_periodic(plan.grid, "mustard_q");
  require_same_grid(plan.grid, f.grid, "mustard_q");
  require_same_grid(plan.grid, g.grid, "mustard_q");
  const Multivector one = scalar_mv(2, 1.0);
  const Multivector& mu = plan.left_roots[0].i;
  const Multivector& nu = plan.right_roots[0].i;
  MultivectorField acc(plan.grid);
  for (int j1 = 0; j1 < 2; ++j1) {
    for (int j2 = 0; j2 < 2; ++j2) {
      for (int k1 = 0; k1 < 2; ++k1) {
        for (int k2 = 0; k2 < 2; ++k2) {
          double c = 1.0;
          if (j1 == 1 && ((k2 + 1) & 1)) c = -c;
          if (j2 == 1 && ((k1 + 1) & 1)) c = -c;
          const Multivector& left = j1 ? mu : one;
          const Multivector& right = j2 ? nu : one;
          MultivectorField fr = k1 ? reflect_axes(f, 2u) : f;  // reflect second axis
          MultivectorField gr = k2 ? reflect_axes(g, 1u) : g;  // reflect first axis
          fr = const_mul_right(const_mul_left(left, fr), right);
          gr = const_mul_right(const_mul_left(left, gr), right);
          acc += classical_convolve(fr, gr) * cplx(0.25 * c, 0.0);
        }
      }
    }
  }
  return acc;
}

int mustard_q_term_count() {
  int count = 0;
  for (int j1 = 0; j1 < 2; ++j1)
    for (int j2 = 0; j2 < 2; ++j2)
      for (int k1 = 0; k1 < 2; ++k1)
        for (int k2 = 0; k2 < 2; ++k2) ++count;
  return count;
}

MultivectorField filter_field(const GftPlan& plan, const MultivectorField& f,
                              const MultivectorField& multiplier) {
  require_qft_plan(plan, "filter_field");
  require_same_grid(plan.grid, f.grid, "filter_field");
  require_same_grid(plan.grid, multiplier.grid, "filter_field");
  return gft_inverse(plan, pointwise_product(multiplier, gft_forward(plan, f)));
}

FilterResult filter_image(const RgbImage& img, const MultivectorField& multiplier,
                          const RootOfMinusOne& mu, const RootOfMinusOne& nu) {
  const MultivectorField field = image_to_field(encode_rgb(img));
  require_same_grid(field.grid, multiplier.grid, "filter_image");
  const GftPlan plan = make_qft_plan(field.grid, mu, nu);
  const MultivectorField out = filter_field(plan, field, multiplier);
  FilterResult res;
  const QuaternionImage raster = image_from_field(out, 1e-9, &res.max_imag_residue);
  DecodeResult decoded = decode_rgb(raster);
  res.image = std::move(decoded.image);
  res.max_scalar_residue = decoded.max_scalar_residue;
  return res;
}

MultivectorField lowpass_multiplier(const GridSpec& grid, double sigma) {
  if (grid.m != 2) throw std::invalid_argument("lowpass_multiplier: grid must be two-dimensional");
  require_periodic(grid, "lowpass_multiplier");
  if (!(sigma > 0.0)) throw std::invalid_argument("lowpass_multiplier: sigma must be positive");
  MultivectorField mult(grid);
  const int n0 = grid.n[0];
  const int n1 = grid.n[1];
  for (int a = 0; a < n0; ++a) {
    const double d0 = centered_offset(a, n0);
    for (int b = 0; b < n1; ++b) {
      const double d1 = centered_offset(b, n1);
      mult.plane(0)[size_t(a) * n1 + b] = std::exp(-(d0 * d0 + d1 * d1) / (2.0 * sigma * sigma));
    }
  }
  return mult;
}

MultivectorField directional_phase_multiplier(const GridSpec& grid, const RootOfMinusOne& mu) {
  if (grid.m != 2)
    throw std::invalid_argument("directional_phase_multiplier: grid must be two-dimensional");
  require_periodic(grid, "directional_phase_multiplier");
  if (mu.i.m != 2)
    throw std::invalid_argument("directional_phase_multiplier: root must live in Cl(0,2)");
  MultivectorField mult(grid);
  const int n0 = grid.n[0];
  const int n1 = grid.n[1];
  for (int a = 0; a < n0; ++a) {
    const double d0 = centered_offset(a, n0);
    for (int b = 0; b < n1; ++b) {
      const double d1 = centered_offset(b, n1);
      const double theta = std::atan2(d1, d0);
      const size_t p = size_t(a) * n1 + b;
      const double co = std::cos(theta);
      const double si = std::sin(theta);
      for (int blade = 0; blade < 4; ++blade) {
        cplx v = -si * mu.i.c[blade];
        if (blade == 0) v += co;
        mult.plane(blade)[p] = v;
      }
    }
  }
  return mult;
}

QuaternionImage rotate_basis(const QuaternionImage& img, const Quaternion& r) {
  const Multivector rm = quaternion_to_mv(r);
  const Multivector rinv = invert(rm);  // throws for the zero quaternion
  QuaternionImage out = img;
  for (auto& q : out.pix) {
    q = quaternion_from_mv(rm * quaternion_to_mv(q) * rinv, 1e-9);
  }
  return out;
}

}  // namespace clifft

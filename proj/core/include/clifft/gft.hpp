#pragma once
// Geometric Fourier transforms over Cl(0,m): each axis k carries a square
// root of -1 (any multivector root), the first `mu` kernel factors multiply
// the field from the left and the remaining ones from the right,
//
//   F(f)(u) = W * [prod_{k=1..mu} E_k] f(x) [prod_{k=mu+1..m} E_k],
//   E_k = exp(-i_k x_k u_k) summed over the grid,
//
// with the left factors ordered so axis 1 is outermost.  The inverse applies
// the conjugate factors in reversed per-side order (left axes ascending,
// right axes descending) with the inverse grid weights, which makes discrete
// round trips exact in both grid modes.
//
// Every transform has two evaluation paths:
//  * fast      — per-blade scalar FFTs recombined through precomputed
//                root-times-blade mixing tables,
//  * reference — literal O(N^2)-per-axis summation with full multivector
//                arithmetic, kept as an independent check.

#include "clifft/algebra.hpp"
#include "clifft/grid.hpp"

namespace clifft {

enum class Side { left, right };
enum class Path { fast, reference };

/// Dense mixing table of one root: column b holds the blade decomposition of
/// root*e_b (left) or e_b*root (right).
struct MixTable {
  int m = 0;
  std::vector<cplx> left;   // [c * 2^m + b] = coeff_c(i * e_b)
  std::vector<cplx> right;  // [c * 2^m + b] = coeff_c(e_b * i)
};

MixTable make_mix_table(const RootOfMinusOne& root);

struct GftPlan {
  GridSpec grid;
  std::vector<RootOfMinusOne> left_roots;   // axes 0 .. mu-1
  std::vector<RootOfMinusOne> right_roots;  // axes mu .. m-1
  std::vector<MixTable> mix;                // one table per axis

  int mu() const { return int(left_roots.size()); }
  int m() const { return grid.m; }
  const RootOfMinusOne& root(int axis) const {
    return axis < mu() ? left_roots[size_t(axis)] : right_roots[size_t(axis - mu())];
  }
  Side side(int axis) const { return axis < mu() ? Side::left : Side::right; }
};

GftPlan make_plan(GridSpec grid, std::vector<RootOfMinusOne> left, std::vector<RootOfMinusOne> right);

/// One separable kernel factor along `axis`:
///   out(u) = weight * sum_n E(sign * theta(n, u_axis)) .side. f(..., n, ...)
/// with E(t) = cos t + (sin t) * root and theta the grid phase.
MultivectorField axis_transform(const MultivectorField& f, int axis, const RootOfMinusOne& root, Side side,
                                int sign, double weight = 1.0, Path path = Path::fast);

MultivectorField gft_forward(const GftPlan& plan, const MultivectorField& f, Path path = Path::fast);
MultivectorField gft_inverse(const GftPlan& plan, const MultivectorField& f, Path path = Path::fast);

enum class TranslateRoute {
  spectral,    // forward transform, per-axis phase factors, inverse transform
  closed_form  // sum of sign-weighted reflected translates with root sandwiches
};

/// Generalized translation by integer grid offsets `shift` (axis k moves by
/// shift_k samples; in calibrated mode that is the coordinate shift_k*delta_k):
/// the transform of the result equals
///   prod_{k<=mu} exp(-i_k y_k u_k) * F(f)(u) * prod_{k>mu} exp(-i_k y_k u_k).
MultivectorField generalized_translate(const GftPlan& plan, const MultivectorField& f, const std::vector<int>& shift,
                                       TranslateRoute route = TranslateRoute::spectral);

/// Apply just the translation phase factors of `generalized_translate` to an
/// already transformed field (left factors with axis 0 outermost, right
/// factors ascending).  `gft_inverse(plan, translate_spectrum(plan,
/// gft_forward(plan, f), y))` is the spectral translation route.
MultivectorField translate_spectrum(const GftPlan& plan, const MultivectorField& spectrum,
                                    const std::vector<int>& shift);

/// Ordered product over `axes` (in the given order) of (negate ? -i_k : i_k)
/// raised to expo[k], with i_k the plan root of axis k and expo indexed by
/// axis number.  Building block of the closed-form coupling sums.
Multivector ordered_root_product(const GftPlan& plan, const std::vector<int>& axes, const std::vector<int>& expo,
                                 bool negate);

}  // namespace clifft

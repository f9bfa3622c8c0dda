#pragma once
// Generalized convolution products built on the geometric Fourier transforms:
//
//  * mustard_convolve_spectral — prefactor * Finv(F(f) * F(g)); the prefactor
//    is N^{m/2} on periodic grids (scalar case = classical circular
//    convolution) and (2*pi)^{m/2} on calibrated grids.
//  * mustard_convolve_direct   — the same product evaluated without any GFT:
//    4^-m sum over per-axis coupling triples and reflection pairs of
//    classical convolutions of root-sandwiched reflected copies of f and g.
//  * tau_convolve              — int f(y) [tau_y g](x) dy for the generalized
//    translation, via its closed form or by direct summation over grid
//    translates.
//  * classical_convolve        — plain circular convolution with the
//    geometric product, the building block of the direct routes.

#include "clifft/coupling.hpp"
#include "clifft/gft.hpp"
#include "clifft/grid.hpp"

namespace clifft {

/// Circular convolution sum_y a(y) b(x - y) (geometric product), via
/// per-blade FFTs.  On calibrated grids the difference x - y is taken in
/// centered coordinates and the sum carries the volume element prod(delta).
MultivectorField classical_convolve(const MultivectorField& a, const MultivectorField& b);

/// Literal O(points^2) spatial evaluation of the same sum (test oracle).
MultivectorField classical_convolve_reference(const MultivectorField& a, const MultivectorField& b);

MultivectorField mustard_convolve_spectral(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g);

/// Order-swapped spectral product: prefactor * Finv(F(g) * F(f)).
MultivectorField mustard_convolve_reversed(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g);

struct DirectOptions {
  /// Evaluate term by term with one classical convolution per coupling term
  /// (slow; the default groups all terms into one spectral accumulation pass).
  bool per_term = false;
};

/// Closed-form route (periodic grids).  Agrees with the spectral route.
MultivectorField mustard_convolve_direct(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g,
                                         DirectOptions opts = {});

enum class TauRoute { closed_form, summation };

/// Translation convolution (periodic grids): summation route evaluates
/// sum_y f(y) [tau_y g](x) with the spectral generalized translation; the
/// closed form expands it into classical convolutions like the direct
/// Mustard route.  Both agree.
MultivectorField tau_convolve(const GftPlan& plan, const MultivectorField& f, const MultivectorField& g,
                              TauRoute route = TauRoute::closed_form);

/// Number of admissible coupling multi-indices for m axes (4^m) — the direct
/// routes sum exactly this many terms per reflection pair.
size_t coupling_count(int m);

}  // namespace clifft

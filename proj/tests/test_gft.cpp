#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "clifft/gft.hpp"
#include "clifft/grid.hpp"
#include "clifft/special.hpp"

using namespace clifft;

namespace {

Multivector blade(int m, std::initializer_list<int> gens) {
  unsigned b = 0;
  for (int g : gens) b |= 1u << (g - 1);
  return basis_blade(m, b);
}

RootOfMinusOne root(Multivector mv) { return RootOfMinusOne(std::move(mv)); }

/// (-i)^j for a validated root i.
Multivector neg_power(const RootOfMinusOne& r, int j) {
  Multivector p = r.power(j);
  return (j % 2 != 0) ? -p : p;
}

GftPlan qft_plan(GridSpec grid) {
  return make_plan(std::move(grid), {root(blade(2, {1}))}, {root(blade(2, {2}))});
}

/// m = 3 plan with non-vector roots; the right-side roots e1e2 and e3 commute.
GftPlan exotic_plan3(GridSpec grid) {
  return make_plan(std::move(grid), {root(vector_mv(3, {0.6, 0.8, 0.0}))},
                   {root(blade(3, {1, 2})), root(blade(3, {3}))});
}

MultivectorField impulse(const GridSpec& g, size_t at = 0) {
  MultivectorField f(g);
  f.plane(0)[at] = cplx{1.0, 0.0};
  return f;
}

/// Scalar samples of fn on the *dual* (frequency) grid: transform outputs of a
/// calibrated grid live at u_j = (j - N/2) * (2 pi / (N delta)).
MultivectorField sample_scalar_dual(const GridSpec& g, const std::function<double(const std::vector<double>&)>& fn) {
  MultivectorField out(g);
  std::vector<int> idx(static_cast<size_t>(g.m), 0);
  std::vector<double> u(static_cast<size_t>(g.m), 0.0);
  for (size_t p = 0; p < out.points(); ++p) {
    for (int k = 0; k < g.m; ++k) u[size_t(k)] = g.freq(k, idx[size_t(k)]);
    out.plane(0)[p] = cplx{fn(u), 0.0};
    for (int k = g.m - 1; k >= 0; --k) {
      if (++idx[size_t(k)] < g.n[size_t(k)]) break;
      idx[size_t(k)] = 0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("axis transform: frozen impulse values, N = 4") {
  const GridSpec g = make_grid(2, GridMode::periodic, {4, 2});
  MultivectorField f(g);
  f.set({1, 0}, scalar_mv(2, 1.0));  // impulse at n1 = 1

  for (Path path : {Path::fast, Path::reference}) {
    const MultivectorField out = axis_transform(f, 0, root(blade(2, {1, 2})), Side::left, -1, 1.0, path);
    // out(j, 0) = cos(2 pi j / 4) - sin(2 pi j / 4) e1e2, out(j, 1) = 0.
    const Multivector want[4] = {scalar_mv(2, 1.0), -blade(2, {1, 2}), scalar_mv(2, -1.0), blade(2, {1, 2})};
    for (int j = 0; j < 4; ++j) {
      CHECK(rel_gap(out.at({j, 0}), want[j]) < 1e-14);
      CHECK(mv_norm(out.at({j, 1})) < 1e-14);
    }
  }
}

TEST_CASE("axis transform: left vs right multiplication differ as the algebra dictates") {
  // For a field with value e1 and root i = e1e2: i * v = -v * i, so the left
  // transform with sign s equals the right transform with sign -s.
  const GridSpec g = make_grid(2, GridMode::periodic, {8, 4});
  MultivectorField f(g);
  // Varying e1-valued profile (a constant would make every sine sum vanish).
  for (size_t p = 0; p < f.points(); ++p) f.plane(1)[p] = cplx{std::sin(0.7 * double(p) + 0.2), 0.0};

  const RootOfMinusOne i12 = root(blade(2, {1, 2}));
  const MultivectorField left = axis_transform(f, 0, i12, Side::left, -1);
  const MultivectorField right_flip = axis_transform(f, 0, i12, Side::right, +1);
  const MultivectorField right = axis_transform(f, 0, i12, Side::right, -1);
  CHECK(field_rel_gap(left, right_flip) < 1e-13);
  CHECK(field_rel_gap(left, right) > 0.5);  // genuinely different transforms
}

TEST_CASE("fast path matches the reference summation on every axis/side/sign") {
  for (GridMode mode : {GridMode::periodic, GridMode::calibrated}) {
    const GridSpec g = (mode == GridMode::periodic) ? make_grid(2, mode, {16, 12})
                                                    : make_grid(2, mode, {16, 12}, {0.35, 0.5});
    const MultivectorField f = random_field(g, 42, true);
    for (int axis : {0, 1})
      for (Side side : {Side::left, Side::right})
        for (int sign : {-1, +1}) {
          const RootOfMinusOne r = root(vector_mv(2, {0.28, -0.96}));
          const MultivectorField fast = axis_transform(f, axis, r, side, sign, 0.7, Path::fast);
          const MultivectorField ref = axis_transform(f, axis, r, side, sign, 0.7, Path::reference);
          CHECK(field_rel_gap(fast, ref) < 1e-10);
        }
  }
}

TEST_CASE("full transform: fast path matches reference, periodic and calibrated") {
  for (GridMode mode : {GridMode::periodic, GridMode::calibrated}) {
    const GridSpec g = (mode == GridMode::periodic) ? make_grid(2, mode, {12, 8}) : make_grid(2, mode, {12, 8}, {0.4, 0.3});
    const GftPlan plan = qft_plan(g);
    const MultivectorField f = random_field(g, 7, true);
    CHECK(field_rel_gap(gft_forward(plan, f, Path::fast), gft_forward(plan, f, Path::reference)) < 1e-10);
    CHECK(field_rel_gap(gft_inverse(plan, f, Path::fast), gft_inverse(plan, f, Path::reference)) < 1e-10);
  }
}

TEST_CASE("impulse and constant are a dual pair on periodic grids") {
  const GridSpec g = make_grid(2, GridMode::periodic, {8, 8});
  const GftPlan plan = qft_plan(g);
  const MultivectorField d = impulse(g);
  const MultivectorField D = gft_forward(plan, d);
  // Transform of the origin impulse: constant N^{-m/2}.
  const double c = 1.0 / 8.0;
  for (size_t p = 0; p < D.points(); ++p) {
    CHECK(std::abs(D.plane(0)[p] - cplx{c, 0.0}) < 1e-14);
    for (int b = 1; b < D.blades(); ++b) CHECK(std::abs(D.plane(b)[p]) < 1e-14);
  }
  // ... and the inverse of that constant is the impulse again.
  CHECK(field_rel_gap(gft_inverse(plan, D), d) < 1e-13);
}

TEST_CASE("round trips: periodic exact, calibrated Schwartz samples") {
  // Periodic, several algebras and root choices, random data.
  {
    const GridSpec g1 = make_grid(1, GridMode::periodic, {16});
    const GftPlan p1 = make_plan(g1, {root(blade(1, {1}))}, {});
    const MultivectorField f1 = random_field(g1, 1, true);
    CHECK(field_rel_gap(gft_inverse(p1, gft_forward(p1, f1)), f1) < 1e-12);

    const GridSpec g2 = make_grid(2, GridMode::periodic, {16, 16});
    for (const GftPlan& plan : {qft_plan(g2), make_plan(g2, {root(blade(2, {1, 2})), root(vector_mv(2, {0.6, 0.8}))}, {})}) {
      const MultivectorField f = random_field(g2, 2, true);
      CHECK(field_rel_gap(gft_inverse(plan, gft_forward(plan, f)), f) < 1e-12);
      CHECK(field_rel_gap(gft_forward(plan, gft_inverse(plan, f)), f) < 1e-12);
    }

    const GridSpec g3 = make_grid(3, GridMode::periodic, {8, 8, 8});
    const GftPlan p3 = exotic_plan3(g3);
    const MultivectorField f3 = random_field(g3, 3, true);
    CHECK(field_rel_gap(gft_inverse(p3, gft_forward(p3, f3)), f3) < 1e-12);
  }

  // Calibrated: polynomial-times-Gaussian samples round trip cleanly.
  {
    const GridSpec g = make_grid(2, GridMode::calibrated, {32, 32}, {0.4, 0.4});
    const MultivectorField h = sample_scalar_field(g, [](const std::vector<double>& x) {
      return (1.0 + x[0] - 0.3 * x[0] * x[1] + x[1] * x[1]) * std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2);
    });
    Multivector c(2);
    c.c = {cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.5, 0.0}};
    const MultivectorField f = const_mul_right(h, c);
    const GftPlan plan = qft_plan(g);
    CHECK(field_rel_gap(gft_inverse(plan, gft_forward(plan, f)), f) < 1e-8);
  }
}

TEST_CASE("calibrated Gaussian maps to the Gaussian on the dual grid, any plan") {
  const GridSpec g = make_grid(2, GridMode::calibrated, {64, 64}, {0.25, 0.25});
  const auto gauss2 = [](const std::vector<double>& x) { return std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2); };
  const MultivectorField in = sample_scalar_field(g, gauss2);
  const MultivectorField want = sample_scalar_dual(g, gauss2);
  for (const GftPlan& plan :
       {qft_plan(g), make_plan(g, {root(blade(2, {1, 2})), root(vector_mv(2, {0.6, 0.8}))}, {})}) {
    CHECK(field_rel_gap(gft_forward(plan, in), want) < 1e-8);
  }
}

TEST_CASE("Hermite fields diagonalize the transform") {
  const GridSpec g = make_grid(2, GridMode::calibrated, {64, 64}, {0.25, 0.25});
  const std::vector<GftPlan> plans = {
      qft_plan(g),                                                                  // mu = 1
      make_plan(g, {root(blade(2, {1, 2})), root(blade(2, {2}))}, {}),              // mu = 2, non-vector i_1
  };
  for (const GftPlan& plan : plans) {
    for (int j0 = 0; j0 + 0 <= 4; ++j0)
      for (int j1 = 0; j0 + j1 <= 4; ++j1) {
        const auto psi_fn = [&](const std::vector<double>& x) { return hermite_fn(j0, x[0]) * hermite_fn(j1, x[1]); };
        const MultivectorField psi = sample_scalar_field(g, psi_fn);
        // Expected: prod_{k<=mu} (-i_k)^{j_k} * psi(u) * prod_{k>mu} (-i_k)^{j_k},
        // with psi sampled on the dual grid where the transform lives.
        Multivector lam_l = scalar_mv(2, 1.0), lam_r = scalar_mv(2, 1.0);
        const int js[2] = {j0, j1};
        for (int k = 0; k < plan.mu(); ++k) lam_l = lam_l * neg_power(plan.root(k), js[k]);
        for (int k = plan.mu(); k < 2; ++k) lam_r = lam_r * neg_power(plan.root(k), js[k]);
        const MultivectorField want = const_mul_right(const_mul_left(lam_l, sample_scalar_dual(g, psi_fn)), lam_r);
        CHECK(field_rel_gap(gft_forward(plan, psi), want) < 1e-6);
      }
  }

  // The mu = 2 fixed example:  psi_1(x1) psi_0(x2) -> -e1e2 psi_1 psi_0.
  const GftPlan plan2 = make_plan(g, {root(blade(2, {1, 2})), root(blade(2, {2}))}, {});
  const auto psi10_fn = [](const std::vector<double>& x) { return hermite_fn(1, x[0]) * hermite_fn(0, x[1]); };
  const MultivectorField psi10 = sample_scalar_field(g, psi10_fn);
  const MultivectorField want10 = const_mul_left(-blade(2, {1, 2}), sample_scalar_dual(g, psi10_fn));
  CHECK(field_rel_gap(gft_forward(plan2, psi10), want10) < 1e-6);
}

TEST_CASE("generalized translation: qFT case is the exact circular shift") {
  for (GridMode mode : {GridMode::periodic, GridMode::calibrated}) {
    const GridSpec g = (mode == GridMode::periodic) ? make_grid(2, mode, {16, 16}) : make_grid(2, mode, {16, 16}, {0.5, 0.5});
    const GftPlan plan = qft_plan(g);
    const MultivectorField f = random_field(g, 99, true);
    const std::vector<int> y{3, -5};
    CHECK(field_rel_gap(generalized_translate(plan, f, y), circular_shift(f, y)) < 1e-12);
  }
}

TEST_CASE("generalized translation: closed form matches the spectral route") {
  const GridSpec g2 = make_grid(2, GridMode::periodic, {16, 16});
  const GftPlan gen2 = make_plan(g2, {root(vector_mv(2, {0.28, -0.96}))}, {root(blade(2, {1, 2}))});
  const MultivectorField f2 = random_field(g2, 5, true);
  for (const std::vector<int>& y : {std::vector<int>{1, 0}, std::vector<int>{4, 7}, std::vector<int>{-2, 3}}) {
    CHECK(field_rel_gap(generalized_translate(gen2, f2, y, TranslateRoute::closed_form),
                        generalized_translate(gen2, f2, y, TranslateRoute::spectral)) < 1e-10);
  }

  const GridSpec g3 = make_grid(3, GridMode::periodic, {8, 8, 8});
  const GftPlan p3 = exotic_plan3(g3);
  const MultivectorField f3 = random_field(g3, 6, true);
  CHECK(field_rel_gap(generalized_translate(p3, f3, {2, -1, 3}, TranslateRoute::closed_form),
                      generalized_translate(p3, f3, {2, -1, 3}, TranslateRoute::spectral)) < 1e-10);
}

TEST_CASE("generalized translation: algebraic properties") {
  const GridSpec g = make_grid(2, GridMode::periodic, {12, 12});
  const GftPlan plan = make_plan(g, {root(vector_mv(2, {0.6, 0.8}))}, {root(blade(2, {2}))});
  const MultivectorField f = random_field(g, 13, true);

  // y = 0 is the identity.
  CHECK(field_rel_gap(generalized_translate(plan, f, {0, 0}), f) < 1e-12);
  // Additivity: same-axis phases compose.
  const MultivectorField two_steps = generalized_translate(plan, generalized_translate(plan, f, {3, 1}), {2, -4});
  CHECK(field_rel_gap(two_steps, generalized_translate(plan, f, {5, -3})) < 1e-11);
  // A scalar field translates classically whenever each side's roots commute
  // with each other (single root per side here).
  MultivectorField s(g);
  const MultivectorField rnd = random_field(g, 14, false);
  for (size_t p = 0; p < s.points(); ++p) s.plane(0)[p] = rnd.plane(0)[p];
  CHECK(field_rel_gap(generalized_translate(plan, s, {4, 9}), circular_shift(s, {4, 9})) < 1e-10);

  CHECK_THROWS_AS((void)generalized_translate(plan, f, {1}), std::invalid_argument);
}

TEST_CASE("grid and plan validation errors") {
  const GridSpec g = make_grid(2, GridMode::periodic, {8, 8});
  CHECK_THROWS_AS((void)make_plan(g, {root(blade(2, {1}))}, {}), std::invalid_argument);
  const GftPlan plan = qft_plan(g);
  const MultivectorField wrong(make_grid(2, GridMode::periodic, {8, 4}));
  CHECK_THROWS_AS((void)gft_forward(plan, wrong), std::invalid_argument);
  CHECK_THROWS_AS((void)make_grid(2, GridMode::calibrated, {7, 8}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS((void)make_grid(2, GridMode::calibrated, {8, 8}, {-0.5, 0.5}), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "clifft/algebra.hpp"
#include "clifft/serialize.hpp"

using namespace clifft;

namespace {

// Independent blade-product oracle: blades as ascending generator lists,
// multiplied by concatenation, adjacent-swap sorting (each swap of distinct
// generators is a -1), and cancellation of equal pairs (each e_k e_k = -1).
std::pair<int, unsigned> blade_mul_oracle(unsigned a, unsigned b, int m) {
  std::vector<int> s;
  for (int k = 0; k < m; ++k)
    if (a >> k & 1u) s.push_back(k);
  for (int k = 0; k < m; ++k)
    if (b >> k & 1u) s.push_back(k);
  int sign = 1;
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (size_t t = 0; t + 1 < s.size(); ++t)
      if (s[t] > s[t + 1]) {
        std::swap(s[t], s[t + 1]);
        sign = -sign;
        sorted = false;
      }
  }
  std::vector<int> rest;
  for (int k : s) {
    if (!rest.empty() && rest.back() == k) {
      rest.pop_back();
      sign = -sign;
    } else {
      rest.push_back(k);
    }
  }
  unsigned blade = 0;
  for (int k : rest) blade |= 1u << k;
  return {sign, blade};
}

Multivector random_mv(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Multivector a(m);
  for (auto& c : a.c) c = cplx{d(rng), d(rng)};
  return a;
}

// In-test Gauss elimination solving L x = e_0 for the left-multiplication
// matrix of `a`, independent of the library inverse.
Multivector gauss_inverse_oracle(const Multivector& a) {
  const int m = a.m;
  const int B = 1 << m;
  std::vector<std::vector<cplx>> L(size_t(B), std::vector<cplx>(size_t(B) + 1, cplx{0.0, 0.0}));
  for (int b = 0; b < B; ++b)
    for (int i = 0; i < B; ++i) {
      const int s = blade_sign(unsigned(i), unsigned(b));
      L[size_t(i ^ b)][size_t(b)] += (s > 0) ? a.c[size_t(i)] : -a.c[size_t(i)];
    }
  L[0][size_t(B)] = cplx{1.0, 0.0};
  for (int col = 0; col < B; ++col) {
    int piv = col;
    for (int r = col + 1; r < B; ++r)
      if (std::abs(L[size_t(r)][size_t(col)]) > std::abs(L[size_t(piv)][size_t(col)])) piv = r;
    std::swap(L[size_t(col)], L[size_t(piv)]);
    for (int r = 0; r < B; ++r) {
      if (r == col) continue;
      const cplx f = L[size_t(r)][size_t(col)] / L[size_t(col)][size_t(col)];
      for (int cc = col; cc <= B; ++cc) L[size_t(r)][size_t(cc)] -= f * L[size_t(col)][size_t(cc)];
    }
  }
  Multivector x(m);
  for (int r = 0; r < B; ++r) x.c[size_t(r)] = L[size_t(r)][size_t(B)] / L[size_t(r)][size_t(r)];
  return x;
}

Multivector e(int m, std::initializer_list<int> gens) {
  unsigned b = 0;
  for (int g : gens) b |= 1u << (g - 1);
  return basis_blade(m, b);
}

}  // namespace

TEST_CASE("blade products match the sorted-generator-list oracle") {
  for (int m = 1; m <= 4; ++m) {
    const int B = 1 << m;
    for (unsigned a = 0; a < unsigned(B); ++a)
      for (unsigned b = 0; b < unsigned(B); ++b) {
        const auto [sign, blade] = blade_mul_oracle(a, b, m);
        CHECK(blade == (a ^ b));
        CHECK(blade_sign(a, b) == sign);
      }
  }
}

TEST_CASE("generators anticommute and square to -1") {
  const int m = 4;
  for (int i = 0; i < m; ++i) {
    CHECK(blade_sign(1u << i, 1u << i) == -1);
    for (int j = 0; j < m; ++j)
      if (i != j) CHECK(blade_sign(1u << i, 1u << j) == -blade_sign(1u << j, 1u << i));
  }
}

TEST_CASE("geometric product: fixed values and associativity") {
  const int m = 3;
  const Multivector one = scalar_mv(m, 1.0);

  // (1 + e1)(1 - e1) = 1 - e1^2 = 2.
  const Multivector p = (one + e(m, {1})) * (one - e(m, {1}));
  CHECK(rel_gap(p, scalar_mv(m, 2.0)) < 1e-15);

  // e1 e2 * e2 e3 = -e1 e3.
  CHECK(rel_gap(e(m, {1, 2}) * e(m, {2, 3}), -e(m, {1, 3})) < 1e-15);
  // (e1 e2 e3)^2 = +1.
  CHECK(rel_gap(e(m, {1, 2, 3}) * e(m, {1, 2, 3}), one) < 1e-15);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Multivector a = random_mv(m, rng), b = random_mv(m, rng), c = random_mv(m, rng);
    CHECK(rel_gap((a * b) * c, a * (b * c)) < 1e-12);
    // distributivity
    CHECK(rel_gap(a * (b + c), a * b + a * c) < 1e-12);
  }
}

TEST_CASE("wedge and vector inner products") {
  const int m = 3;
  CHECK(rel_gap(wedge(e(m, {1}), e(m, {2})), e(m, {1, 2})) < 1e-15);
  CHECK(mv_norm(wedge(e(m, {1}), e(m, {1}))) < 1e-15);
  // inner is the Euclidean coordinate product <x,y> = sum x_k y_k.
  const Multivector x = vector_mv(m, {0.6, 0.8, 0.0});
  CHECK(std::abs(inner(x, e(m, {1})) - cplx{0.6, 0.0}) < 1e-14);
  CHECK(std::abs(inner(vector_mv(2, {1, 2}), vector_mv(2, {3, 4})) - cplx{11.0, 0.0}) < 1e-14);
  // Since e_k^2 = -1, the geometric product splits as xy = -<x,y> + x^y.
  const Multivector y = vector_mv(m, {0.25, -1.5, 2.0});
  CHECK(rel_gap(x * y, scalar_mv(m, -inner(x, y)) + wedge(x, y)) < 1e-14);
}

TEST_CASE("grade projection and norms") {
  const int m = 2;
  const Multivector a = scalar_mv(m, 3.0) + e(m, {1}) * cplx{2.0, 0.0} + e(m, {1, 2}) * cplx{0.0, 1.0};
  CHECK(rel_gap(grade_part(a, 0), scalar_mv(m, 3.0)) < 1e-15);
  CHECK(rel_gap(grade_part(a, 1), e(m, {1}) * cplx{2.0, 0.0}) < 1e-15);
  CHECK(scalar_part(a) == cplx{3.0, 0.0});
  CHECK(mv_norm(a) == doctest::Approx(std::sqrt(9.0 + 4.0 + 1.0)).epsilon(1e-14));
}

TEST_CASE("inverse: closed forms, random oracle, zero divisor rejection") {
  const int m2 = 2;
  // (1 + e1e2)^{-1} = (1 - e1e2)/2 because (e1e2)^2 = -1.
  const Multivector v = scalar_mv(m2, 1.0) + e(m2, {1, 2});
  CHECK(rel_gap(invert(v), (scalar_mv(m2, 1.0) - e(m2, {1, 2})) * cplx{0.5, 0.0}) < 1e-14);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    for (int m : {1, 2, 3}) {
      const Multivector a = random_mv(m, rng);
      Multivector ainv(m);
      try {
        ainv = invert(a);
      } catch (const std::domain_error&) {
        continue;  // random zero divisor: astronomically unlikely, but legal
      }
      CHECK(rel_gap(ainv, gauss_inverse_oracle(a)) < 1e-10);
      CHECK(rel_gap(a * ainv, scalar_mv(m, 1.0)) < 1e-10);
      CHECK(rel_gap(ainv * a, scalar_mv(m, 1.0)) < 1e-10);
    }
  }

  // 1 + e1e2e3 is a zero divisor: (1+w)(1-w) = 1 - w^2 = 0 since w^2 = +1.
  const Multivector zd = scalar_mv(3, 1.0) + e(3, {1, 2, 3});
  CHECK_THROWS_AS((void)invert(zd), std::domain_error);
  CHECK_THROWS_AS((void)invert(Multivector(2)), std::domain_error);
}

TEST_CASE("roots of -1: validation, powers, exponentials") {
  const int m = 3;
  CHECK_NOTHROW(RootOfMinusOne(e(m, {1})));
  CHECK_NOTHROW(RootOfMinusOne(e(m, {1, 2})));
  CHECK_NOTHROW(RootOfMinusOne(vector_mv(m, {0.6, 0.8, 0.0})));
  // (e1e2 + e2e3)/sqrt(2) squares to -1: the cross terms cancel.
  const Multivector mixed = (e(m, {1, 2}) + e(m, {2, 3})) * cplx{1.0 / std::sqrt(2.0), 0.0};
  CHECK_NOTHROW(RootOfMinusOne{mixed});

  CHECK_THROWS_AS(RootOfMinusOne(e(m, {1}) + e(m, {2})), std::invalid_argument);   // squares to -2
  CHECK_THROWS_AS(RootOfMinusOne(scalar_mv(m, 1.0)), std::invalid_argument);       // squares to +1
  CHECK_THROWS_AS(RootOfMinusOne(e(m, {1, 2, 3})), std::invalid_argument);         // squares to +1

  const RootOfMinusOne r(e(m, {1, 2}));
  CHECK(rel_gap(r.power(0), scalar_mv(m, 1.0)) < 1e-15);
  CHECK(rel_gap(r.power(1), r.i) < 1e-15);
  CHECK(rel_gap(r.power(2), scalar_mv(m, -1.0)) < 1e-15);
  CHECK(rel_gap(r.power(3), -r.i) < 1e-15);
  CHECK(rel_gap(r.power(4), scalar_mv(m, 1.0)) < 1e-15);
  CHECK(rel_gap(r.power(5), r.i) < 1e-15);
  CHECK(rel_gap(r.inverse(), -r.i) < 1e-15);

  // exp(theta * i) against a 30-term power series evaluated with the
  // geometric product only.
  for (const Multivector& root : {e(m, {1, 2}), vector_mv(m, {0.6, 0.8, 0.0}), mixed}) {
    const double theta = 1.0471975511965976;  // pi / 3
    Multivector series(m);
    Multivector term = scalar_mv(m, 1.0);
    for (int n = 0; n < 30; ++n) {
      series += term;
      term = term * root * cplx{theta / double(n + 1), 0.0};
    }
    CHECK(rel_gap(exp_root(RootOfMinusOne(root), theta), series) < 1e-14);
  }
}

TEST_CASE("commuting/anticommuting split") {
  const int m = 2;
  // Quaternion-style split of w + x e1 + y e2 + z e1e2 with respect to e1:
  // e1 commutes with {1, e1} and anticommutes with {e2, e1e2}.
  Multivector a(m);
  a.c = {cplx{1.5, 0.0}, cplx{-2.0, 0.0}, cplx{0.75, 0.0}, cplx{3.0, 0.0}};
  const auto s = comm_split(a, e(m, {1}));
  Multivector comm_expected(m), anti_expected(m);
  comm_expected.c = {cplx{1.5, 0.0}, cplx{-2.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}};
  anti_expected.c = {cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.75, 0.0}, cplx{3.0, 0.0}};
  CHECK(rel_gap(s.commuting, comm_expected) < 1e-14);
  CHECK(rel_gap(s.anticommuting, anti_expected) < 1e-14);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Multivector x = random_mv(m, rng);
    for (const Multivector& b : {e(m, {1}), e(m, {2}), e(m, {1, 2})}) {
      const auto sp = comm_split(x, b);
      CHECK(rel_gap(sp.commuting + sp.anticommuting, x) < 1e-12);
      CHECK(rel_gap(b * sp.commuting, sp.commuting * b) < 1e-12);
      CHECK(rel_gap(b * sp.anticommuting, -(sp.anticommuting * b)) < 1e-12);
    }
  }
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(31);
  for (int m : {1, 2, 4}) {
    const Multivector a = random_mv(m, rng);
    const nlohmann::json j = clifft::multivector_to_json(a);
    const Multivector back = multivector_from_json(j);
    CHECK(back.m == m);
    CHECK(rel_gap(a, back) < 1e-15);
  }
  nlohmann::json bad = {{"m", 2}, {"coeffs", {{1.0, 0.0}}}};
  CHECK_THROWS_AS((void)multivector_from_json(bad), std::invalid_argument);
}

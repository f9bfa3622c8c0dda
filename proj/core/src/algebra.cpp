#include "clifft/algebra.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace clifft {

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b, "geometric_product");
  const size_t n = a.c.size();
  Multivector out(a.m);
  for (size_t i = 0; i < n; ++i) {
    const cplx ai = a.c[i];
    if (ai == cplx{0.0, 0.0}) continue;
    for (size_t j = 0; j < n; ++j) {
      const cplx bj = b.c[j];
      if (bj == cplx{0.0, 0.0}) continue;
      const int s = blade_sign(unsigned(i), unsigned(j));
      out.c[i ^ j] += (s > 0) ? ai * bj : -(ai * bj);
    }
  }
  return out;
}

Multivector grade_part(const Multivector& a, int k) {
  Multivector out(a.m);
  for (size_t i = 0; i < a.c.size(); ++i)
    if (std::popcount(unsigned(i)) == k) out.c[i] = a.c[i];
  return out;
}

double mv_norm(const Multivector& a) {
  double s = 0.0;
  for (const auto& x : a.c) s += std::norm(x);
  return std::sqrt(s);
}

double rel_gap(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b, "rel_gap");
  double num = 0.0;
  for (size_t i = 0; i < a.c.size(); ++i) num += std::norm(a.c[i] - b.c[i]);
  const double den = std::max({mv_norm(a), mv_norm(b), 1e-300});
  return std::sqrt(num) / den;
}

static void require_vector(const Multivector& x, const char* what) {
  for (size_t i = 0; i < x.c.size(); ++i)
    if (std::popcount(unsigned(i)) != 1 && x.c[i] != cplx{0.0, 0.0})
      throw std::invalid_argument(std::string(what) + ": operand is not a grade-1 vector");
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  check_same_algebra(x, y, "wedge");
  require_vector(x, "wedge");
  require_vector(y, "wedge");
  Multivector out(x.m);
  for (int j = 0; j < x.m; ++j) {
    for (int k = j + 1; k < x.m; ++k) {
      const cplx xj = x.c[1u << j], xk = x.c[1u << k];
      const cplx yj = y.c[1u << j], yk = y.c[1u << k];
      out.c[(1u << j) | (1u << k)] = xj * yk - xk * yj;
    }
  }
  return out;
}

cplx inner(const Multivector& x, const Multivector& y) {
  check_same_algebra(x, y, "inner");
  require_vector(x, "inner");
  require_vector(y, "inner");
  cplx s{0.0, 0.0};
  for (int k = 0; k < x.m; ++k) s += x.c[1u << k] * y.c[1u << k];
  return s;
}

Multivector vector_mv(int m, const std::vector<double>& v) {
  if (int(v.size()) != m) throw std::invalid_argument("vector_mv: coordinate count does not match algebra dimension");
  Multivector out(m);
  for (int k = 0; k < m; ++k) out.c[1u << k] = v[size_t(k)];
  return out;
}

Multivector invert(const Multivector& a) {
  const int n = a.blades();
  // Left-multiplication matrix: column b holds the blade decomposition of a * e_b.
  Eigen::MatrixXcd L(n, n);
  for (int b = 0; b < n; ++b) {
    for (int i = 0; i < n; ++i) L(i, b) = cplx{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      const cplx ai = a.c[size_t(i)];
      if (ai == cplx{0.0, 0.0}) continue;
      const int s = blade_sign(unsigned(i), unsigned(b));
      L(i ^ b, b) += (s > 0) ? ai : -ai;
    }
  }
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs(0) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(L);
  if (!lu.isInvertible()) throw std::domain_error("invert: multivector has no inverse (singular left-multiplication matrix)");
  Eigen::VectorXcd x = lu.solve(rhs);
  Multivector out(a.m);
  for (int i = 0; i < n; ++i) out.c[size_t(i)] = x(i);
  return out;
}

RootOfMinusOne::RootOfMinusOne(Multivector mv) : i(std::move(mv)) {
  Multivector sq = geometric_product(i, i);
  sq.c[0] += 1.0;
  double worst = 0.0;
  for (const auto& x : sq.c) worst = std::max(worst, std::abs(x));
  if (worst > 1e-12)
    throw std::invalid_argument("RootOfMinusOne: square differs from -1 by " + std::to_string(worst));
}

Multivector RootOfMinusOne::power(int p) const {
  if (p < 0) throw std::invalid_argument("RootOfMinusOne::power: negative exponent");
  switch (p & 3) {
    case 0: return scalar_mv(i.m, 1.0);
    case 1: return i;
    case 2: return scalar_mv(i.m, -1.0);
    default: return -i;
  }
}

Multivector exp_root(const RootOfMinusOne& i, double theta) {
  Multivector out = i.i * cplx{std::sin(theta), 0.0};
  out.c[0] += std::cos(theta);
  return out;
}

CommutingSplit comm_split(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b, "comm_split");
  const Multivector binv = invert(b);
  const Multivector conj = binv * a * b;
  CommutingSplit out{(a + conj) * cplx{0.5, 0.0}, (a - conj) * cplx{0.5, 0.0}};
  return out;
}

}  // namespace clifft

#pragma once
// Dense multivector arithmetic for the Clifford algebras Cl(0,m), m = 1..8.
//
// Blades are indexed by bitmask: bit k set <=> generator e_{k+1} present, so
// index 0 is the scalar, index 1 is e1, index 3 is e1e2, and so on.  All
// coefficients are complex doubles.  Every generator squares to -1 and
// distinct generators anticommute.

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clifft {

using cplx = std::complex<double>;

/// Validated algebra dimension (number of generators).
struct Algebra {
  int m = 0;
  int blades() const { return 1 << m; }
};

inline Algebra make_algebra(int m) {
  if (m < 1 || m > 8) throw std::invalid_argument("algebra dimension m must be in 1..8, got " + std::to_string(m));
  return Algebra{m};
}

/// Sign of e_A * e_B when reordered to the canonical ascending-generator
/// blade e_{A xor B}.  Counts transpositions plus one minus per shared
/// generator (metric -1).
inline int blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  unsigned t = a >> 1;
  while (t != 0u) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

struct Multivector {
  int m = 0;
  std::vector<cplx> c;  // size 2^m, blade-bitmask order

  Multivector() = default;
  explicit Multivector(Algebra alg) : m(alg.m), c(size_t(1) << alg.m, cplx{0.0, 0.0}) {}
  explicit Multivector(int m_) : Multivector(make_algebra(m_)) {}

  int blades() const { return 1 << m; }

  cplx& operator[](size_t i) { return c[i]; }
  const cplx& operator[](size_t i) const { return c[i]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(cplx s);
};

/// Scalar s as a multivector of Cl(0,m).
inline Multivector scalar_mv(int m, cplx s) {
  Multivector r(m);
  r[0] = s;
  return r;
}

/// Basis blade e_mask (mask = bitmask of generators).
inline Multivector basis_blade(int m, unsigned mask) {
  Multivector r(m);
  if (mask >= (1u << m)) throw std::out_of_range("basis_blade: mask outside algebra");
  r[mask] = 1.0;
  return r;
}

inline void check_same_algebra(const Multivector& a, const Multivector& b, const char* what) {
  if (a.m != b.m) throw std::invalid_argument(std::string(what) + ": operands live in different algebras");
}

inline Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_algebra(*this, o, "add");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}
inline Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_algebra(*this, o, "sub");
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}
inline Multivector& Multivector::operator*=(cplx s) {
  for (auto& x : c) x *= s;
  return *this;
}

inline Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
inline Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
inline Multivector operator*(Multivector a, cplx s) { return a *= s; }
inline Multivector operator*(cplx s, Multivector a) { return a *= s; }
inline Multivector operator-(Multivector a) { return a *= cplx{-1.0, 0.0}; }

/// Full geometric product, O(4^m).
Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

/// Grade-k part.
Multivector grade_part(const Multivector& a, int k);

inline cplx scalar_part(const Multivector& a) { return a.c[0]; }

/// Frobenius norm of the coefficient vector.
double mv_norm(const Multivector& a);

/// Relative gap ||a-b|| / max(||a||, ||b||, tiny); symmetric in a,b.
double rel_gap(const Multivector& a, const Multivector& b);

/// Outer product of two grade-1 vectors: sum_{j<k} (x_j y_k - x_k y_j) e_j e_k.
/// Inputs must be pure vectors; equals the grade-2 part of x*y.
Multivector wedge(const Multivector& x, const Multivector& y);

/// Euclidean bilinear form sum_k x_k y_k of two grade-1 vectors (no conjugation).
cplx inner(const Multivector& x, const Multivector& y);

/// Embed real coordinates as the grade-1 vector sum_k v[k] e_{k+1}.
Multivector vector_mv(int m, const std::vector<double>& v);

/// Multivector inverse, solving (left multiplication by a) x = 1.
/// Throws std::domain_error if a is not invertible.
Multivector invert(const Multivector& a);

/// A validated square root of -1: i*i = -1 within 1e-12 (max coefficient gap).
struct RootOfMinusOne {
  Multivector i;
  explicit RootOfMinusOne(Multivector mv);
  /// Inverse of the root; always -i since i*i = -1.
  Multivector inverse() const { return -i; }
  /// i^p for integer p >= 0 (period 4).
  Multivector power(int p) const;
};

/// cos(theta) + sin(theta) * i — the exponential exp(theta * i).
Multivector exp_root(const RootOfMinusOne& i, double theta);

/// Split of a into the parts commuting/anticommuting with invertible b:
/// first = (a + b^-1 a b)/2 commutes with b, second = (a - b^-1 a b)/2
/// anticommutes: b^-1 * second * b = -second.
struct CommutingSplit {
  Multivector commuting;
  Multivector anticommuting;
};
CommutingSplit comm_split(const Multivector& a, const Multivector& b);

}  // namespace clifft

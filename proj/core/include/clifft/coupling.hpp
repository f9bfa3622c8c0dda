#pragma once
// Shared combinatorics of the closed-form convolution/translation expansions:
// per axis only the index triples (j1,j2,j3) in {(0,0,0),(1,1,0),(1,0,1),(0,1,1)}
// survive (a fourth all-zero row j4 completes the sign bookkeeping), and each
// term carries the reflection-dependent sign
//   c(j, phi, gamma) = prod_k (-1)^{(j_sel(k) + 1) * (delta_k - 1)}
// where j_sel(k) picks row 2*phi_k + gamma_k + 1 of (j1, j2, j3, j4) on axis k
// and delta_k = 1 exactly when axis k carries the triple (0,0,0).

#include <array>
#include <stdexcept>
#include <vector>

namespace clifft {

struct AxisTriple {
  int j1, j2, j3;
};

inline constexpr std::array<AxisTriple, 4> kAxisTriples{{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};

/// Row index of an admissible per-axis triple; throws for the twelve
/// non-admissible combinations.
inline int axis_triple_row(int j1, int j2, int j3) {
  for (int r = 0; r < 4; ++r)
    if (kAxisTriples[size_t(r)].j1 == j1 && kAxisTriples[size_t(r)].j2 == j2 && kAxisTriples[size_t(r)].j3 == j3) return r;
  throw std::invalid_argument("axis_triple_row: index triple is not admissible (needs j1+j2+j3 even, j1|j2|j3 pairwise coupled)");
}

/// Sign c(j, phi, gamma).  `rows` holds one admissible row index (0..3) per
/// axis; phi/gamma are reflection bitmasks over the axes.
inline int sign_c(const std::vector<int>& rows, unsigned phi, unsigned gamma) {
  int sign = 1;
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] < 0 || rows[k] > 3) throw std::invalid_argument("sign_c: row index outside the admissible set");
    const AxisTriple& t = kAxisTriples[size_t(rows[k])];
    const int delta = (t.j1 + t.j2 + t.j3 == 0) ? 1 : 0;
    int jsel = 0;
    switch (((phi >> k) & 1u) * 2u + ((gamma >> k) & 1u)) {
      case 0: jsel = t.j1; break;
      case 1: jsel = t.j2; break;
      case 2: jsel = t.j3; break;
      default: jsel = 0; break;  // j4 = 0
    }
    // (-1)^{(jsel+1)(delta-1)} = -1 exactly when delta = 0 and jsel is even.
    if (delta == 0 && ((jsel + 1) & 1)) sign = -sign;
  }
  return sign;
}

}  // namespace clifft

#pragma once
// Choi matrices of the map families, their closed-form spectra, the exact
// complete-positivity predicate, and the decomposition C = P + PT(Q) with
// P, Q PSD on the positivity region of the first family.

#include "posmap/maps.hpp"
#include "posmap/regions.hpp"

#include <array>
#include <vector>

namespace posmap {

struct SpectrumLine {
  double value = 0;
  int multiplicity = 0;
};

struct ChoiMatrix {
  int d = 2;
  CMatrix m;  // (d*d) x (d*d); composite index (i, m) -> i*d + m, input copy first
  MapCombination source;
};

[[nodiscard]] ChoiMatrix build_choi(const MapCombination& m);
[[nodiscard]] QMatrix build_choi_exact(const RationalMap& m);

// First family: { x/d (mult d^2-d), x/d + y (mult d-1),
//                 d - (d^2-1)/d*x - (d-1)*y (mult 1) }.
[[nodiscard]] std::array<SpectrumLine, 3> phi_choi_spectrum(int d, double x, double y);

// Second family, via the swap eigenspaces:
// { 1 - (d-1)x/d (mult d), 1 - (d-1)x/d - y (mult d(d-1)/2),
//   (d+1)x/d + y - 1 (mult d(d-1)/2) }.
[[nodiscard]] std::array<SpectrumLine, 3> lambda_choi_spectrum(int d, double x, double y);

[[nodiscard]] std::array<SpectrumLine, 3> family_choi_spectrum(Family f, int d, double x, double y);

// Ascending full spectrum (multiplicities expanded).
[[nodiscard]] std::vector<double> expand_spectrum(const std::array<SpectrumLine, 3>& lines);

// Exact: the Choi matrix is PSD iff the point lies in the closed CP region.
[[nodiscard]] bool is_completely_positive_exact(Family f, int d, const Rational& x, const Rational& y);

struct DecompositionPair {
  CMatrix p, q;
  double residual = 0;  // max-abs error of C - P - PT(Q)
};

// Defined on the closed positivity region of the first family; throws
// std::domain_error outside.  Interpolates the vertex decompositions
// affinely (quadrilateral split along the diagonal from the origin vertex),
// which reproduces the closed-form edge constructions exactly.
[[nodiscard]] DecompositionPair boundary_decomposition(int d, double x, double y);

}  // namespace posmap

#pragma once
// The two-parameter map families on M_d, expressed over the spanning maps
// {identity, normalized trace, diagonal pinch, transpose}:
//   X -> c_id*X + c_tau*tr(X)/d * I + c_diag*diag(X) + c_T*X^T.
// First family: (1-x-y)*identity + x*trace + y*diag.
// Second family: (1-x-y)*transpose + x*trace + y*diag.
// Also the named extreme maps of their positivity regions and the d=3
// three-parameter correspondence.

#include "posmap/qmatrix.hpp"

#include <utility>

namespace posmap {

enum class Family { Phi, Lambda };

struct MapCombination {
  int d = 2;
  double c_id = 0, c_tau = 0, c_diag = 0, c_T = 0;
};

// Exact-coefficient variant; source of truth for identities and regions.
struct RationalMap {
  int d = 2;
  Rational c_id, c_tau, c_diag, c_T;
  [[nodiscard]] MapCombination combination() const;
};

enum class NamedMap {
  Psi0,       // identity map, family-1 origin
  Psi1,       // (d*diag - id)/(d-1)
  Psi2,       // (d*trace - diag)/(d-1)
  T1,         // (d*trace - id)/(d-1)
  P,          // (d*trace - 2*diag + id)/(d-1)
  Tk,         // (k*d*trace - id)/(k*d-1)
  TildePsi0,  // (d*trace - transpose)/(d-1)
  TildePsi1,  // (d*trace - 2*diag + transpose)/(d-1)
  TildePsi2,  // diag
  TildeT1,    // transpose
  TildeP,     // (d*diag - transpose)/(d-1)
  TildeT2,    // (d*trace + transpose)/(d+1)
};

[[nodiscard]] Family family_of(NamedMap n);

// (x, y) coordinates in the owning family's parameter plane; k only matters
// for Tk.
[[nodiscard]] std::pair<Rational, Rational> named_point(NamedMap n, int d, int k = 1);
[[nodiscard]] RationalMap named_map(NamedMap n, int d, int k = 1);

[[nodiscard]] RationalMap phi_map(int d, const Rational& alpha, const Rational& beta);
[[nodiscard]] RationalMap lambda_map(int d, const Rational& mu, const Rational& nu);
[[nodiscard]] RationalMap family_map(Family f, int d, const Rational& x, const Rational& y);
[[nodiscard]] MapCombination phi_combination(int d, double alpha, double beta);
[[nodiscard]] MapCombination lambda_combination(int d, double mu, double nu);
[[nodiscard]] MapCombination family_combination(Family f, int d, double x, double y);

[[nodiscard]] CMatrix apply_map(const MapCombination& m, const CMatrix& x);
[[nodiscard]] QMatrix apply_map(const RationalMap& m, const QMatrix& x);

// Block action of the k-fold extension: output block (i,j) is the map applied
// to the d x d block (i,j) of the (k*d) x (k*d) input.
[[nodiscard]] CMatrix extend_and_apply(const MapCombination& m, int k, const CMatrix& r);
[[nodiscard]] QMatrix extend_and_apply(const RationalMap& m, int k, const QMatrix& r);

// d=3 three-parameter maps: diagonal entry i of the output is
// a*x_ii + b*x_(i+1,i+1) + c*x_(i+2,i+2) (indices mod 3), off-diagonal -x_ij.
// Coefficients must be nonnegative.
struct ChoParams {
  Rational a, b, c;
};

[[nodiscard]] QMatrix cho_map(const ChoParams& p, const QMatrix& x);
[[nodiscard]] CMatrix cho_map(const ChoParams& p, const CMatrix& x);

// For the c == b slice the three-parameter map equals (a+2b) times a
// first-family map; these convert between the parameterizations.
// phi_from_cho requires a, b >= 0 and a + 2b > 0; cho_from_phi requires
// x + y > 1 and 0 <= x <= 3/2 (throws std::domain_error otherwise).
[[nodiscard]] std::pair<Rational, Rational> phi_from_cho(const Rational& a, const Rational& b);
[[nodiscard]] ChoParams cho_from_phi(const Rational& alpha, const Rational& beta);

}  // namespace posmap

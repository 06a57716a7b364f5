#pragma once
// The chain construction on d = k+1: extend the first-family map along the
// upper k-positivity boundary line, evaluate it on the rank-one projector of
// the chain vector x = sum_i e_i (x) (f_i + f_{i+1}), and certify the exact
// integer kernel vector of the resulting pencil X(t) = A + t B.

#include "posmap/qmatrix.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace posmap {

// Slope convention for the boundary line y(x) = (k+1)/k - slope * x.  The
// consistent slope is (k^2+k-1)/k^2; Alternate keeps (k^2+k+1)/k^2 as a
// regression control that must fail the golden and kernel checks.
enum class ChainLine { Consistent, Alternate };

[[nodiscard]] Rational chain_slope(int k, ChainLine line = ChainLine::Consistent);
[[nodiscard]] Rational chain_beta(int k, const Rational& alpha, ChainLine line = ChainLine::Consistent);

// d = k+1; both matrices are (k*d) x (k*d) with blocks
//   A_ij = -(1/k) x_i x_j^T + ((k+1)/k) diag(x_i o x_j)
//   B_ij = ((k-1)/k^2) x_i x_j^T + (<x_j, x_i>/d) I - slope * diag(x_i o x_j).
// Requires k >= 2.
[[nodiscard]] std::pair<QMatrix, QMatrix> build_AB(int k, ChainLine line = ChainLine::Consistent);

// Closed-form integer kernel vector, length k*(k+1), coprime entries;
// satisfies the mirror symmetry psi[i][l] == psi[k+1-i][d+1-l] (one-based
// block/coordinate indices).  Requires k >= 2.
[[nodiscard]] std::vector<long long> build_psi(int k);

struct ZeroModeReport {
  int k = 0;
  int d = 0;
  bool a_zero = false;          // A psi == 0 exactly
  bool b_zero = false;          // B psi == 0 exactly
  bool mirror_ok = false;       // mirror symmetry of psi
  bool gcd_one = false;         // psi entries are coprime
  long first_failing_row = -1;  // first row (0-based) where A psi or B psi is nonzero
  int joint_nullspace_dim = 0;  // dim ker(A) ∩ ker(B), via the stacked matrix
  bool in_joint_nullspace = false;
  [[nodiscard]] bool ok() const { return a_zero && b_zero && mirror_ok && gcd_one && in_joint_nullspace; }
};

[[nodiscard]] ZeroModeReport verify_zero_mode(int k, ChainLine line = ChainLine::Consistent);

// Single line, space-separated integers.
void write_int_vector(std::ostream& os, const std::vector<long long>& v);
[[nodiscard]] std::vector<long long> read_int_vector(std::istream& is);

}  // namespace posmap

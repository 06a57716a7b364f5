#pragma once
// Complex dense linear algebra helpers shared by every numeric layer:
// bipartite index bookkeeping, Kronecker products, partial transposition,
// and a checked Hermitian eigensolve.

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace posmap {

using Cx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Entrywise Hermiticity drift accepted before symmetrizing and eigensolving.
inline constexpr double HERMITIAN_TOL = 1e-12;
// Eigenvalue >= -PSD_TOL counts as nonnegative everywhere in the suite.
inline constexpr double PSD_TOL = 1e-9;

// Composite index (i, m) <-> a = i*dim_b + m, zero-based; the first factor is
// always the extension (input) copy.
struct BipartiteIndex {
  int dim_a = 1;
  int dim_b = 1;
  [[nodiscard]] int flatten(int i, int m) const { return i * dim_b + m; }
  [[nodiscard]] std::pair<int, int> split(int a) const { return {a / dim_b, a % dim_b}; }
  [[nodiscard]] int total() const { return dim_a * dim_b; }
};

[[nodiscard]] CMatrix kron(const CMatrix& a, const CMatrix& b);

// Transposes the second tensor factor: (i,m),(j,n) -> (i,n),(j,m).
[[nodiscard]] CMatrix partial_transpose_second(const CMatrix& m, const BipartiteIndex& idx);

// Ascending real spectrum of (m + m†)/2.  Throws std::invalid_argument if m
// deviates from Hermitian by more than HERMITIAN_TOL entrywise, or if the
// eigenvalue sum drifts from the trace by more than 1e-9 * max(1, |tr|).
[[nodiscard]] RVector hermitian_spectrum(const CMatrix& m);

[[nodiscard]] double min_eigenvalue(const CMatrix& m);

[[nodiscard]] CMatrix principal_submatrix(const CMatrix& m, const std::vector<int>& keep);

// Number of singular values of the d x d reshaping of w above tol; w is a
// vector on the bipartite space (dim_a = dim_b = d).
[[nodiscard]] int schmidt_rank(const CVector& w, int d, double tol = 1e-8);

}  // namespace posmap

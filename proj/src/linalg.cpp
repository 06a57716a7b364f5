#include "posmap/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace posmap {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_transpose_second(const CMatrix& m, const BipartiteIndex& idx) {
  if (m.rows() != idx.total() || m.cols() != idx.total())
    throw std::invalid_argument("partial_transpose_second: size mismatch");
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < idx.dim_a; ++i)
    for (int j = 0; j < idx.dim_a; ++j)
      for (int mm = 0; mm < idx.dim_b; ++mm)
        for (int n = 0; n < idx.dim_b; ++n)
          out(idx.flatten(i, n), idx.flatten(j, mm)) = m(idx.flatten(i, mm), idx.flatten(j, n));
  return out;
}

RVector hermitian_spectrum(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_spectrum: non-square input");
  const double drift = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (drift > HERMITIAN_TOL) throw std::invalid_argument("hermitian_spectrum: input is not Hermitian");
  CMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  RVector ev = es.eigenvalues();
  const double tr = h.trace().real();
  if (std::abs(ev.sum() - tr) > 1e-9 * std::max(1.0, std::abs(tr)))
    throw std::runtime_error("hermitian_spectrum: eigenvalue sum drifted from trace");
  return ev;
}

double min_eigenvalue(const CMatrix& m) { return hermitian_spectrum(m)(0); }

CMatrix principal_submatrix(const CMatrix& m, const std::vector<int>& keep) {
  for (int idx : keep)
    if (idx < 0 || idx >= m.rows()) throw std::invalid_argument("principal_submatrix: index out of range");
  CMatrix out(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out(static_cast<int>(r), static_cast<int>(c)) = m(keep[r], keep[c]);
  return out;
}

int schmidt_rank(const CVector& w, int d, double tol) {
  if (w.size() != d * d) throw std::invalid_argument("schmidt_rank: size mismatch");
  CMatrix resh(d, d);
  for (int i = 0; i < d; ++i)
    for (int m = 0; m < d; ++m) resh(i, m) = w(i * d + m);
  Eigen::JacobiSVD<CMatrix> svd(resh);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return rank;
}

}  // namespace posmap

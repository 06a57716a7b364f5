#include "posmap/choi.hpp"

#include <algorithm>
#include <stdexcept>

namespace posmap {

ChoiMatrix build_choi(const MapCombination& m) {
  const int d = m.d;
  CMatrix c(d * d, d * d);
  CMatrix unit = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      unit(i, j) = 1;
      c.block(i * d, j * d, d, d) = apply_map(m, unit);
      unit(i, j) = 0;
    }
  return ChoiMatrix{d, std::move(c), m};
}

QMatrix build_choi_exact(const RationalMap& m) {
  const int d = m.d;
  QMatrix c(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      QMatrix unit(d, d);
      unit(i, j) = 1;
      QMatrix mapped = apply_map(m, unit);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) c(i * d + p, j * d + q) = mapped(p, q);
    }
  return c;
}

std::array<SpectrumLine, 3> phi_choi_spectrum(int d, double x, double y) {
  if (d < 2) throw std::invalid_argument("phi_choi_spectrum: dimension must be >= 2");
  const double dd = d;
  return {SpectrumLine{x / dd, d * d - d}, SpectrumLine{x / dd + y, d - 1},
          SpectrumLine{dd - (dd * dd - 1) / dd * x - (dd - 1) * y, 1}};
}

std::array<SpectrumLine, 3> lambda_choi_spectrum(int d, double x, double y) {
  if (d < 2) throw std::invalid_argument("lambda_choi_spectrum: dimension must be >= 2");
  const double dd = d;
  const int half = d * (d - 1) / 2;
  return {SpectrumLine{1 - (dd - 1) / dd * x, d}, SpectrumLine{1 - (dd - 1) / dd * x - y, half},
          SpectrumLine{(dd + 1) / dd * x + y - 1, half}};
}

std::array<SpectrumLine, 3> family_choi_spectrum(Family f, int d, double x, double y) {
  return f == Family::Phi ? phi_choi_spectrum(d, x, y) : lambda_choi_spectrum(d, x, y);
}

std::vector<double> expand_spectrum(const std::array<SpectrumLine, 3>& lines) {
  std::vector<double> out;
  for (const auto& l : lines) out.insert(out.end(), l.multiplicity, l.value);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_completely_positive_exact(Family f, int d, const Rational& x, const Rational& y) {
  return contains(region(f, RegionKind::CP, d), RationalPoint{x, y}, ContainMode::Closed);
}

namespace {

// Sum over i<j of v v† for v = e_i (x) e_j + s * e_j (x) e_i, s = +-1.
CMatrix pair_vector_gram(int d, int sign) {
  CMatrix out = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CVector v = CVector::Zero(d * d);
      v(i * d + j) = 1.0;
      v(j * d + i) = sign;
      out += v * v.adjoint();
    }
  return out;
}

}  // namespace

DecompositionPair boundary_decomposition(int d, double x, double y) {
  if (d < 2) throw std::invalid_argument("boundary_decomposition: dimension must be >= 2");
  const RationalPoint pt{rationalize(x), rationalize(y)};
  const ParamRegion pos = region(Family::Phi, RegionKind::Positive, d);
  if (!contains(pos, pt)) throw std::domain_error("boundary_decomposition: point outside the positivity region");

  // Vertex order [origin, lower-right, right, top]; at the two CP vertices the
  // whole Choi matrix goes into P, at the other two it goes into PT(Q).
  const auto w = convex_combination(pt, pos.vertices);
  const CMatrix p_origin = build_choi(named_map(NamedMap::Psi0, d).combination()).m;
  const CMatrix p_top = build_choi(named_map(NamedMap::Psi1, d).combination()).m;
  const double edge_scale = static_cast<double>(d) / (d - 1) / d;  // x/d at x = d/(d-1)
  const CMatrix q_lower = edge_scale * pair_vector_gram(d, +1);
  const CMatrix q_right = edge_scale * pair_vector_gram(d, -1);

  DecompositionPair out;
  out.p = to_double(w[0]) * p_origin + to_double(w[3]) * p_top;
  out.q = to_double(w[1]) * q_lower + to_double(w[2]) * q_right;
  const CMatrix c = build_choi(phi_combination(d, to_double(pt.x), to_double(pt.y))).m;
  const BipartiteIndex idx{d, d};
  out.residual = (c - out.p - partial_transpose_second(out.q, idx)).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace posmap

#include "posmap/maps.hpp"

#include <stdexcept>

namespace posmap {

namespace {

void check_dim(int d) {
  if (d < 2) throw std::invalid_argument("map: dimension must be >= 2");
}

}  // namespace

MapCombination RationalMap::combination() const {
  return MapCombination{d, to_double(c_id), to_double(c_tau), to_double(c_diag), to_double(c_T)};
}

Family family_of(NamedMap n) {
  switch (n) {
    case NamedMap::Psi0:
    case NamedMap::Psi1:
    case NamedMap::Psi2:
    case NamedMap::T1:
    case NamedMap::P:
    case NamedMap::Tk:
      return Family::Phi;
    default:
      return Family::Lambda;
  }
}

std::pair<Rational, Rational> named_point(NamedMap n, int d, int k) {
  check_dim(d);
  if (k < 1) throw std::invalid_argument("named_point: k must be >= 1");
  const Rational dd(d);
  switch (n) {
    case NamedMap::Psi0:
      return {0, 0};
    case NamedMap::Psi1:
      return {0, dd / (d - 1)};
    case NamedMap::Psi2:
      return {dd / (d - 1), rat(-1, d - 1)};
    case NamedMap::T1:
      return {dd / (d - 1), 0};
    case NamedMap::P:
      return {dd / (d - 1), rat(-2, d - 1)};
    case NamedMap::Tk:
      return {rat(k) * dd / (k * d - 1), 0};
    case NamedMap::TildePsi0:
      return {dd / (d - 1), 0};
    case NamedMap::TildePsi1:
      return {dd / (d - 1), rat(-2, d - 1)};
    case NamedMap::TildePsi2:
      return {0, 1};
    case NamedMap::TildeT1:
      return {0, 0};
    case NamedMap::TildeP:
      return {0, dd / (d - 1)};
    case NamedMap::TildeT2:
      return {dd / (d + 1), 0};
  }
  throw std::invalid_argument("named_point: unknown map");
}

RationalMap named_map(NamedMap n, int d, int k) {
  auto [x, y] = named_point(n, d, k);
  return family_map(family_of(n), d, x, y);
}

RationalMap phi_map(int d, const Rational& alpha, const Rational& beta) {
  check_dim(d);
  return RationalMap{d, 1 - alpha - beta, alpha, beta, 0};
}

RationalMap lambda_map(int d, const Rational& mu, const Rational& nu) {
  check_dim(d);
  return RationalMap{d, 0, mu, nu, 1 - mu - nu};
}

RationalMap family_map(Family f, int d, const Rational& x, const Rational& y) {
  return f == Family::Phi ? phi_map(d, x, y) : lambda_map(d, x, y);
}

MapCombination phi_combination(int d, double alpha, double beta) {
  check_dim(d);
  return MapCombination{d, 1 - alpha - beta, alpha, beta, 0};
}

MapCombination lambda_combination(int d, double mu, double nu) {
  check_dim(d);
  return MapCombination{d, 0, mu, nu, 1 - mu - nu};
}

MapCombination family_combination(Family f, int d, double x, double y) {
  return f == Family::Phi ? phi_combination(d, x, y) : lambda_combination(d, x, y);
}

CMatrix apply_map(const MapCombination& m, const CMatrix& x) {
  if (x.rows() != m.d || x.cols() != m.d) throw std::invalid_argument("apply_map: size mismatch");
  CMatrix out = m.c_id * x + m.c_T * x.transpose();
  const Cx scaled_tr = m.c_tau * x.trace() / static_cast<double>(m.d);
  for (int i = 0; i < m.d; ++i) out(i, i) += scaled_tr + m.c_diag * x(i, i);
  return out;
}

QMatrix apply_map(const RationalMap& m, const QMatrix& x) {
  if (x.rows() != m.d || x.cols() != m.d) throw std::invalid_argument("apply_map: size mismatch");
  QMatrix out = m.c_id * x + m.c_T * x.transpose();
  const Rational scaled_tr = m.c_tau * x.trace() / m.d;
  for (int i = 0; i < m.d; ++i) out(i, i) += scaled_tr + m.c_diag * x(i, i);
  return out;
}

CMatrix extend_and_apply(const MapCombination& m, int k, const CMatrix& r) {
  if (k < 1) throw std::invalid_argument("extend_and_apply: k must be >= 1");
  if (r.rows() != k * m.d || r.cols() != k * m.d) throw std::invalid_argument("extend_and_apply: size mismatch");
  CMatrix out(r.rows(), r.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.block(i * m.d, j * m.d, m.d, m.d) = apply_map(m, r.block(i * m.d, j * m.d, m.d, m.d));
  return out;
}

QMatrix extend_and_apply(const RationalMap& m, int k, const QMatrix& r) {
  if (k < 1) throw std::invalid_argument("extend_and_apply: k must be >= 1");
  if (r.rows() != k * m.d || r.cols() != k * m.d) throw std::invalid_argument("extend_and_apply: size mismatch");
  QMatrix out(r.rows(), r.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      QMatrix block(m.d, m.d);
      for (int p = 0; p < m.d; ++p)
        for (int q = 0; q < m.d; ++q) block(p, q) = r(i * m.d + p, j * m.d + q);
      QMatrix mapped = apply_map(m, block);
      for (int p = 0; p < m.d; ++p)
        for (int q = 0; q < m.d; ++q) out(i * m.d + p, j * m.d + q) = mapped(p, q);
    }
  return out;
}

namespace {

void check_cho(const ChoParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0) throw std::invalid_argument("cho_map: coefficients must be nonnegative");
}

}  // namespace

QMatrix cho_map(const ChoParams& p, const QMatrix& x) {
  check_cho(p);
  if (x.rows() != 3 || x.cols() != 3) throw std::invalid_argument("cho_map: input must be 3x3");
  const Rational coef[3] = {p.a, p.b, p.c};
  QMatrix out(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      if (i != j) out(i, j) = -x(i, j);
    for (int s = 0; s < 3; ++s) out(i, i) += coef[s] * x((i + s) % 3, (i + s) % 3);
  }
  return out;
}

CMatrix cho_map(const ChoParams& p, const CMatrix& x) {
  check_cho(p);
  if (x.rows() != 3 || x.cols() != 3) throw std::invalid_argument("cho_map: input must be 3x3");
  const double coef[3] = {to_double(p.a), to_double(p.b), to_double(p.c)};
  CMatrix out = -x;
  for (int i = 0; i < 3; ++i) {
    out(i, i) = 0;
    for (int s = 0; s < 3; ++s) out(i, i) += coef[s] * x((i + s) % 3, (i + s) % 3);
  }
  return out;
}

std::pair<Rational, Rational> phi_from_cho(const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) throw std::domain_error("phi_from_cho: coefficients must be nonnegative");
  const Rational s = a + 2 * b;
  if (s == 0) throw std::domain_error("phi_from_cho: zero scale a + 2b");
  return {3 * b / s, (a - b + 1) / s};
}

ChoParams cho_from_phi(const Rational& alpha, const Rational& beta) {
  if (alpha + beta <= 1) throw std::domain_error("cho_from_phi: requires x + y > 1");
  if (alpha < 0 || alpha > rat(3, 2)) throw std::domain_error("cho_from_phi: requires 0 <= x <= 3/2");
  const Rational s = 1 / (alpha + beta - 1);
  const Rational b = alpha * s / 3;
  const Rational a = beta * s + b - 1;
  return ChoParams{a, b, b};
}

}  // namespace posmap

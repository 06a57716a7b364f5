#include "posmap/zeromode.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace posmap {

namespace {

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("chain: k must be >= 2");
}

// Chain vectors x_i = f_i + f_{i+1} in C^d, 0-based i in [0, k).
std::vector<std::vector<long long>> chain_vectors(int k) {
  const int d = k + 1;
  std::vector<std::vector<long long>> x(k, std::vector<long long>(d, 0));
  for (int i = 0; i < k; ++i) x[i][i] = x[i][i + 1] = 1;
  return x;
}

}  // namespace

Rational chain_slope(int k, ChainLine line) {
  check_k(k);
  const long kk = k;
  return line == ChainLine::Consistent ? rat(kk * kk + kk - 1, kk * kk) : rat(kk * kk + kk + 1, kk * kk);
}

Rational chain_beta(int k, const Rational& alpha, ChainLine line) {
  check_k(k);
  return rat(k + 1, k) - chain_slope(k, line) * alpha;
}

std::pair<QMatrix, QMatrix> build_AB(int k, ChainLine line) {
  check_k(k);
  const int d = k + 1;
  const auto x = chain_vectors(k);
  const Rational ca_rank = rat(-1, k), ca_diag = rat(k + 1, k);
  const Rational cb_rank = rat(k - 1, static_cast<long>(k) * k), cb_diag = -chain_slope(k, line);
  QMatrix a(k * d, k * d), b(k * d, k * d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long t = 0;  // tr(x_i x_j^T) = <x_j, x_i>
      for (int m = 0; m < d; ++m) t += static_cast<long>(x[i][m] * x[j][m]);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const long rank1 = static_cast<long>(x[i][m] * x[j][n]);
          Rational& av = a(i * d + m, j * d + n);
          Rational& bv = b(i * d + m, j * d + n);
          av += ca_rank * rank1;
          bv += cb_rank * rank1;
          if (m == n) {
            const long diag = static_cast<long>(x[i][m] * x[j][m]);
            av += ca_diag * diag;
            bv += rat(t, d) + cb_diag * diag;
          }
        }
    }
  return {std::move(a), std::move(b)};
}

std::vector<long long> build_psi(int k) {
  check_k(k);
  const int d = k + 1;
  auto alternating = [](long long s, int len) {
    std::vector<long long> v(len);
    for (int i = 0; i < len; ++i) v[i] = (i % 2 == 0) ? s : -s;
    return v;
  };
  std::vector<std::vector<long long>> blocks(k);
  for (int j = 1; j <= (k + 1) / 2; ++j) {  // one-based block index
    const long long lead = (j % 2 == 1 ? 1 : -1) * static_cast<long long>(d - j);
    std::vector<long long> block = alternating(lead, j);
    std::vector<long long> tail = alternating(j, d - j);
    block.insert(block.end(), tail.begin(), tail.end());
    blocks[j - 1] = std::move(block);
  }
  for (int j = (k + 1) / 2 + 1; j <= k; ++j) {
    blocks[j - 1] = blocks[k - j];
    std::reverse(blocks[j - 1].begin(), blocks[j - 1].end());
  }
  std::vector<long long> psi;
  psi.reserve(static_cast<std::size_t>(k) * d);
  for (const auto& b : blocks) psi.insert(psi.end(), b.begin(), b.end());
  return psi;
}

ZeroModeReport verify_zero_mode(int k, ChainLine line) {
  check_k(k);
  const int d = k + 1;
  auto [a, b] = build_AB(k, line);
  const auto psi = build_psi(k);

  ZeroModeReport rep;
  rep.k = k;
  rep.d = d;

  QVector qpsi(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) qpsi[i] = Rational(static_cast<long>(psi[i]));
  const QVector apsi = a * qpsi, bpsi = b * qpsi;
  rep.a_zero = std::all_of(apsi.begin(), apsi.end(), [](const Rational& v) { return v == 0; });
  rep.b_zero = std::all_of(bpsi.begin(), bpsi.end(), [](const Rational& v) { return v == 0; });
  for (std::size_t r = 0; r < apsi.size(); ++r)
    if (apsi[r] != 0 || bpsi[r] != 0) {
      rep.first_failing_row = static_cast<long>(r);
      break;
    }

  rep.mirror_ok = true;
  for (int i = 1; i <= k; ++i)
    for (int l = 1; l <= d; ++l)
      rep.mirror_ok = rep.mirror_ok && psi[(i - 1) * d + (l - 1)] == psi[(k - i) * d + (d - l)];

  long long g = 0;
  for (long long v : psi) g = std::gcd(g, v);
  rep.gcd_one = g == 1;

  QMatrix stacked(2 * k * d, k * d);
  for (int r = 0; r < k * d; ++r)
    for (int c = 0; c < k * d; ++c) {
      stacked(r, c) = a(r, c);
      stacked(k * d + r, c) = b(r, c);
    }
  const auto basis = q_nullspace(stacked);
  rep.joint_nullspace_dim = static_cast<int>(basis.size());
  const QVector spsi = stacked * qpsi;
  rep.in_joint_nullspace = std::all_of(spsi.begin(), spsi.end(), [](const Rational& v) { return v == 0; });
  return rep;
}

void write_int_vector(std::ostream& os, const std::vector<long long>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  os << '\n';
}

std::vector<long long> read_int_vector(std::istream& is) {
  std::vector<long long> v;
  long long x;
  while (is >> x) v.push_back(x);
  if (v.empty()) throw std::invalid_argument("read_int_vector: empty input");
  return v;
}

}  // namespace posmap

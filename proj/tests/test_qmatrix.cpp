#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "posmap/qmatrix.hpp"

#include <random>
#include <sstream>

using namespace posmap;

namespace {

std::mt19937_64 rng(7ULL);

QMatrix random_qmatrix(int rows, int cols) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("exact ring identities: (A+B)-B == A, scalar distributivity") {
  QMatrix a = random_qmatrix(4, 4), b = random_qmatrix(4, 4);
  CHECK((a + b) - b == a);
  CHECK(rat(2, 3) * (a + b) == rat(2, 3) * a + rat(2, 3) * b);
  CHECK((a - a).is_zero());
  CHECK((a * QMatrix::identity(4)) == a);
  CHECK((QMatrix::identity(4) * a) == a);
}

TEST_CASE("product against transpose identity and trace") {
  QMatrix a = random_qmatrix(3, 4), b = random_qmatrix(4, 3);
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK((a * b).trace() == (b * a).trace());
}

TEST_CASE("q_inverse: A * inv(A) == I exactly for random invertible input") {
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix a = random_qmatrix(4, 4);
    // Diagonal dominance guarantees invertibility.
    for (int i = 0; i < 4; ++i) a(i, i) += 40;
    QMatrix inv = q_inverse(a);
    CHECK(a * inv == QMatrix::identity(4));
    CHECK(inv * a == QMatrix::identity(4));
  }
  QMatrix sing(2, 2);
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK_THROWS_AS((void)q_inverse(sing), std::invalid_argument);
}

TEST_CASE("q_nullspace: dimension + membership, exact") {
  // Rank-1 3x3: nullspace dimension 2, and A v == 0 exactly for basis vectors.
  QMatrix a(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = rat((r + 1) * (c + 2), 3);
  auto basis = q_nullspace(a);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    QVector av = a * v;
    for (const auto& x : av) CHECK(x == 0);
  }
  // Full-rank matrix: empty nullspace.
  QMatrix inv = random_qmatrix(3, 3);
  for (int i = 0; i < 3; ++i) inv(i, i) += 30;
  CHECK(q_nullspace(inv).empty());
  // Known kernel: x + y + z = 0.
  QMatrix row(1, 3);
  row(0, 0) = row(0, 1) = row(0, 2) = 1;
  CHECK(q_nullspace(row).size() == 2);
}

TEST_CASE("q_kron mixed-product property") {
  QMatrix a = random_qmatrix(2, 2), b = random_qmatrix(2, 2);
  QMatrix c = random_qmatrix(2, 2), d = random_qmatrix(2, 2);
  CHECK(q_kron(a, b) * q_kron(c, d) == q_kron(a * c, b * d));
}

TEST_CASE("io round trip is bit exact") {
  QMatrix m = random_qmatrix(5, 3);
  std::stringstream ss;
  write_qmatrix(ss, m);
  QMatrix back = read_qmatrix(ss);
  CHECK(back == m);
  std::stringstream bad("1/2 3\n4\n");
  CHECK_THROWS_AS((void)read_qmatrix(bad), std::invalid_argument);
  std::stringstream empty("");
  CHECK_THROWS_AS((void)read_qmatrix(empty), std::invalid_argument);
}

TEST_CASE("to_complex matches rational values") {
  QMatrix m(2, 2);
  m(0, 0) = rat(1, 3);
  m(1, 1) = rat(-7, 2);
  CMatrix c = m.to_complex();
  CHECK(c(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(c(1, 1).real() == -3.5);
  CHECK(c(0, 1) == Cx(0, 0));
}

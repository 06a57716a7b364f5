#pragma once
// Dense rational matrices; every operation is exact.  Used for the exact
// region geometry, the convex-identity checks, and the zero-mode layer.

#include "posmap/linalg.hpp"
#include "posmap/rational.hpp"

#include <iosfwd>
#include <vector>

namespace posmap {

using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
  [[nodiscard]] static QMatrix identity(int n);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);
  [[nodiscard]] QMatrix transpose() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool operator==(const QMatrix& o) const;
  [[nodiscard]] CMatrix to_complex() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

[[nodiscard]] QMatrix operator+(QMatrix a, const QMatrix& b);
[[nodiscard]] QMatrix operator-(QMatrix a, const QMatrix& b);
[[nodiscard]] QMatrix operator*(const Rational& s, QMatrix a);
[[nodiscard]] QMatrix operator*(const QMatrix& a, const QMatrix& b);
[[nodiscard]] QVector operator*(const QMatrix& a, const QVector& v);

[[nodiscard]] QMatrix q_kron(const QMatrix& a, const QMatrix& b);

// Gauss-Jordan with exact pivoting; throws std::invalid_argument on a
// singular or non-square input.
[[nodiscard]] QMatrix q_inverse(const QMatrix& a);

// Basis of the right nullspace from the reduced row echelon form; empty when
// the matrix has full column rank.
[[nodiscard]] std::vector<QVector> q_nullspace(const QMatrix& a);

// One row per line, entries "num/den" separated by single spaces.
void write_qmatrix(std::ostream& os, const QMatrix& m);
[[nodiscard]] QMatrix read_qmatrix(std::istream& is);

}  // namespace posmap

#pragma once

#include <array>
#include <string>

#include "trifold/diffalg/rde.hpp"

namespace trifold {

/// 3x3 matrix of frame-free constants (rationals or parameter symbols).
/// As the parameter matrix its rows read (c0 c1 c2 / b0 b1 b2 / a0 a1 a2).
class Matrix3 {
 public:
  Matrix3();
  explicit Matrix3(const std::array<std::array<Rational, 3>, 3>& entries);
  explicit Matrix3(const std::array<std::array<RDE, 3>, 3>& entries);

  static Matrix3 zero() { return Matrix3(); }
  static Matrix3 identity();
  /// Nine independent parameter symbols c0..a2.
  static Matrix3 symbolic();
  /// Nine independent symbols l11..l33.
  static Matrix3 symbolic_lambda();
  static Matrix3 diagonal(const Rational& d0, const Rational& d1, const Rational& d2);

  const RDE& operator()(int row, int col) const { return m_[row][col]; }
  RDE& operator()(int row, int col) { return m_[row][col]; }

  // Rows 2, 1, 0 hold the a, b, c parameters.
  const RDE& a(int i) const { return m_[2][i]; }
  const RDE& b(int i) const { return m_[1][i]; }
  const RDE& c(int i) const { return m_[0][i]; }

  bool is_concrete() const;
  Rational rational(int row, int col) const;

  RDE trace() const;
  RDE det() const;
  /// Sum of principal 2x2 minors (= det * Tr inverse when invertible).
  RDE principal_minors() const;

  friend Matrix3 operator*(const Matrix3& x, const Matrix3& y);
  friend Matrix3 operator+(const Matrix3& x, const Matrix3& y);
  friend Matrix3 operator-(const Matrix3& x, const Matrix3& y);
  friend bool operator==(const Matrix3& x, const Matrix3& y);
  Matrix3 transpose() const;
  /// Inverse; throws DegenerateError when singular.
  Matrix3 inverse() const;
  Matrix3 cofactors() const;

  std::string to_string() const;

 private:
  std::array<std::array<RDE, 3>, 3> m_;
};

/// Matrix-vector products over RDE columns.
using Column3 = std::array<RDE, 3>;
Column3 operator*(const Matrix3& m, const Column3& v);
RDE dot(const Column3& x, const Column3& y);

}  // namespace trifold

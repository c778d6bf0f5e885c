#include "trifold/diffalg/matrix3.hpp"

#include "trifold/diffalg/errors.hpp"

namespace trifold {

Matrix3::Matrix3() = default;

Matrix3::Matrix3(const std::array<std::array<Rational, 3>, 3>& entries) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m_[i][j] = RDE(entries[i][j]);
}

Matrix3::Matrix3(const std::array<std::array<RDE, 3>, 3>& entries) : m_(entries) {}

Matrix3 Matrix3::identity() { return diagonal(1, 1, 1); }

Matrix3 Matrix3::diagonal(const Rational& d0, const Rational& d1, const Rational& d2) {
  Matrix3 m;
  m.m_[0][0] = RDE(d0);
  m.m_[1][1] = RDE(d1);
  m.m_[2][2] = RDE(d2);
  return m;
}

Matrix3 Matrix3::symbolic() {
  Matrix3 m;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) m.m_[i][j] = RDE(Poly::var(vars::omega(i, j)));
  return m;
}

Matrix3 Matrix3::symbolic_lambda() {
  Matrix3 m;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) m.m_[i][j] = RDE(Poly::var(vars::lambda(i, j)));
  return m;
}

bool Matrix3::is_concrete() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_constant()) return false;
  return true;
}

Rational Matrix3::rational(int row, int col) const {
  const RDE& x = m_[row][col];
  if (!x.is_constant()) throw Error("omega entry is symbolic");
  return x.constant_value();
}

RDE Matrix3::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

RDE Matrix3::det() const {
  const auto& m = m_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RDE Matrix3::principal_minors() const {
  const auto& m = m_;
  return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
         (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
}

Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RDE s;
      for (int k = 0; k < 3; ++k) s += x.m_[i][k] * y.m_[k][j];
      r.m_[i][j] = s;
    }
  return r;
}

Matrix3 operator+(const Matrix3& x, const Matrix3& y) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = x.m_[i][j] + y.m_[i][j];
  return r;
}

Matrix3 operator-(const Matrix3& x, const Matrix3& y) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = x.m_[i][j] - y.m_[i][j];
  return r;
}

bool operator==(const Matrix3& x, const Matrix3& y) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!equal(x.m_[i][j], y.m_[i][j])) return false;
  return true;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[j][i];
  return r;
}

Matrix3 Matrix3::cofactors() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // Cyclic index choice absorbs the checkerboard sign.
      r.m_[i][j] = m_[i1][j1] * m_[i2][j2] - m_[i1][j2] * m_[i2][j1];
    }
  return r;
}

Matrix3 Matrix3::inverse() const {
  RDE d = det();
  if (d.is_zero()) throw DegenerateError("matrix is singular");
  Matrix3 adj = cofactors().transpose();
  RDE id = d.inverse();
  for (auto& row : adj.m_)
    for (auto& x : row) x = x * id;
  return adj;
}

std::string Matrix3::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + m_[i][j].to_string();
  }
  return s + "]";
}

Column3 operator*(const Matrix3& m, const Column3& v) {
  Column3 r;
  for (int i = 0; i < 3; ++i) r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

RDE dot(const Column3& x, const Column3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

}  // namespace trifold

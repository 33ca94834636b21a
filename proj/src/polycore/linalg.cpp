#include "clfree/linalg.hpp"

#include <stdexcept>

namespace clfree {

Mat3 Mat3::identity() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
  return m;
}

Rational Mat3::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 Mat3::inverse() const {
  Rational d = det();
  if (d == 0) throw std::domain_error("singular 3x3 matrix");
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r.a[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
    }
  }
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}

Mat3 operator*(const Mat3& p, const Mat3& q) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = p.a[i][0] * q.a[0][j] + p.a[i][1] * q.a[1][j] + p.a[i][2] * q.a[2][j];
  return r;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    Rational inv = 1 / (*this)(row, col);
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col) == 0) continue;
      Rational f = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Rational>> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial linear_change(const Polynomial& F, const Mat3& T) {
  const Ring& R = F.ring();
  std::vector<Polynomial> images;
  for (int i = 0; i < 3; ++i) {
    Polynomial img(R);
    for (int j = 0; j < 3; ++j)
      if (T.a[i][j] != 0) img += T.a[i][j] * Polynomial::variable(R, static_cast<std::size_t>(j));
    images.push_back(std::move(img));
  }
  return F.substitute(R, images);
}

Vec3 linear_coefficients(const Polynomial& l) {
  if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous() || l.ring().arity() != 3)
    throw std::invalid_argument("not a linear form: " + l.to_string());
  Vec3 v;
  for (const auto& t : l.terms())
    for (int i = 0; i < 3; ++i)
      if (t.mono.e[i] == 1) v[i] = t.coef;
  return v;
}

Polynomial linear_form(const Vec3& v) {
  const Ring& R = Ring::xyz();
  Polynomial p(R);
  for (std::size_t i = 0; i < 3; ++i)
    if (v[i] != 0) p += v[i] * Polynomial::variable(R, i);
  return p;
}

Dehomogenized dehomogenize(const Polynomial& F, const Polynomial& line) {
  Vec3 l = linear_coefficients(line);
  // Pivot coordinate replaced by the line: prefer z, then y, then x.
  int pivot = l[2] != 0 ? 2 : (l[1] != 0 ? 1 : 0);
  Mat3 M;
  int row = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    M.a[row][i] = 1;
    ++row;
  }
  for (int j = 0; j < 3; ++j) M.a[2][j] = l[j];
  Polynomial G = linear_change(F, M.inverse());
  const Ring& A = Ring::xy();
  std::vector<Polynomial> images{Polynomial::variable(A, 0), Polynomial::variable(A, 1), Polynomial::constant(A, 1)};
  return {G.substitute(A, images), M};
}

Polynomial pullback_conic(const Polynomial& F) {
  const Ring& P = Ring::st();
  Polynomial s = Polynomial::variable(P, 0), t = Polynomial::variable(P, 1);
  std::vector<Polynomial> images{s * s, s * t, t * t};
  return F.substitute(P, images);
}

Mat3 quadric_matrix(const Polynomial& q) {
  if (q.ring().arity() != 3 || q.degree() != 2 || !q.is_homogeneous())
    throw std::invalid_argument("not a ternary quadratic form: " + q.to_string());
  Mat3 m;
  for (const auto& t : q.terms()) {
    int idx[2], n = 0;
    for (int i = 0; i < 3; ++i)
      for (std::uint32_t k = 0; k < t.mono.e[i]; ++k) idx[n++] = i;
    if (idx[0] == idx[1]) {
      m.a[idx[0]][idx[0]] = t.coef;
    } else {
      m.a[idx[0]][idx[1]] = t.coef / 2;
      m.a[idx[1]][idx[0]] = t.coef / 2;
    }
  }
  return m;
}

}  // namespace clfree

#ifndef CLFREE_LINALG_HPP
#define CLFREE_LINALG_HPP

#include <array>
#include <optional>
#include <vector>

#include "clfree/polynomial.hpp"

namespace clfree {

using Vec3 = std::array<Rational, 3>;

// 3x3 rational matrix, row major.
struct Mat3 {
  std::array<std::array<Rational, 3>, 3> a{};

  static Mat3 identity();
  Rational det() const;
  Mat3 inverse() const;  // throws std::domain_error when singular
  Mat3 transpose() const;
  Vec3 operator*(const Vec3& v) const;
  friend Mat3 operator*(const Mat3& p, const Mat3& q);
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

// Dense rational matrix with the handful of elimination routines the library
// needs (rank, kernel, solving).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {v : M v = 0}.
  std::vector<std::vector<Rational>> kernel() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Substitutes X = T X' into a form on the plane: result(X') = F(T X').
Polynomial linear_change(const Polynomial& F, const Mat3& T);

// Result of moving `line` to z = 0 and setting z = 1. `to_new` sends old
// point coordinates to the new ones (the new z coordinate is the line).
struct Dehomogenized {
  Polynomial f;  // in Ring::xy()
  Mat3 to_new;
};

// Applies an invertible change of coordinates sending `line` to z and then
// sets z = 1. Lines already equal to a coordinate keep the other coordinates.
Dehomogenized dehomogenize(const Polynomial& F, const Polynomial& line);

// x -> s^2, y -> st, z -> t^2.
Polynomial pullback_conic(const Polynomial& F);

// Symmetric matrix of a ternary quadratic form q = X^T M X.
Mat3 quadric_matrix(const Polynomial& q);
// Coefficient vector (a, b, c) of ax + by + cz.
Vec3 linear_coefficients(const Polynomial& l);
Polynomial linear_form(const Vec3& v);

}  // namespace clfree

#endif

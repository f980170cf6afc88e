#pragma once
// Dense exact matrices over a fixed field, with Gauss-Jordan reduction as the
// single workhorse. Vectors are plain std::vector<Scalar>; matrices act on
// column vectors from the left.

#include <cstddef>
#include <string>
#include <vector>

#include "liesc/scalar.hpp"

namespace liesc {

using Vec = std::vector<Scalar>;

Vec vec_zero(FieldSpec f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
std::string vec_str(const Vec& v);  // comma-joined coordinates
int vec_compare(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);  // zero-filled
  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix vstack(const std::vector<Matrix>& blocks);  // needs >= 1 block

  FieldSpec field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vec row(std::size_t i) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // M*v, column convention
  Matrix pow(std::size_t k) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  Scalar trace() const;

  // Reduced row echelon form: pivot entries 1, pivot columns cleared, pivot
  // positions strictly increasing. Zero rows sink to the bottom.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  // Rows of the result span {v : M*v = 0}.
  Matrix kernel() const;

  std::string str() const;

 private:
  FieldSpec f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Coefficients of det(tI - M), ascending order c0 + c1 t + ... + t^n.
// Division-free (Berkowitz), so valid over any field.
std::vector<Scalar> char_poly(const Matrix& m);

// All rational roots of a nonzero polynomial over Q (ascending coefficient
// order), each listed once, sorted. Complete: a rational root r = a/b in
// lowest terms has a dividing the trailing and b the leading integer
// coefficient after clearing denominators.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs);

}  // namespace liesc

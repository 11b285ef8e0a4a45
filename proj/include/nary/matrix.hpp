#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nary/scalar.hpp"

namespace nary {

using Vector = std::vector<Scalar>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(Matrix a, const Scalar& c);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);

// Fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

// Rank from the rational Gauss-Jordan route; kept separate from rank() so the
// two can cross-check each other.
std::size_t rank_rref(const Matrix& m);

// Basis of {x : m x = 0}; one vector per free column, in increasing free
// column order, with a 1 in that free column.
std::vector<Vector> nullspace(const Matrix& m);

// Reduced-echelon basis of the column space (rows of rref(m^T)).
std::vector<Vector> column_space(const Matrix& m);

// Canonical reduced basis of span(vectors); vectors all of length dim.
std::vector<Vector> reduced_basis(const std::vector<Vector>& vectors, std::size_t dim);

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);

std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

bool is_zero(const Vector& v);

}  // namespace nary

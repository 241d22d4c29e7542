#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eqpart/rational.hpp"

namespace eqpart {

/// Dense row-major matrix over Rational. Intended for quotient-sized
/// objects (parameter matrices, distributions, indicator matrices of
/// colorings); adjacency of large graphs stays sparse in Graph.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  /// Throws ShapeError on ragged input.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix row_vector(std::span<const Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> entries() const { return data_; }

  /// Rows [first, first + count) as a new matrix.
  RatMatrix slice_rows(std::size_t first, std::size_t count) const;

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;
  Rational sum() const;

  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  RatMatrix& operator*=(const Rational& scalar);
  RatMatrix& operator/=(const Rational& scalar);

  friend RatMatrix operator+(RatMatrix lhs, const RatMatrix& rhs) { return lhs += rhs; }
  friend RatMatrix operator-(RatMatrix lhs, const RatMatrix& rhs) { return lhs -= rhs; }
  friend RatMatrix operator*(RatMatrix lhs, const Rational& s) { return lhs *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix rhs) { return rhs *= s; }
  friend RatMatrix operator/(RatMatrix lhs, const Rational& s) { return lhs /= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product. Row (i', i'') of the result is i' * b.rows() + i'',
/// column (j', j'') is j' * b.cols() + j''; the entry is a(i',j') * b(i'',j'').
RatMatrix tensor(const RatMatrix& a, const RatMatrix& b);

/// sum_i coeffs[i] * m^i by Horner's rule. Throws ShapeError unless m is square.
RatMatrix mat_poly_eval(std::span<const Rational> coeffs, const RatMatrix& m);

/// Row vector times matrix.
std::vector<Rational> row_times(std::span<const Rational> row, const RatMatrix& m);

/// One line per row, entries separated by single spaces.
std::string to_string(const RatMatrix& m);

}  // namespace eqpart

#include "eqpart/ratmat.hpp"

#include <algorithm>
#include <sstream>

#include "eqpart/error.hpp"

namespace eqpart {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) throw ShapeError("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
  }
  return out;
}

RatMatrix RatMatrix::row_vector(std::span<const Rational> entries) {
  RatMatrix out(1, entries.size());
  std::copy(entries.begin(), entries.end(), out.data_.begin());
  return out;
}

RatMatrix RatMatrix::slice_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw ShapeError("row slice out of range");
  RatMatrix out(count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

Rational RatMatrix::sum() const {
  Rational total;
  for (const auto& x : data_) total += x;
  return total;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

RatMatrix& RatMatrix::operator/=(const Rational& scalar) {
  if (scalar.is_zero()) throw DomainError("matrix divided by zero");
  for (auto& x : data_) x /= scalar;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      // indicator matrices are mostly zero
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

RatMatrix tensor(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Rational& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
    }
  return out;
}

RatMatrix mat_poly_eval(std::span<const Rational> coeffs, const RatMatrix& m) {
  if (!m.is_square()) throw ShapeError("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::vector<Rational> row_times(std::span<const Rational> row, const RatMatrix& m) {
  if (row.size() != m.rows()) throw ShapeError("row vector length does not match matrix");
  std::vector<Rational> out(m.cols());
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[k] * m(k, j);
  }
  return out;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace eqpart

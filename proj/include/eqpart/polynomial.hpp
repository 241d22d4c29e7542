#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqpart/ratmat.hpp"

namespace eqpart {

/// Univariate polynomial with exact coefficients, constant term first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// The polynomial x.
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  /// a + b x
  static Polynomial affine(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational operator()(const Rational& at) const;
  RatMatrix operator()(const RatMatrix& at) const { return mat_poly_eval(coeffs_, at); }

  /// this(inner(x))
  Polynomial compose(const Polynomial& inner) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Coefficient strings, constant term first, e.g. [0, -3/2, 1].
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Binomial coefficient with polynomial top argument:
/// (top choose j) = top (top - 1) ... (top - j + 1) / j!.
Polynomial binomial(const Polynomial& top, unsigned j);

/// The unique polynomial of degree < points.size() through the given
/// (x, y) pairs. Throws DomainError on repeated abscissae.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace eqpart

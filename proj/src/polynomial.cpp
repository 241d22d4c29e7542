#include "eqpart/polynomial.hpp"

#include <sstream>

#include "eqpart/error.hpp"

namespace eqpart {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  if (s.is_zero()) throw DomainError("polynomial divided by zero");
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ']';
  return os.str();
}

Polynomial binomial(const Polynomial& top, unsigned j) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < j; ++i) out = out * (top - Polynomial::constant(i));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), j);
  return out / Rational(fact);
}

Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
  Polynomial out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial basis = Polynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      if (points[i].first == points[j].first) throw DomainError("interpolation nodes repeat");
      basis = basis * Polynomial::affine(-points[j].first, 1);
      denom *= points[i].first - points[j].first;
    }
    out += basis * (points[i].second / denom);
  }
  return out;
}

}  // namespace eqpart

#include "eqpart/rational.hpp"

#include <cctype>

#include "eqpart/error.hpp"

namespace eqpart {

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(num);
  }
  mpz_class den;
  if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace eqpart

#include "eqpart/distributions.hpp"

#include <string>

#include "eqpart/error.hpp"

namespace eqpart {

namespace {

void check_pattern(const RatMatrix& b, std::size_t n_rows) {
  if (!b.is_square()) throw ShapeError("B must be square");
  if (n_rows == 0 || n_rows > b.rows()) throw DomainError("row count must be within 1..size of B");
  for (std::size_t i = 0; i + 1 < n_rows; ++i) {
    if (b(i, i + 1).is_zero())
      throw DomainError("B[" + std::to_string(i) + "][" + std::to_string(i + 1) + "] is zero");
    for (std::size_t j = i + 2; j < b.cols(); ++j)
      if (!b(i, j).is_zero())
        throw DomainError("B[" + std::to_string(i) + "][" + std::to_string(j) +
                          "] above the superdiagonal is nonzero");
  }
}

void check_first_row(const RatMatrix& s, std::span<const Rational> h0) {
  if (!s.is_square()) throw ShapeError("S must be square");
  if (h0.size() != s.rows()) throw ShapeError("first row length must match S");
}

RatMatrix shifted(const RatMatrix& s, const Rational& shift) {
  return s - RatMatrix::identity(s.rows()) * shift;
}

}  // namespace

Distribution distribution(const PerfectStructure& g, const PerfectStructure& f) {
  if (g.n_rows() != f.n_rows()) throw ShapeError("g and f live on different vertex counts");
  Distribution out{g.values().transpose() * f.values()};
  if (g.params().transpose() * out.table != out.table * f.params())
    throw AssertionFailure("R^T (g^T f) != (g^T f) S");
  return out;
}

std::vector<Polynomial> hessenberg_polynomials(const RatMatrix& b, std::size_t n_rows) {
  check_pattern(b, n_rows);
  std::vector<Polynomial> pi{Polynomial::constant(1)};
  for (std::size_t i = 1; i < n_rows; ++i) {
    Polynomial next = Polynomial::x() * pi[i - 1];
    for (std::size_t j = 0; j < i; ++j) next -= pi[j] * b(i - 1, j);
    pi.push_back(next / b(i - 1, i));
  }
  return pi;
}

Distribution reconstruct_by_recursion(const RatMatrix& b, const RatMatrix& s,
                                      std::span<const Rational> h0, std::size_t n_rows) {
  check_pattern(b, n_rows);
  check_first_row(s, h0);
  RatMatrix h(n_rows, s.rows());
  std::copy(h0.begin(), h0.end(), h.row(0).begin());
  for (std::size_t i = 1; i < n_rows; ++i) {
    std::vector<Rational> next = row_times(h.row(i - 1), s);
    for (std::size_t j = 0; j < i; ++j) {
      const Rational& coeff = b(i - 1, j);
      if (coeff.is_zero()) continue;
      auto hj = h.row(j);
      for (std::size_t c = 0; c < next.size(); ++c) next[c] -= coeff * hj[c];
    }
    auto hi = h.row(i);
    for (std::size_t c = 0; c < next.size(); ++c) hi[c] = next[c] / b(i - 1, i);
  }
  return {std::move(h)};
}

Distribution reconstruct_by_polynomials(const RatMatrix& b, const RatMatrix& s,
                                        std::span<const Rational> h0, std::size_t n_rows) {
  check_first_row(s, h0);
  PPolynomials pi{hessenberg_polynomials(b, n_rows)};
  return polynomial_rows(pi, s, h0);
}

Distribution reconstruct_from_first_row(const RatMatrix& b, const RatMatrix& s,
                                        std::span<const Rational> h0, std::size_t n_rows) {
  Distribution direct = reconstruct_by_recursion(b, s, h0, n_rows);
  if (direct != reconstruct_by_polynomials(b, s, h0, n_rows))
    throw AssertionFailure("row recursion and polynomial form disagree");
  return direct;
}

Distribution polynomial_rows(const PPolynomials& pi, const RatMatrix& m, std::span<const Rational> f0) {
  check_first_row(m, f0);
  RatMatrix out(pi.size(), m.rows());
  for (std::size_t w = 0; w < pi.size(); ++w) {
    const auto row = row_times(f0, pi[w](m));
    std::copy(row.begin(), row.end(), out.row(w).begin());
  }
  return {std::move(out)};
}

Distribution vertex_distribution(const Graph& g, const RatMatrix& s, std::size_t color) {
  return vertex_distribution(p_polynomials(intersection_array(g)), s, color);
}

Distribution vertex_distribution(const PPolynomials& pi, const RatMatrix& s, std::size_t color) {
  if (!s.is_square()) throw ShapeError("S must be square");
  if (color >= s.rows()) throw DomainError("color index out of range");
  std::vector<Rational> e(s.rows());
  e[color] = 1;
  return polynomial_rows(pi, s, e);
}

Distribution code_distribution(const CompletelyRegularCode& code, const RatMatrix& s,
                               std::span<const Rational> f0) {
  return reconstruct_from_first_row(code.params.transpose(), s, f0, code.rho + 1);
}

Distribution lattice_distribution(unsigned m, unsigned k, unsigned q, const RatMatrix& s,
                                  std::span<const Rational> f0) {
  if (m == 0) throw DomainError("lattice_distribution: m must be positive");
  if (k == 0 || q < 2) throw DomainError("lattice_distribution: need k >= 1 and q >= 2");
  return polynomial_rows(krawtchouk_p_polynomials(k, q), s / Rational(m), f0);
}

Distribution fiber_distribution(const Graph& right, long left_degree, const RatMatrix& s,
                                std::span<const Rational> f0) {
  return fiber_distribution(p_polynomials(intersection_array(right)), left_degree, s, f0);
}

Distribution fiber_distribution(const PPolynomials& right_pi, long left_degree, const RatMatrix& s,
                                std::span<const Rational> f0) {
  if (left_degree < 0) throw DomainError("fiber_distribution: negative degree");
  if (!s.is_square()) throw ShapeError("S must be square");
  return polynomial_rows(right_pi, shifted(s, left_degree), f0);
}

Distribution subcube_distribution(unsigned m, unsigned k, unsigned q, const RatMatrix& s,
                                  std::span<const Rational> f0) {
  if (k == 0 || q < 2) throw DomainError("subcube_distribution: need k >= 1 and q >= 2");
  if (!s.is_square()) throw ShapeError("S must be square");
  return polynomial_rows(krawtchouk_p_polynomials(k, q), shifted(s, Rational(q - 1) * Rational(m)), f0);
}

Distribution pcube_distribution(unsigned n, unsigned p, unsigned q, const RatMatrix& s,
                                std::span<const Rational> f0) {
  if (p < 1 || p >= q) throw DomainError("pcube_distribution: need 1 <= p < q");
  if (n == 0) throw DomainError("pcube_distribution: n must be positive");
  if (!s.is_square()) throw ShapeError("S must be square");
  const RatMatrix reduced = shifted(s, Rational(p - 1) * Rational(n)) / Rational(p);
  return polynomial_rows(krawtchouk_p_polynomials(n, Rational(q) / Rational(p)), reduced, f0);
}

}  // namespace eqpart

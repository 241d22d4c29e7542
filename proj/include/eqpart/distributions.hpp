#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eqpart/drg.hpp"
#include "eqpart/equitable.hpp"
#include "eqpart/graph.hpp"
#include "eqpart/ratmat.hpp"

namespace eqpart {

/// Table whose row w (or row i for a general second coloring g) is the sum
/// of f over the vertices in class w. Columns follow the columns of f.
struct Distribution {
  RatMatrix table;

  std::size_t n_rows() const noexcept { return table.rows(); }
  std::span<const Rational> row(std::size_t i) const { return table.row(i); }

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// g^T f for an R-perfect g (over A^T) and an S-perfect f (over A).
/// Throws AssertionFailure if R^T (g^T f) != (g^T f) S.
Distribution distribution(const PerfectStructure& g, const PerfectStructure& f);

/// Polynomials Pi_0..Pi_{n-1} of a matrix B with nonzero superdiagonal and
/// zeros above it: Pi_i = (x Pi_{i-1} - sum_{j<i} B[i-1][j] Pi_j) / B[i-1][i].
/// Throws DomainError on a zero superdiagonal entry or a nonzero entry
/// above the superdiagonal.
std::vector<Polynomial> hessenberg_polynomials(const RatMatrix& b, std::size_t n_rows);

/// Rows h_1.. from h_0 by h_i = (h_{i-1} S - sum_{j<i} B[i-1][j] h_j) / B[i-1][i].
Distribution reconstruct_by_recursion(const RatMatrix& b, const RatMatrix& s,
                                      std::span<const Rational> h0, std::size_t n_rows);

/// Rows h_i = h_0 Pi_i(S) with Pi_i from hessenberg_polynomials.
Distribution reconstruct_by_polynomials(const RatMatrix& b, const RatMatrix& s,
                                        std::span<const Rational> h0, std::size_t n_rows);

/// The unique S-perfect structure over B with first row h0. Runs both
/// routes above and throws AssertionFailure if they disagree.
Distribution reconstruct_from_first_row(const RatMatrix& b, const RatMatrix& s,
                                        std::span<const Rational> h0, std::size_t n_rows);

/// Row w is f0 Pi_w(m), w = 0..pi.size()-1.
Distribution polynomial_rows(const PPolynomials& pi, const RatMatrix& m, std::span<const Rational> f0);

/// Distribution of an S-perfect coloring around a vertex of color j in a
/// distance-regular graph: rows e_j Pi_w(S).
Distribution vertex_distribution(const Graph& g, const RatMatrix& s, std::size_t color);
Distribution vertex_distribution(const PPolynomials& pi, const RatMatrix& s, std::size_t color);

/// Weight distribution of an S-perfect structure with respect to a
/// completely regular code, from the sum f0 of f over the code.
Distribution code_distribution(const CompletelyRegularCode& code, const RatMatrix& s,
                               std::span<const Rational> f0);

/// Distribution with respect to the zero set of the lattice coloring of
/// H(mk, q): rows f0 Pi_w(S / m), w = 0..k, Pi from H(k, q).
Distribution lattice_distribution(unsigned m, unsigned k, unsigned q, const RatMatrix& s,
                                  std::span<const Rational> f0);

/// Distribution with respect to a fiber V' x {o} of G' x G'' where G' is
/// d-regular and G'' distance-regular: rows f0 Pi_w(S - dI).
Distribution fiber_distribution(const Graph& right, long left_degree, const RatMatrix& s,
                                std::span<const Rational> f0);
Distribution fiber_distribution(const PPolynomials& right_pi, long left_degree, const RatMatrix& s,
                                std::span<const Rational> f0);

/// Distribution with respect to an m-dimensional subcube of H(m + k, q):
/// rows f0 Pi_w(S - (q-1) m I), Pi from H(k, q).
Distribution subcube_distribution(unsigned m, unsigned k, unsigned q, const RatMatrix& s,
                                  std::span<const Rational> f0);

/// Distribution with respect to the p-ary subcube H(n, p) of H(n, q):
/// rows f0 Pi_w((S - (p-1) n I) / p), w = 0..n, with Krawtchouk parameter q/p.
Distribution pcube_distribution(unsigned n, unsigned p, unsigned q, const RatMatrix& s,
                                std::span<const Rational> f0);

}  // namespace eqpart

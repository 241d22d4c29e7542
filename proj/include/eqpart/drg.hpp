#pragma once

#include <cstdint>
#include <vector>

#include "eqpart/graph.hpp"
#include "eqpart/polynomial.hpp"

namespace eqpart {

/// Intersection numbers of a distance-regular graph. From a vertex at
/// distance w of some base vertex, b[w] neighbors lie at distance w+1,
/// a[w] at distance w and c[w] at distance w-1. Stored with the usual
/// conventions c[0] = 0 and b[diameter] = 0, so all three lists have
/// diameter + 1 entries.
struct IntersectionArray {
  std::uint32_t diameter = 0;
  std::vector<long> b;
  std::vector<long> a;
  std::vector<long> c;

  long degree() const { return b.empty() ? 0 : b.front(); }

  /// Tridiagonal quotient matrix of the distance coloring of a vertex:
  /// row w is (.., c[w], a[w], b[w], ..).
  RatMatrix quotient() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Computes the intersection array and checks that every ordered vertex
/// pair agrees with it. Throws NotDistanceRegular with the first offending
/// (base, target) pair, DomainError if g is not regular, DisconnectedError
/// if g is disconnected.
IntersectionArray intersection_array(const Graph& g);

/// Intersection numbers around a single base vertex; throws
/// NotDistanceRegular when the distance coloring of that vertex is not
/// equitable. Equal to intersection_array(g) on distance-regular graphs.
IntersectionArray intersection_array_at(const Graph& g, Vertex base);

/// Throws DomainError unless the numbers are consistent (b + a + c equal
/// to the degree on every layer, c[w] >= 1 for w >= 1).
void validate(const IntersectionArray& ia);

/// P-polynomials Pi_0..Pi_D: polys[w] has degree w and Pi_w(A) = A_w.
struct PPolynomials {
  std::vector<Polynomial> polys;

  std::size_t size() const noexcept { return polys.size(); }
  const Polynomial& operator[](std::size_t w) const { return polys[w]; }
};

/// Three-term recurrence from A A_w = b_{w-1} A_{w-1} + a_w A_w + c_{w+1} A_{w+1}.
PPolynomials p_polynomials(const IntersectionArray& ia);

/// Checks Pi_w(A) e_v = A_w e_v for every vertex v and every w, using
/// integer walk counts. Returns false on the first mismatch.
bool p_polynomials_match_graph(const Graph& g, const PPolynomials& pi);

/// Krawtchouk polynomial P_w(x; n, q) with exact coefficients. q may be
/// any rational. Throws DomainError if w > n.
Polynomial krawtchouk(unsigned w, unsigned n, const Rational& q);

/// Pi_w(y) = P_w(P_1^{-1}(y); n, q) where P_1(x) = (q-1)n - qx.
Polynomial krawtchouk_pi(unsigned w, unsigned n, const Rational& q);

/// krawtchouk_pi for w = 0..n.
PPolynomials krawtchouk_p_polynomials(unsigned n, const Rational& q);

/// True iff (w+1)P_{w+1} = ((n-w)(q-1) + w - qx) P_w - (q-1)(n-w+1) P_{w-1}
/// holds coefficient-wise.
bool krawtchouk_recurrence_check(unsigned w, unsigned n, const Rational& q);

/// Same identity with an arbitrary polynomial substituted for P_{w-1}.
bool krawtchouk_recurrence_holds(unsigned w, unsigned n, const Rational& q, const Polynomial& prev);

/// Eberlein polynomial E_w(x; n, k). Throws DomainError unless
/// w <= min(k, n-k).
Polynomial eberlein(unsigned w, unsigned n, unsigned k);

/// P-polynomials of J(n, k) obtained by interpolating E_w over E_1 on the
/// eigenvalue indices x = 0..min(k, n-k).
PPolynomials johnson_spectral_p_polynomials(unsigned n, unsigned k);

/// P-polynomials of the halved n-cube obtained by interpolating P_{2w}
/// over P_2 (binary Krawtchouk) on x = 0..floor(n/2).
PPolynomials halved_spectral_p_polynomials(unsigned n);

}  // namespace eqpart

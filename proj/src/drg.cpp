#include "eqpart/drg.hpp"

#include <algorithm>
#include <string>

#include "eqpart/error.hpp"

namespace eqpart {

namespace {

struct LayerCounts {
  long c = 0;
  long a = 0;
  long b = 0;
  friend bool operator==(const LayerCounts&, const LayerCounts&) = default;
};

std::string pair_text(Vertex base, Vertex target) {
  return "(" + std::to_string(base) + ", " + std::to_string(target) + ")";
}

// Scans the distance layers around base. With a reference array, every
// target must also agree with it.
IntersectionArray scan(const Graph& g, Vertex base, const IntersectionArray* reference) {
  const auto profile = distances_from(g, base);
  const auto& dist = profile.distance;
  std::vector<LayerCounts> layer(profile.radius + 1);
  std::vector<bool> seen(profile.radius + 1, false);

  for (std::size_t u = 0; u < g.n_vertices(); ++u) {
    const auto w = dist[u];
    LayerCounts counts;
    for (Vertex x : g.neighbors(static_cast<Vertex>(u))) {
      if (dist[x] + 1 == w) ++counts.c;
      else if (dist[x] == w) ++counts.a;
      else ++counts.b;
    }
    const auto target = static_cast<Vertex>(u);
    if (reference) {
      if (w > reference->diameter) {
        throw NotDistanceRegular(base, target,
                                 "vertex pair " + pair_text(base, target) +
                                     " is farther apart than the diameter seen from vertex 0");
      }
      const LayerCounts expected{reference->c[w], reference->a[w], reference->b[w]};
      if (counts != expected) {
        throw NotDistanceRegular(base, target,
                                 "intersection numbers of " + pair_text(base, target) +
                                     " differ from those seen from vertex 0");
      }
    }
    if (!seen[w]) {
      layer[w] = counts;
      seen[w] = true;
    } else if (layer[w] != counts) {
      throw NotDistanceRegular(base, target,
                               "distance coloring of vertex " + std::to_string(base) +
                                   " is not equitable at " + pair_text(base, target));
    }
  }

  IntersectionArray out;
  out.diameter = profile.radius;
  for (const auto& l : layer) {
    out.c.push_back(l.c);
    out.a.push_back(l.a);
    out.b.push_back(l.b);
  }
  return out;
}

// Integer walk counts A^i e_v, i = 0..max_power.
std::vector<std::vector<long long>> walk_counts(const Graph& g, Vertex v, std::size_t max_power) {
  const std::size_t n = g.n_vertices();
  std::vector<std::vector<long long>> walks(max_power + 1, std::vector<long long>(n, 0));
  walks[0][v] = 1;
  for (std::size_t i = 1; i <= max_power; ++i) {
    const auto& prev = walks[i - 1];
    auto& cur = walks[i];
    for (std::size_t u = 0; u < n; ++u) {
      long long acc = 0;
      for (Vertex x : g.neighbors(static_cast<Vertex>(u))) {
        if (__builtin_add_overflow(acc, prev[x], &acc)) {
          throw DomainError("walk count overflow while checking P-polynomials");
        }
      }
      cur[u] = acc;
    }
  }
  return walks;
}

}  // namespace

RatMatrix IntersectionArray::quotient() const {
  const std::size_t size = diameter + 1;
  RatMatrix r(size, size);
  for (std::size_t w = 0; w < size; ++w) {
    if (w > 0) r(w, w - 1) = c[w];
    r(w, w) = a[w];
    if (w + 1 < size) r(w, w + 1) = b[w];
  }
  return r;
}

IntersectionArray intersection_array_at(const Graph& g, Vertex base) {
  if (base >= g.n_vertices()) throw DomainError("base vertex out of range");
  return scan(g, base, nullptr);
}

IntersectionArray intersection_array(const Graph& g) {
  if (g.regular_degree() < 0) throw DomainError("intersection_array: graph is not regular");
  const IntersectionArray reference = scan(g, 0, nullptr);
  for (std::size_t v = 1; v < g.n_vertices(); ++v) scan(g, static_cast<Vertex>(v), &reference);
  validate(reference);
  return reference;
}

void validate(const IntersectionArray& ia) {
  const std::size_t size = ia.diameter + 1;
  if (ia.a.size() != size || ia.b.size() != size || ia.c.size() != size)
    throw DomainError("intersection array lists must have diameter + 1 entries");
  if (ia.c[0] != 0 || ia.b[ia.diameter] != 0)
    throw DomainError("intersection array needs c_0 = 0 and b_D = 0");
  const long k = ia.degree();
  for (std::size_t w = 0; w < size; ++w) {
    if (ia.a[w] < 0 || ia.b[w] < 0 || ia.c[w] < 0)
      throw DomainError("intersection numbers must be nonnegative");
    if (ia.a[w] + ia.b[w] + ia.c[w] != k)
      throw DomainError("b_w + a_w + c_w differs from the degree at w = " + std::to_string(w));
    if (w >= 1 && ia.c[w] < 1) throw DomainError("c_w must be positive for w >= 1");
    if (w + 1 < size && ia.b[w] < 1) throw DomainError("b_w must be positive below the diameter");
  }
}

PPolynomials p_polynomials(const IntersectionArray& ia) {
  validate(ia);
  PPolynomials out;
  out.polys.push_back(Polynomial::constant(1));
  for (std::size_t w = 0; w < ia.diameter; ++w) {
    Polynomial next = Polynomial::affine(-Rational(ia.a[w]), 1) * out.polys[w];
    if (w > 0) next -= out.polys[w - 1] * Rational(ia.b[w - 1]);
    out.polys.push_back(next / Rational(ia.c[w + 1]));
  }
  return out;
}

bool p_polynomials_match_graph(const Graph& g, const PPolynomials& pi) {
  if (pi.size() == 0) return false;
  const std::size_t top = pi.size() - 1;

  // Clear denominators: scale[w] * Pi_w has integer coefficients.
  std::vector<mpz_class> scale(pi.size());
  std::vector<std::vector<long long>> int_coeffs(pi.size());
  for (std::size_t w = 0; w < pi.size(); ++w) {
    mpz_class l = 1;
    for (const auto& c : pi[w].coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    scale[w] = l;
    for (const auto& c : pi[w].coeffs()) {
      mpz_class z = c.numerator() * (l / c.denominator());
      if (!z.fits_slong_p()) throw DomainError("P-polynomial coefficients too large for the walk check");
      int_coeffs[w].push_back(z.get_si());
    }
    if (!l.fits_slong_p()) throw DomainError("P-polynomial denominators too large for the walk check");
  }

  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    const auto profile = distances_from(g, static_cast<Vertex>(v));
    if (profile.radius != top) return false;
    const auto walks = walk_counts(g, static_cast<Vertex>(v), top);
    for (std::size_t w = 0; w < pi.size(); ++w) {
      const auto& coeffs = int_coeffs[w];
      const long long expect_scale = scale[w].get_si();
      for (std::size_t u = 0; u < g.n_vertices(); ++u) {
        __int128 acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          __int128 term;
          if (__builtin_mul_overflow(static_cast<__int128>(coeffs[i]), walks[i][u], &term) ||
              __builtin_add_overflow(acc, term, &acc)) {
            throw DomainError("overflow while checking P-polynomials");
          }
        }
        const __int128 expected = profile.distance[u] == w ? expect_scale : 0;
        if (acc != expected) return false;
      }
    }
  }
  return true;
}

Polynomial krawtchouk(unsigned w, unsigned n, const Rational& q) {
  if (w > n) throw DomainError("krawtchouk: degree exceeds length");
  const Polynomial x = Polynomial::x();
  const Polynomial n_minus_x = Polynomial::affine(n, -1);
  Polynomial out;
  Rational q1_power = 1;
  std::vector<Rational> powers(w + 1);  // powers[e] = (q-1)^e
  for (unsigned e = 0; e <= w; ++e) {
    powers[e] = q1_power;
    q1_power *= q - 1;
  }
  for (unsigned j = 0; j <= w; ++j) {
    Polynomial term = binomial(x, j) * binomial(n_minus_x, w - j) * powers[w - j];
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

Polynomial krawtchouk_pi(unsigned w, unsigned n, const Rational& q) {
  if (q.is_zero()) throw DomainError("krawtchouk_pi: q must be nonzero");
  // P_1(x) = (q-1)n - qx, so P_1^{-1}(y) = ((q-1)n - y) / q.
  const Polynomial inverse = Polynomial::affine((q - 1) * Rational(n) / q, -Rational(1) / q);
  return krawtchouk(w, n, q).compose(inverse);
}

PPolynomials krawtchouk_p_polynomials(unsigned n, const Rational& q) {
  PPolynomials out;
  for (unsigned w = 0; w <= n; ++w) out.polys.push_back(krawtchouk_pi(w, n, q));
  return out;
}

bool krawtchouk_recurrence_holds(unsigned w, unsigned n, const Rational& q, const Polynomial& prev) {
  if (w < 1 || w >= n) throw DomainError("krawtchouk recurrence needs 1 <= w < n");
  const Polynomial lhs = krawtchouk(w + 1, n, q) * Rational(w + 1);
  const Polynomial factor =
      Polynomial::affine(Rational(n - w) * (q - 1) + Rational(w), -q);
  const Polynomial rhs = factor * krawtchouk(w, n, q) - prev * ((q - 1) * Rational(n - w + 1));
  return lhs == rhs;
}

bool krawtchouk_recurrence_check(unsigned w, unsigned n, const Rational& q) {
  return krawtchouk_recurrence_holds(w, n, q, krawtchouk(w - 1, n, q));
}

Polynomial eberlein(unsigned w, unsigned n, unsigned k) {
  if (k > n || w > std::min(k, n - k)) throw DomainError("eberlein: parameters out of range");
  const Polynomial x = Polynomial::x();
  const Polynomial k_minus_x = Polynomial::affine(k, -1);
  const Polynomial rest_minus_x = Polynomial::affine(n - k, -1);
  Polynomial out;
  for (unsigned j = 0; j <= w; ++j) {
    Polynomial term = binomial(x, j) * binomial(k_minus_x, w - j) * binomial(rest_minus_x, w - j);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

PPolynomials johnson_spectral_p_polynomials(unsigned n, unsigned k) {
  if (k > n) throw DomainError("johnson: k exceeds n");
  const unsigned top = std::min(k, n - k);
  const Polynomial e1 = top >= 1 ? eberlein(1, n, k) : Polynomial::constant(0);
  PPolynomials out;
  for (unsigned w = 0; w <= top; ++w) {
    const Polynomial ew = eberlein(w, n, k);
    std::vector<std::pair<Rational, Rational>> points;
    for (unsigned i = 0; i <= top; ++i) points.emplace_back(e1(i), ew(i));
    out.polys.push_back(interpolate(points));
  }
  return out;
}

PPolynomials halved_spectral_p_polynomials(unsigned n) {
  if (n < 2) throw DomainError("halved cube needs n >= 2");
  const unsigned top = n / 2;
  const Polynomial p2 = krawtchouk(2, n, 2);
  PPolynomials out;
  for (unsigned w = 0; w <= top; ++w) {
    const Polynomial p2w = krawtchouk(2 * w, n, 2);
    std::vector<std::pair<Rational, Rational>> points;
    for (unsigned i = 0; i <= top; ++i) points.emplace_back(p2(i), p2w(i));
    out.polys.push_back(interpolate(points));
  }
  return out;
}

}  // namespace eqpart

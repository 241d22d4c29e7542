#include "eqpart/codes.hpp"

#include <algorithm>

#include "eqpart/error.hpp"

namespace eqpart {

std::vector<Vertex> hamming_code(unsigned r) {
  if (r < 2 || r > 4) throw DomainError("hamming_code: r must be 2, 3 or 4");
  const unsigned n = (1u << r) - 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
    const VertexWord word = hamming_word(v, n, 2);
    unsigned syndrome = 0;
    for (unsigned i = 0; i < n; ++i)
      if (word[i]) syndrome ^= i + 1;
    if (syndrome == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> extended_hamming_code(unsigned r) {
  std::vector<Vertex> out;
  for (Vertex v : hamming_code(r)) {
    const unsigned parity = static_cast<unsigned>(__builtin_popcount(v)) & 1;
    out.push_back((v << 1) | parity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> subcube_code(unsigned n, unsigned p, unsigned q) {
  if (p < 1 || p > q) throw DomainError("subcube_code: need 1 <= p <= q");
  std::size_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= q;
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < size; ++v) {
    const VertexWord word = hamming_word(static_cast<Vertex>(v), n, q);
    if (std::all_of(word.begin(), word.end(), [p](unsigned x) { return x < p; }))
      out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> face_code(unsigned m, unsigned k, unsigned q) {
  std::size_t tail = 1;
  for (unsigned i = 0; i < k; ++i) tail *= q;
  std::size_t head = 1;
  for (unsigned i = 0; i < m; ++i) head *= q;
  std::vector<Vertex> out;
  for (std::size_t a = 0; a < head; ++a) out.push_back(static_cast<Vertex>(a * tail));
  return out;
}

}  // namespace eqpart

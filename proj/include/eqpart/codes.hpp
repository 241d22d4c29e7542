#pragma once

#include <vector>

#include "eqpart/graph.hpp"

namespace eqpart {

// Vertex sets of the standard completely regular codes, as hamming_graph
// vertex indices.

/// Binary Hamming code of length 2^r - 1: the words for which the XOR of
/// i + 1 over the nonzero coordinates i vanishes.
std::vector<Vertex> hamming_code(unsigned r);

/// Hamming code of length 2^r - 1 with an overall parity bit appended.
std::vector<Vertex> extended_hamming_code(unsigned r);

/// Words of H(n, q) with every coordinate below p.
std::vector<Vertex> subcube_code(unsigned n, unsigned p, unsigned q);

/// Words of H(m + k, q) whose last k coordinates are zero (an m-face).
std::vector<Vertex> face_code(unsigned m, unsigned k, unsigned q);

}  // namespace eqpart

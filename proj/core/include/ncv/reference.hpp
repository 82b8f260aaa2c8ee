#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ncv::reference {

// Reference data for the `reproduce` command: expected negative cycle
// vector tables for small named graphs, and the fixed signings (as vertex
// pair lists, under the frozen family numberings) they are checked against.

using VertexPair = std::pair<int, int>;
using Vector64 = std::vector<std::int64_t>;

/// Vectors over the switching-isomorphism classes of K_n, n = 3..6.
std::span<const Vector64> kn_vectors(int n);

/// Two switching-equivalent signings of K_6 with vector (10,18,36,36).
std::span<const VertexPair> fig_k6_left();
std::span<const VertexPair> fig_k6_right();
Vector64 fig_k6_vector();

/// Two switching-inequivalent signings of K_8 sharing one vector.
std::span<const VertexPair> fig_k8_left();
std::span<const VertexPair> fig_k8_right();
Vector64 fig_k8_vector();

/// Petersen, alternate-C6 3-matching: rows for submatching sizes 0..3
/// followed by the negated signings, over lengths (5,6,8,9).
std::span<const Vector64> petersen_table();

/// The four pictured unbalanced class vectors of the triangular prism over
/// (3,4,5,6), plus the fifth class the picture omits.
std::span<const Vector64> prism_vectors();
const Vector64& prism_extra_vector();

/// Cube signings: one negative edge, then a parallel second edge in a
/// common quadrilateral, then a parallel second edge not in one. Vectors
/// over (4,6,8).
std::span<const std::vector<VertexPair>> cube_signings();
std::span<const Vector64> cube_vectors();

/// Heawood: expected mu values over (6,8,10,12,14) for the alternate-C6
/// matching kind and for the other two kinds.
std::span<const int> heawood_mu_alternate_c6();
std::span<const int> heawood_mu_other();

}  // namespace ncv::reference

#pragma once

#include <cstdint>
#include <vector>

#include "coverpeb/graph.hpp"

namespace coverpeb {

/// Advances c to the next composition of the same total in lexicographic
/// order; start from (0,...,0,m). Returns false once c is the last
/// composition (all mass on c[0]).
bool next_composition(std::vector<std::uint64_t>& c);

/// Vectors over {lo..hi}^n in lexicographic order; start from all-lo.
/// Returns false past all-hi.
bool next_vector_in_box(std::vector<std::uint64_t>& c, std::uint64_t lo, std::uint64_t hi);

/// Nonnegative vectors with sum <= bound in lexicographic order; start from
/// all-zero. Returns false at the last such vector.
bool next_vector_with_sum_at_most(std::vector<std::uint64_t>& c, std::uint64_t bound);

/// All connected labeled graphs on exactly n vertices, ordered by their
/// sorted edge lists (lexicographic). No isomorphism rejection.
std::vector<Graph> connected_graphs(int n);

} // namespace coverpeb

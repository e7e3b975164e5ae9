#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromalg/embedded_graph.hpp"
#include "chromalg/laurent.hpp"

namespace chromalg {

/// Chromatic polynomial in Q by deletion-contraction. Loops give 0, parallel
/// edges are collapsed, and connected pieces are split into blocks. Results
/// for 2-connected pieces are memoized on a canonical labeling.
LaurentPolynomial chromatic_delcon(const Multigraph& g);

/// Subset expansion sum_{S subset E} (-1)^|S| Q^k(S). Throws LimitExceeded
/// when the graph has more than `edge_limit` edges.
LaurentPolynomial chromatic_ranksum(const Multigraph& g, int edge_limit = 24);

/// Number of proper colorings with k colors, by exhaustive assignment.
std::uint64_t count_colorings(const Multigraph& g, int k);

/// chromatic_delcon of the planar dual of a closed embedded graph.
LaurentPolynomial dual_chromatic(const EmbeddedGraph& g);

/// Q^-1 * dual_chromatic(g), with the division checked for exactness.
LaurentPolynomial normalized_dual_chromatic(const EmbeddedGraph& g);

/// Key equal for isomorphic simple graphs when the labeling search stays
/// within budget; always an exact description of the graph.
std::string simple_graph_key(const std::vector<std::vector<char>>& adjacency);

void clear_chromatic_cache();
std::size_t chromatic_cache_size();

}  // namespace chromalg

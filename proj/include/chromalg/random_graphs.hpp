#pragma once

#include <random>

#include "chromalg/bmw.hpp"
#include "chromalg/embedded_graph.hpp"

namespace chromalg {

using Rng = std::mt19937_64;

/// Random graph in the rectangle with n points on top and bottom and at most
/// `max_inner_edges` inner edges. Built from a random basis drawing by edge
/// subdivisions, chords inside faces, loops, pendant edges and free loops.
EmbeddedGraph random_rectangle_graph(int n, int max_inner_edges, Rng& rng);

/// Random connected closed planar map with at most `max_edges` edges.
EmbeddedGraph random_closed_graph(int max_edges, Rng& rng);

/// Random abstract multigraph; loops and parallel edges allowed when asked.
Multigraph random_multigraph(int max_vertices, int max_edges, bool allow_loops, Rng& rng);

/// Random word of the given length in e_i, B_i, B_i^-1 (crossings only if
/// `braids_only`).
TangleWord random_tangle_word(int n, int length, bool braids_only, Rng& rng);

}  // namespace chromalg

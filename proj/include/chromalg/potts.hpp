#pragma once

#include <map>

#include "chromalg/embedded_graph.hpp"
#include "chromalg/laurent.hpp"

namespace chromalg {

/// Open rows x cols grid with nearest-neighbour edges.
struct GridSpec {
  int rows = 1;
  int cols = 1;

  int num_vertices() const { return rows * cols; }
  Multigraph graph() const;
};

/// sum over all Q^V spin assignments of x^(#equal adjacent pairs).
LaurentPolynomial partition_function_spins(const GridSpec& grid, int Q, int jobs = 1,
                                           double state_limit = 1e8);

/// sum over wall sets N of x^(E - |N|) * chi(quotient)(Q), where the quotient
/// contracts every edge outside N.
LaurentPolynomial partition_function_nets(const GridSpec& grid, int Q, int jobs = 1, int edge_limit = 24);
/// Symbolic form: x-degree -> polynomial in Q.
std::map<int, LaurentPolynomial> partition_function_nets_symbolic(const GridSpec& grid, int jobs = 1,
                                                                  int edge_limit = 24);

/// The x^0 coefficient of the net expansion equals the chromatic polynomial.
bool zero_temperature_check(const GridSpec& grid, int Q);

}  // namespace chromalg

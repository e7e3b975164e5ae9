#include "chromalg/potts.hpp"

#include <cmath>
#include <numeric>

#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/parallel.hpp"

namespace chromalg {

namespace {

struct DegreeCounts {
  std::vector<long long> counts;
  DegreeCounts& operator+=(const DegreeCounts& o) {
    if (counts.size() < o.counts.size()) counts.resize(o.counts.size(), 0);
    for (std::size_t i = 0; i < o.counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }
};

struct SymbolicSum {
  std::map<int, LaurentPolynomial> terms;
  SymbolicSum& operator+=(const SymbolicSum& o) {
    for (const auto& [k, p] : o.terms) {
      auto it = terms.find(k);
      if (it == terms.end()) {
        terms.emplace(k, p);
      } else {
        it->second += p;
      }
    }
    return *this;
  }
};

void check_grid(const GridSpec& grid) {
  if (grid.rows < 1 || grid.cols < 1) throw std::invalid_argument("grid dimensions must be positive");
}

/// Quotient of the grid by the edges outside `walls`, keeping the wall edges.
Multigraph quotient(const Multigraph& g, std::uint64_t walls) {
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (walls >> i & 1) continue;
    parent[find(g.edges[i].first)] = find(g.edges[i].second);
  }
  std::vector<int> id(g.num_vertices, -1);
  Multigraph q;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (id[find(v)] < 0) id[find(v)] = q.num_vertices++;
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (walls >> i & 1) q.edges.emplace_back(id[find(g.edges[i].first)], id[find(g.edges[i].second)]);
  }
  return q;
}

}  // namespace

Multigraph GridSpec::graph() const {
  Multigraph g;
  g.num_vertices = rows * cols;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.edges.emplace_back(v, v + 1);
      if (r + 1 < rows) g.edges.emplace_back(v, v + cols);
    }
  }
  return g;
}

LaurentPolynomial partition_function_spins(const GridSpec& grid, int Q, int jobs, double state_limit) {
  check_grid(grid);
  if (Q < 1) throw std::invalid_argument("spin sum needs an integer Q >= 1");
  const int V = grid.num_vertices();
  if (std::pow(static_cast<double>(Q), V) > state_limit) {
    throw LimitExceeded("spin sum exceeds the configured state limit");
  }
  const Multigraph g = grid.graph();
  std::uint64_t total = 1;
  for (int i = 0; i < V; ++i) total *= Q;
  const int E = static_cast<int>(g.edges.size());
  const DegreeCounts sum = parallel_accumulate(
      total, jobs, DegreeCounts{std::vector<long long>(E + 1, 0)},
      [&](std::uint64_t begin, std::uint64_t end, DegreeCounts& acc) {
        std::vector<int> spin(V);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          std::uint64_t rest = idx;
          for (int v = 0; v < V; ++v) {
            spin[v] = static_cast<int>(rest % Q);
            rest /= Q;
          }
          int equal = 0;
          for (auto [a, b] : g.edges) equal += spin[a] == spin[b];
          ++acc.counts[equal];
        }
      });
  LaurentPolynomial::Terms t;
  for (int k = 0; k <= E; ++k) {
    if (sum.counts[k]) t[k] = Rational(static_cast<long>(sum.counts[k]));
  }
  return LaurentPolynomial(Var::x, std::move(t));
}

std::map<int, LaurentPolynomial> partition_function_nets_symbolic(const GridSpec& grid, int jobs, int edge_limit) {
  check_grid(grid);
  const Multigraph g = grid.graph();
  const int E = static_cast<int>(g.edges.size());
  if (E > edge_limit) throw LimitExceeded("net expansion limited to " + std::to_string(edge_limit) + " edges");
  const SymbolicSum sum = parallel_accumulate(std::uint64_t{1} << E, jobs, SymbolicSum{},
                                              [&](std::uint64_t begin, std::uint64_t end, SymbolicSum& acc) {
                                                for (std::uint64_t walls = begin; walls < end; ++walls) {
                                                  const LaurentPolynomial chi = chromatic_delcon(quotient(g, walls));
                                                  if (chi.is_zero()) continue;
                                                  SymbolicSum one;
                                                  one.terms.emplace(E - std::popcount(walls), chi);
                                                  acc += one;
                                                }
                                              });
  std::map<int, LaurentPolynomial> out;
  for (const auto& [k, p] : sum.terms) {
    if (!p.is_zero()) out.emplace(k, p);
  }
  return out;
}

LaurentPolynomial partition_function_nets(const GridSpec& grid, int Q, int jobs, int edge_limit) {
  LaurentPolynomial::Terms t;
  for (const auto& [k, p] : partition_function_nets_symbolic(grid, jobs, edge_limit)) {
    const Rational v = p.evaluate(Rational(Q));
    if (!v.is_zero()) t[k] = v;
  }
  return LaurentPolynomial(Var::x, std::move(t));
}

bool zero_temperature_check(const GridSpec& grid, int Q) {
  const LaurentPolynomial z = partition_function_nets(grid, Q);
  return z.coefficient(0) == chromatic_delcon(grid.graph()).evaluate(Rational(Q));
}

}  // namespace chromalg

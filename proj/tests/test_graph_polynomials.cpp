#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/parallel.hpp"
#include "chromalg/random_graphs.hpp"

using namespace chromalg;
using namespace testutil;

namespace {

Multigraph complete(int k) {
  Multigraph g{k, {}};
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

Multigraph cycle(int k) {
  Multigraph g{k, {}};
  for (int i = 0; i < k; ++i) g.edges.emplace_back(i, (i + 1) % k);
  return g;
}

Multigraph petersen() {
  Multigraph g{10, {}};
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(i, (i + 1) % 5);
    g.edges.emplace_back(i, i + 5);
    g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Multigraph disjoint(const Multigraph& a, const Multigraph& b) {
  Multigraph g = a;
  g.num_vertices += b.num_vertices;
  for (auto [u, v] : b.edges) g.edges.emplace_back(u + a.num_vertices, v + a.num_vertices);
  return g;
}

}  // namespace

TEST_CASE("chromatic polynomial examples") {
  CHECK(chromatic_delcon(multigraph(1, {})) == Qp("Q"));
  CHECK(chromatic_delcon(multigraph(3, {{0, 1}, {1, 1}})).is_zero());
  CHECK(chromatic_delcon(cycle(3)) == Qp("Q^3 - 3*Q^2 + 2*Q"));
  const auto q1 = Qp("Q - 1");
  CHECK(chromatic_delcon(cycle(4)) == q1.pow(4) + q1);
  CHECK(chromatic_delcon(complete(4)) == Qp("Q^4 - 6*Q^3 + 11*Q^2 - 6*Q"));
  CHECK(chromatic_delcon(multigraph(0, {})) == Qp("1"));
}

TEST_CASE("rank sum examples") {
  CHECK(chromatic_ranksum(multigraph(2, {{0, 1}})) == Qp("Q^2 - Q"));
  CHECK(chromatic_ranksum(multigraph(1, {})) == Qp("Q"));
  CHECK(chromatic_ranksum(cycle(3)) == Qp("Q^3 - 3*Q^2 + 2*Q"));
  CHECK_THROWS_AS(chromatic_ranksum(complete(8), 24), LimitExceeded);
}

TEST_CASE("dual chromatic examples") {
  CHECK(dual_chromatic(theta()) == Qp("Q^3 - 3*Q^2 + 2*Q"));
  CHECK(dual_chromatic(closed_cycle(1)) == Qp("Q^2 - Q"));
  CHECK(dual_chromatic(closed_path(2)).is_zero());
  CHECK(dual_chromatic(dumbbell()).is_zero());
  CHECK(normalized_dual_chromatic(theta()) == Qp("Q^2 - 3*Q + 2"));
}

TEST_CASE("Petersen graph golden value") {
  const auto t = Qp("Q^3 - 3*Q^2 + 2*Q");
  const auto rest = Qp("Q^7 - 12*Q^6 + 67*Q^5 - 230*Q^4 + 529*Q^3 - 814*Q^2 + 775*Q - 352");
  CHECK(chromatic_delcon(petersen()) == t * rest);
}

TEST_CASE("deletion-contraction agrees with the rank sum") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_multigraph(7, 8, true, rng);
    CHECK(chromatic_delcon(g) == chromatic_ranksum(g));
  }
}

TEST_CASE("chromatic polynomial counts proper colorings") {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_multigraph(6, 9, trial % 5 == 0, rng);
    const auto p = chromatic_delcon(g);
    for (int k = 0; k <= 3; ++k) {
      CHECK(p.evaluate(Rational(k)) == Rational(static_cast<long>(count_colorings(g, k))));
    }
  }
}

TEST_CASE("multiplicative over disjoint union; degree and leading coefficient") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_multigraph(5, 6, false, rng);
    const auto b = random_multigraph(5, 6, false, rng);
    CHECK(chromatic_delcon(disjoint(a, b)) == chromatic_delcon(a) * chromatic_delcon(b));
    const auto p = chromatic_delcon(a);
    if (a.num_vertices > 0) {
      CHECK(p.max_exponent() == a.num_vertices);
      CHECK(p.coefficient(a.num_vertices) == Rational(1));
    }
  }
}

TEST_CASE("isomorphic simple graphs share a key") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::bernoulli_distribution coin(0.4);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = coin(rng);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<char>> permuted(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) permuted[perm[i]][perm[j]] = adj[i][j];
    }
    CHECK(simple_graph_key(adj) == simple_graph_key(permuted));
  }
  std::vector<std::vector<char>> path{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  std::vector<std::vector<char>> tri{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(simple_graph_key(path) != simple_graph_key(tri));
}

TEST_CASE("concurrent callers see correct results") {
  Rng rng(5);
  std::vector<Multigraph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(random_multigraph(8, 12, false, rng));
  std::vector<LaurentPolynomial> serial;
  for (const auto& g : graphs) serial.push_back(chromatic_ranksum(g));
  clear_chromatic_cache();
  std::vector<LaurentPolynomial> threaded(graphs.size());
  parallel_for(graphs.size(), 8, [&](std::uint64_t i) { threaded[i] = chromatic_delcon(graphs[i]); });
  for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(threaded[i] == serial[i]);
  CHECK(chromatic_cache_size() > 0);
}

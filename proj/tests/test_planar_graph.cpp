#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/random_graphs.hpp"

using namespace chromalg;
using namespace testutil;

namespace {

std::vector<int> degrees(const Multigraph& m) {
  std::vector<int> deg(m.num_vertices, 0);
  for (auto [a, b] : m.edges) {
    ++deg[a];
    ++deg[b];
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool sphere_euler_ok(const EmbeddedGraph& g) { return euler_characteristic(g) == 1 + num_components(g); }

int shift(int dart, std::initializer_list<int> removed) {
  int s = 0;
  for (int r : removed) s += r < dart ? 1 : 0;
  return dart - s;
}

}  // namespace

TEST_CASE("invalid maps are rejected") {
  // sigma is not a permutation
  CHECK_THROWS_AS(EmbeddedGraph(0, 0, {1, 0}, {0, 0}, {}), std::invalid_argument);
  // alpha has a fixed point
  CHECK_THROWS_AS(EmbeddedGraph(0, 0, {0, 1}, {0, 1}, {}), std::invalid_argument);
  // two loops interleaved at one vertex: a torus map
  CHECK_THROWS_AS(EmbeddedGraph(0, 0, {2, 3, 0, 1}, {1, 2, 3, 0}, {}), std::invalid_argument);
  // boundary point of degree 2
  CHECK_THROWS_AS(EmbeddedGraph(1, 0, {1, 0}, {1, 0}, {0}), std::invalid_argument);
}

TEST_CASE("face counts") {
  CHECK(faces(closed_cycle(1)).size() == 2);
  CHECK(faces(theta()).size() == 3);
  CHECK(faces(closed_path(2)).size() == 1);
}

TEST_CASE("duals") {
  const auto circle_dual = to_multigraph(dual(closed_cycle(1)));
  CHECK(circle_dual.num_vertices == 2);
  CHECK(circle_dual.edges.size() == 1);

  const auto tri = to_multigraph(dual(theta()));
  CHECK(tri.num_vertices == 3);
  CHECK(degrees(tri) == std::vector<int>{2, 2, 2});
  CHECK(chromatic_delcon(tri) == Qp("Q^3 - 3*Q^2 + 2*Q"));

  const EmbeddedGraph point(0, 0, {}, {}, {}, 0, 1);
  const auto pd = dual(point);
  CHECK(pd.num_vertices() == 1);
  CHECK(pd.num_edges() == 0);

  CHECK_THROWS_AS(dual(strands(1)), std::invalid_argument);
}

TEST_CASE("delete and contract") {
  for (int x = 0; x < theta().num_darts(); ++x) {
    const auto m = to_multigraph(delete_edge(theta(), x));
    CHECK(m.num_vertices == 2);
    CHECK(m.edges.size() == 2);
  }
  const auto c = to_multigraph(contract_edge(closed_cycle(3), 0));
  CHECK(c.num_vertices == 2);
  CHECK(c.edges.size() == 2);
  const auto p = delete_edge(closed_path(2), 0);
  CHECK(p.num_vertices() == 2);
  CHECK(p.num_edges() == 0);
  CHECK_THROWS_AS(contract_edge(closed_cycle(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(delete_edge(strands(1), 0), std::invalid_argument);
}

TEST_CASE("closure") {
  const auto one = closure(strands(1));
  CHECK(one.num_darts() == 0);
  CHECK(one.free_loops() == 1);
  CHECK(closure(strands(3)).free_loops() == 3);

  // The star pair from the trace example closes up to a theta graph.
  const auto star = basis_graph(make_partition(3, {{0, 1, 2}, {3, 4, 5}}));
  const auto closed = smooth_2valent(closure(star));
  const auto m = to_multigraph(closed);
  CHECK(m.num_vertices == 2);
  CHECK(m.edges.size() == 3);
  CHECK(faces(closed).size() == 3);
  CHECK(dual_chromatic(closed) == Qp("Q^3 - 3*Q^2 + 2*Q"));
}

TEST_CASE("smoothing and isolated vertices") {
  const auto path = smooth_2valent(closed_path(3));
  CHECK(path.num_edges() == 1);
  CHECK(path.num_vertices() == 2);

  CHECK(smooth_2valent(closed_cycle(4)).free_loops() == 1);

  // strand through a 4-valent vertex whose loop passes a 2-valent vertex
  GraphBuilder b(1, 1);
  const int v = b.add_vertex(4);
  const int w = b.add_vertex(2);
  b.connect(b.bottom(0), b.port(v, 0));
  b.connect(b.port(v, 1), b.port(w, 0));
  b.connect(b.port(w, 1), b.port(v, 2));
  b.connect(b.port(v, 3), b.top(0));
  const auto s = smooth_2valent(b.build());
  CHECK(s.free_loops() == 0);
  CHECK(s.num_dart_vertices() == 3);
  CHECK(s.num_edges() == 3);

  GraphBuilder iso(1, 1);
  iso.connect(iso.bottom(0), iso.top(0));
  iso.add_isolated(1);
  const auto g = iso.build();
  CHECK(g.isolated_vertices() == 1);
  CHECK(delete_isolated(g) == strands(1));
}

TEST_CASE("stack, reflect and canonical keys") {
  const auto h = h_graph();
  CHECK(reflect(reflect(h)) == h);
  CHECK(canonical_key(stack(strands(2), h)) == canonical_key(h));
  CHECK(canonical_key(stack(h, strands(2))) == canonical_key(h));
  CHECK(canonical_key(h) != canonical_key(i_graph()));
  CHECK(canonical_key(strands(2)) == canonical_key(canonicalize(strands(2))));
}

TEST_CASE("Euler formula survives edits on random graphs") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_rectangle_graph(1 + trial % 3, 6, rng);
    CHECK(sphere_euler_ok(g));
    CHECK(sphere_euler_ok(closure(g)));
    for (int e : g.inner_edges()) {
      CHECK(sphere_euler_ok(delete_edge(g, e)));
      if (!g.is_loop(e)) CHECK(sphere_euler_ok(contract_edge(g, e)));
    }
  }
}

TEST_CASE("dual of the dual is the original map") {
  Rng rng(202);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = random_closed_graph(8, rng);
    CHECK(canonical_key(dual(dual(g))) == canonical_key(g));
    CHECK(dual(g).num_edges() == g.num_edges());
    CHECK(static_cast<int>(faces(g).size()) == dual(g).num_vertices());
  }
}

TEST_CASE("delete and contract commute on disjoint edges") {
  Rng rng(303);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_closed_graph(8, rng);
    const auto vx = g.vertex_of_darts();
    const auto edges = g.inner_edges();
    for (int e : edges) {
      for (int f : edges) {
        const int e2 = g.alpha(e);
        const int f2 = g.alpha(f);
        if (e == f || g.is_loop(e) || g.is_loop(f)) continue;
        if (vx[e] == vx[f] || vx[e] == vx[f2] || vx[e2] == vx[f] || vx[e2] == vx[f2]) continue;
        const auto a = contract_edge(delete_edge(g, e), shift(f, {e, e2}));
        const auto b = delete_edge(contract_edge(g, f), shift(e, {f, f2}));
        CHECK(canonical_key(a) == canonical_key(b));
        const auto c = contract_edge(contract_edge(g, e), shift(f, {e, e2}));
        const auto d = contract_edge(contract_edge(g, f), shift(e, {f, f2}));
        CHECK(canonical_key(c) == canonical_key(d));
        ++tested;
      }
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("graph file round trip") {
  Rng rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_rectangle_graph(2, 5, rng);
    const std::string text = write_graph(g);
    CHECK(write_graph(parse_graph(text)) == text);
    CHECK(parse_graph(text) == g);
  }
}

TEST_CASE("graph file errors report line and column") {
  try {
    parse_graph("n_bottom 0\nn_top 0\ndarts 2\nalpha 0 x\n");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 9);
  }
  try {
    parse_graph("n_bottom 0\nn_top 0\ndarts 2\nalpha 0 5\n");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_graph("colour red\n"), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/file.graph"), std::runtime_error);
}

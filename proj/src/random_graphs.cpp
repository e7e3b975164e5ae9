#include "chromalg/random_graphs.hpp"

#include <algorithm>

#include "chromalg/chromatic_algebra.hpp"

namespace chromalg {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct DartSoup {
  int n_bottom = 0;
  int n_top = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> boundary;
  int free_loops = 0;

  explicit DartSoup(const EmbeddedGraph& g)
      : n_bottom(g.n_bottom()),
        n_top(g.n_top()),
        alpha(g.alpha()),
        sigma(g.sigma()),
        boundary(g.boundary()),
        free_loops(g.free_loops()) {}

  EmbeddedGraph build() const { return EmbeddedGraph(n_bottom, n_top, alpha, sigma, boundary, free_loops); }

  int new_dart() {
    alpha.push_back(-1);
    sigma.push_back(static_cast<int>(sigma.size()));
    return static_cast<int>(alpha.size()) - 1;
  }

  void insert_before(int u, int x) {
    int p = x;
    while (sigma[p] != x) p = sigma[p];
    sigma[p] = u;
    sigma[u] = x;
  }

  void subdivide(int x) {
    const int y = alpha[x];
    const int u = new_dart();
    const int v = new_dart();
    sigma[u] = v;
    sigma[v] = u;
    alpha[x] = u;
    alpha[u] = x;
    alpha[v] = y;
    alpha[y] = v;
  }

  void chord(int x, int y) {
    const int u = new_dart();
    const int v = new_dart();
    insert_before(u, x);
    insert_before(v, y);
    alpha[u] = v;
    alpha[v] = u;
  }

  void pendant(int x) {
    const int u = new_dart();
    const int w = new_dart();
    insert_before(u, x);
    alpha[u] = w;
    alpha[w] = u;
  }
};

EmbeddedGraph mutate(const EmbeddedGraph& g, int max_inner_edges, int steps, bool allow_pendants, Rng& rng) {
  EmbeddedGraph cur = g;
  for (int step = 0; step < steps; ++step) {
    DartSoup s(cur);
    std::vector<int> interior;
    for (int x = 0; x < cur.num_darts(); ++x) {
      if (!cur.is_boundary_dart(x)) interior.push_back(x);
    }
    const int op = interior.empty() ? 0 : uniform(rng, 0, allow_pendants ? 9 : 8);
    if (op <= 2) {
      if (cur.num_darts() == 0) continue;
      s.subdivide(uniform(rng, 0, cur.num_darts() - 1));
    } else if (op <= 6) {
      // Chord between two corners of one face.
      const int x = interior[uniform(rng, 0, static_cast<int>(interior.size()) - 1)];
      for (const Face& f : faces(cur)) {
        if (std::find(f.darts.begin(), f.darts.end(), x) == f.darts.end()) continue;
        std::vector<int> options;
        for (int y : f.darts) {
          if (!cur.is_boundary_dart(y)) options.push_back(y);
        }
        s.chord(x, options[uniform(rng, 0, static_cast<int>(options.size()) - 1)]);
        break;
      }
    } else if (op == 7) {
      const int x = interior[uniform(rng, 0, static_cast<int>(interior.size()) - 1)];
      s.chord(x, x);
    } else if (op == 8) {
      if (uniform(rng, 0, 3) != 0) continue;
      ++s.free_loops;
    } else {
      s.pendant(interior[uniform(rng, 0, static_cast<int>(interior.size()) - 1)]);
    }
    EmbeddedGraph next = s.build();
    if (next.num_inner_edges() <= max_inner_edges) cur = std::move(next);
  }
  return cur;
}

}  // namespace

EmbeddedGraph random_rectangle_graph(int n, int max_inner_edges, Rng& rng) {
  const auto basis = enumerate_basis(n);
  const EmbeddedGraph start = basis_graph(basis[uniform(rng, 0, static_cast<int>(basis.size()) - 1)]);
  return mutate(start, max_inner_edges, 4 + 2 * max_inner_edges, uniform(rng, 0, 3) == 0, rng);
}

EmbeddedGraph random_closed_graph(int max_edges, Rng& rng) {
  GraphBuilder b(0, 0);
  const int u = b.add_vertex(1);
  const int v = b.add_vertex(1);
  b.connect(b.port(u, 0), b.port(v, 0));
  EmbeddedGraph cur = b.build();
  for (int step = 0; step < 3 * max_edges; ++step) {
    EmbeddedGraph next = mutate(cur, max_edges, 1, true, rng);
    if (next.free_loops() == 0 && next.num_edges() <= max_edges) cur = std::move(next);
  }
  return cur;
}

Multigraph random_multigraph(int max_vertices, int max_edges, bool allow_loops, Rng& rng) {
  Multigraph g;
  g.num_vertices = uniform(rng, 1, max_vertices);
  const int e = uniform(rng, 0, max_edges);
  for (int i = 0; i < e; ++i) {
    int a = uniform(rng, 0, g.num_vertices - 1);
    int b = uniform(rng, 0, g.num_vertices - 1);
    if (a == b && !allow_loops) {
      if (g.num_vertices == 1) continue;
      b = (a + 1) % g.num_vertices;
    }
    g.edges.emplace_back(a, b);
  }
  return g;
}

TangleWord random_tangle_word(int n, int length, bool braids_only, Rng& rng) {
  TangleWord w;
  w.n = n;
  for (int k = 0; k < length; ++k) {
    const int kind = uniform(rng, braids_only ? 1 : 0, 2);
    w.letters.push_back({kind == 0 ? TangleWord::Kind::E : (kind == 1 ? TangleWord::Kind::B : TangleWord::Kind::BInv),
                         uniform(rng, 1, n - 1)});
  }
  return w;
}

}  // namespace chromalg

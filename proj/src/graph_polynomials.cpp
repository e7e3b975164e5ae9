#include "chromalg/graph_polynomials.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "chromalg/errors.hpp"

namespace chromalg {

namespace {

using Adjacency = std::vector<std::vector<char>>;

LaurentPolynomial q_var() { return LaurentPolynomial::variable(Var::Q); }
LaurentPolynomial q_minus(long k) { return q_var() - LaurentPolynomial::constant(Var::Q, Rational(k)); }

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, LaurentPolynomial>& cache() {
  static std::unordered_map<std::string, LaurentPolynomial> c;
  return c;
}

int edge_count(const Adjacency& adj) {
  int e = 0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = i + 1; j < adj.size(); ++j) e += adj[i][j];
  }
  return e;
}

std::vector<int> degrees(const Adjacency& adj) {
  std::vector<int> deg(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = 0; j < adj.size(); ++j) deg[i] += adj[i][j];
  }
  return deg;
}

Adjacency induced(const Adjacency& adj, const std::vector<int>& vertices) {
  Adjacency out(vertices.size(), std::vector<char>(vertices.size(), 0));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) out[i][j] = adj[vertices[i]][vertices[j]];
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (int v = 0; v < n; ++v) {
        if (adj[members[h]][v] && comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/// Biconnected blocks (vertex sets) of a connected graph, Hopcroft-Tarjan.
std::vector<std::vector<int>> blocks(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int v = 0; v < n; ++v) {
      if (!adj[u][v] || v == parent) continue;
      if (disc[v] < 0) {
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<int> block;
          while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(a);
            block.push_back(b);
            if (a == u && b == v) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.push_back(std::move(block));
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(0, -1);
  return out;
}

// Canonical labeling by color refinement plus individualization.

std::vector<int> refine(const Adjacency& adj, std::vector<int> colors) {
  const int n = static_cast<int>(adj.size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colors[v]};
      std::vector<int> nb;
      for (int u = 0; u < n; ++u) {
        if (adj[v][u]) nb.push_back(colors[u]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> distinct;
    for (auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) - distinct.begin());
    }
    const auto count = [](const std::vector<int>& c) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    if (count(next) == count(colors)) return next;
    colors = std::move(next);
  }
}

std::string encode(const Adjacency& adj, const std::vector<int>& colors) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
  std::string key;
  key.push_back(static_cast<char>(n));
  key.push_back(static_cast<char>(n >> 8));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) key.push_back(adj[order[i]][order[j]] ? '1' : '0');
  }
  return key;
}

struct KeySearch {
  const Adjacency& adj;
  int leaves_left;
  std::string best;

  void run(const std::vector<int>& colors) {
    if (leaves_left <= 0) return;
    const int n = static_cast<int>(adj.size());
    std::vector<int> cell_size(n, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      --leaves_left;
      std::string key = encode(adj, colors);
      if (best.empty() || key < best) best = std::move(key);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> c2(n);
      // Individualize v: it gets a color just below its old cell.
      for (int u = 0; u < n; ++u) c2[u] = 2 * colors[u] + 1;
      c2[v] = 2 * colors[v];
      run(refine(adj, c2));
      if (leaves_left <= 0) return;
    }
  }
};

LaurentPolynomial chromatic_connected(const Adjacency& adj);

LaurentPolynomial chromatic_simple(const Adjacency& adj) {
  LaurentPolynomial result = LaurentPolynomial::constant(Var::Q, Rational(1));
  for (const auto& comp : connected_components(adj)) result *= chromatic_connected(induced(adj, comp));
  return result;
}

Adjacency contract(const Adjacency& adj, int u, int v) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> keep;
  for (int w = 0; w < n; ++w) {
    if (w != v) keep.push_back(w);
  }
  Adjacency out = induced(adj, keep);
  const int ui = u < v ? u : u - 1;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (adj[v][keep[i]] && keep[i] != u) {
      out[ui][i] = 1;
      out[i][ui] = 1;
    }
  }
  return out;
}

LaurentPolynomial chromatic_connected(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const int e = edge_count(adj);
  if (n == 1) return q_var();
  if (e == n - 1) return q_var() * q_minus(1).pow(n - 1);
  if (2 * e == n * (n - 1)) {
    LaurentPolynomial p = q_var();
    for (int k = 1; k < n; ++k) p *= q_minus(k);
    return p;
  }
  const auto deg = degrees(adj);
  if (e == n && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) {
    LaurentPolynomial p = q_minus(1).pow(n);
    if (n % 2 == 0) return p + q_minus(1);
    return p - q_minus(1);
  }
  const auto bl = blocks(adj);
  if (bl.size() > 1) {
    LaurentPolynomial p = LaurentPolynomial::constant(Var::Q, Rational(1));
    for (const auto& b : bl) p *= chromatic_connected(induced(adj, b));
    return p.divide_exact(q_var().pow(static_cast<int>(bl.size()) - 1));
  }
  const std::string key = simple_graph_key(adj);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  int u = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
  int v = -1;
  for (int w = 0; w < n; ++w) {
    if (adj[u][w] && (v < 0 || deg[w] > deg[v])) v = w;
  }
  Adjacency deleted = adj;
  deleted[u][v] = deleted[v][u] = 0;
  LaurentPolynomial result = chromatic_connected(deleted) - chromatic_simple(contract(adj, u, v));
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().emplace(key, result);
  return result;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::string simple_graph_key(const std::vector<std::vector<char>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> colors(n, 0);
  const auto deg = degrees(adjacency);
  colors = refine(adjacency, deg);
  KeySearch search{adjacency, 64, {}};
  search.run(colors);
  return search.best;
}

LaurentPolynomial chromatic_delcon(const Multigraph& g) {
  Adjacency adj(g.num_vertices, std::vector<char>(g.num_vertices, 0));
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) return LaurentPolynomial(Var::Q);
    adj[a][b] = adj[b][a] = 1;
  }
  return chromatic_simple(adj);
}

LaurentPolynomial chromatic_ranksum(const Multigraph& g, int edge_limit) {
  const int m = static_cast<int>(g.edges.size());
  if (m > edge_limit || m > 62) {
    throw LimitExceeded("rank-sum expansion limited to " + std::to_string(edge_limit) + " edges, got " +
                        std::to_string(m));
  }
  std::vector<long long> coeff(g.num_vertices + 1, 0);
  std::vector<int> parent(g.num_vertices);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = g.num_vertices;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const int a = find_root(parent, g.edges[i].first);
      const int b = find_root(parent, g.edges[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    coeff[components] += std::popcount(mask) % 2 ? -1 : 1;
  }
  LaurentPolynomial::Terms terms;
  for (int k = 0; k <= g.num_vertices; ++k) {
    if (coeff[k] != 0) terms[k] = Rational(static_cast<long>(coeff[k]));
  }
  return LaurentPolynomial(Var::Q, std::move(terms));
}

std::uint64_t count_colorings(const Multigraph& g, int k) {
  const int n = g.num_vertices;
  if (n == 0) return 1;
  if (k <= 0) return 0;
  std::vector<int> color(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (auto [a, b] : g.edges) {
      if (color[a] == color[b]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int i = 0;
    while (i < n && ++color[i] == k) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

LaurentPolynomial dual_chromatic(const EmbeddedGraph& g) { return chromatic_delcon(to_multigraph(dual(g))); }

LaurentPolynomial normalized_dual_chromatic(const EmbeddedGraph& g) {
  return dual_chromatic(g).divide_exact(LaurentPolynomial::variable(Var::Q));
}

void clear_chromatic_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().clear();
}

std::size_t chromatic_cache_size() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().size();
}

}  // namespace chromalg

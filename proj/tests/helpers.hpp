#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chromalg/embedded_graph.hpp"
#include "chromalg/laurent.hpp"

namespace testutil {

using namespace chromalg;

inline LaurentPolynomial poly(const std::string& text, Var v) { return parse_polynomial(text, v); }
inline LaurentPolynomial Qp(const std::string& text) { return poly(text, Var::Q); }
inline LaurentPolynomial dp(const std::string& text) { return poly(text, Var::d); }
inline LaurentPolynomial qp(const std::string& text) { return poly(text, Var::q); }
inline LaurentPolynomial Ap(const std::string& text) { return poly(text, Var::A); }

/// k vertices joined in a ring; k = 1 is a vertex with a loop.
inline EmbeddedGraph closed_cycle(int k) {
  GraphBuilder b(0, 0);
  std::vector<int> v;
  for (int i = 0; i < k; ++i) v.push_back(b.add_vertex(2));
  for (int i = 0; i < k; ++i) b.connect(b.port(v[i], 0), b.port(v[(i + 1) % k], 1));
  return b.build();
}

inline EmbeddedGraph theta() {
  GraphBuilder b(0, 0);
  const int u = b.add_vertex(3);
  const int w = b.add_vertex(3);
  for (int i = 0; i < 3; ++i) b.connect(b.port(u, i), b.port(w, 2 - i));
  return b.build();
}

/// Path with k vertices in the sphere.
inline EmbeddedGraph closed_path(int k) {
  GraphBuilder b(0, 0);
  std::vector<int> v;
  for (int i = 0; i < k; ++i) v.push_back(b.add_vertex(i == 0 || i == k - 1 ? 1 : 2));
  for (int i = 0; i + 1 < k; ++i) b.connect(b.port(v[i], 0), b.port(v[i + 1], i + 1 == k - 1 ? 0 : 1));
  return b.build();
}

/// n vertical strands.
inline EmbeddedGraph strands(int n) {
  GraphBuilder b(n, n);
  for (int j = 0; j < n; ++j) b.connect(b.bottom(j), b.top(j));
  return b.build();
}

/// Two vertices joined by a bridge, each carrying a loop.
inline EmbeddedGraph dumbbell() {
  GraphBuilder b(0, 0);
  const int u = b.add_vertex(3);
  const int w = b.add_vertex(3);
  b.connect(b.port(u, 0), b.port(w, 0));
  b.connect(b.port(u, 1), b.port(u, 2));
  b.connect(b.port(w, 1), b.port(w, 2));
  return b.build();
}

inline Multigraph multigraph(int v, std::vector<std::pair<int, int>> e) { return Multigraph{v, std::move(e)}; }

}  // namespace testutil

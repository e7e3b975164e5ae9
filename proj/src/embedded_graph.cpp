#include "chromalg/embedded_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "chromalg/errors.hpp"

namespace chromalg {

namespace {

/// The map closed up by a wall cycle through the boundary points. Wall darts
/// are numbered after the graph darts: point i owns wall darts
/// D + 2i ("toward next point") and D + 2i + 1 ("toward previous point").
struct FramedMap {
  int graph_darts = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
};

FramedMap frame(const EmbeddedGraph& g) {
  FramedMap f;
  const int d = g.num_darts();
  const int b = g.num_boundary();
  f.graph_darts = d;
  f.alpha = g.alpha();
  f.sigma = g.sigma();
  f.alpha.resize(d + 2 * b);
  f.sigma.resize(d + 2 * b);
  for (int i = 0; i < b; ++i) {
    const int next = d + 2 * i;
    const int prev = d + 2 * i + 1;
    const int inner = g.boundary()[i];
    // Counterclockwise at a boundary point: along the wall forward, into the
    // rectangle, back along the wall.
    f.sigma[next] = inner;
    f.sigma[inner] = prev;
    f.sigma[prev] = next;
    const int next_point_prev = d + 2 * ((i + 1) % b) + 1;
    f.alpha[next] = next_point_prev;
    f.alpha[next_point_prev] = next;
  }
  return f;
}

std::vector<std::vector<int>> orbits(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(perm.size(), 0);
  for (int s = 0; s < static_cast<int>(perm.size()); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    for (int x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> face_permutation(const std::vector<int>& alpha, const std::vector<int>& sigma) {
  std::vector<int> phi(alpha.size());
  for (std::size_t x = 0; x < alpha.size(); ++x) phi[x] = sigma[alpha[x]];
  return phi;
}

/// Connected component id of every dart under alpha and sigma.
std::vector<int> dart_components(const std::vector<int>& alpha, const std::vector<int>& sigma, int* count) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : {alpha[x], sigma[x]}) {
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

/// Working copy for dart-level surgery; dead darts are dropped by finish().
struct MutableMap {
  int n_bottom = 0;
  int n_top = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<char> dead;
  std::vector<int> boundary;
  int free_loops = 0;
  int isolated = 0;

  MutableMap() = default;
  explicit MutableMap(const EmbeddedGraph& g)
      : n_bottom(g.n_bottom()),
        n_top(g.n_top()),
        alpha(g.alpha()),
        sigma(g.sigma()),
        dead(g.num_darts(), 0),
        boundary(g.boundary()),
        free_loops(g.free_loops()),
        isolated(g.isolated_vertices()) {}

  /// Appends `g`'s darts with an offset; returns the offset.
  int append(const EmbeddedGraph& g) {
    const int offset = static_cast<int>(alpha.size());
    for (int x = 0; x < g.num_darts(); ++x) {
      alpha.push_back(g.alpha(x) + offset);
      sigma.push_back(g.sigma(x) + offset);
      dead.push_back(0);
    }
    free_loops += g.free_loops();
    isolated += g.isolated_vertices();
    return offset;
  }

  int add_dart() {
    const int id = static_cast<int>(alpha.size());
    alpha.push_back(id);
    sigma.push_back(id);
    dead.push_back(0);
    return id;
  }

  int sigma_prev(int x) const {
    int y = x;
    while (sigma[y] != x) y = sigma[y];
    return y;
  }

  /// Removes x from its rotation. Returns true when its vertex vanished.
  bool unlink(int x) {
    const bool alone = sigma[x] == x;
    if (!alone) {
      const int p = sigma_prev(x);
      sigma[p] = sigma[x];
    }
    sigma[x] = x;
    dead[x] = 1;
    return alone;
  }

  /// Smooths the 2-valent vertex {u, w} (sigma(u) == w, sigma(w) == u).
  void smooth_vertex(int u, int w) {
    if (alpha[u] == w) {
      ++free_loops;
    } else {
      const int a = alpha[u];
      const int b = alpha[w];
      alpha[a] = b;
      alpha[b] = a;
    }
    dead[u] = dead[w] = 1;
  }

  /// Glues two degree-1 darts into a 2-valent vertex and smooths it.
  void join(int u, int w) {
    sigma[u] = w;
    sigma[w] = u;
    smooth_vertex(u, w);
  }

  EmbeddedGraph finish() const {
    std::vector<int> relabel(alpha.size(), -1);
    int next = 0;
    for (std::size_t x = 0; x < alpha.size(); ++x) {
      if (!dead[x]) relabel[x] = next++;
    }
    std::vector<int> a(next);
    std::vector<int> s(next);
    for (std::size_t x = 0; x < alpha.size(); ++x) {
      if (dead[x]) continue;
      a[relabel[x]] = relabel[alpha[x]];
      s[relabel[x]] = relabel[sigma[x]];
    }
    std::vector<int> bd;
    bd.reserve(boundary.size());
    for (int x : boundary) bd.push_back(relabel[x]);
    return EmbeddedGraph(n_bottom, n_top, std::move(a), std::move(s), std::move(bd), free_loops, isolated);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// EmbeddedGraph

EmbeddedGraph::EmbeddedGraph(int n_bottom, int n_top, std::vector<int> alpha, std::vector<int> sigma,
                             std::vector<int> boundary, int free_loops, int isolated_vertices)
    : n_bottom_(n_bottom),
      n_top_(n_top),
      alpha_(std::move(alpha)),
      sigma_(std::move(sigma)),
      boundary_(std::move(boundary)),
      free_loops_(free_loops),
      isolated_(isolated_vertices) {
  if (n_bottom_ < 0 || n_top_ < 0 || free_loops_ < 0 || isolated_ < 0) {
    throw std::invalid_argument("negative count in embedded graph");
  }
  boundary_flag_.assign(alpha_.size(), 0);
  for (int x : boundary_) {
    if (x >= 0 && x < static_cast<int>(alpha_.size())) boundary_flag_[x] = 1;
  }
  validate();
}

void EmbeddedGraph::validate() const {
  const int n = num_darts();
  if (static_cast<int>(sigma_.size()) != n) throw std::invalid_argument("alpha and sigma sizes differ");
  for (int x = 0; x < n; ++x) {
    const int a = alpha_[x];
    if (a < 0 || a >= n) throw std::invalid_argument("alpha maps outside the dart range");
    if (a == x) throw std::invalid_argument("alpha has a fixed point at dart " + std::to_string(x));
    if (alpha_[a] != x) throw std::invalid_argument("alpha is not an involution at dart " + std::to_string(x));
  }
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    const int s = sigma_[x];
    if (s < 0 || s >= n || hit[s]) throw std::invalid_argument("sigma is not a permutation");
    hit[s] = 1;
  }
  if (static_cast<int>(boundary_.size()) != num_boundary()) {
    throw std::invalid_argument("boundary sequence length must equal n_bottom + n_top");
  }
  std::vector<char> seen(n, 0);
  for (int x : boundary_) {
    if (x < 0 || x >= n) throw std::invalid_argument("boundary dart out of range");
    if (seen[x]) throw std::invalid_argument("boundary dart listed twice");
    seen[x] = 1;
    if (sigma_[x] != x) throw std::invalid_argument("boundary point " + std::to_string(x) + " must have degree 1");
  }
  // Every component of the framed map must be a sphere.
  const FramedMap f = frame(*this);
  int comps = 0;
  const auto comp = dart_components(f.alpha, f.sigma, &comps);
  std::vector<long> chi(comps, 0);
  for (const auto& orb : orbits(f.sigma)) chi[comp[orb.front()]] += 1;
  for (std::size_t x = 0; x < f.alpha.size(); ++x) {
    if (static_cast<int>(x) < f.alpha[x]) chi[comp[x]] -= 1;
  }
  for (const auto& orb : orbits(face_permutation(f.alpha, f.sigma))) chi[comp[orb.front()]] += 1;
  for (int c = 0; c < comps; ++c) {
    if (chi[c] != 2) throw std::invalid_argument("map is not planar (Euler characteristic " + std::to_string(chi[c]) + ")");
  }
}

bool EmbeddedGraph::is_boundary_dart(int dart) const { return boundary_flag_[dart] != 0; }

std::vector<int> EmbeddedGraph::vertex_of_darts() const {
  std::vector<int> v(num_darts(), -1);
  int next = 0;
  for (int s = 0; s < num_darts(); ++s) {
    if (v[s] >= 0) continue;
    for (int x = s; v[x] < 0; x = sigma_[x]) v[x] = next;
    ++next;
  }
  return v;
}

int EmbeddedGraph::num_dart_vertices() const { return static_cast<int>(orbits(sigma_).size()); }

int EmbeddedGraph::degree(int dart) const {
  int k = 1;
  for (int x = sigma_[dart]; x != dart; x = sigma_[x]) ++k;
  return k;
}

bool EmbeddedGraph::is_loop(int dart) const {
  const int mate = alpha_[dart];
  for (int x = sigma_[dart]; x != dart; x = sigma_[x]) {
    if (x == mate) return true;
  }
  return false;
}

bool EmbeddedGraph::is_inner_edge(int dart) const {
  return !is_boundary_dart(dart) && !is_boundary_dart(alpha_[dart]);
}

std::vector<int> EmbeddedGraph::inner_edges() const {
  std::vector<int> out;
  for (int x = 0; x < num_darts(); ++x) {
    if (x < alpha_[x] && is_inner_edge(x)) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Faces and dual

namespace {

struct RegionLayout {
  // Regions as lists of orbits (each orbit a list of graph darts).
  std::vector<std::vector<std::vector<int>>> regions;
  int outer_region = -1;  // rectangle mode only
  int shared_region = 0;  // where closed components sit side by side
};

RegionLayout region_layout(const EmbeddedGraph& g) {
  RegionLayout out;
  const FramedMap f = frame(g);
  int comps = 0;
  const auto comp = dart_components(f.alpha, f.sigma, &comps);
  const int frame_comp = g.is_closed() ? -1 : comp[f.graph_darts];
  std::vector<int> exterior_of(comps, -1);  // region receiving a component's exterior orbit
  const auto face_orbits = orbits(face_permutation(f.alpha, f.sigma));

  // Rectangle mode: every orbit of the frame component is its own region; the
  // wall-only orbit is the outer face and the first inner face hosts closed
  // components.
  if (frame_comp >= 0) {
    for (const auto& orb : face_orbits) {
      if (comp[orb.front()] != frame_comp) continue;
      std::vector<int> darts;
      for (int x : orb) {
        if (x < f.graph_darts) darts.push_back(x);
      }
      if (darts.empty()) out.outer_region = static_cast<int>(out.regions.size());
      out.regions.push_back({darts});
    }
    out.shared_region = out.outer_region == 0 && out.regions.size() > 1 ? 1 : 0;
  } else {
    out.regions.emplace_back();
    out.shared_region = 0;
  }
  // Closed components: the orbit through the component's smallest dart is its
  // exterior and merges into the shared region.
  std::vector<int> min_dart(comps, -1);
  for (int x = f.graph_darts - 1; x >= 0; --x) min_dart[comp[x]] = x;
  for (const auto& orb : face_orbits) {
    const int c = comp[orb.front()];
    if (c == frame_comp) continue;
    if (std::find(orb.begin(), orb.end(), min_dart[c]) != orb.end()) {
      out.regions[out.shared_region].push_back(orb);
    } else {
      out.regions.push_back({orb});
    }
  }
  for (int k = 0; k < g.free_loops(); ++k) out.regions.emplace_back();
  return out;
}

}  // namespace

std::vector<Face> faces(const EmbeddedGraph& g) {
  const RegionLayout layout = region_layout(g);
  std::vector<Face> out;
  for (std::size_t r = 0; r < layout.regions.size(); ++r) {
    Face f;
    f.is_outer = static_cast<int>(r) == layout.outer_region;
    for (const auto& orb : layout.regions[r]) f.darts.insert(f.darts.end(), orb.begin(), orb.end());
    out.push_back(std::move(f));
  }
  return out;
}

EmbeddedGraph dual(const EmbeddedGraph& g) {
  if (!g.is_closed()) throw std::invalid_argument("dual requires a closed graph (no boundary points)");
  const RegionLayout layout = region_layout(g);
  const int d = g.num_darts();
  std::vector<int> alpha = g.alpha();
  std::vector<int> sigma(d, -1);
  // Free loop k contributes darts d+2k (in the shared region) and d+2k+1.
  alpha.resize(d + 2 * g.free_loops());
  sigma.resize(d + 2 * g.free_loops());
  int isolated = 0;
  int loop_index = 0;
  for (std::size_t r = 0; r < layout.regions.size(); ++r) {
    std::vector<int> cycle;
    for (const auto& orb : layout.regions[r]) cycle.insert(cycle.end(), orb.begin(), orb.end());
    if (static_cast<int>(r) == layout.shared_region) {
      for (int k = 0; k < g.free_loops(); ++k) cycle.push_back(d + 2 * k);
    }
    if (cycle.empty() && static_cast<int>(r) != layout.shared_region) {
      // Interior of a free loop.
      const int inner = d + 2 * loop_index + 1;
      const int outer = d + 2 * loop_index;
      alpha[inner] = outer;
      alpha[outer] = inner;
      sigma[inner] = inner;
      ++loop_index;
      continue;
    }
    if (cycle.empty()) {
      ++isolated;
      continue;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return EmbeddedGraph(0, 0, std::move(alpha), std::move(sigma), {}, 0, isolated);
}

// ---------------------------------------------------------------------------
// Surgery

EmbeddedGraph delete_edge(const EmbeddedGraph& g, int dart) {
  if (dart < 0 || dart >= g.num_darts()) throw std::out_of_range("dart out of range");
  if (!g.is_inner_edge(dart)) throw std::invalid_argument("cannot delete an edge that touches the boundary");
  MutableMap m(g);
  const int mate = g.alpha(dart);
  if (m.unlink(dart)) ++m.isolated;
  if (m.unlink(mate)) ++m.isolated;
  return m.finish();
}

EmbeddedGraph contract_edge(const EmbeddedGraph& g, int dart) {
  if (dart < 0 || dart >= g.num_darts()) throw std::out_of_range("dart out of range");
  if (!g.is_inner_edge(dart)) throw std::invalid_argument("cannot contract an edge that touches the boundary");
  if (g.is_loop(dart)) throw std::invalid_argument("cannot contract a loop");
  MutableMap m(g);
  const int u = dart;
  const int v = g.alpha(dart);
  const bool u_alone = m.sigma[u] == u;
  const bool v_alone = m.sigma[v] == v;
  if (u_alone && v_alone) {
    m.dead[u] = m.dead[v] = 1;
    ++m.isolated;
    return m.finish();
  }
  if (u_alone || v_alone) {
    m.unlink(u);
    m.unlink(v);
    return m.finish();
  }
  // Rotation at u: ... pu -> u -> su ...; at v: ... pv -> v -> sv ...
  // Merged: su ... pu followed by sv ... pv.
  const int pu = m.sigma_prev(u);
  const int su = m.sigma[u];
  const int pv = m.sigma_prev(v);
  const int sv = m.sigma[v];
  m.sigma[pu] = sv;
  m.sigma[pv] = su;
  m.dead[u] = m.dead[v] = 1;
  return m.finish();
}

EmbeddedGraph closure(const EmbeddedGraph& g) {
  if (g.n_top() != g.n_bottom()) throw std::invalid_argument("closure needs equal top and bottom point counts");
  MutableMap m(g);
  const int n = g.n_bottom();
  for (int j = 0; j < n; ++j) m.join(g.boundary()[g.bottom_point(j)], g.boundary()[g.top_point(j)]);
  m.n_bottom = m.n_top = 0;
  m.boundary.clear();
  return m.finish();
}

EmbeddedGraph partial_closure_right(const EmbeddedGraph& g) {
  if (g.n_top() != g.n_bottom() || g.n_top() == 0) {
    throw std::invalid_argument("partial closure needs n >= 1 points on top and bottom");
  }
  MutableMap m(g);
  const int n = g.n_bottom();
  const int b = g.boundary()[g.bottom_point(n - 1)];
  const int t = g.boundary()[g.top_point(n - 1)];
  m.join(b, t);
  std::vector<int> bd;
  for (int p = 0; p < 2 * n; ++p) {
    if (p != n - 1 && p != n) bd.push_back(g.boundary()[p]);
  }
  m.boundary = bd;
  m.n_bottom = m.n_top = n - 1;
  return m.finish();
}

EmbeddedGraph stack(const EmbeddedGraph& lower, const EmbeddedGraph& upper) {
  if (lower.n_top() != upper.n_bottom()) throw std::invalid_argument("stacking needs matching point counts");
  MutableMap m(lower);
  const int offset = m.append(upper);
  const int k = lower.n_top();
  std::vector<int> bd;
  for (int j = 0; j < lower.n_bottom(); ++j) bd.push_back(lower.boundary()[lower.bottom_point(j)]);
  for (int p = upper.n_bottom(); p < upper.num_boundary(); ++p) bd.push_back(upper.boundary()[p] + offset);
  for (int j = 0; j < k; ++j) {
    m.join(lower.boundary()[lower.top_point(j)], upper.boundary()[upper.bottom_point(j)] + offset);
  }
  m.boundary = bd;
  m.n_bottom = lower.n_bottom();
  m.n_top = upper.n_top();
  return m.finish();
}

EmbeddedGraph reflect(const EmbeddedGraph& g) {
  std::vector<int> sigma(g.num_darts());
  for (int x = 0; x < g.num_darts(); ++x) sigma[g.sigma(x)] = x;
  const int nb = g.n_bottom();
  const int nt = g.n_top();
  std::vector<int> bd(nb + nt);
  for (int j = 0; j < nb; ++j) bd[nt + nb - 1 - j] = g.boundary()[g.bottom_point(j)];
  for (int j = 0; j < nt; ++j) bd[j] = g.boundary()[g.top_point(j)];
  return EmbeddedGraph(nt, nb, g.alpha(), std::move(sigma), std::move(bd), g.free_loops(), g.isolated_vertices());
}

EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (!a.is_closed() || !b.is_closed()) throw std::invalid_argument("disjoint union is defined for closed graphs");
  MutableMap m(a);
  m.append(b);
  return m.finish();
}

EmbeddedGraph smooth_2valent(const EmbeddedGraph& g) {
  MutableMap m(g);
  std::vector<char> is_bd(g.num_darts(), 0);
  for (int x : g.boundary()) is_bd[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < static_cast<int>(m.alpha.size()); ++x) {
      if (m.dead[x] || is_bd[x]) continue;
      const int y = m.sigma[x];
      if (y == x || m.sigma[y] != x) continue;
      m.smooth_vertex(x, y);
      changed = true;
    }
  }
  return m.finish();
}

EmbeddedGraph delete_isolated(const EmbeddedGraph& g) {
  MutableMap m(g);
  m.isolated = 0;
  return m.finish();
}

int num_components(const EmbeddedGraph& g) {
  const FramedMap f = frame(g);
  int comps = 0;
  dart_components(f.alpha, f.sigma, &comps);
  return comps + g.free_loops() + g.isolated_vertices();
}

int euler_characteristic(const EmbeddedGraph& g) {
  const FramedMap f = frame(g);
  const int v = static_cast<int>(orbits(f.sigma).size()) + g.isolated_vertices() + g.free_loops();
  const int e = static_cast<int>(f.alpha.size()) / 2 + g.free_loops();
  const int faces_count = static_cast<int>(faces(g).size());
  return v - e + faces_count;
}

ComponentSplit split_components(const EmbeddedGraph& g) {
  ComponentSplit out;
  out.free_loops = g.free_loops();
  out.isolated_vertices = g.isolated_vertices();
  const FramedMap f = frame(g);
  int comps = 0;
  const auto comp = dart_components(f.alpha, f.sigma, &comps);
  const int frame_comp = g.is_closed() ? -1 : comp[f.graph_darts];
  std::vector<std::vector<int>> members(comps);
  for (int x = 0; x < g.num_darts(); ++x) members[comp[x]].push_back(x);
  for (int c = 0; c < comps; ++c) {
    if (members[c].empty()) continue;
    std::vector<int> relabel(g.num_darts(), -1);
    for (std::size_t i = 0; i < members[c].size(); ++i) relabel[members[c][i]] = static_cast<int>(i);
    std::vector<int> a;
    std::vector<int> s;
    for (int x : members[c]) {
      a.push_back(relabel[g.alpha(x)]);
      s.push_back(relabel[g.sigma(x)]);
    }
    if (c == frame_comp) {
      std::vector<int> bd;
      for (int x : g.boundary()) bd.push_back(relabel[x]);
      out.attached = EmbeddedGraph(g.n_bottom(), g.n_top(), std::move(a), std::move(s), std::move(bd));
    } else {
      out.closed.emplace_back(0, 0, std::move(a), std::move(s), std::vector<int>{});
    }
  }
  if (frame_comp < 0) out.attached = EmbeddedGraph(g.n_bottom(), g.n_top(), {}, {}, std::vector<int>(g.boundary()));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

/// BFS relabeling from the given roots (labels 0.. in root order).
std::vector<int> bfs_labels(const std::vector<int>& alpha, const std::vector<int>& sigma,
                            const std::vector<int>& roots) {
  std::vector<int> label(alpha.size(), -1);
  std::vector<int> order;
  order.reserve(alpha.size());
  for (int r : roots) {
    if (label[r] < 0) {
      label[r] = static_cast<int>(order.size());
      order.push_back(r);
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (int y : {alpha[x], sigma[x]}) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  return label;
}

std::vector<int> relabeled_code(const std::vector<int>& alpha, const std::vector<int>& sigma,
                                const std::vector<int>& label) {
  std::vector<int> code(2 * alpha.size());
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    code[2 * label[x]] = label[alpha[x]];
    code[2 * label[x] + 1] = label[sigma[x]];
  }
  return code;
}

std::vector<int> min_rooted_code(const EmbeddedGraph& g) {
  std::vector<int> best;
  for (int r = 0; r < g.num_darts(); ++r) {
    auto code = relabeled_code(g.alpha(), g.sigma(), bfs_labels(g.alpha(), g.sigma(), {r}));
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

EmbeddedGraph canonicalize(const EmbeddedGraph& g) {
  const ComponentSplit parts = split_components(g);
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> bd;
  const EmbeddedGraph& att = parts.attached;
  if (att.num_darts() > 0) {
    const auto label = bfs_labels(att.alpha(), att.sigma(), att.boundary());
    const auto code = relabeled_code(att.alpha(), att.sigma(), label);
    for (int i = 0; i < att.num_darts(); ++i) {
      alpha.push_back(code[2 * i]);
      sigma.push_back(code[2 * i + 1]);
    }
    for (int x : att.boundary()) bd.push_back(label[x]);
  }
  std::vector<std::vector<int>> codes;
  for (const auto& c : parts.closed) codes.push_back(min_rooted_code(c));
  std::sort(codes.begin(), codes.end());
  for (const auto& code : codes) {
    const int offset = static_cast<int>(alpha.size());
    for (std::size_t i = 0; i < code.size() / 2; ++i) {
      alpha.push_back(code[2 * i] + offset);
      sigma.push_back(code[2 * i + 1] + offset);
    }
  }
  return EmbeddedGraph(g.n_bottom(), g.n_top(), std::move(alpha), std::move(sigma), std::move(bd), g.free_loops(),
                       g.isolated_vertices());
}

std::string canonical_key(const EmbeddedGraph& g) {
  const EmbeddedGraph c = canonicalize(g);
  std::string key;
  key.reserve(16 + 8 * c.num_darts());
  auto put = [&key](int v) {
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  };
  put(c.n_bottom());
  put(c.n_top());
  put(c.free_loops());
  put(c.isolated_vertices());
  put(c.num_darts());
  for (int x = 0; x < c.num_darts(); ++x) {
    put(c.alpha(x));
    put(c.sigma(x));
  }
  for (int x : c.boundary()) put(x);
  return key;
}

Multigraph to_multigraph(const EmbeddedGraph& g) {
  if (g.free_loops() > 0) throw std::invalid_argument("free loops have no abstract multigraph form");
  Multigraph m;
  const auto v = g.vertex_of_darts();
  m.num_vertices = g.num_dart_vertices() + g.isolated_vertices();
  for (int x = 0; x < g.num_darts(); ++x) {
    if (x < g.alpha(x)) m.edges.emplace_back(v[x], v[g.alpha(x)]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Builder

GraphBuilder::GraphBuilder(int n_bottom, int n_top) : n_bottom_(n_bottom), n_top_(n_top) {
  if (n_bottom < 0 || n_top < 0) throw std::invalid_argument("negative boundary size");
  for (int p = 0; p < n_bottom + n_top; ++p) add_vertex(1);
}

int GraphBuilder::add_vertex(int degree) {
  if (degree < 1) throw std::invalid_argument("vertices need at least one port; use add_isolated");
  first_port_.push_back(static_cast<int>(mate_.size()));
  degree_.push_back(degree);
  mate_.resize(mate_.size() + degree, -1);
  return static_cast<int>(degree_.size()) - 1;
}

GraphBuilder::Port GraphBuilder::boundary(int circular_index) const {
  if (circular_index < 0 || circular_index >= n_bottom_ + n_top_) throw std::out_of_range("boundary index");
  return {circular_index, 0};
}

void GraphBuilder::connect(Port a, Port b) {
  auto flat = [this](Port p) {
    if (p.vertex < 0 || p.vertex >= static_cast<int>(degree_.size()) || p.index < 0 ||
        p.index >= degree_[p.vertex]) {
      throw std::out_of_range("port out of range");
    }
    return first_port_[p.vertex] + p.index;
  };
  const int x = flat(a);
  const int y = flat(b);
  if (x == y) throw std::invalid_argument("cannot connect a port to itself");
  if (mate_[x] >= 0 || mate_[y] >= 0) throw std::invalid_argument("port already connected");
  mate_[x] = y;
  mate_[y] = x;
}

EmbeddedGraph GraphBuilder::build() const {
  const int n = static_cast<int>(mate_.size());
  std::vector<int> alpha(n);
  std::vector<int> sigma(n);
  for (std::size_t v = 0; v < degree_.size(); ++v) {
    for (int i = 0; i < degree_[v]; ++i) {
      const int x = first_port_[v] + i;
      if (mate_[x] < 0) throw std::invalid_argument("unconnected port on vertex " + std::to_string(v));
      alpha[x] = mate_[x];
      sigma[x] = first_port_[v] + (i + 1) % degree_[v];
    }
  }
  std::vector<int> bd(n_bottom_ + n_top_);
  for (int p = 0; p < n_bottom_ + n_top_; ++p) bd[p] = first_port_[p];
  return EmbeddedGraph(n_bottom_, n_top_, std::move(alpha), std::move(sigma), std::move(bd), free_loops_, isolated_);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_ws(const std::string& line, std::vector<std::size_t>* columns) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(line.substr(start, i - start));
    if (columns) columns->push_back(start + 1);
  }
  return out;
}

int parse_int_token(const std::string& tok, std::size_t line, std::size_t col) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line, col);
  }
  if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line, col);
  return v;
}

}  // namespace

EmbeddedGraph read_graph(std::istream& in) {
  int n_bottom = -1;
  int n_top = -1;
  int darts = -1;
  int free_loops = 0;
  int isolated = 0;
  std::vector<std::pair<int, int>> alpha_pairs;
  std::vector<std::vector<int>> cycles;
  std::vector<int> boundary;
  bool have_boundary = false;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::vector<std::size_t> cols;
    const auto tok = split_ws(line, &cols);
    if (tok.empty()) continue;
    last_line = line_no;
    const std::string& key = tok[0];
    std::vector<int> vals;
    for (std::size_t i = 1; i < tok.size(); ++i) vals.push_back(parse_int_token(tok[i], line_no, cols[i]));
    auto need = [&](std::size_t k) {
      if (vals.size() != k) {
        throw ParseError("'" + key + "' expects " + std::to_string(k) + " value(s)", line_no, cols[0]);
      }
    };
    auto check_dart = [&](int v, std::size_t i) {
      if (darts < 0) throw ParseError("'darts' must precede dart references", line_no, cols[0]);
      if (v < 0 || v >= darts) throw ParseError("dart " + std::to_string(v) + " out of range", line_no, cols[i + 1]);
    };
    if (key == "n_bottom") {
      need(1);
      n_bottom = vals[0];
    } else if (key == "n_top") {
      need(1);
      n_top = vals[0];
    } else if (key == "darts") {
      need(1);
      if (vals[0] < 0) throw ParseError("negative dart count", line_no, cols[1]);
      darts = vals[0];
    } else if (key == "alpha") {
      need(2);
      for (std::size_t i = 0; i < 2; ++i) check_dart(vals[i], i);
      alpha_pairs.emplace_back(vals[0], vals[1]);
    } else if (key == "sigma") {
      if (vals.empty()) throw ParseError("'sigma' expects at least one dart", line_no, cols[0]);
      for (std::size_t i = 0; i < vals.size(); ++i) check_dart(vals[i], i);
      cycles.push_back(vals);
    } else if (key == "boundary") {
      for (std::size_t i = 0; i < vals.size(); ++i) check_dart(vals[i], i);
      boundary = vals;
      have_boundary = true;
    } else if (key == "free_loops") {
      need(1);
      free_loops = vals[0];
    } else if (key == "isolated") {
      need(1);
      isolated = vals[0];
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, cols[0]);
    }
  }
  if (n_bottom < 0 || n_top < 0) throw ParseError("missing 'n_bottom' or 'n_top'", last_line, 1);
  if (darts < 0) throw ParseError("missing 'darts'", last_line, 1);
  if (!have_boundary && n_bottom + n_top > 0) throw ParseError("missing 'boundary'", last_line, 1);
  std::vector<int> alpha(darts, -1);
  std::vector<int> sigma(darts, -1);
  for (auto [a, b] : alpha_pairs) {
    if (alpha[a] >= 0 || alpha[b] >= 0 || a == b) {
      throw ParseError("dart paired twice in alpha: " + std::to_string(a) + " " + std::to_string(b), last_line, 1);
    }
    alpha[a] = b;
    alpha[b] = a;
  }
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (sigma[cyc[i]] >= 0) throw ParseError("dart " + std::to_string(cyc[i]) + " in two sigma cycles", last_line, 1);
      sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  for (int x = 0; x < darts; ++x) {
    if (alpha[x] < 0) throw ParseError("dart " + std::to_string(x) + " has no alpha mate", last_line, 1);
    if (sigma[x] < 0) throw ParseError("dart " + std::to_string(x) + " is in no sigma cycle", last_line, 1);
  }
  try {
    return EmbeddedGraph(n_bottom, n_top, std::move(alpha), std::move(sigma), std::move(boundary), free_loops,
                         isolated);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid graph: ") + ex.what(), last_line, 1);
  }
}

EmbeddedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

EmbeddedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string write_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "n_bottom " << g.n_bottom() << "\n";
  out << "n_top " << g.n_top() << "\n";
  out << "darts " << g.num_darts() << "\n";
  for (int x = 0; x < g.num_darts(); ++x) {
    if (x < g.alpha(x)) out << "alpha " << x << " " << g.alpha(x) << "\n";
  }
  std::vector<char> seen(g.num_darts(), 0);
  for (int s = 0; s < g.num_darts(); ++s) {
    if (seen[s]) continue;
    out << "sigma";
    for (int x = s; !seen[x]; x = g.sigma(x)) {
      seen[x] = 1;
      out << " " << x;
    }
    out << "\n";
  }
  out << "boundary";
  for (int x : g.boundary()) out << " " << x;
  out << "\n";
  out << "free_loops " << g.free_loops() << "\n";
  out << "isolated " << g.isolated_vertices() << "\n";
  return out.str();
}

}  // namespace chromalg

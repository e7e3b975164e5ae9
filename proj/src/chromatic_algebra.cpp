#include "chromalg/chromatic_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/parallel.hpp"

namespace chromalg {

namespace {

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const int lo = a[i];
      const int hi = a[j];
      bool inside = false;
      bool outside = false;
      for (int x : b) {
        if (x > lo && x < hi) {
          inside = true;
        } else {
          outside = true;
        }
      }
      if (inside && outside) return true;
    }
  }
  return false;
}

/// Noncrossing singleton-free partitions of the points lo..hi-1.
std::vector<std::vector<std::vector<int>>> interval_partitions(int lo, int hi) {
  if (lo >= hi) return {{}};
  std::vector<std::vector<std::vector<int>>> out;
  // Choose the block of lo as lo = b0 < b1 < ... < bk; the gaps are partitioned
  // independently.
  std::vector<int> block{lo};
  auto extend = [&](auto&& self, int last) -> void {
    if (block.size() >= 2) {
      // Close the block here: the tail (last, hi) is an independent gap.
      std::vector<std::vector<std::vector<int>>> acc{{block}};
      auto fill = [&](int a, int b) {
        auto parts = interval_partitions(a, b);
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& prefix : acc) {
          for (const auto& p : parts) {
            auto merged = prefix;
            merged.insert(merged.end(), p.begin(), p.end());
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      };
      for (std::size_t i = 0; i + 1 < block.size(); ++i) fill(block[i] + 1, block[i + 1]);
      fill(last + 1, hi);
      out.insert(out.end(), acc.begin(), acc.end());
    }
    for (int nxt = last + 1; nxt < hi; ++nxt) {
      block.push_back(nxt);
      self(self, nxt);
      block.pop_back();
    }
  };
  extend(extend, lo);
  return out;
}

LaurentPolynomial one(Var v) { return LaurentPolynomial::constant(v, Rational(1)); }

LaurentPolynomial loop_value(Var v) {
  return (LaurentPolynomial::variable(Var::Q) - one(Var::Q)).substitute(v);
}

std::vector<int> dart_component_ids(const EmbeddedGraph& g) {
  std::vector<int> comp(g.num_darts(), -1);
  int next = 0;
  for (int s = 0; s < g.num_darts(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : {g.alpha(x), g.sigma(x)}) {
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

EmbeddedGraph strip_counters(const EmbeddedGraph& g) {
  return EmbeddedGraph(g.n_bottom(), g.n_top(), g.alpha(), g.sigma(), g.boundary());
}

std::mutex& reduce_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, ChromaticElement>& reduce_cache() {
  static std::unordered_map<std::string, ChromaticElement> c;
  return c;
}

ChromaticElement reduce_impl(const EmbeddedGraph& g0, Var var);

/// g is connected, has no counters and no interior 2-valent vertices.
ChromaticElement reduce_connected(const EmbeddedGraph& g, Var var) {
  const int n = g.n_bottom();
  if (g.num_darts() == 0) return ChromaticElement::identity(n, var);
  const EmbeddedGraph c = canonicalize(g);
  std::string key = canonical_key(c);
  key.push_back(var_symbol(var));
  {
    std::lock_guard<std::mutex> lock(reduce_mutex());
    auto it = reduce_cache().find(key);
    if (it != reduce_cache().end()) return it->second;
  }
  ChromaticElement result(n, var);
  bool pendant = false;
  for (int x = 0; x < c.num_darts(); ++x) {
    if (!c.is_boundary_dart(x) && c.sigma(x) == x) pendant = true;
  }
  if (!pendant) {
    const auto inner = c.inner_edges();
    if (inner.empty()) {
      const PlanarPartition p = boundary_partition(c);
      if (!p.has_singleton()) result = ChromaticElement::basis(p, var);
    } else {
      int loop = -1;
      for (int x : inner) {
        if (c.is_loop(x)) {
          loop = x;
          break;
        }
      }
      if (loop >= 0) {
        result = reduce_impl(delete_edge(c, loop), var) * loop_value(var);
      } else {
        const int e = inner.front();
        result = reduce_impl(contract_edge(c, e), var) - reduce_impl(delete_edge(c, e), var);
      }
    }
  }
  std::lock_guard<std::mutex> lock(reduce_mutex());
  reduce_cache().emplace(std::move(key), result);
  return result;
}

ChromaticElement reduce_impl(const EmbeddedGraph& g0, Var var) {
  const EmbeddedGraph g = smooth_2valent(g0);
  LaurentPolynomial factor = loop_value(var).pow(g.free_loops());
  const ComponentSplit parts = split_components(strip_counters(g));
  ChromaticElement result = reduce_connected(parts.attached, var);
  for (const auto& closed : parts.closed) {
    const ChromaticElement scalar = reduce_connected(closed, var);
    factor *= scalar.coefficient(PlanarPartition{});
    if (factor.is_zero()) break;
  }
  return result * factor;
}

}  // namespace

// ---------------------------------------------------------------------------
// PlanarPartition

std::string PlanarPartition::str() const {
  if (blocks.empty()) return "{}";
  std::ostringstream out;
  for (const auto& b : blocks) {
    out << "{";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i] + 1;
    out << "}";
  }
  return out.str();
}

int PlanarPartition::star_edges() const {
  int e = 0;
  for (const auto& b : blocks) e += b.size() == 2 ? 1 : static_cast<int>(b.size());
  return e;
}

bool PlanarPartition::has_singleton() const {
  return std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

PlanarPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
  std::vector<char> seen(2 * n, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block in partition");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 0 || x >= 2 * n) throw std::invalid_argument("partition point out of range");
      if (seen[x]) throw std::invalid_argument("partition point listed twice");
      seen[x] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw std::invalid_argument("partition does not cover every boundary point");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j && blocks_cross(blocks[i], blocks[j])) throw std::invalid_argument("partition is crossing");
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return PlanarPartition{n, std::move(blocks)};
}

PlanarPartition parse_partition(std::string_view text, int n) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (text.substr(i) == "{}") return make_partition(n, {});
  while (i < text.size()) {
    skip();
    if (i >= text.size()) break;
    if (text[i] != '{') throw ParseError("expected '{'", 0, i + 1);
    ++i;
    std::vector<int> block;
    while (true) {
      skip();
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected a point number", 0, start + 1);
      block.push_back(std::stoi(std::string(text.substr(start, i - start))) - 1);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or '}'", 0, i + 1);
    }
    blocks.push_back(std::move(block));
  }
  try {
    return make_partition(n, std::move(blocks));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what(), 0, 1);
  }
}

std::vector<PlanarPartition> enumerate_basis(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<PlanarPartition> out;
  for (auto& blocks : interval_partitions(0, 2 * n)) out.push_back(make_partition(n, std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_planar_partitions_brute_force(int n) {
  const int points = 2 * n;
  std::vector<int> label(points, 0);  // restricted growth string
  std::size_t count = 0;
  while (true) {
    const int blocks = points ? *std::max_element(label.begin(), label.end()) + 1 : 0;
    std::vector<std::vector<int>> groups(blocks);
    for (int p = 0; p < points; ++p) groups[label[p]].push_back(p);
    bool ok = true;
    for (const auto& g : groups) ok = ok && g.size() >= 2;
    for (int i = 0; ok && i < blocks; ++i) {
      for (int j = 0; ok && j < blocks; ++j) ok = i == j || !blocks_cross(groups[i], groups[j]);
    }
    if (ok) ++count;
    // Next restricted growth string.
    int i = points - 1;
    while (i > 0) {
      const int prefix_max = *std::max_element(label.begin(), label.begin() + i);
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
        break;
      }
      --i;
    }
    if (i <= 0) break;
  }
  return count;
}

EmbeddedGraph basis_graph(const PlanarPartition& p) {
  GraphBuilder b(p.n, p.n);
  for (const auto& block : p.blocks) {
    if (block.size() == 1) throw std::invalid_argument("singleton blocks have no basis drawing");
    if (block.size() == 2) {
      b.connect(b.boundary(block[0]), b.boundary(block[1]));
      continue;
    }
    const int v = b.add_vertex(static_cast<int>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i) b.connect(b.port(v, static_cast<int>(i)), b.boundary(block[i]));
  }
  return b.build();
}

PlanarPartition boundary_partition(const EmbeddedGraph& g) {
  const auto comp = dart_component_ids(g);
  std::map<int, std::vector<int>> groups;
  for (int p = 0; p < g.num_boundary(); ++p) groups[comp[g.boundary()[p]]].push_back(p);
  std::vector<std::vector<int>> blocks;
  for (auto& [c, pts] : groups) blocks.push_back(std::move(pts));
  if (g.n_bottom() != g.n_top()) throw std::invalid_argument("partition needs equal top and bottom counts");
  return make_partition(g.n_bottom(), std::move(blocks));
}

PlanarPartition reflect(const PlanarPartition& p) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> r;
    for (int x : b) r.push_back(2 * p.n - 1 - x);
    blocks.push_back(std::move(r));
  }
  return make_partition(p.n, std::move(blocks));
}

// ---------------------------------------------------------------------------
// ChromaticElement

ChromaticElement ChromaticElement::basis(const PlanarPartition& p, Var var) {
  ChromaticElement e(p.n, var);
  e.add(p, one(var));
  return e;
}

ChromaticElement ChromaticElement::identity(int n, Var var) {
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < n; ++j) blocks.push_back({j, 2 * n - 1 - j});
  return basis(make_partition(n, std::move(blocks)), var);
}

LaurentPolynomial ChromaticElement::coefficient(const PlanarPartition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentPolynomial(var_) : it->second;
}

void ChromaticElement::add(const PlanarPartition& p, const LaurentPolynomial& c) {
  if (p.n != n_) throw std::invalid_argument("partition size does not match the element");
  if (c.var() != var_ && !c.is_constant()) throw VariableMismatch(var_, c.var());
  if (c.is_zero()) return;
  const LaurentPolynomial cc = c.var() == var_ ? c : LaurentPolynomial::constant(var_, c.coefficient(0));
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, cc);
    return;
  }
  it->second += cc;
  if (it->second.is_zero()) terms_.erase(it);
}

void ChromaticElement::check(const ChromaticElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("chromatic elements have different strand counts");
  if (o.var_ != var_) throw VariableMismatch(var_, o.var_);
}

ChromaticElement& ChromaticElement::operator+=(const ChromaticElement& o) {
  check(o);
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

ChromaticElement& ChromaticElement::operator-=(const ChromaticElement& o) {
  check(o);
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

ChromaticElement& ChromaticElement::operator*=(const LaurentPolynomial& c) {
  if (c.var() != var_ && !c.is_constant()) throw VariableMismatch(var_, c.var());
  const LaurentPolynomial cc = c.var() == var_ ? c : LaurentPolynomial::constant(var_, c.coefficient(0));
  if (cc.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= cc;
  return *this;
}

ChromaticElement ChromaticElement::substitute(Var target) const {
  ChromaticElement out(n_, target);
  for (const auto& [p, c] : terms_) out.add(p, c.substitute(target));
  return out;
}

std::string ChromaticElement::str() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  for (const auto& [p, c] : terms_) out << "term " << p.str() << " : " << c.str() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Algebra operations

ChromaticElement reduce(const EmbeddedGraph& g, Var var) {
  if (g.n_bottom() != g.n_top()) throw std::invalid_argument("reduce needs n points on top and bottom");
  return reduce_impl(g, var);
}

void clear_reduce_cache() {
  std::lock_guard<std::mutex> lock(reduce_mutex());
  reduce_cache().clear();
}

ChromaticElement psi_expansion(const EmbeddedGraph& g, int edge_limit) {
  if (g.n_bottom() != g.n_top()) throw std::invalid_argument("psi needs n points on top and bottom");
  const auto vertex = g.vertex_of_darts();
  const int nv = g.num_dart_vertices();
  std::vector<std::pair<int, int>> outer;
  std::vector<std::pair<int, int>> inner;
  for (int x = 0; x < g.num_darts(); ++x) {
    if (x > g.alpha(x)) continue;
    (g.is_inner_edge(x) ? inner : outer).emplace_back(vertex[x], vertex[g.alpha(x)]);
  }
  const int m = static_cast<int>(inner.size());
  if (m > edge_limit) throw LimitExceeded("psi expansion limited to " + std::to_string(edge_limit) + " inner edges");
  const int total_edges = g.num_edges();
  // exponent counts per partition: sign folded in.
  std::map<PlanarPartition, std::map<int, long>> acc;
  std::vector<int> parent(nv);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int cycles = 0;
    auto add_edge = [&](std::pair<int, int> e) {
      const int a = find(e.first);
      const int b = find(e.second);
      if (a == b) {
        ++cycles;
      } else {
        parent[a] = b;
      }
    };
    for (auto e : outer) add_edge(e);
    int chosen = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        add_edge(inner[i]);
        ++chosen;
      }
    }
    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < g.num_boundary(); ++p) groups[find(vertex[g.boundary()[p]])].push_back(p);
    std::vector<std::vector<int>> blocks;
    bool singleton = false;
    for (auto& [r, pts] : groups) {
      if (pts.size() == 1) singleton = true;
      blocks.push_back(std::move(pts));
    }
    if (singleton) continue;
    const long sign = (total_edges - chosen) % 2 ? -1 : 1;
    acc[make_partition(g.n_bottom(), std::move(blocks))][cycles] += sign;
  }
  ChromaticElement out(g.n_bottom(), Var::Q);
  const LaurentPolynomial loops = loop_value(Var::Q).pow(g.free_loops());
  for (const auto& [p, exps] : acc) {
    LaurentPolynomial::Terms t;
    for (auto [e, c] : exps) {
      if (c != 0) t[e] = Rational(c);
    }
    out.add(p, LaurentPolynomial(Var::Q, std::move(t)) * loops);
  }
  return out;
}

ChromaticElement multiply(const ChromaticElement& a, const ChromaticElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("cannot multiply elements with different strand counts");
  if (a.var() != b.var()) throw VariableMismatch(a.var(), b.var());
  ChromaticElement out(a.n(), a.var());
  for (const auto& [pa, ca] : a.terms()) {
    const EmbeddedGraph ga = basis_graph(pa);
    for (const auto& [pb, cb] : b.terms()) {
      out += reduce(stack(ga, basis_graph(pb)), a.var()) * (ca * cb);
    }
  }
  return out;
}

ChromaticElement reflect(const ChromaticElement& a) {
  ChromaticElement out(a.n(), a.var());
  for (const auto& [p, c] : a.terms()) out.add(reflect(p), c);
  return out;
}

LaurentPolynomial graph_trace(const EmbeddedGraph& g, Var var) {
  const LaurentPolynomial t = normalized_dual_chromatic(closure(g));
  return var == Var::Q ? t : t.substitute(var);
}

LaurentPolynomial trace(const ChromaticElement& a) {
  LaurentPolynomial out(a.var());
  for (const auto& [p, c] : a.terms()) out += c * graph_trace(basis_graph(p), a.var());
  return out;
}

LaurentPolynomial inner_product(const ChromaticElement& a, const ChromaticElement& b) {
  return trace(multiply(a, reflect(b)));
}

std::vector<std::vector<LaurentPolynomial>> gram_polynomials(int n, int jobs) {
  const auto basis = enumerate_basis(n);
  const int k = static_cast<int>(basis.size());
  std::vector<EmbeddedGraph> graphs;
  std::vector<EmbeddedGraph> reflected;
  for (const auto& p : basis) {
    graphs.push_back(basis_graph(p));
    reflected.push_back(reflect(graphs.back()));
  }
  std::vector<std::vector<LaurentPolynomial>> out(k, std::vector<LaurentPolynomial>(k, LaurentPolynomial(Var::Q)));
  parallel_for(static_cast<std::uint64_t>(k) * k, jobs, [&](std::uint64_t idx) {
    const int i = static_cast<int>(idx / k);
    const int j = static_cast<int>(idx % k);
    if (j < i) return;
    out[i][j] = graph_trace(stack(graphs[i], reflected[j]));
  });
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) out[i][j] = out[j][i];
  }
  return out;
}

Eigen::MatrixXd gram_matrix(int n, double Q, int jobs) {
  const auto polys = gram_polynomials(n, jobs);
  const int k = static_cast<int>(polys.size());
  Eigen::MatrixXd m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = polys[i][j].eval_real(Q);
  }
  return m;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// Trivalent relations

EmbeddedGraph h_graph() {
  GraphBuilder b(2, 2);
  const int u = b.add_vertex(3);
  const int v = b.add_vertex(3);
  b.connect(b.port(u, 0), b.bottom(0));
  b.connect(b.port(u, 1), b.port(v, 2));
  b.connect(b.port(u, 2), b.top(0));
  b.connect(b.port(v, 0), b.bottom(1));
  b.connect(b.port(v, 1), b.top(1));
  return b.build();
}

EmbeddedGraph i_graph() {
  GraphBuilder b(2, 2);
  const int u = b.add_vertex(3);
  const int v = b.add_vertex(3);
  b.connect(b.port(u, 0), b.bottom(0));
  b.connect(b.port(u, 1), b.bottom(1));
  b.connect(b.port(u, 2), b.port(v, 0));
  b.connect(b.port(v, 1), b.top(1));
  b.connect(b.port(v, 2), b.top(0));
  return b.build();
}

EmbeddedGraph tadpole_graph() {
  GraphBuilder b(1, 1);
  const int u = b.add_vertex(3);
  const int w = b.add_vertex(3);
  b.connect(b.port(u, 0), b.bottom(0));
  b.connect(b.port(u, 1), b.port(w, 0));
  b.connect(b.port(u, 2), b.top(0));
  b.connect(b.port(w, 1), b.port(w, 2));
  return b.build();
}

std::vector<Residual> verify_trivalent_relations() {
  const ChromaticElement id = ChromaticElement::identity(2);
  const ChromaticElement cupcap = ChromaticElement::basis(make_partition(2, {{0, 1}, {2, 3}}));
  std::vector<Residual> out;
  out.push_back({"H + id - I - E", reduce(h_graph()) + id - reduce(i_graph()) - cupcap});
  out.push_back({"tadpole", reduce(tadpole_graph())});
  return out;
}

}  // namespace chromalg

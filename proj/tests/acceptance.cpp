// Acceptance run: one line per criterion with elapsed time and limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "chromalg/bmw.hpp"
#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/potts.hpp"
#include "chromalg/random_graphs.hpp"
#include "chromalg/temperley_lieb.hpp"

using namespace chromalg;

namespace {

constexpr double kGramTolerance = 1e-9;
constexpr unsigned long long kSeed = 20240611ULL;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

LaurentPolynomial Qpoly(const char* text) { return parse_polynomial(text, Var::Q); }

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

/// Attaches a pendant edge at the corner after `dart`.
EmbeddedGraph add_pendant(const EmbeddedGraph& g, int dart) {
  std::vector<int> alpha = g.alpha();
  std::vector<int> sigma = g.sigma();
  const int a = g.num_darts();
  const int b = a + 1;
  alpha.push_back(b);
  alpha.push_back(a);
  sigma.push_back(sigma[dart]);
  sigma.push_back(b);
  sigma[dart] = a;
  return EmbeddedGraph(0, 0, alpha, sigma, {}, g.free_loops(), g.isolated_vertices());
}

bool has_bridge(const EmbeddedGraph& g) {
  std::vector<int> face(g.num_darts(), -1);
  int id = 0;
  for (int s = 0; s < g.num_darts(); ++s) {
    if (face[s] >= 0) continue;
    for (int x = s; face[x] < 0; x = g.sigma(g.alpha(x))) face[x] = id;
    ++id;
  }
  for (int x = 0; x < g.num_darts(); ++x) {
    if (face[x] == face[g.alpha(x)]) return true;
  }
  return false;
}

Outcome theta_trace() {
  Outcome o;
  const auto a = ChromaticElement::basis(make_partition(3, {{0, 1, 2}, {3, 4, 5}}));
  const auto b = ChromaticElement::identity(3);
  const auto value = inner_product(a, b);
  o.require(value == Qpoly("Q^2 - 3*Q + 2"), "<a,b> = " + value.str());
  const auto closed = smooth_2valent(closure(basis_graph(make_partition(3, {{0, 1, 2}, {3, 4, 5}}))));
  const auto m = to_multigraph(closed);
  o.require(m.num_vertices == 2 && m.edges.size() == 3, "closure is not a theta graph");
  o.note = o.ok ? "<a,b> = " + value.str() : o.note;
  return o;
}

Outcome diagram_commutes() {
  Outcome o;
  int cases = 0;
  auto check = [&](const EmbeddedGraph& g, const std::string& label) {
    const auto lhs = tl_trace(phi(g));
    const auto rhs = trace(reduce(g)).substitute(Var::d);
    o.require(lhs == rhs, label + ": " + lhs.str() + " != " + rhs.str());
    ++cases;
  };
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_basis(n)) check(basis_graph(p), "basis " + p.str());
  }
  Rng rng(kSeed);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_rectangle_graph(1 + i % 3, 5, rng);
    o.require(g.num_inner_edges() <= 5, "random graph has too many inner edges");
    check(g, "random #" + std::to_string(i + 1));
  }
  if (o.ok) o.note = std::to_string(cases) + " diagrams";
  return o;
}

Outcome bmw_relations() {
  Outcome o;
  int count = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& r : verify_bmw_relations(n)) {
      o.require(r.ok(), "n=" + std::to_string(n) + " " + r.name);
      ++count;
    }
  }
  if (o.ok) o.note = std::to_string(count) + " residuals zero";
  return o;
}

Outcome so3_cross_validation() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> links{
      {"unknot", "U\n"},
      {"2-unlink", "U\nU\n"},
      {"Hopf", "X 1 3 2 4\nX 3 1 4 2\n"},
      {"trefoil", "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"},
      {"figure-eight", "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n"},
  };
  for (const auto& [name, pd] : links) {
    const auto link = parse_pd(pd);
    const auto chromatic = so3_kauffman_via_chromatic(link);
    const auto cabled = so3_kauffman_via_cabling(link);
    o.require(chromatic.substitute(Var::A) == cabled, name + ": pipelines differ");
    if (name == "unknot") o.require(chromatic == parse_polynomial("q + 1 + q^-1", Var::q), "unknot value");
  }
  if (o.ok) o.note = "5 links agree in A";
  return o;
}

Outcome basis_and_rank() {
  Outcome o;
  const std::size_t expected[] = {1, 3, 15};
  for (int n = 1; n <= 3; ++n) {
    const std::size_t size = enumerate_basis(n).size();
    o.require(size == expected[n - 1], "basis size for n=" + std::to_string(n));
    o.require(size == count_planar_partitions_brute_force(n), "brute force count for n=" + std::to_string(n));
    o.require(phi_rank(n, Rational(7, 2)) == static_cast<int>(size), "phi rank for n=" + std::to_string(n));
  }
  if (o.ok) o.note = "sizes 1, 3, 15; full rank at d=7/2";
  return o;
}

Outcome psi_consistency() {
  Outcome o;
  Rng rng(kSeed + 6);
  int cases = 0;
  int attempts = 0;
  while (cases < 50 && attempts < 2000) {
    ++attempts;
    const auto g = random_rectangle_graph(1 + attempts % 3, 6, rng);
    std::vector<int> edges;
    for (int e : g.inner_edges()) {
      if (!g.is_loop(e)) edges.push_back(e);
    }
    if (edges.empty()) continue;
    const int e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    const auto psi = psi_expansion(g);
    o.require(psi == psi_expansion(contract_edge(g, e)) - psi_expansion(delete_edge(g, e)),
              "contraction-deletion fails on case " + std::to_string(cases + 1));
    const int outer = g.num_edges() - g.num_inner_edges();
    const auto reduced = reduce(g);
    o.require(psi == (outer % 2 ? reduced * Qpoly("-1") : reduced),
              "psi and reduce differ on case " + std::to_string(cases + 1));
    ++cases;
  }
  o.require(cases == 50, "could not generate 50 cases");
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_basis(n)) {
      const auto b = ChromaticElement::basis(p);
      o.require(psi_expansion(basis_graph(p)) == (p.star_edges() % 2 ? b * Qpoly("-1") : b), "basis sign " + p.str());
    }
  }
  if (o.ok) o.note = "50 cases + 19 basis signs";
  return o;
}

Outcome gram_positivity() {
  Outcome o;
  double worst_ratio = 1e300;
  for (int n = 1; n <= 3; ++n) {
    for (double Q : {4.0, 4.5, 5.0}) {
      const auto ev = symmetric_eigenvalues(gram_matrix(n, Q));
      worst_ratio = std::min(worst_ratio, ev.minCoeff() / ev.maxCoeff());
      o.require(ev.minCoeff() > kGramTolerance * ev.maxCoeff(),
                "n=" + std::to_string(n) + " Q=" + std::to_string(Q) + " not positive definite");
    }
    for (int k : {5, 6}) {
      const double Q = 2 + 2 * std::cos(2 * M_PI / k);
      const auto ev = symmetric_eigenvalues(gram_matrix(n, Q));
      o.require(ev.minCoeff() >= -kGramTolerance * ev.maxCoeff(),
                "n=" + std::to_string(n) + " Q=2+2cos(2pi/" + std::to_string(k) + ") has a negative eigenvalue");
    }
  }
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "tol %.0e; min/max at Q>=4 is %.4f", kGramTolerance, worst_ratio);
    o.note = buf;
  }
  return o;
}

Outcome potts_oracle() {
  Outcome o;
  for (const GridSpec grid : {GridSpec{1, 2}, GridSpec{2, 2}, GridSpec{2, 3}, GridSpec{3, 3}}) {
    const std::string tag = std::to_string(grid.rows) + "x" + std::to_string(grid.cols);
    for (int Q = 1; Q <= 3; ++Q) {
      const auto nets = partition_function_nets(grid, Q);
      o.require(nets == partition_function_spins(grid, Q), tag + " Q=" + std::to_string(Q) + " nets != spins");
      o.require(nets.coefficient(0) == chromatic_delcon(grid.graph()).evaluate(Rational(Q)),
                tag + " Q=" + std::to_string(Q) + " x^0 != chromatic");
    }
  }
  if (o.ok) o.note = "4 grids x 3 values of Q";
  return o;
}

Outcome chromatic_oracles() {
  Outcome o;
  Rng rng(kSeed + 9);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_multigraph(7, 8, true, rng);
    o.require(g.edges.size() <= 8, "multigraph too large");
    o.require(chromatic_delcon(g) == chromatic_ranksum(g), "delcon != ranksum on case " + std::to_string(i + 1));
    auto looped = g;
    if (looped.num_vertices == 0) looped.num_vertices = 1;
    looped.edges.emplace_back(0, 0);
    o.require(chromatic_delcon(looped).is_zero(), "loop graph is nonzero");
    o.require(chromatic_ranksum(looped).is_zero(), "loop graph rank sum is nonzero");
  }
  int bridged = 0;
  for (int i = 0; i < 60; ++i) {
    auto g = random_closed_graph(7, rng);
    if (i % 2 == 0 && g.num_darts() > 0) g = add_pendant(g, i % g.num_darts());
    const bool bridge = has_bridge(g);
    const auto dual_chi = dual_chromatic(g);
    if (bridge) {
      ++bridged;
      o.require(dual_chi.is_zero(), "bridge graph has nonzero dual chromatic polynomial");
    } else {
      o.require(!dual_chi.is_zero(), "bridgeless graph has zero dual chromatic polynomial");
    }
  }
  o.require(bridged >= 30, "too few bridge graphs generated");
  if (o.ok) o.note = "100 multigraphs; " + std::to_string(bridged) + " bridge graphs";
  return o;
}

Outcome trivalent() {
  Outcome o;
  for (const auto& r : verify_trivalent_relations()) o.require(r.ok(), r.name);
  if (o.ok) o.note = "both residuals zero";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "theta-graph trace", 1, theta_trace},
      {2, "trace diagram commutes", 60, diagram_commutes},
      {3, "BMW relations", 60, bmw_relations},
      {4, "SO(3) Kauffman cross-validation", 300, so3_cross_validation},
      {5, "basis size and phi injectivity", 60, basis_and_rank},
      {6, "psi consistency", 60, psi_consistency},
      {7, "Gram positivity", 60, gram_positivity},
      {8, "Potts nets vs spins", 120, potts_oracle},
      {9, "chromatic oracles", 60, chromatic_oracles},
      {10, "trivalent relations", 1, trivalent},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && elapsed >= c.limit_seconds) {
      o.ok = false;
      o.note = "over time limit";
    }
    if (!o.ok) ++failed;
    std::printf("%s [%2d] %-34s %8s s (limit %g s)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                seconds_text(elapsed).c_str(), c.limit_seconds, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "chromalg/embedded_graph.hpp"
#include "chromalg/laurent.hpp"

namespace chromalg {

/// Noncrossing partition of the 2n boundary points (0-based circular
/// indices). Blocks are sorted internally and among themselves.
struct PlanarPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  /// 1-based text form, e.g. "{1,4}{2,3}". The empty partition is "{}".
  std::string str() const;
  /// Number of edges in the star drawing: k for a block of size k >= 3, 1 for a pair.
  int star_edges() const;
  bool has_singleton() const;

  friend auto operator<=>(const PlanarPartition&, const PlanarPartition&) = default;
  friend bool operator==(const PlanarPartition&, const PlanarPartition&) = default;
};

/// Sorts the blocks and checks the partition covers 0..2n-1 without crossings.
PlanarPartition make_partition(int n, std::vector<std::vector<int>> blocks);
/// Parses the 1-based text form.
PlanarPartition parse_partition(std::string_view text, int n);

/// Noncrossing partitions of 2n points without singletons, in a fixed order.
std::vector<PlanarPartition> enumerate_basis(int n);

/// Independent count: all set partitions of 2n points filtered for
/// noncrossing blocks of size >= 2.
std::size_t count_planar_partitions_brute_force(int n);

/// A block of size 2 is an edge; larger blocks are stars on one interior vertex.
EmbeddedGraph basis_graph(const PlanarPartition& p);

/// Partition of a graph without inner edges (components through the boundary).
/// Singleton blocks are kept.
PlanarPartition boundary_partition(const EmbeddedGraph& g);

PlanarPartition reflect(const PlanarPartition& p);

/// Linear combination of basis diagrams with Laurent coefficients. The
/// coefficient variable is Q by default; BMW images use q.
class ChromaticElement {
 public:
  using Terms = std::map<PlanarPartition, LaurentPolynomial>;

  ChromaticElement(int n = 0, Var var = Var::Q) : n_(n), var_(var) {}
  static ChromaticElement basis(const PlanarPartition& p, Var var = Var::Q);
  static ChromaticElement identity(int n, Var var = Var::Q);

  int n() const { return n_; }
  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPolynomial coefficient(const PlanarPartition& p) const;

  void add(const PlanarPartition& p, const LaurentPolynomial& c);
  ChromaticElement& operator+=(const ChromaticElement& o);
  ChromaticElement& operator-=(const ChromaticElement& o);
  ChromaticElement& operator*=(const LaurentPolynomial& c);
  friend ChromaticElement operator+(ChromaticElement a, const ChromaticElement& b) { return a += b; }
  friend ChromaticElement operator-(ChromaticElement a, const ChromaticElement& b) { return a -= b; }
  friend ChromaticElement operator*(ChromaticElement a, const LaurentPolynomial& c) { return a *= c; }
  friend ChromaticElement operator*(const LaurentPolynomial& c, ChromaticElement a) { return a *= c; }
  friend bool operator==(const ChromaticElement&, const ChromaticElement&) = default;

  /// Coefficients rewritten in another variable.
  ChromaticElement substitute(Var target) const;
  /// One "term <partition> : <poly>" line per basis diagram.
  std::string str() const;

 private:
  void check(const ChromaticElement& o) const;

  int n_;
  Var var_;
  Terms terms_;
};

/// Rewrites a rectangle graph into the basis using the defining relations:
/// contraction-deletion on inner edges, loops and free loops give (Q-1),
/// interior 1-valent vertices give 0. Memoized on the canonical map form.
ChromaticElement reduce(const EmbeddedGraph& g, Var var = Var::Q);
void clear_reduce_cache();

/// State sum over subsets of inner edges; partitions with a singleton block
/// are dropped (they vanish in the algebra).
ChromaticElement psi_expansion(const EmbeddedGraph& g, int edge_limit = 24);

/// a below b, reduced.
ChromaticElement multiply(const ChromaticElement& a, const ChromaticElement& b);
ChromaticElement reflect(const ChromaticElement& a);

/// Q^-1 times the chromatic polynomial of the dual of the closure, extended
/// linearly, in the element's variable.
LaurentPolynomial trace(const ChromaticElement& a);
/// Trace of a single rectangle graph.
LaurentPolynomial graph_trace(const EmbeddedGraph& g, Var var = Var::Q);
LaurentPolynomial inner_product(const ChromaticElement& a, const ChromaticElement& b);

/// Symbolic Gram matrix on enumerate_basis(n): entry (i, j) = <b_i, b_j>.
std::vector<std::vector<LaurentPolynomial>> gram_polynomials(int n, int jobs = 1);
Eigen::MatrixXd gram_matrix(int n, double Q, int jobs = 1);
/// Ascending eigenvalues of a symmetric matrix.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m);

/// Diagrams used by the trivalent checks (n = 2 unless noted).
EmbeddedGraph h_graph();        // two vertical strands joined by a horizontal edge
EmbeddedGraph i_graph();        // two horizontal caps joined by a vertical edge
EmbeddedGraph tadpole_graph();  // strand with a loop attached by an edge (n = 1)

struct Residual {
  std::string name;
  ChromaticElement value;
  bool ok() const { return value.is_zero(); }
};

/// H + id - I - E in C_2 and the tadpole in C_1; both should vanish.
std::vector<Residual> verify_trivalent_relations();

}  // namespace chromalg

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chromalg/embedded_graph.hpp"
#include "chromalg/laurent.hpp"

namespace chromalg {

/// Noncrossing perfect matching of the 2m boundary points of a TL_m diagram,
/// stored as mate[p] in the circular order used by EmbeddedGraph.
struct TLDiagram {
  int m = 0;
  std::vector<int> mate;

  static TLDiagram identity(int m);
  /// Cup-cap at strands i, i+1 (1-based i).
  static TLDiagram cupcap(int i, int m);

  /// 1-based pair list, e.g. "(1,4)(2,3)".
  std::string str() const;

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;
  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
};

/// Checks the matching is a noncrossing involution without fixed points.
TLDiagram make_tl_diagram(int m, std::vector<int> mate);
TLDiagram parse_tl_diagram(std::string_view text, int m);
/// All noncrossing perfect matchings of 2m points, ordered.
std::vector<TLDiagram> enumerate_tl_diagrams(int m);

/// a below b; returns the composite and the number of closed middle loops.
std::pair<TLDiagram, int> compose(const TLDiagram& a, const TLDiagram& b);
/// Number of loops in the closure (top j joined to bottom j).
int closure_loops(const TLDiagram& a);

class TLElement {
 public:
  using Terms = std::map<TLDiagram, LaurentPolynomial>;

  explicit TLElement(int m = 0) : m_(m) {}
  static TLElement basis(const TLDiagram& t, const LaurentPolynomial& c);
  static TLElement identity(int m);

  int m() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPolynomial coefficient(const TLDiagram& t) const;

  void add(const TLDiagram& t, const LaurentPolynomial& c);
  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  TLElement& operator*=(const LaurentPolynomial& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(TLElement a, const LaurentPolynomial& c) { return a *= c; }
  friend TLElement operator*(const LaurentPolynomial& c, TLElement a) { return a *= c; }
  friend bool operator==(const TLElement&, const TLElement&) = default;

  std::string str() const;

 private:
  int m_;
  Terms terms_;
};

TLElement tl_multiply(const TLElement& a, const TLElement& b);
LaurentPolynomial tl_trace(const TLElement& a);

/// (1/d) * cupcap at strands i, i+1 (1-based).
TLElement generator_e(int i, int m);
/// identity - (1/d) * cupcap at strands position, position+1 (1-based).
TLElement jones_wenzl_p2(int position, int m);

/// Image in TL_2n of a rectangle graph: every edge becomes P_2 and an r-valent
/// interior vertex carries d^((r-2)/2). Subsets are summed on `jobs` threads.
TLElement phi(const EmbeddedGraph& g, int jobs = 1, int edge_limit = 24);

/// Rank of {phi(b) : b in enumerate_basis(n)} with d set to `d_value`.
int phi_rank(int n, const Rational& d_value);

/// Rank of a matrix of rationals by exact elimination.
int exact_rank(std::vector<std::vector<Rational>> rows);

/// Product over in-range j of (1 + e_2j) times product of (1 + e_2j-1).
/// Generators outside TL_n are dropped (open boundary).
TLElement transfer_matrix(int n);
LaurentPolynomial potts_tl_partition(int n, int m);

}  // namespace chromalg

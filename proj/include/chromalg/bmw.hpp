#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/embedded_graph.hpp"
#include "chromalg/laurent.hpp"

namespace chromalg {

/// PD-coded link diagram. Each crossing lists four arc labels counterclockwise
/// starting from the incoming under-strand; unknots are crossingless circles.
struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  int unknots = 0;

  int num_crossings() const { return static_cast<int>(crossings.size()); }
};

/// Lines "X a b c d" and "U"; '#' starts a comment. Labels are positive and
/// each must occur exactly twice. The crossing graph must be planar.
LinkDiagram parse_pd(std::string_view text);
LinkDiagram read_pd_file(const std::string& path);
std::string write_pd(const LinkDiagram& link);

/// Closed 4-valent map with one vertex per crossing (rotation in PD order).
EmbeddedGraph crossing_graph(const LinkDiagram& link);
/// Components as lists of arc labels; unknots are not included.
std::vector<std::vector<int>> link_components(const LinkDiagram& link);
/// Sign convention: positive when the over-strand runs from d to b, with
/// orientation following increasing labels within a component.
int crossing_sign(const LinkDiagram& link, int crossing);
int writhe(const LinkDiagram& link);

/// Crossings with slots 4c..4c+3; the A-smoothing joins slots (0,1) and
/// (2,3). `partner` joins slots along arcs.
struct BracketDiagram {
  int crossings = 0;
  std::vector<int> partner;
  int free_loops = 0;
};

BracketDiagram to_bracket_diagram(const LinkDiagram& link);

/// Exhaustive 2^c state sum with union-find loop counting. Throws
/// LimitExceeded above `crossing_limit` crossings.
LaurentPolynomial bracket_state_sum(const BracketDiagram& b, int jobs = 1, int crossing_limit = 20);
/// Same value by a frontier sweep over crossings; handles cabled diagrams.
LaurentPolynomial bracket_frontier(const BracketDiagram& b);

/// Kauffman bracket in A, normalized so the empty diagram is 1.
LaurentPolynomial kauffman_bracket(const LinkDiagram& link, int jobs = 1, int crossing_limit = 20);

/// One term of the 3^c expansion: A-smoothings p, B-smoothings n, vertices v.
struct Resolution {
  EmbeddedGraph graph;
  int p = 0;
  int n = 0;
  int v = 0;
};
/// state digit 0 = A-smoothing, 1 = B-smoothing, 2 = 4-valent vertex.
Resolution resolve(const LinkDiagram& link, const std::vector<int>& state);

/// SO(3) Kauffman polynomial in q from chromatic polynomials of duals.
LaurentPolynomial so3_kauffman_via_chromatic(const LinkDiagram& link, int jobs = 1, int crossing_limit = 12);
/// Same invariant in A from the bracket of the 2-cable with P_2 inserted.
LaurentPolynomial so3_kauffman_via_cabling(const LinkDiagram& link, int jobs = 1, int crossing_limit = 8);
/// The 2-cable with a turnback on the first arc of every component in `turnbacks`.
BracketDiagram cable(const LinkDiagram& link, const std::vector<char>& turnbacks);

/// Word in e_i, B_i, B_i^-1 on n strands.
struct TangleWord {
  enum class Kind { E, B, BInv };
  struct Letter {
    Kind kind;
    int index;  // 1-based
  };
  int n = 0;
  std::vector<Letter> letters;

  std::string str() const;
};

/// Tokens "e1", "B2", "B2^-1", separated by spaces; empty means identity.
TangleWord parse_tangle_word(std::string_view text, int n);

/// Image in C_n with coefficients in q: B -> q*id - X + q^-1*E,
/// B^-1 -> q^-1*id - X + q*E, e -> E (the cup-cap diagram).
ChromaticElement bmw_generator(TangleWord::Kind kind, int i, int n);
ChromaticElement resolve_to_chromatic(const TangleWord& word);

/// Joins the rightmost strand of each term and reduces (n -> n-1).
ChromaticElement partial_closure(const ChromaticElement& a);

/// PD code of the closure of a word in B_i, B_i^-1 only.
LinkDiagram braid_closure(const TangleWord& word);

/// Skein, curl, Reidemeister II and III residuals in C_n (n in {2, 3}).
std::vector<Residual> verify_bmw_relations(int n);

}  // namespace chromalg

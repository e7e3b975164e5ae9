#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chromalg {

/// A graph embedded in a rectangle (or, with no boundary points, in the
/// sphere), stored as a combinatorial map.
///
/// Darts are 0..num_darts()-1. alpha pairs darts into edges; sigma is the
/// counterclockwise rotation of darts around each vertex. Boundary points are
/// degree-1 vertices listed in circular counterclockwise order: the n_bottom
/// bottom points left to right, then the n_top top points right to left.
/// Closed curves without vertices and vertices without darts are counters.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  /// Validates every structural invariant including planarity; throws
  /// std::invalid_argument on violation.
  EmbeddedGraph(int n_bottom, int n_top, std::vector<int> alpha, std::vector<int> sigma,
                std::vector<int> boundary, int free_loops = 0, int isolated_vertices = 0);

  int n_bottom() const { return n_bottom_; }
  int n_top() const { return n_top_; }
  int num_boundary() const { return n_bottom_ + n_top_; }
  bool is_closed() const { return num_boundary() == 0; }
  int num_darts() const { return static_cast<int>(alpha_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int free_loops() const { return free_loops_; }
  int isolated_vertices() const { return isolated_; }
  int alpha(int dart) const { return alpha_[dart]; }
  int sigma(int dart) const { return sigma_[dart]; }
  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& boundary() const { return boundary_; }

  /// Circular boundary index of bottom point j / top point j (left to right).
  int bottom_point(int j) const { return j; }
  int top_point(int j) const { return n_bottom_ + n_top_ - 1 - j; }

  bool is_boundary_dart(int dart) const;
  /// Vertex index of every dart; vertices are numbered by first dart.
  std::vector<int> vertex_of_darts() const;
  /// Number of vertices with at least one dart, boundary points included.
  int num_dart_vertices() const;
  /// All vertices, including isolated ones.
  int num_vertices() const { return num_dart_vertices() + isolated_; }
  int degree(int dart) const;
  bool is_loop(int dart) const;
  /// An inner edge has no endpoint on the boundary.
  bool is_inner_edge(int dart) const;
  /// One dart per inner edge (the smaller one), ascending.
  std::vector<int> inner_edges() const;
  int num_inner_edges() const { return static_cast<int>(inner_edges().size()); }

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  void validate() const;

  int n_bottom_ = 0;
  int n_top_ = 0;
  std::vector<int> alpha_;
  std::vector<int> sigma_;
  std::vector<int> boundary_;
  int free_loops_ = 0;
  int isolated_ = 0;
  std::vector<char> boundary_flag_;
};

/// A region of the embedding. In rectangle mode the region outside the
/// rectangle is the outer face and has no graph darts. Components that do not
/// touch a shared outer region sit side by side, so one region may be bounded
/// by several dart orbits.
struct Face {
  std::vector<int> darts;
  bool is_outer = false;
};

std::vector<Face> faces(const EmbeddedGraph& g);

/// Planar dual of a closed graph: one vertex per face, one edge per edge. For
/// a disconnected graph the components are placed side by side.
EmbeddedGraph dual(const EmbeddedGraph& g);

/// Edge operations take either dart of the edge. Edges touching the boundary
/// cannot be deleted or contracted.
EmbeddedGraph delete_edge(const EmbeddedGraph& g, int dart);
EmbeddedGraph contract_edge(const EmbeddedGraph& g, int dart);

/// Joins top point j to bottom point j around the outside of the rectangle.
EmbeddedGraph closure(const EmbeddedGraph& g);
/// Joins the rightmost top and bottom points, leaving n-1 strands.
EmbeddedGraph partial_closure_right(const EmbeddedGraph& g);
/// Vertical stacking: `lower`'s top points are glued to `upper`'s bottom points.
EmbeddedGraph stack(const EmbeddedGraph& lower, const EmbeddedGraph& upper);
/// Reflection in a horizontal line.
EmbeddedGraph reflect(const EmbeddedGraph& g);
/// Disjoint union of two closed graphs, side by side.
EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b);

/// Removes interior 2-valent vertices, merging their edges.
EmbeddedGraph smooth_2valent(const EmbeddedGraph& g);
EmbeddedGraph delete_isolated(const EmbeddedGraph& g);

/// V - E + F on the sphere closure (free loops count as one edge and one
/// vertex each); equals 1 + #components for a valid map.
int euler_characteristic(const EmbeddedGraph& g);
int num_components(const EmbeddedGraph& g);

/// Splits a rectangle graph into the part attached to the boundary and the
/// closed connected components; free loops and isolated vertices are counted.
struct ComponentSplit {
  EmbeddedGraph attached;
  std::vector<EmbeddedGraph> closed;
  int free_loops = 0;
  int isolated_vertices = 0;
};
ComponentSplit split_components(const EmbeddedGraph& g);

/// Canonical relabeling: equal for two maps iff they are isomorphic by an
/// orientation-preserving map fixing every boundary point. Closed components
/// are minimized over all root darts.
EmbeddedGraph canonicalize(const EmbeddedGraph& g);
std::string canonical_key(const EmbeddedGraph& g);

/// Abstract multigraph (embedding forgotten). Boundary points are ordinary
/// vertices; free loops have no abstract form and are rejected.
struct Multigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
Multigraph to_multigraph(const EmbeddedGraph& g);

/// Incremental construction from vertices with ordered (counterclockwise)
/// ports. Boundary points are pre-created single-port vertices.
class GraphBuilder {
 public:
  struct Port {
    int vertex;
    int index;
  };

  GraphBuilder(int n_bottom, int n_top);
  int add_vertex(int degree);
  Port port(int vertex, int index) const { return {vertex, index}; }
  Port boundary(int circular_index) const;
  Port bottom(int j) const { return boundary(j); }
  Port top(int j) const { return boundary(n_bottom_ + n_top_ - 1 - j); }
  void connect(Port a, Port b);
  void add_free_loops(int k) { free_loops_ += k; }
  void add_isolated(int k) { isolated_ += k; }
  EmbeddedGraph build() const;

 private:
  int n_bottom_;
  int n_top_;
  std::vector<int> degree_;
  std::vector<int> mate_;  // flattened port id of the mate, or -1
  std::vector<int> first_port_;
  int free_loops_ = 0;
  int isolated_ = 0;
};

/// Line-oriented text format:
///   n_bottom N / n_top N / darts D / alpha a b (one per edge) /
///   sigma d1 d2 ... (one per vertex, counterclockwise) / boundary d0 ... /
///   free_loops K / isolated K.  '#' starts a comment.
/// Writing is canonical: write(read(write(g))) == write(g).
EmbeddedGraph read_graph(std::istream& in);
EmbeddedGraph read_graph_file(const std::string& path);
EmbeddedGraph parse_graph(const std::string& text);
std::string write_graph(const EmbeddedGraph& g);

}  // namespace chromalg

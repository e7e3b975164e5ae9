#include "chromalg/temperley_lieb.hpp"

#include <algorithm>
#include <sstream>

#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/errors.hpp"
#include "chromalg/parallel.hpp"

namespace chromalg {

namespace {

LaurentPolynomial d_one() { return LaurentPolynomial::constant(Var::d, Rational(1)); }

void interval_matchings(int lo, int hi, std::vector<int>& mate, std::vector<std::vector<int>>& out) {
  if (lo >= hi) {
    out.push_back(mate);
    return;
  }
  // Pair lo with lo+1, lo+3, ...; the inside and the rest are independent.
  for (int partner = lo + 1; partner < hi; partner += 2) {
    mate[lo] = partner;
    mate[partner] = lo;
    std::vector<std::vector<int>> inside;
    interval_matchings(lo + 1, partner, mate, inside);
    for (auto& in : inside) {
      std::vector<int> tmp = in;
      interval_matchings(partner + 1, hi, tmp, out);
    }
  }
}

struct PhiAccumulator {
  std::map<std::vector<int>, std::map<int, long>> terms;
  PhiAccumulator& operator+=(const PhiAccumulator& o) {
    for (const auto& [m, exps] : o.terms) {
      auto& dst = terms[m];
      for (auto [e, c] : exps) dst[e] += c;
    }
    return *this;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Diagrams

TLDiagram TLDiagram::identity(int m) {
  std::vector<int> mate(2 * m);
  for (int j = 0; j < m; ++j) {
    mate[j] = 2 * m - 1 - j;
    mate[2 * m - 1 - j] = j;
  }
  return TLDiagram{m, std::move(mate)};
}

TLDiagram TLDiagram::cupcap(int i, int m) {
  if (i < 1 || i >= m) throw std::out_of_range("cup-cap index must satisfy 1 <= i <= m-1");
  TLDiagram t = identity(m);
  const int b0 = i - 1;
  const int b1 = i;
  const int t0 = 2 * m - 1 - b0;
  const int t1 = 2 * m - 1 - b1;
  t.mate[b0] = b1;
  t.mate[b1] = b0;
  t.mate[t0] = t1;
  t.mate[t1] = t0;
  return t;
}

std::string TLDiagram::str() const {
  if (mate.empty()) return "()";
  std::ostringstream out;
  for (int p = 0; p < 2 * m; ++p) {
    if (p < mate[p]) out << "(" << p + 1 << "," << mate[p] + 1 << ")";
  }
  return out.str();
}

TLDiagram make_tl_diagram(int m, std::vector<int> mate) {
  if (static_cast<int>(mate.size()) != 2 * m) throw std::invalid_argument("matching must cover 2m points");
  for (int p = 0; p < 2 * m; ++p) {
    const int q = mate[p];
    if (q < 0 || q >= 2 * m || q == p || mate[q] != p) throw std::invalid_argument("not a perfect matching");
  }
  for (int a = 0; a < 2 * m; ++a) {
    const int b = mate[a];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c) {
      if (mate[c] < a || mate[c] > b) throw std::invalid_argument("matching is crossing");
    }
  }
  return TLDiagram{m, std::move(mate)};
}

TLDiagram parse_tl_diagram(std::string_view text, int m) {
  std::vector<int> mate(2 * m, -1);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto number = [&] {
    skip();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected a point number", 0, start + 1);
    const int v = std::stoi(std::string(text.substr(start, i - start))) - 1;
    if (v < 0 || v >= 2 * m) throw ParseError("point out of range", 0, start + 1);
    return v;
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= text.size() || text[i] != ch) throw ParseError(std::string("expected '") + ch + "'", 0, i + 1);
    ++i;
  };
  skip();
  if (text.substr(i) == "()") return make_tl_diagram(m, {});
  while (true) {
    skip();
    if (i >= text.size()) break;
    expect('(');
    const int a = number();
    expect(',');
    const int b = number();
    expect(')');
    if (mate[a] >= 0 || mate[b] >= 0) throw ParseError("point matched twice", 0, i);
    mate[a] = b;
    mate[b] = a;
  }
  try {
    return make_tl_diagram(m, std::move(mate));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what(), 0, 1);
  }
}

std::vector<TLDiagram> enumerate_tl_diagrams(int m) {
  std::vector<int> mate(2 * m, -1);
  std::vector<std::vector<int>> all;
  interval_matchings(0, 2 * m, mate, all);
  std::vector<TLDiagram> out;
  for (auto& v : all) out.push_back(TLDiagram{m, std::move(v)});
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<TLDiagram, int> compose(const TLDiagram& a, const TLDiagram& b) {
  if (a.m != b.m) throw std::invalid_argument("TL diagrams have different strand counts");
  const int m = a.m;
  const int n = 2 * m;
  // Nodes: a-points 0..n-1, b-points n..2n-1. a top j is glued to b bottom j.
  auto glue = [&](int node) {
    if (node < n) return n + (n - 1 - node);  // a top point at circular c is top j = n-1-c
    return n - 1 - (node - n);
  };
  auto mate_of = [&](int node) { return node < n ? a.mate[node] : n + b.mate[node - n]; };
  auto is_end = [&](int node) { return node < n ? node < m : node - n >= m; };
  std::vector<int> result(n, -1);
  std::vector<char> seen(2 * n, 0);
  for (int start = 0; start < 2 * n; ++start) {
    if (!is_end(start) || seen[start]) continue;
    int x = start;
    seen[x] = 1;
    while (true) {
      x = mate_of(x);
      seen[x] = 1;
      if (is_end(x)) break;
      x = glue(x);
      seen[x] = 1;
    }
    const int ps = start < n ? start : start - n;
    const int px = x < n ? x : x - n;
    result[ps] = px;
    result[px] = ps;
  }
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int x = start;
    do {
      seen[x] = 1;
      const int y = mate_of(x);
      seen[y] = 1;
      x = glue(y);
    } while (x != start);
  }
  return {TLDiagram{m, std::move(result)}, loops};
}

int closure_loops(const TLDiagram& a) {
  const int n = 2 * a.m;
  std::vector<char> seen(n, 0);
  int loops = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int x = s;
    do {
      seen[x] = 1;
      const int y = a.mate[x];
      seen[y] = 1;
      x = n - 1 - y;
    } while (x != s);
  }
  return loops;
}

// ---------------------------------------------------------------------------
// Elements

TLElement TLElement::basis(const TLDiagram& t, const LaurentPolynomial& c) {
  TLElement e(t.m);
  e.add(t, c);
  return e;
}

TLElement TLElement::identity(int m) { return basis(TLDiagram::identity(m), d_one()); }

LaurentPolynomial TLElement::coefficient(const TLDiagram& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? LaurentPolynomial(Var::d) : it->second;
}

void TLElement::add(const TLDiagram& t, const LaurentPolynomial& c) {
  if (t.m != m_) throw std::invalid_argument("TL diagram size does not match the element");
  if (c.var() != Var::d && !c.is_constant()) throw VariableMismatch(Var::d, c.var());
  if (c.is_zero()) return;
  const LaurentPolynomial cc = c.var() == Var::d ? c : LaurentPolynomial::constant(Var::d, c.coefficient(0));
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, cc);
    return;
  }
  it->second += cc;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.m_ != m_) throw std::invalid_argument("TL elements have different strand counts");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  if (o.m_ != m_) throw std::invalid_argument("TL elements have different strand counts");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

TLElement& TLElement::operator*=(const LaurentPolynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

std::string TLElement::str() const {
  std::ostringstream out;
  out << "m " << m_ << "\n";
  for (const auto& [t, c] : terms_) out << "term " << t.str() << " : " << c.str() << "\n";
  return out.str();
}

TLElement tl_multiply(const TLElement& a, const TLElement& b) {
  if (a.m() != b.m()) throw std::invalid_argument("cannot multiply TL elements of different sizes");
  TLElement out(a.m());
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      auto [t, loops] = compose(ta, tb);
      out.add(t, (ca * cb).shifted(loops));
    }
  }
  return out;
}

LaurentPolynomial tl_trace(const TLElement& a) {
  LaurentPolynomial out(Var::d);
  for (const auto& [t, c] : a.terms()) out += c.shifted(closure_loops(t));
  return out;
}

TLElement generator_e(int i, int m) {
  return TLElement::basis(TLDiagram::cupcap(i, m), LaurentPolynomial::monomial(Var::d, -1));
}

TLElement jones_wenzl_p2(int position, int m) {
  return TLElement::identity(m) -
         TLElement::basis(TLDiagram::cupcap(position, m), LaurentPolynomial::monomial(Var::d, -1));
}

// ---------------------------------------------------------------------------
// phi

TLElement phi(const EmbeddedGraph& g, int jobs, int edge_limit) {
  if (g.n_bottom() != g.n_top()) throw std::invalid_argument("phi needs n points on top and bottom");
  const int D = g.num_darts();
  const int E = g.num_edges();
  if (E > edge_limit) throw LimitExceeded("phi limited to " + std::to_string(edge_limit) + " edges");
  const int m = 2 * g.n_bottom();
  // Side nodes: (x, L) = 2x, (x, R) = 2x + 1.
  std::vector<int> corner(2 * D, -1);
  std::vector<int> endpoint(2 * D, -1);
  for (int p = 0; p < g.num_boundary(); ++p) {
    const int b = g.boundary()[p];
    endpoint[2 * b] = 2 * p;
    endpoint[2 * b + 1] = 2 * p + 1;
  }
  for (int x = 0; x < D; ++x) {
    if (g.is_boundary_dart(x)) continue;
    corner[2 * x] = 2 * g.sigma(x) + 1;
    corner[2 * g.sigma(x) + 1] = 2 * x;
  }
  int vertex_twice = 0;  // sum of (r - 2) over interior vertices
  {
    const auto vertex = g.vertex_of_darts();
    std::vector<int> deg(g.num_dart_vertices(), 0);
    std::vector<char> interior(deg.size(), 1);
    for (int x = 0; x < D; ++x) {
      ++deg[vertex[x]];
      if (g.is_boundary_dart(x)) interior[vertex[x]] = 0;
    }
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if (interior[v]) vertex_twice += deg[v] - 2;
    }
    vertex_twice -= 2 * g.isolated_vertices();
  }
  if (vertex_twice % 2 != 0) throw std::logic_error("odd total vertex weight in phi");
  const int vertex_exp = vertex_twice / 2 + g.isolated_vertices();  // isolated vertex: d^-1 times one circle
  std::vector<int> edge_darts;
  for (int x = 0; x < D; ++x) {
    if (x < g.alpha(x)) edge_darts.push_back(x);
  }
  const PhiAccumulator total = parallel_accumulate(
      std::uint64_t{1} << E, jobs, PhiAccumulator{}, [&](std::uint64_t begin, std::uint64_t end, PhiAccumulator& acc) {
        std::vector<int> link(2 * D);
        std::vector<char> seen(2 * D);
        std::vector<int> matching(2 * m);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          int kept = 0;
          for (int i = 0; i < E; ++i) {
            const int x = edge_darts[i];
            const int y = g.alpha(x);
            if (mask >> i & 1) {
              ++kept;
              link[2 * x] = 2 * y + 1;
              link[2 * y + 1] = 2 * x;
              link[2 * x + 1] = 2 * y;
              link[2 * y] = 2 * x + 1;
            } else {
              link[2 * x] = 2 * x + 1;
              link[2 * x + 1] = 2 * x;
              link[2 * y] = 2 * y + 1;
              link[2 * y + 1] = 2 * y;
            }
          }
          std::fill(seen.begin(), seen.end(), 0);
          for (int s = 0; s < 2 * D; ++s) {
            if (endpoint[s] < 0 || seen[s]) continue;
            int x = s;
            seen[x] = 1;
            while (true) {
              x = link[x];
              seen[x] = 1;
              if (endpoint[x] >= 0) break;
              x = corner[x];
              seen[x] = 1;
            }
            matching[endpoint[s]] = endpoint[x];
            matching[endpoint[x]] = endpoint[s];
          }
          int loops = 0;
          for (int s = 0; s < 2 * D; ++s) {
            if (seen[s]) continue;
            ++loops;
            int x = s;
            do {
              seen[x] = 1;
              x = link[x];
              seen[x] = 1;
              x = corner[x];
            } while (x != s);
          }
          const int cut = E - kept;
          acc.terms[matching][vertex_exp + loops - cut] += cut % 2 ? -1 : 1;
        }
      });
  TLElement out(m);
  const LaurentPolynomial loop_factor =
      (LaurentPolynomial::monomial(Var::d, 2) - d_one()).pow(g.free_loops());
  for (const auto& [mt, exps] : total.terms) {
    LaurentPolynomial::Terms t;
    for (auto [e, c] : exps) {
      if (c != 0) t[e] = Rational(c);
    }
    out.add(TLDiagram{m, mt}, LaurentPolynomial(Var::d, std::move(t)) * loop_factor);
  }
  return out;
}

int exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

int phi_rank(int n, const Rational& d_value) {
  const auto basis = enumerate_basis(n);
  std::vector<TLElement> images;
  std::map<TLDiagram, int> column;
  for (const auto& p : basis) {
    images.push_back(phi(basis_graph(p)));
    for (const auto& [t, c] : images.back().terms()) column.emplace(t, 0);
  }
  int next = 0;
  for (auto& [t, idx] : column) idx = next++;
  std::vector<std::vector<Rational>> rows;
  for (const auto& img : images) {
    std::vector<Rational> row(column.size(), Rational(0));
    for (const auto& [t, c] : img.terms()) row[column[t]] = c.evaluate(d_value);
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

// ---------------------------------------------------------------------------
// Transfer matrix

TLElement transfer_matrix(int n) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("transfer matrix needs an even, positive n");
  TLElement even = TLElement::identity(n);
  for (int j = 1; 2 * j <= n - 1; ++j) even = tl_multiply(even, TLElement::identity(n) + generator_e(2 * j, n));
  TLElement odd = TLElement::identity(n);
  for (int j = 1; 2 * j - 1 <= n - 1; ++j) {
    odd = tl_multiply(odd, TLElement::identity(n) + generator_e(2 * j - 1, n));
  }
  return tl_multiply(even, odd);
}

LaurentPolynomial potts_tl_partition(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const TLElement t = transfer_matrix(n);
  TLElement power = t;
  for (int k = 1; k < m; ++k) power = tl_multiply(power, t);
  return tl_trace(power);
}

}  // namespace chromalg

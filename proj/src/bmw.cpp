#include "chromalg/bmw.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/parallel.hpp"

namespace chromalg {

namespace {

LaurentPolynomial a_one() { return LaurentPolynomial::constant(Var::A, Rational(1)); }
LaurentPolynomial bracket_d() { return LaurentPolynomial::variable(Var::d).substitute(Var::A); }

/// Occurrences of every arc label as (crossing, slot).
std::map<int, std::vector<std::pair<int, int>>> arc_ends(const LinkDiagram& link) {
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < link.num_crossings(); ++c) {
    for (int k = 0; k < 4; ++k) ends[link.crossings[c][k]].emplace_back(c, k);
  }
  return ends;
}

void check_labels(const LinkDiagram& link) {
  for (const auto& [label, occ] : arc_ends(link)) {
    if (label <= 0) throw std::invalid_argument("arc labels must be positive");
    if (occ.size() != 2) {
      throw std::invalid_argument("arc " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                                  " times (expected 2)");
    }
  }
}

int count_cycles(const std::vector<int>& partner, const std::vector<int>& smoothing) {
  const int n = static_cast<int>(partner.size());
  std::vector<char> seen(n, 0);
  int loops = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int x = s;
    do {
      seen[x] = 1;
      x = partner[x];
      seen[x] = 1;
      x = smoothing[x];
    } while (x != s);
  }
  return loops;
}

LaurentPolynomial d_power(int k) {
  static const LaurentPolynomial d = bracket_d();
  return d.pow(k);
}

}  // namespace

// ---------------------------------------------------------------------------
// PD input

LinkDiagram parse_pd(std::string_view text) {
  LinkDiagram link;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::size_t col = line.find(key) + 1;
    if (key == "U") {
      std::string extra;
      if (ls >> extra) throw ParseError("'U' takes no arguments", line_no, line.find(extra, col) + 1);
      ++link.unknots;
      continue;
    }
    if (key != "X") throw ParseError("expected 'X' or 'U', got '" + key + "'", line_no, col);
    std::array<int, 4> arcs{};
    std::size_t pos = col + 1;
    for (int k = 0; k < 4; ++k) {
      std::string tok;
      if (!(ls >> tok)) throw ParseError("crossing needs four arc labels", line_no, line.size() + 1);
      pos = line.find(tok, pos - 1) + 1;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v <= 0) throw ParseError("arc label must be a positive integer", line_no, pos);
      arcs[k] = v;
      pos += tok.size();
    }
    std::string extra;
    if (ls >> extra) throw ParseError("too many labels on crossing line", line_no, line.find(extra, pos - 1) + 1);
    link.crossings.push_back(arcs);
  }
  try {
    check_labels(link);
    crossing_graph(link);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid diagram: ") + ex.what(), line_no, 1);
  }
  return link;
}

LinkDiagram read_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open PD file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pd(buf.str());
}

std::string write_pd(const LinkDiagram& link) {
  std::ostringstream out;
  for (const auto& x : link.crossings) out << "X " << x[0] << " " << x[1] << " " << x[2] << " " << x[3] << "\n";
  for (int k = 0; k < link.unknots; ++k) out << "U\n";
  return out.str();
}

EmbeddedGraph crossing_graph(const LinkDiagram& link) {
  check_labels(link);
  GraphBuilder b(0, 0);
  for (int c = 0; c < link.num_crossings(); ++c) b.add_vertex(4);
  for (const auto& [label, occ] : arc_ends(link)) {
    b.connect(b.port(occ[0].first, occ[0].second), b.port(occ[1].first, occ[1].second));
  }
  b.add_free_loops(link.unknots);
  return b.build();
}

std::vector<std::vector<int>> link_components(const LinkDiagram& link) {
  const auto ends = arc_ends(link);
  std::map<int, int> parent;
  for (const auto& [label, occ] : ends) parent[label] = label;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : link.crossings) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  std::map<int, std::vector<int>> groups;
  for (const auto& [label, occ] : ends) groups[find(label)].push_back(label);
  std::vector<std::vector<int>> out;
  for (auto& [r, labels] : groups) out.push_back(std::move(labels));
  return out;
}

int crossing_sign(const LinkDiagram& link, int crossing) {
  std::map<int, const std::vector<int>*> comp_of;
  const auto comps = link_components(link);
  for (const auto& c : comps) {
    for (int l : c) comp_of[l] = &c;
  }
  auto next = [&](int x) {
    const auto& c = *comp_of.at(x);
    auto it = std::find(c.begin(), c.end(), x + 1);
    return it != c.end() ? x + 1 : c.front();
  };
  const auto& x = link.crossings[crossing];
  const int under = next(x[0]) == x[2] ? 1 : -1;
  const int over = next(x[3]) == x[1] ? 1 : -1;
  return under * over;
}

int writhe(const LinkDiagram& link) {
  int w = 0;
  for (int c = 0; c < link.num_crossings(); ++c) w += crossing_sign(link, c);
  return w;
}

// ---------------------------------------------------------------------------
// Bracket

BracketDiagram to_bracket_diagram(const LinkDiagram& link) {
  check_labels(link);
  BracketDiagram b;
  b.crossings = link.num_crossings();
  b.partner.assign(4 * b.crossings, -1);
  for (const auto& [label, occ] : arc_ends(link)) {
    const int s = 4 * occ[0].first + occ[0].second;
    const int t = 4 * occ[1].first + occ[1].second;
    b.partner[s] = t;
    b.partner[t] = s;
  }
  b.free_loops = link.unknots;
  return b;
}

LaurentPolynomial bracket_state_sum(const BracketDiagram& b, int jobs, int crossing_limit) {
  const int c = b.crossings;
  if (c > crossing_limit) {
    throw LimitExceeded("state sum limited to " + std::to_string(crossing_limit) + " crossings");
  }
  // Accumulate coefficient counts by (A exponent, loop count).
  using Counts = std::map<std::pair<int, int>, long>;
  struct Acc {
    Counts counts;
    Acc& operator+=(const Acc& o) {
      for (const auto& [k, v] : o.counts) counts[k] += v;
      return *this;
    }
  };
  const Acc total = parallel_accumulate(std::uint64_t{1} << c, jobs, Acc{},
                                        [&](std::uint64_t begin, std::uint64_t end, Acc& acc) {
                                          std::vector<int> smoothing(4 * c);
                                          for (std::uint64_t mask = begin; mask < end; ++mask) {
                                            int a_exp = 0;
                                            for (int k = 0; k < c; ++k) {
                                              const int s = 4 * k;
                                              if (mask >> k & 1) {  // B: (0,3)(1,2)
                                                smoothing[s] = s + 3;
                                                smoothing[s + 3] = s;
                                                smoothing[s + 1] = s + 2;
                                                smoothing[s + 2] = s + 1;
                                                --a_exp;
                                              } else {
                                                smoothing[s] = s + 1;
                                                smoothing[s + 1] = s;
                                                smoothing[s + 2] = s + 3;
                                                smoothing[s + 3] = s + 2;
                                                ++a_exp;
                                              }
                                            }
                                            ++acc.counts[{a_exp, count_cycles(b.partner, smoothing)}];
                                          }
                                        });
  LaurentPolynomial out(Var::A);
  for (const auto& [key, count] : total.counts) {
    out += LaurentPolynomial::monomial(Var::A, key.first, Rational(count)) * d_power(key.second + b.free_loops);
  }
  if (c == 0) out = d_power(b.free_loops);
  return out;
}

LaurentPolynomial bracket_frontier(const BracketDiagram& b) {
  const int c = b.crossings;
  if (c == 0) return d_power(b.free_loops);
  // Sweep order: breadth-first along arcs keeps the frontier small.
  std::vector<int> order;
  std::vector<char> queued(c, 0);
  for (int root = 0; root < c; ++root) {
    if (queued[root]) continue;
    queued[root] = 1;
    order.push_back(root);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
      const int x = order[h];
      for (int k = 0; k < 4; ++k) {
        const int y = b.partner[4 * x + k] / 4;
        if (!queued[y]) {
          queued[y] = 1;
          order.push_back(y);
        }
      }
    }
  }
  // State: sorted list of (slot, slot) pairs joined through processed crossings.
  using State = std::vector<std::pair<int, int>>;
  std::map<State, LaurentPolynomial> states;
  states.emplace(State{}, a_one());
  std::vector<char> done(c, 0);
  for (int x : order) {
    std::map<State, LaurentPolynomial> next;
    for (const auto& [state, weight] : states) {
      for (int choice = 0; choice < 2; ++choice) {
        std::map<int, std::vector<int>> adj;
        auto link = [&](int u, int v) {
          adj[u].push_back(v);
          adj[v].push_back(u);
        };
        for (auto [u, v] : state) link(u, v);
        const int s = 4 * x;
        for (int k = 0; k < 4; ++k) adj[s + k];
        if (choice == 0) {
          link(s, s + 1);
          link(s + 2, s + 3);
        } else {
          link(s, s + 3);
          link(s + 1, s + 2);
        }
        for (int k = 0; k < 4; ++k) {
          const int t = b.partner[s + k];
          const int owner = t / 4;
          if (owner == x) {
            if (s + k < t) link(s + k, t);
          } else if (done[owner]) {
            link(s + k, t);
          }
        }
        State ns;
        std::set<int> seen;
        for (const auto& [node, nb] : adj) {
          if (nb.size() != 1 || seen.count(node)) continue;
          int prev = node;
          int cur = nb[0];
          seen.insert(node);
          while (adj[cur].size() == 2) {
            seen.insert(cur);
            const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
          }
          seen.insert(cur);
          ns.emplace_back(std::min(node, cur), std::max(node, cur));
        }
        int loops = 0;
        for (const auto& [node, nb] : adj) {
          if (seen.count(node)) continue;
          ++loops;
          int prev = -1;
          int cur = node;
          while (!seen.count(cur)) {
            seen.insert(cur);
            const int nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = nxt;
          }
        }
        std::sort(ns.begin(), ns.end());
        LaurentPolynomial w = weight.shifted(choice == 0 ? 1 : -1);
        if (loops) w *= d_power(loops);
        auto it = next.find(ns);
        if (it == next.end()) {
          next.emplace(std::move(ns), std::move(w));
        } else {
          it->second += w;
        }
      }
    }
    done[x] = 1;
    states = std::move(next);
  }
  auto it = states.find(State{});
  LaurentPolynomial out = it == states.end() ? LaurentPolynomial(Var::A) : it->second;
  return out * d_power(b.free_loops);
}

LaurentPolynomial kauffman_bracket(const LinkDiagram& link, int jobs, int crossing_limit) {
  return bracket_state_sum(to_bracket_diagram(link), jobs, crossing_limit);
}

// ---------------------------------------------------------------------------
// SO(3) invariant

Resolution resolve(const LinkDiagram& link, const std::vector<int>& state) {
  if (static_cast<int>(state.size()) != link.num_crossings()) throw std::invalid_argument("state size mismatch");
  GraphBuilder b(0, 0);
  Resolution r;
  // Port of every (crossing, slot).
  std::vector<GraphBuilder::Port> port(4 * link.num_crossings(), GraphBuilder::Port{0, 0});
  for (int c = 0; c < link.num_crossings(); ++c) {
    if (state[c] == 2) {
      const int v = b.add_vertex(4);
      for (int k = 0; k < 4; ++k) port[4 * c + k] = b.port(v, k);
      ++r.v;
      continue;
    }
    const std::array<int, 4> pairing = state[c] == 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 3, 1, 2};
    for (int h = 0; h < 2; ++h) {
      const int v = b.add_vertex(2);
      port[4 * c + pairing[2 * h]] = b.port(v, 0);
      port[4 * c + pairing[2 * h + 1]] = b.port(v, 1);
    }
    (state[c] == 0 ? r.p : r.n) += 1;
  }
  for (const auto& [label, occ] : arc_ends(link)) {
    b.connect(port[4 * occ[0].first + occ[0].second], port[4 * occ[1].first + occ[1].second]);
  }
  b.add_free_loops(link.unknots);
  r.graph = smooth_2valent(b.build());
  return r;
}

LaurentPolynomial so3_kauffman_via_chromatic(const LinkDiagram& link, int jobs, int crossing_limit) {
  const int c = link.num_crossings();
  if (c > crossing_limit) {
    throw LimitExceeded("chromatic expansion limited to " + std::to_string(crossing_limit) + " crossings");
  }
  check_labels(link);
  std::uint64_t total = 1;
  for (int k = 0; k < c; ++k) total *= 3;
  return parallel_accumulate(total, jobs, LaurentPolynomial(Var::q),
                             [&](std::uint64_t begin, std::uint64_t end, LaurentPolynomial& acc) {
                               std::vector<int> state(c);
                               for (std::uint64_t idx = begin; idx < end; ++idx) {
                                 std::uint64_t rest = idx;
                                 for (int k = 0; k < c; ++k) {
                                   state[k] = static_cast<int>(rest % 3);
                                   rest /= 3;
                                 }
                                 const Resolution r = resolve(link, state);
                                 const LaurentPolynomial chi = normalized_dual_chromatic(r.graph);
                                 if (chi.is_zero()) continue;
                                 const Rational sign(r.v % 2 ? -1 : 1);
                                 acc += chi.substitute(Var::q).shifted(r.p - r.n) * sign;
                               }
                             });
}

BracketDiagram cable(const LinkDiagram& link, const std::vector<char>& turnbacks) {
  check_labels(link);
  const int c = link.num_crossings();
  BracketDiagram b;
  b.crossings = 4 * c;
  b.partner.assign(16 * c, -1);
  enum { SW = 0, SE = 1, NE = 2, NW = 3 };
  enum { S = 0, E = 1, N = 2, W = 3 };
  auto slot = [](int crossing, int small, int dir) { return 4 * (4 * crossing + small) + dir; };
  auto join = [&](int u, int v) {
    b.partner[u] = v;
    b.partner[v] = u;
  };
  // Copies of each big slot in counterclockwise order.
  auto copies = [&](int crossing, int k) -> std::pair<int, int> {
    switch (k) {
      case 0: return {slot(crossing, SW, S), slot(crossing, SE, S)};
      case 1: return {slot(crossing, SE, E), slot(crossing, NE, E)};
      case 2: return {slot(crossing, NE, N), slot(crossing, NW, N)};
      default: return {slot(crossing, NW, W), slot(crossing, SW, W)};
    }
  };
  for (int x = 0; x < c; ++x) {
    join(slot(x, SW, E), slot(x, SE, W));
    join(slot(x, SW, N), slot(x, NW, S));
    join(slot(x, SE, N), slot(x, NE, S));
    join(slot(x, NW, E), slot(x, NE, W));
  }
  const auto comps = link_components(link);
  if (turnbacks.size() != comps.size() + static_cast<std::size_t>(link.unknots)) {
    throw std::invalid_argument("one turnback flag per component is required");
  }
  std::set<int> turnback_arcs;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (turnbacks[i]) turnback_arcs.insert(comps[i].front());
  }
  for (const auto& [label, occ] : arc_ends(link)) {
    const auto [u1, u2] = copies(occ[0].first, occ[0].second);
    const auto [v1, v2] = copies(occ[1].first, occ[1].second);
    if (turnback_arcs.count(label)) {
      join(u1, u2);
      join(v1, v2);
    } else {
      join(u1, v2);
      join(u2, v1);
    }
  }
  // A cabled unknot is two circles, or one after a turnback.
  for (int k = 0; k < link.unknots; ++k) b.free_loops += turnbacks[comps.size() + k] ? 1 : 2;
  return b;
}

LaurentPolynomial so3_kauffman_via_cabling(const LinkDiagram& link, int jobs, int crossing_limit) {
  if (link.num_crossings() > crossing_limit) {
    throw LimitExceeded("cabling limited to " + std::to_string(crossing_limit) + " crossings");
  }
  const int k = static_cast<int>(link_components(link).size()) + link.unknots;
  // d^k * sum_T (-1/d)^|T| <D_T>, then divide by d^k.
  const std::uint64_t subsets = std::uint64_t{1} << k;
  const LaurentPolynomial scaled = parallel_accumulate(
      subsets, jobs, LaurentPolynomial(Var::A), [&](std::uint64_t begin, std::uint64_t end, LaurentPolynomial& acc) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          std::vector<char> flags(k);
          int t = 0;
          for (int i = 0; i < k; ++i) {
            flags[i] = mask >> i & 1;
            t += flags[i];
          }
          const LaurentPolynomial br = bracket_frontier(cable(link, flags));
          acc += br * d_power(k - t) * Rational(t % 2 ? -1 : 1);
        }
      });
  return scaled.divide_exact(d_power(k));
}

// ---------------------------------------------------------------------------
// Tangle words

std::string TangleWord::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << " ";
    const auto& l = letters[i];
    out << (l.kind == Kind::E ? "e" : "B") << l.index << (l.kind == Kind::BInv ? "^-1" : "");
  }
  return out.str();
}

TangleWord parse_tangle_word(std::string_view text, int n) {
  TangleWord w;
  w.n = n;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok(text.substr(start, i - start));
    TangleWord::Kind kind;
    if (tok[0] == 'e') {
      kind = TangleWord::Kind::E;
    } else if (tok[0] == 'B') {
      kind = TangleWord::Kind::B;
    } else {
      throw ParseError("expected e<i> or B<i>, got '" + tok + "'", 1, start + 1);
    }
    std::string rest = tok.substr(1);
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "^-1") {
      if (kind == TangleWord::Kind::E) throw ParseError("e_i has no inverse", 1, start + 1);
      kind = TangleWord::Kind::BInv;
      rest = rest.substr(0, rest.size() - 3);
    }
    int idx = 0;
    std::size_t used = 0;
    try {
      idx = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw ParseError("bad generator index in '" + tok + "'", 1, start + 2);
    if (idx < 1 || idx >= n) throw ParseError("generator index out of range in '" + tok + "'", 1, start + 2);
    w.letters.push_back({kind, idx});
  }
  return w;
}

ChromaticElement bmw_generator(TangleWord::Kind kind, int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index must satisfy 1 <= i <= n-1");
  std::vector<std::vector<int>> rest;
  for (int j = 0; j < n; ++j) {
    if (j != i - 1 && j != i) rest.push_back({j, 2 * n - 1 - j});
  }
  const int b0 = i - 1;
  const int b1 = i;
  const int t0 = 2 * n - 1 - b0;
  const int t1 = 2 * n - 1 - b1;
  auto with = [&](std::vector<std::vector<int>> blocks) {
    blocks.insert(blocks.end(), rest.begin(), rest.end());
    return ChromaticElement::basis(make_partition(n, std::move(blocks)), Var::q);
  };
  const ChromaticElement id = ChromaticElement::identity(n, Var::q);
  const ChromaticElement e = with({{b0, b1}, {t0, t1}});
  if (kind == TangleWord::Kind::E) return e;
  const ChromaticElement x = with({{b0, b1, t0, t1}});
  const LaurentPolynomial q = LaurentPolynomial::variable(Var::q);
  const LaurentPolynomial qi = LaurentPolynomial::monomial(Var::q, -1);
  if (kind == TangleWord::Kind::B) return id * q - x + e * qi;
  return id * qi - x + e * q;
}

ChromaticElement resolve_to_chromatic(const TangleWord& word) {
  ChromaticElement out = ChromaticElement::identity(word.n, Var::q);
  for (const auto& l : word.letters) out = multiply(out, bmw_generator(l.kind, l.index, word.n));
  return out;
}

ChromaticElement partial_closure(const ChromaticElement& a) {
  if (a.n() < 1) throw std::invalid_argument("partial closure needs at least one strand");
  ChromaticElement out(a.n() - 1, a.var());
  for (const auto& [p, c] : a.terms()) out += reduce(partial_closure_right(basis_graph(p)), a.var()) * c;
  return out;
}

LinkDiagram braid_closure(const TangleWord& word) {
  const int n = word.n;
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  int next_label = n + 1;
  LinkDiagram link;
  for (const auto& l : word.letters) {
    if (l.kind == TangleWord::Kind::E) throw std::invalid_argument("braid closure takes crossings only");
    const int bl = pos[l.index - 1];
    const int br = pos[l.index];
    const int tl = next_label++;
    const int tr = next_label++;
    if (l.kind == TangleWord::Kind::B) {
      link.crossings.push_back({br, tr, tl, bl});
    } else {
      link.crossings.push_back({bl, br, tr, tl});
    }
    pos[l.index - 1] = tl;
    pos[l.index] = tr;
  }
  std::map<int, int> rename;
  for (int j = 0; j < n; ++j) {
    if (pos[j] == j + 1) {
      ++link.unknots;
    } else {
      rename[pos[j]] = j + 1;
    }
  }
  for (auto& x : link.crossings) {
    for (int& a : x) {
      auto it = rename.find(a);
      if (it != rename.end()) a = it->second;
    }
  }
  return link;
}

std::vector<Residual> verify_bmw_relations(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("BMW relation suite supports n = 2 or 3");
  using K = TangleWord::Kind;
  const LaurentPolynomial q = LaurentPolynomial::variable(Var::q);
  const LaurentPolynomial qi = LaurentPolynomial::monomial(Var::q, -1);
  const ChromaticElement id = ChromaticElement::identity(n, Var::q);
  std::vector<Residual> out;
  for (int i = 1; i < n; ++i) {
    const std::string s = std::to_string(i);
    const auto b = bmw_generator(K::B, i, n);
    const auto bi = bmw_generator(K::BInv, i, n);
    const auto e = bmw_generator(K::E, i, n);
    out.push_back({"skein B" + s + " - B" + s + "^-1 - (q - q^-1)(1 - e" + s + ")", b - bi - (id - e) * (q - qi)});
    out.push_back({"B" + s + " e" + s + " - q^-2 e" + s, multiply(b, e) - e * q.pow(-2)});
    out.push_back({"e" + s + " B" + s + " - q^-2 e" + s, multiply(e, b) - e * q.pow(-2)});
    out.push_back({"B" + s + "^-1 e" + s + " - q^2 e" + s, multiply(bi, e) - e * q.pow(2)});
    out.push_back({"R2 B" + s + " B" + s + "^-1 - 1", multiply(b, bi) - id});
    out.push_back({"R2 B" + s + "^-1 B" + s + " - 1", multiply(bi, b) - id});
  }
  const ChromaticElement lower = ChromaticElement::identity(n - 1, Var::q);
  out.push_back({"positive curl - q^2", partial_closure(bmw_generator(K::B, n - 1, n)) - lower * q.pow(2)});
  out.push_back({"negative curl - q^-2", partial_closure(bmw_generator(K::BInv, n - 1, n)) - lower * q.pow(-2)});
  if (n == 3) {
    auto word = [](std::string_view w) { return resolve_to_chromatic(parse_tangle_word(w, 3)); };
    out.push_back({"R3 B1 B2 B1 - B2 B1 B2", word("B1 B2 B1") - word("B2 B1 B2")});
    out.push_back({"R3 B1 B2 B1^-1 - B2^-1 B1 B2", word("B1 B2 B1^-1") - word("B2^-1 B1 B2")});
    out.push_back({"R3 B1^-1 B2^-1 B1^-1 - B2^-1 B1^-1 B2^-1", word("B1^-1 B2^-1 B1^-1") - word("B2^-1 B1^-1 B2^-1")});
  }
  return out;
}

}  // namespace chromalg

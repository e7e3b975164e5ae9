#include "chromalg/io.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>

#include "chromalg/errors.hpp"

namespace chromalg {

namespace {

std::string strip_comment(const std::string& raw) {
  const auto hash = raw.find('#');
  return hash == std::string::npos ? raw : raw.substr(0, hash);
}

std::size_t first_non_space(const std::string& s, std::size_t from = 0) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

std::string trim(const std::string& s) {
  const std::size_t a = first_non_space(s);
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Reads the header "<key> N" and calls on_term(diagram_text, diagram_col,
/// poly_text, poly_col, line) for each term line.
int read_terms(std::istream& in, const std::string& key,
               const std::function<void(const std::string&, std::size_t, const std::string&, std::size_t,
                                        std::size_t)>& on_term) {
  int size = -1;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    const std::size_t start = first_non_space(line);
    if (start >= line.size()) continue;
    if (size < 0) {
      if (line.compare(start, key.size(), key) != 0) {
        throw ParseError("expected '" + key + " <size>' header", line_no, start + 1);
      }
      const std::string rest = trim(line.substr(start + key.size()));
      std::size_t used = 0;
      try {
        size = std::stoi(rest, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != rest.size() || size < 0) {
        throw ParseError("bad size in header", line_no, start + key.size() + 2);
      }
      continue;
    }
    if (line.compare(start, 4, "term") != 0) throw ParseError("expected 'term'", line_no, start + 1);
    const std::size_t colon = line.find(':', start + 4);
    if (colon == std::string::npos) throw ParseError("expected ':' before the coefficient", line_no, line.size() + 1);
    const std::size_t dstart = first_non_space(line, start + 4);
    const std::string diagram = trim(line.substr(dstart, colon - dstart));
    const std::size_t pstart = first_non_space(line, colon + 1);
    const std::string poly = trim(line.substr(pstart));
    if (poly.empty()) throw ParseError("missing coefficient", line_no, colon + 2);
    on_term(diagram, dstart + 1, poly, pstart + 1, line_no);
  }
  if (size < 0) throw ParseError("missing '" + key + " <size>' header", line_no, 1);
  return size;
}

/// Rethrows a column-only ParseError at the given line and column offset.
[[noreturn]] void relocate(const ParseError& e, std::size_t line, std::size_t col_offset) {
  std::string msg = e.what();
  throw ParseError(msg, line, col_offset + (e.column() ? e.column() - 1 : 0));
}

LaurentPolynomial parse_coefficient(const std::string& text, Var var, std::size_t line, std::size_t col) {
  try {
    return parse_polynomial(text, var);
  } catch (const ParseError& e) {
    relocate(e, line, col);
  }
}

}  // namespace

ChromaticElement read_chromatic_element(std::istream& in, const std::string& base_dir) {
  struct Pending {
    std::string diagram;
    std::size_t dcol;
    LaurentPolynomial coeff;
    std::size_t line;
  };
  std::vector<Pending> terms;
  const int n = read_terms(in, "n", [&](const std::string& d, std::size_t dc, const std::string& p, std::size_t pc,
                                        std::size_t line) {
    terms.push_back({d, dc, parse_coefficient(p, Var::Q, line, pc), line});
  });
  ChromaticElement out(n);
  for (const auto& t : terms) {
    if (!t.diagram.empty() && t.diagram[0] == '@') {
      const std::filesystem::path path = std::filesystem::path(base_dir) / t.diagram.substr(1);
      EmbeddedGraph g;
      try {
        g = read_graph_file(path.string());
      } catch (const std::runtime_error& e) {
        throw ParseError(e.what(), t.line, t.dcol);
      }
      if (g.n_bottom() != n || g.n_top() != n) throw ParseError("graph size does not match the element", t.line, t.dcol);
      out += reduce(g) * t.coeff;
      continue;
    }
    try {
      out.add(parse_partition(t.diagram, n), t.coeff);
    } catch (const ParseError& e) {
      relocate(e, t.line, t.dcol);
    }
  }
  return out;
}

ChromaticElement read_chromatic_element_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open element file '" + path + "'");
  return read_chromatic_element(in, std::filesystem::path(path).parent_path().string());
}

TLElement read_tl_element(std::istream& in) {
  std::vector<std::tuple<std::string, std::size_t, LaurentPolynomial, std::size_t>> terms;
  const int m = read_terms(in, "m", [&](const std::string& d, std::size_t dc, const std::string& p, std::size_t pc,
                                        std::size_t line) {
    terms.emplace_back(d, dc, parse_coefficient(p, Var::d, line, pc), line);
  });
  TLElement out(m);
  for (const auto& [d, dc, c, line] : terms) {
    try {
      out.add(parse_tl_diagram(d, m), c);
    } catch (const ParseError& e) {
      relocate(e, line, dc);
    }
  }
  return out;
}

TLElement read_tl_element_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open element file '" + path + "'");
  return read_tl_element(in);
}

}  // namespace chromalg

#include "chromalg/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chromalg/bmw.hpp"
#include "chromalg/chromatic_algebra.hpp"
#include "chromalg/errors.hpp"
#include "chromalg/graph_polynomials.hpp"
#include "chromalg/io.hpp"
#include "chromalg/potts.hpp"
#include "chromalg/random_graphs.hpp"
#include "chromalg/temperley_lieb.hpp"

namespace chromalg::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  int jobs = 1;
  bool json = false;
};

json poly_json(const LaurentPolynomial& p) {
  return json{{"variable", std::string(1, var_symbol(p.var()))},
              {"text", p.str()},
              {"terms", json::parse(p.to_json())}};
}

void emit_poly(std::ostream& out, const Globals& g, const std::string& command, const LaurentPolynomial& p) {
  if (g.json) {
    out << json{{"command", command}, {"result", poly_json(p)}}.dump() << "\n";
  } else {
    out << p.str() << "\n";
  }
}

void emit_rational(std::ostream& out, const Globals& g, const std::string& command, const Rational& r) {
  if (g.json) {
    out << json{{"command", command}, {"value", r.str()}}.dump() << "\n";
  } else {
    out << r.str() << "\n";
  }
}

// ---------------------------------------------------------------------------
// verify suites

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<int> sizes_for(int n, int lo, int hi, std::vector<int> defaults) {
  if (n == 0) return defaults;
  if (n < lo || n > hi) {
    throw std::invalid_argument("--n must be between " + std::to_string(lo) + " and " + std::to_string(hi) +
                                " for this suite");
  }
  return {n};
}

std::vector<Check> suite_bmw(int n) {
  std::vector<Check> checks;
  for (int k : sizes_for(n, 2, 3, {2, 3})) {
    for (const auto& r : verify_bmw_relations(k)) {
      checks.push_back({"n=" + std::to_string(k) + " " + r.name, r.ok(), r.ok() ? "" : r.value.str()});
    }
  }
  return checks;
}

Check commute_check(const std::string& name, const EmbeddedGraph& g, int jobs) {
  const LaurentPolynomial lhs = tl_trace(phi(g, jobs));
  const LaurentPolynomial rhs = trace(reduce(g)).substitute(Var::d);
  Check c{name, lhs == rhs, ""};
  if (!c.ok) c.detail = lhs.str() + " != " + rhs.str();
  return c;
}

std::vector<Check> suite_commute(int n, unsigned long long seed, int cases, int jobs) {
  std::vector<Check> checks;
  Rng rng(seed);
  for (int k : sizes_for(n, 1, 4, {1, 2, 3})) {
    for (const auto& p : enumerate_basis(k)) {
      checks.push_back(commute_check("n=" + std::to_string(k) + " basis " + p.str(), basis_graph(p), jobs));
    }
    for (int i = 0; i < cases; ++i) {
      const EmbeddedGraph g = random_rectangle_graph(k, 5, rng);
      checks.push_back(commute_check("n=" + std::to_string(k) + " random #" + std::to_string(i + 1), g, jobs));
    }
  }
  return checks;
}

std::vector<Check> suite_basis_rank(int n) {
  std::vector<Check> checks;
  for (int k : sizes_for(n, 1, 4, {1, 2, 3})) {
    const std::size_t size = enumerate_basis(k).size();
    const std::size_t brute = count_planar_partitions_brute_force(k);
    checks.push_back({"n=" + std::to_string(k) + " basis size " + std::to_string(size), size == brute,
                      size == brute ? "" : "brute force count " + std::to_string(brute)});
    const int rank = phi_rank(k, Rational(7, 2));
    checks.push_back({"n=" + std::to_string(k) + " phi rank at d=7/2", rank == static_cast<int>(size),
                      rank == static_cast<int>(size) ? "" : "rank " + std::to_string(rank)});
  }
  return checks;
}

std::vector<Check> suite_trivalent() {
  std::vector<Check> checks;
  for (const auto& r : verify_trivalent_relations()) checks.push_back({r.name, r.ok(), r.ok() ? "" : r.value.str()});
  return checks;
}

std::vector<Check> suite_potts(int jobs) {
  std::vector<Check> checks;
  const std::vector<GridSpec> grids{{1, 2}, {2, 2}, {2, 3}, {3, 3}};
  for (const auto& grid : grids) {
    const std::string tag = std::to_string(grid.rows) + "x" + std::to_string(grid.cols);
    for (int Q = 1; Q <= 3; ++Q) {
      const LaurentPolynomial spins = partition_function_spins(grid, Q, jobs);
      const LaurentPolynomial nets = partition_function_nets(grid, Q, jobs);
      checks.push_back({tag + " Q=" + std::to_string(Q) + " nets = spins", spins == nets,
                        spins == nets ? "" : nets.str() + " != " + spins.str()});
      checks.push_back({tag + " Q=" + std::to_string(Q) + " x^0 = chromatic", zero_temperature_check(grid, Q), ""});
    }
  }
  return checks;
}

int emit_checks(std::ostream& out, const Globals& g, const std::string& suite, const std::vector<Check>& checks) {
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
  if (g.json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out << json{{"suite", suite}, {"checks", arr}, {"failed", failed}}.dump() << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.ok ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) {
        std::string d = c.detail;
        std::replace(d.begin(), d.end(), '\n', ';');
        out << " : " << d;
      }
      out << "\n";
    }
    out << suite << ": " << checks.size() - failed << "/" << checks.size() << " passed\n";
  }
  return failed == 0 ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------------------

std::string tl_text(const TLElement& e) { return e.str(); }

json tl_json(const TLElement& e) {
  json terms = json::array();
  for (const auto& [t, c] : e.terms()) terms.push_back({{"diagram", t.str()}, {"coefficient", poly_json(c)}});
  return json{{"m", e.m()}, {"terms", terms}};
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the chromatic, Temperley-Lieb and SO(3) BMW algebras", "chromalg"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  app.add_option("-j,--jobs", globals.jobs, "Worker threads for state sums (output does not depend on it)")
      ->check(CLI::Range(1, 256));
  app.add_flag("--json", globals.json, "Machine-readable output");

  std::string path;
  std::string at_text;
  std::string method;
  std::string algebra = "chromatic";
  std::string oracle = "none";
  std::string q_text;
  int n = 0;
  int m = 1;
  int rows = 1;
  int cols = 1;
  int potts_q = 2;
  std::string suite;
  unsigned long long seed = kDefaultSeed;
  int cases = 20;

  auto* chromatic_cmd = app.add_subcommand("chromatic", "Chromatic polynomial of the graph in a graph file");
  chromatic_cmd->add_option("graph", path, "Graph file")->required();
  chromatic_cmd->add_option("--at", at_text, "Evaluate at this rational Q");
  chromatic_cmd->add_option("--method", method, "delcon (default) or ranksum")
      ->check(CLI::IsMember({"delcon", "ranksum"}));

  auto* dual_cmd = app.add_subcommand("dual-chromatic", "Chromatic polynomial of the planar dual of a closed graph");
  dual_cmd->add_option("graph", path, "Graph file")->required();
  dual_cmd->add_option("--at", at_text, "Evaluate at this rational Q");

  auto* trace_cmd = app.add_subcommand("trace", "Trace of an element file");
  trace_cmd->add_option("element", path, "Element file")->required();
  trace_cmd->add_option("--algebra", algebra, "chromatic (default) or tl")->check(CLI::IsMember({"chromatic", "tl"}));

  auto* basis_cmd = app.add_subcommand("basis", "List the planar partition basis of C_n");
  basis_cmd->add_option("--n", n, "Number of points on each side")->required()->check(CLI::Range(0, 8));

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the trace form on C_n and its eigenvalues");
  gram_cmd->add_option("--n", n, "Number of points on each side")->required()->check(CLI::Range(0, 4));
  gram_cmd->add_option("--Q", q_text, "Value of Q (rational such as 9/2, or decimal)")->required();

  auto* phi_cmd = app.add_subcommand("phi", "Image of a rectangle graph in the Temperley-Lieb algebra");
  phi_cmd->add_option("graph", path, "Graph file")->required();

  auto* tl_trace_cmd = app.add_subcommand("tl-trace", "Markov trace of a Temperley-Lieb element file");
  tl_trace_cmd->add_option("element", path, "TL element file")->required();

  auto* transfer_cmd = app.add_subcommand(
      "transfer",
      "Potts partition function from the transfer matrix product in TL_n. Generators e_j with j outside "
      "1..n-1 are dropped, i.e. open boundary conditions");
  transfer_cmd->add_option("--n", n, "Strands (even)")->required()->check(CLI::Range(2, 16));
  transfer_cmd->add_option("--m", m, "Number of transfer matrix factors")->required()->check(CLI::Range(0, 64));

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a PD code in A");
  bracket_cmd->add_option("pd", path, "PD file")->required();
  bracket_cmd->add_option("--method", method, "state-sum (default) or frontier")
      ->check(CLI::IsMember({"state-sum", "frontier"}));

  auto* so3_cmd = app.add_subcommand("kauffman-so3", "SO(3) Kauffman polynomial in q via chromatic polynomials");
  so3_cmd->add_option("pd", path, "PD file")->required();
  so3_cmd->add_option("--oracle", oracle, "none (default) or cable: also compute from the 2-cable and compare")
      ->check(CLI::IsMember({"none", "cable"}));

  auto* potts_cmd = app.add_subcommand("potts", "Potts partition function on a grid as a polynomial in x");
  potts_cmd->add_option("--rows", rows, "Grid rows")->required()->check(CLI::Range(1, 16));
  potts_cmd->add_option("--cols", cols, "Grid columns")->required()->check(CLI::Range(1, 16));
  potts_cmd->add_option("--Q", potts_q, "Number of spin states")->required()->check(CLI::Range(0, 64));
  potts_cmd->add_option("--method", method, "nets (default) or spins")->check(CLI::IsMember({"nets", "spins"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; exit 1 on any nonzero residual");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"bmw-relations", "diagram-commute", "basis-rank", "trivalent", "potts-oracle"}));
  verify_cmd->add_option("--n", n, "Restrict to one size (default: the suite's standard range)");
  verify_cmd->add_option("--seed", seed, "Seed for random cases (default " + std::to_string(kDefaultSeed) + ")");
  verify_cmd->add_option("--cases", cases, "Random graphs per size for diagram-commute (default 20)")
      ->check(CLI::Range(0, 100000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (chromatic_cmd->parsed() || dual_cmd->parsed()) {
      const EmbeddedGraph g = read_graph_file(path);
      LaurentPolynomial p(Var::Q);
      if (dual_cmd->parsed()) {
        p = dual_chromatic(g);
      } else if (method == "ranksum") {
        p = chromatic_ranksum(to_multigraph(g));
      } else {
        p = chromatic_delcon(to_multigraph(g));
      }
      const std::string name = chromatic_cmd->parsed() ? "chromatic" : "dual-chromatic";
      if (!at_text.empty()) {
        emit_rational(out, globals, name, p.evaluate(Rational::parse(at_text)));
      } else {
        emit_poly(out, globals, name, p);
      }
      return kSuccess;
    }
    if (trace_cmd->parsed() || tl_trace_cmd->parsed()) {
      LaurentPolynomial p(Var::Q);
      if (tl_trace_cmd->parsed() || algebra == "tl") {
        p = tl_trace(read_tl_element_file(path));
      } else {
        p = trace(read_chromatic_element_file(path));
      }
      emit_poly(out, globals, tl_trace_cmd->parsed() ? "tl-trace" : "trace", p);
      return kSuccess;
    }
    if (basis_cmd->parsed()) {
      const auto basis = enumerate_basis(n);
      if (globals.json) {
        json arr = json::array();
        for (const auto& p : basis) arr.push_back(p.str());
        out << json{{"command", "basis"}, {"n", n}, {"size", basis.size()}, {"basis", arr}}.dump() << "\n";
      } else {
        for (const auto& p : basis) out << p.str() << "\n";
      }
      return kSuccess;
    }
    if (gram_cmd->parsed()) {
      const auto basis = enumerate_basis(n);
      std::vector<std::vector<std::string>> entries(basis.size());
      Eigen::MatrixXd matrix;
      bool exact = true;
      Rational q_exact;
      try {
        q_exact = Rational::parse(q_text);
      } catch (const std::invalid_argument&) {
        exact = false;
      }
      if (exact) {
        const auto polys = gram_polynomials(n, globals.jobs);
        matrix.resize(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
          for (std::size_t j = 0; j < basis.size(); ++j) {
            const Rational v = polys[i][j].evaluate(q_exact);
            entries[i].push_back(v.str());
            matrix(i, j) = v.to_double();
          }
        }
      } else {
        double q_value = 0;
        try {
          std::size_t used = 0;
          q_value = std::stod(q_text, &used);
          if (used != q_text.size()) throw std::invalid_argument(q_text);
        } catch (const std::exception&) {
          throw std::invalid_argument("--Q: not a number: " + q_text);
        }
        matrix = gram_matrix(n, q_value, globals.jobs);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          for (std::size_t j = 0; j < basis.size(); ++j) entries[i].push_back(format_double(matrix(i, j)));
        }
      }
      const Eigen::VectorXd eig = basis.empty() ? Eigen::VectorXd() : symmetric_eigenvalues(matrix);
      if (globals.json) {
        json names = json::array();
        for (const auto& p : basis) names.push_back(p.str());
        std::vector<double> ev(eig.data(), eig.data() + eig.size());
        out << json{{"command", "gram"}, {"n", n}, {"Q", q_text}, {"basis", names}, {"matrix", entries},
                    {"eigenvalues", ev}}
                   .dump()
            << "\n";
      } else {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          out << basis[i].str() << " :";
          for (const auto& e : entries[i]) out << " " << e;
          out << "\n";
        }
        out << "eigenvalues:";
        for (Eigen::Index i = 0; i < eig.size(); ++i) out << " " << format_double(eig(i));
        out << "\n";
      }
      return kSuccess;
    }
    if (phi_cmd->parsed()) {
      const TLElement e = phi(read_graph_file(path), globals.jobs);
      if (globals.json) {
        out << json{{"command", "phi"}, {"result", tl_json(e)}}.dump() << "\n";
      } else {
        out << tl_text(e);
      }
      return kSuccess;
    }
    if (transfer_cmd->parsed()) {
      emit_poly(out, globals, "transfer", potts_tl_partition(n, m));
      return kSuccess;
    }
    if (bracket_cmd->parsed()) {
      const LinkDiagram link = read_pd_file(path);
      const LaurentPolynomial p = method == "frontier" ? bracket_frontier(to_bracket_diagram(link))
                                                       : kauffman_bracket(link, globals.jobs);
      emit_poly(out, globals, "bracket", p);
      return kSuccess;
    }
    if (so3_cmd->parsed()) {
      const LinkDiagram link = read_pd_file(path);
      const LaurentPolynomial p = so3_kauffman_via_chromatic(link, globals.jobs);
      if (oracle == "none") {
        emit_poly(out, globals, "kauffman-so3", p);
        return kSuccess;
      }
      const LaurentPolynomial in_a = p.substitute(Var::A);
      const LaurentPolynomial cabled = so3_kauffman_via_cabling(link, globals.jobs);
      const bool match = in_a == cabled;
      if (globals.json) {
        out << json{{"command", "kauffman-so3"}, {"result", poly_json(p)}, {"cable", poly_json(cabled)},
                    {"match", match}}
                   .dump()
            << "\n";
      } else {
        out << p.str() << "\n";
        out << "cable: " << cabled.str() << "\n";
        out << (match ? "oracle agrees" : "ORACLE MISMATCH") << "\n";
      }
      return match ? kSuccess : kVerificationFailure;
    }
    if (potts_cmd->parsed()) {
      const GridSpec grid{rows, cols};
      const LaurentPolynomial p = method == "spins" ? partition_function_spins(grid, potts_q, globals.jobs)
                                                    : partition_function_nets(grid, potts_q, globals.jobs);
      emit_poly(out, globals, "potts", p);
      return kSuccess;
    }
    if (verify_cmd->parsed()) {
      std::vector<Check> checks;
      if (suite == "bmw-relations") {
        checks = suite_bmw(n);
      } else if (suite == "diagram-commute") {
        checks = suite_commute(n, seed, cases, globals.jobs);
      } else if (suite == "basis-rank") {
        checks = suite_basis_rank(n);
      } else if (suite == "trivalent") {
        checks = suite_trivalent();
      } else {
        checks = suite_potts(globals.jobs);
      }
      return emit_checks(out, globals, suite, checks);
    }
  } catch (const ParseError& e) {
    err << "error: " << path << (e.line() ? ":" : ": ") << e.what() << "\n";
    return kInputError;
  } catch (const LimitExceeded& e) {
    err << "error: limit exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace chromalg::cli

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "chromalg/cli.hpp"

namespace {

const std::string kData = CHROMALG_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = chromalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("chromatic subcommand") {
  auto r = run({"chromatic", kData + "/triangle.graph", "--at", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  r = run({"chromatic", kData + "/triangle.graph"});
  CHECK(r.out == "Q^3 - 3*Q^2 + 2*Q^1\n");
  CHECK(run({"chromatic", kData + "/triangle.graph", "--method", "ranksum"}).out == r.out);
  CHECK(run({"dual-chromatic", kData + "/theta.graph"}).out == "Q^3 - 3*Q^2 + 2*Q^1\n");
}

TEST_CASE("SO(3) subcommand") {
  auto r = run({"kauffman-so3", kData + "/unknot.pd"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^1 + 1 + q^-1\n");
  r = run({"kauffman-so3", kData + "/trefoil.pd", "--oracle", "cable"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle agrees") != std::string::npos);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "--suite", "diagram-commute", "--n", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "bmw-relations", "--n", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "trivalent"}).code == 0);
  CHECK(run({"verify", "--suite", "basis-rank", "--n", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "bmw-relations", "--n", "5"}).code == 2);
  const auto a = run({"verify", "--suite", "diagram-commute", "--n", "1", "--seed", "99", "--cases", "5"});
  const auto b = run({"verify", "--suite", "diagram-commute", "--n", "1", "--seed", "99", "--cases", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("other subcommands") {
  CHECK(run({"basis", "--n", "2"}).out == "{1,2}{3,4}\n{1,2,3,4}\n{1,4}{2,3}\n");
  CHECK(run({"trace", kData + "/star.element"}).out == "Q^2 - 3*Q^1 + 2\n");
  CHECK(run({"tl-trace", kData + "/p2.tl"}).out == "d^2 - 1\n");
  CHECK(run({"transfer", "--n", "2", "--m", "1"}).out == "d^2 + 1\n");
  CHECK(run({"potts", "--rows", "2", "--cols", "2", "--Q", "2"}).out == "2*x^4 + 12*x^2 + 2\n");
  CHECK(run({"bracket", kData + "/unknot.pd"}).out == "-A^2 - A^-2\n");
  const auto gram = run({"gram", "--n", "2", "--Q", "4"});
  CHECK(gram.code == 0);
  CHECK(gram.out.find("eigenvalues: 3 6 30") != std::string::npos);
  CHECK(run({"phi", kData + "/h.graph"}).code == 0);
}

TEST_CASE("output does not depend on the thread count") {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"potts", "--rows", "2", "--cols", "3", "--Q", "3", "--method", "spins"},
           {"bracket", kData + "/figure8.pd"},
           {"kauffman-so3", kData + "/hopf.pd"},
           {"phi", kData + "/h.graph"}}) {
    auto one = cmd;
    auto four = cmd;
    one.insert(one.begin(), {"--jobs", "1"});
    four.insert(four.begin(), {"--jobs", "4"});
    CHECK(run(one).out == run(four).out);
  }
}

TEST_CASE("json output") {
  const auto r = run({"--json", "chromatic", kData + "/triangle.graph"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["text"] == "Q^3 - 3*Q^2 + 2*Q^1");
  CHECK(j["result"]["terms"].size() == 3);
  const auto v = nlohmann::json::parse(run({"--json", "verify", "--suite", "trivalent"}).out);
  CHECK(v["failed"] == 0);
}

TEST_CASE("input errors exit with code 2") {
  const auto bad = temp_file("chromalg_bad.graph", "n_bottom 0\nn_top 0\ndarts 2\nalpha 0 q\n");
  auto r = run({"chromatic", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find(":4:9:") != std::string::npos);

  const auto bad_pd = temp_file("chromalg_bad.pd", "X 1 2 3 4\nZ\n");
  r = run({"bracket", bad_pd});
  CHECK(r.code == 2);
  CHECK(r.err.find(":2:1:") != std::string::npos);

  CHECK(run({"chromatic", "/nonexistent.graph"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"potts", "--rows", "2"}).code == 2);
  CHECK(run({"chromatic", kData + "/triangle.graph", "--method", "magic"}).code == 2);
  CHECK(run({"chromatic", kData + "/triangle.graph", "--at", "x"}).code == 2);
  CHECK(run({"transfer", "--n", "3", "--m", "1"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kauffman-so3") != std::string::npos);
  const auto t = run({"transfer", "--help"});
  CHECK(t.code == 0);
  CHECK(t.out.find("open boundary") != std::string::npos);
}

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "mintrans/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mintrans");
  std::ostringstream out;
  std::ostringstream err;
  const int code = mintrans::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MINTRANS_TEST_DATA) + "/" + name; }

std::vector<std::string> sorted_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace

TEST_CASE("enum golden") {
  const auto r = run({"enum", data("h1.hg"), "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 4\n1 3\n2 3\n");
  CHECK(r.err.find("count=3") != std::string::npos);
}

TEST_CASE("enum on an empty edge prints nothing") {
  const auto r = run({"enum", data("empty_edge.hg")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("count=0") != std::string::npos);
}

TEST_CASE("enum matches oracle enum") {
  for (const char* file : {"h1.hg", "triangle.hg", "mixed.hg"}) {
    const auto fast = run({"enum", data(file), "--verify"});
    const auto slow = run({"oracle", "enum", data(file)});
    CHECK(fast.code == 0);
    CHECK(slow.code == 0);
    CHECK(sorted_lines(fast.out) == sorted_lines(slow.out));
  }
}

TEST_CASE("enum options") {
  CHECK(run({"enum", data("h1.hg"), "--limit", "1"}).out == "2 4\n");
  CHECK(run({"enum", data("h1.hg"), "--auto-k", "log"}).code == 0);
  CHECK(run({"enum", data("h1.hg"), "--conformal", "2"}).code == 0);
  CHECK(run({"--threads", "3", "enum", data("h1.hg")}).out == "2 4\n1 3\n2 3\n");
  CHECK(run({"enum", data("h1.hg"), "--k", "9"}).code == mintrans::cli::kExitUsage);
  CHECK(run({"enum", data("h1.hg"), "--k", "2", "--auto-k", "vc"}).code == mintrans::cli::kExitUsage);
}

TEST_CASE("check") {
  const auto dual = run({"check", data("h1.hg"), data("trh1.hg"), "--k", "2"});
  CHECK(dual.code == 0);
  CHECK(dual.out == "DUAL\n");

  const auto missing = run({"check", data("h1.hg"), data("partial_h1.hg"), "--k", "2"});
  CHECK(missing.code == 1);
  CHECK(missing.out == "2 3\n");
  CHECK(missing.err.find("trace-loop") != std::string::npos);

  const auto bad = run({"check", data("h1.hg"), data("bad_g.hg"), "--k", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("2 3 4") != std::string::npos);

  CHECK(run({"check", data("h1.hg"), data("trh1.hg"), "--k", "2", "--conformal"}).out == "DUAL\n");
}

TEST_CASE("small commands") {
  CHECK(run({"vcdim", data("h1.hg")}).out == "1\n");
  CHECK(run({"conformality", data("triangle.hg")}).out == "3\n");
  CHECK(run({"conformality", data("triangle.hg"), "--max", "2"}).out == ">2\n");
  CHECK(run({"extk", data("h1.hg"), "--k", "2"}).out == "1 2\n2 3\n3 4\n");
  CHECK(run({"extk", data("h1.hg"), "--k", "2", "--nondominated"}).out.empty());
  CHECK(run({"oracle", "extk", data("h1.hg"), "--k", "2"}).out == "1 2\n2 3\n3 4\n");
  CHECK(run({"oracle", "dual", data("h1.hg"), data("trh1.hg")}).out == "DUAL\n");
  CHECK(run({"oracle", "dual", data("h1.hg"), data("partial_h1.hg")}).code == 1);
}

TEST_CASE("gen") {
  const auto up = run({"gen", "hat-up", data("h1.hg"), "--k", "1"});
  CHECK(up.code == 0);
  CHECK(up.out == "vertices: 1 2 3 4 _x1\n1 2 _x1\n2 3 _x1\n3 4 _x1\n");
  const auto down = run({"gen", "hat-down", data("h1.hg"), "--k", "4"});
  CHECK(down.out == "vertices: 1 2 3 4 _x1\n1 2\n2 3\n3 4\n1 2 3 4 _x1\n");
  CHECK(run({"gen", "hat-down", data("h1.hg"), "--k", "5"}).code == mintrans::cli::kExitUsage);
}

TEST_CASE("errors map to exit codes") {
  CHECK(run({}).code == mintrans::cli::kExitUsage);
  CHECK(run({"bogus"}).code == mintrans::cli::kExitUsage);
  CHECK(run({"enum", data("does_not_exist.hg")}).code == mintrans::cli::kExitUsage);
  CHECK(run({"enum", data("h1.hg"), "--force-nothing"}).code == mintrans::cli::kExitUsage);
  CHECK(run({"extk", data("triangle.hg"), "--k", "1", "--cap", "1"}).code == mintrans::cli::kExitOverflow);
  CHECK(run({"vcdim", data("duplicate_vertex.hg")}).code == mintrans::cli::kExitParse);
  CHECK(run({"--help"}).code == 0);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "apsp/cli.hpp"

namespace fs = std::filesystem;
using apsp::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "apsp");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("apsp_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const fs::path p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("solve prints distances, stats and a summary") {
  TempDir tmp;
  const std::string in = tmp.file("p3.txt", "0 1\n1 2\n");
  const Outcome r = call({"solve", in, "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0,1,2\n1,0,1\n2,1,0\n", 0) == 0);
  CHECK(contains(r.out, "epoch,max_element,finite_before,finite_after,delta,convergence_quantity,convergence_pct\n"));
  CHECK(contains(r.out, "\n1,2,7,9,2,9,100.000\n"));
  CHECK(contains(r.out, "n=3 epochs=2 converged=yes stop=fixed_point"));
  CHECK(contains(r.out, "oracle: MATCH"));
}

TEST_CASE("solve writes files") {
  TempDir tmp;
  const std::string in = tmp.file("p3.txt", "0 1\n1 2 3\n");
  SUBCASE("csv, stats and heatmap") {
    const std::string out = tmp.file("d.csv"), stats = tmp.file("s.csv"), pgm = tmp.file("h.pgm");
    const Outcome r = call({"solve", in, "-o", out, "--stats", stats, "--heatmap", pgm});
    CHECK(r.code == 0);
    CHECK(slurp(out) == "0,1,4\n1,0,3\n4,3,0\n");
    CHECK(slurp(stats).rfind("epoch,", 0) == 0);
    CHECK(slurp(pgm).rfind("P5\n3 3\n255\n", 0) == 0);
    CHECK(r.out.rfind("n=3 ", 0) == 0);
  }
  SUBCASE("binary") {
    const std::string out = tmp.file("d.bin");
    CHECK(call({"solve", in, "-o", out, "--format", "bin", "--width", "32"}).code == 0);
    const std::string b = slurp(out);
    REQUIRE(b.size() == 24 + 72);
    CHECK(b.substr(0, 8) == "APSPDIST");
    CHECK(b[16] == 32);
  }
}

TEST_CASE("solve error paths") {
  TempDir tmp;
  SUBCASE("missing file") { CHECK(call({"solve", tmp.file("nope.txt")}).code == 2); }
  SUBCASE("parse error names the line") {
    const Outcome r = call({"solve", tmp.file("bad.txt", "0 1\n1 q\n")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 2"));
  }
  SUBCASE("non-convergence") {
    std::string path;
    for (int i = 0; i < 8; ++i) path += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    const Outcome r = call({"solve", tmp.file("path.txt", path), "--max-epochs", "1"});
    CHECK(r.code == 4);
    CHECK(contains(r.out, "converged=no stop=epoch_cap"));
  }
  SUBCASE("32-bit floats refuse a diameter-20 graph at 8508 nodes") {
    // 405 disjoint 21-node paths plus 3 isolated nodes
    std::string text = "#n 8508\n";
    for (int p = 0; p < 405; ++p)
      for (int i = 0; i < 20; ++i)
        text += std::to_string(p * 21 + i) + " " + std::to_string(p * 21 + i + 1) + "\n";
    const Outcome r = call({"solve", tmp.file("paths.txt", text), "--width", "32", "-o", tmp.file("o.csv")});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "infeasible"));
  }
}

TEST_CASE("flag validation") {
  TempDir tmp;
  const std::string in = tmp.file("p3.txt", "0 1\n1 2\n");
  CHECK(call({"solve", in, "--kernel", "naive", "--sparse-threshold", "0.2"}).code == 2);
  CHECK(call({"solve", in, "--kernel", "fastest"}).code == 2);
  CHECK(call({"solve", in, "--width", "16"}).code == 2);
  CHECK(call({"solve", in, "--format", "bin"}).code == 2);
  CHECK(call({"solve", in, "--trust-diameter"}).code == 2);
  CHECK(call({"solve", in, "--sparse-threshold", "1.5"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"solve", in, "--kernel", "strassen", "--block", "2"}).code == 0);
  CHECK(call({"solve", in, "--sparse-threshold", "0.5"}).code == 0);
}

TEST_CASE("check prints the precision limits") {
  const Outcome r = call({"check", "--n", "8508"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "width=32 emax=127.9 nominal_limit=9.8 "));
  CHECK(contains(r.out, "width=64 emax=1024.0 nominal_limit=78.4 "));
  CHECK(contains(r.out, "estimate_diameter=10.049"));
  CHECK(contains(r.out, "verdict width=64 diameter=10.049: FEASIBLE"));

  CHECK(contains(call({"check", "--n", "10"}).out, "width=64 emax=1024.0 nominal_limit=296.0 "));
  CHECK(contains(call({"check", "--n", "1"}).out, "width=32 emax=127.9 nominal_limit=127.9 "));
  CHECK(contains(call({"check", "--n", "8508", "--width", "32", "--diameter", "20"}).out, ": INFEASIBLE"));
  CHECK(call({"check"}).code == 2);
}

TEST_CASE("gen") {
  TempDir tmp;
  const std::string a = tmp.file("a.txt"), b = tmp.file("b.txt");
  CHECK(call({"gen", "--n", "100", "--m", "2", "--seed", "7", "-o", a}).code == 0);
  CHECK(call({"gen", "--n", "100", "--m", "2", "--seed", "7", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("#n 100\n", 0) == 0);

  const Outcome small = call({"gen", "--n", "5", "--m", "1"});
  CHECK(small.code == 0);
  CHECK(contains(small.err, "n=5 edges=4"));

  const Outcome solved = call({"gen", "--n", "1000", "--m", "3", "--solve", "-o", a});
  CHECK(solved.code == 0);
  CHECK(contains(solved.out, "edges=2991"));
  CHECK(contains(solved.out, "within_band=yes"));

  CHECK(call({"gen", "--n", "3", "--m", "3"}).code == 2);
}

TEST_CASE("bench emits one row per algorithm and kernel") {
  const Outcome r = call({"bench", "--n", "200", "--m", "2", "--seed", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "algorithm,kernel,n,iterations,seconds,status");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].rfind("floyd_warshall,-,200,", 0) == 0);
  CHECK(rows[1].rfind("alon_n,auto,200,8,", 0) == 0);
  for (const auto& row : rows) {
    CAPTURE(row);
    CHECK(row.substr(row.rfind(',') + 1) == "ok");
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include "graphk/errors.hpp"
#include "graphk/textio.hpp"

#include "support/fixtures.hpp"
#include "support/gen.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace graphk;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "graphk_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

const std::string kGraphE =
    "vertex u\nvertex v\nedge u u inf\nedge u v 1\nedge v u 1\nedge v v inf\n";
const std::string kGraphF =
    "vertex a\nvertex b\nvertex c\n"
    "edge a a 2\nedge a b 1\nedge a c 1\n"
    "edge b a 1\nedge b b 2\nedge b c 1\n"
    "edge c a 1\nedge c b 1\nedge c c inf\n";

}  // namespace

TEST_CASE("graph file parsing errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("vertex a\nedge a a 0\n"),
                       "line 2: count must be a positive integer or `inf`", input_error);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), input_error);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a b 1\n"), input_error);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a a 1\nedge a a 2\n"), input_error);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a a 1\nvertex b\n"), input_error);
  CHECK_THROWS_AS(parse_graph("# nothing\n"), input_error);
  CHECK_THROWS_AS(parse_graph("frob a\n"), input_error);
}

TEST_CASE("graph printing round-trips to an equal graph") {
  testgen::Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    Graph g = testgen::random_graph(rng, 1, 5, 3, 20);
    Graph back = parse_graph(print_graph(g));
    CHECK(back.names() == g.names());
    CHECK(back.matrix() == g.matrix());
  }
  Graph e = parse_graph(kGraphE);
  CHECK(print_graph(e) == kGraphE);
}

TEST_CASE("script parsing") {
  MoveScript one = parse_script("cuntz-splice v\n");
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].kind == MoveKind::cuntz_splice);

  MoveScript split = parse_script("outsplit v :: v=1 :: v=inf\n");
  REQUIRE(split.steps.size() == 1);
  REQUIRE(split.steps[0].partition.blocks.size() == 2);
  CHECK(split.steps[0].partition.blocks[1][0].second.infinite);

  CHECK_THROWS_AS(parse_script("outsplit v :: :: v=1\n"), input_error);
  CHECK_THROWS_AS(parse_script("insplit v :: v=inf\n"), input_error);
  CHECK_THROWS_AS(parse_script("frobnicate v\n"), input_error);
  CHECK_THROWS_AS(parse_script("transitive v\n"), input_error);

  // print and reparse
  MoveScript s = parse_script("outsplit v :: v=1 :: v=inf, w=2\ntransitive v v w\nreduce w\n");
  MoveScript back = parse_script(print_script(s));
  CHECK(print_script(back) == print_script(s));
}

TEST_CASE("field descriptor parsing") {
  CHECK(parse_field("Q").kind == FieldKind::rationals);
  CHECK(parse_field("R").kind == FieldKind::reals);
  CHECK(parse_field("C").kind == FieldKind::complexes);
  CHECK(parse_field("F4").order == 4);
  CHECK(parse_field("algclosed").characteristic == 0);
  CHECK(parse_field("algclosed:p=5").characteristic == 5);
  CHECK(parse_field("nfq").kind == FieldKind::nfq_generic);
  CHECK(parse_field("generic").kind == FieldKind::generic);
  CHECK_THROWS_AS(parse_field("F6"), input_error);
  CHECK_THROWS_AS(parse_field("K"), input_error);
  for (const char* text : {"Q", "R", "C", "F4", "algclosed", "algclosed:p=5", "nfq", "generic"}) {
    CHECK(print_field(parse_field(text)) == text);
  }
}

TEST_CASE("invariants subcommand golden output") {
  auto e = write_file("E.graph", kGraphE);
  Result r = run({"invariants", e.string(), "--field", "Q", "--porcelain"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "k0: Z^2\n"
        "unit_class: (1, 1)\n"
        "k1_top: 0\n"
        "k1_alg: Kx^2\n"
        "sing_count: 2\n"
        "det_sign: n/a\n"
        "simple: true\n"
        "has_cycle: true\n"
        "infinite_edges: true\n");
  // byte-identical across runs
  Result again = run({"invariants", e.string(), "--field", "Q", "--porcelain"});
  CHECK(again.out == r.out);
}

TEST_CASE("snf subcommand golden output") {
  auto m = write_file("M.mat", "3 2\n1 1\n1 1\n1 1\n");
  Result r = run({"snf", m.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "d: 1 0\n");
}

TEST_CASE("classify subcommand exit codes and porcelain output") {
  auto e = write_file("E.graph", kGraphE);
  auto f = write_file("F.graph", kGraphF);
  Result r = run({"classify", "morita", e.string(), f.string(), "--field", "Q", "--porcelain"});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "outcome: NotEquivalent\n"
        "reason: infinite-edge-invariant: sing_count 2 != 1\n");

  Result self = run({"classify", "morita", e.string(), e.string(), "--field", "Q"});
  CHECK(self.code == 0);

  auto e2 = write_file("E2.graph", "vertex v\nedge v v 2\n");
  auto e2m = write_file("E2m.graph", print_graph(fixtures::e_two_minus()));
  Result open = run({"classify", "morita", e2.string(), e2m.string(), "--field", "Q"});
  CHECK(open.code == 2);

  auto bad = write_file("bad.graph", "vertex a\nvertex b\nedge a a 1\nedge b b 1\n");
  Result na = run({"classify", "morita", bad.string(), e2.string(), "--field", "Q"});
  CHECK(na.code == 3);

  Result iso = run({"classify", "iso", e2m.string(), e2m.string(), "--field", "Q"});
  CHECK(iso.code == 3);  // finite-edge graphs fall outside the pointed classification
}

TEST_CASE("check subcommand golden output") {
  auto e = write_file("E.graph", kGraphE);
  Result r = run({"check", e.string(), "--porcelain"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "vertices: 2\n"
        "regular: \n"
        "singular: u v\n"
        "sinks: \n"
        "infinite_emitters: u v\n"
        "sources: \n"
        "cofinal: true\n"
        "condition_L: true\n"
        "sing_reachable: true\n"
        "simple: true\n");
}

TEST_CASE("porcelain outputs are byte-identical across runs") {
  auto e = write_file("E.graph", kGraphE);
  auto f = write_file("F.graph", kGraphF);
  std::vector<std::vector<std::string>> commands{
      {"classify", "morita", e.string(), f.string(), "--field", "Q", "--porcelain"},
      {"k2-status", f.string(), "--field", "Q", "--porcelain"},
      {"invariants", f.string(), "--field", "F4", "--porcelain"},
      {"check", f.string(), "--porcelain"},
  };
  for (const auto& cmd : commands) {
    Result a = run(cmd);
    Result b = run(cmd);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("errors exit with code 4 and a single-line diagnostic") {
  auto bad = write_file("broken.graph", "vertex a\nedge a b 1\n");
  Result r = run({"check", bad.string()});
  CHECK(r.code == 4);
  CHECK(r.err == "error: line 2: unknown vertex 'b'\n");
  Result missing = run({"check", "/nonexistent/file.graph"});
  CHECK(missing.code == 4);
}

TEST_CASE("matrix printing round-trips") {
  testgen::Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    IntMatrix m = testgen::random_matrix(rng, 5, 99);
    CHECK(parse_matrix(print_matrix(m)) == m);
  }
}

TEST_CASE("config file parsing") {
  cli::Config cfg = cli::parse_config("aut_bound = 128\nsearch_depth = 3\n# comment\n");
  CHECK(cfg.aut_bound == 128);
  CHECK(cfg.search_depth == 3);
  CHECK(cfg.max_split == 1);
  CHECK_THROWS_AS(cli::parse_config("bogus = 1\n"), input_error);
  CHECK_THROWS_AS(cli::parse_config("aut_bound 12\n"), input_error);
}

TEST_CASE("k2-status and verify-bridge subcommands") {
  auto e = write_file("E.graph", kGraphE);
  auto f = write_file("F.graph", kGraphF);
  CHECK(run({"k2-status", e.string(), "--field", "Q"}).out == "k2_status: Torsion\n");
  CHECK(run({"k2-status", f.string(), "--field", "Q"}).out == "k2_status: NotTorsion\n");
  CHECK(run({"k2-status", f.string()}).out == "k2_status: Unknown\n");

  auto einf = write_file("Einf.graph", "vertex v\nedge v v inf\n");
  auto empty = write_file("empty.moves", "");
  auto splice = write_file("splice.moves", "cuntz-splice v\n");
  auto einfm = write_file("Einfm.graph", print_graph(fixtures::e_infinity_minus()));
  Result good = run({"verify-bridge", einf.string(), splice.string(), einfm.string(),
                     empty.string()});
  CHECK(good.code == 0);
  CHECK(good.out == "bridge: true\n");
  Result badbr =
      run({"verify-bridge", einf.string(), empty.string(), einfm.string(), empty.string()});
  CHECK(badbr.code == 1);
  CHECK(badbr.out == "bridge: false\n");
}

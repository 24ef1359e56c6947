#include <catch2/catch_amalgamated.hpp>

#include "graphgram/cli.hpp"
#include "helpers.hpp"

using namespace graphgram;
using testutil::read_text;
using testutil::temp_path;
using testutil::write_text;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli induce and verify") {
  std::string input = temp_path("demo.el");
  write_text(input, serialize_edge_list(generate({.kind = GraphKind::demo_molecule})));
  std::string gram = temp_path("demo.gram");

  SECTION("induce writes a grammar and a summary, verify accepts it") {
    RunResult r = run_cli({"induce", "--input", input, "--out", gram});
    CHECK(r.code == 0);
    CHECK(r.out.find("iterations=2") != std::string::npos);
    CHECK(r.out.find("dl 12 -> 9") != std::string::npos);
    CHECK(!read_text(gram).empty());

    RunResult v = run_cli({"verify", "--input", input, "--grammar", gram});
    CHECK(v.code == 0);
    CHECK(v.out.find("verified") != std::string::npos);
  }

  SECTION("verify fails on a grammar from a different input") {
    std::string other = temp_path("tri.el");
    write_text(other, serialize_edge_list(generate({.kind = GraphKind::two_triangles})));
    std::string other_gram = temp_path("tri.gram");
    REQUIRE(run_cli({"induce", "--input", other, "--out", other_gram}).code == 0);
    RunResult v = run_cli({"verify", "--input", input, "--grammar", other_gram});
    CHECK(v.code == 1);
  }

  SECTION("verify respects induction flags") {
    std::string gram2 = temp_path("demo_greedy.gram");
    REQUIRE(run_cli({"induce", "--input", input, "--strategy", "greedy", "--out", gram2}).code == 0);
    CHECK(run_cli({"verify", "--input", input, "--grammar", gram2}).code == 0);  // same result here
    CHECK(run_cli({"verify", "--input", input, "--strategy", "greedy", "--grammar", gram2}).code == 0);
  }
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({"induce"}).code == 2);                      // no --input
  CHECK(run_cli({"frobnicate"}).code == 2);                  // unknown subcommand
  CHECK(run_cli({}).code == 2);                              // no subcommand
  CHECK(run_cli({"gen", "--kind", "nonesuch"}).code == 2);   // bad kind
  CHECK(run_cli({"induce", "--input", "x", "--format", "csv"}).code == 2);
}

TEST_CASE("cli gen, expand and stats") {
  SECTION("gen emits a parseable edge list") {
    RunResult r = run_cli({"gen", "--kind", "two_triangles"});
    REQUIRE(r.code == 0);
    Graph g = parse_edge_list(r.out);
    CHECK(g.live_node_count() == 6);
    CHECK(g.live_edge_count() == 7);
  }

  SECTION("expand inverts a grammar file structurally") {
    std::string input = temp_path("chain.el");
    RunResult gen = run_cli({"gen", "--kind", "nucleotide_chain", "--n", "4", "--out", input});
    REQUIRE(gen.code == 0);
    std::string gram = temp_path("chain.gram");
    REQUIRE(run_cli({"induce", "--input", input, "--out", gram}).code == 0);
    RunResult ex = run_cli({"expand", "--grammar", gram});
    REQUIRE(ex.code == 0);
    Graph back = parse_edge_list(ex.out);
    Graph orig = parse_edge_list(read_text(input));
    CHECK(back.live_node_count() == orig.live_node_count());
    CHECK(back.live_edge_count() == orig.live_edge_count());
  }

  SECTION("stats prints the lexicon and scores") {
    std::string input = temp_path("demo.el");
    write_text(input, serialize_edge_list(generate({.kind = GraphKind::demo_molecule})));
    RunResult r = run_cli({"stats", "--input", input});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("nodes 6 edges 6 dl 12") != std::string::npos);
    CHECK(r.out.find("C-H") != std::string::npos);
  }

  SECTION("trace prints per-iteration tables") {
    std::string input = temp_path("demo.el");
    write_text(input, serialize_edge_list(generate({.kind = GraphKind::demo_molecule})));
    RunResult r = run_cli({"induce", "--input", input, "--trace"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("iter 1: C-H m=2") != std::string::npos);
  }
}

TEST_CASE("cli dot export") {
  std::string input = temp_path("demo.el");
  write_text(input, serialize_edge_list(generate({.kind = GraphKind::demo_molecule})));
  RunResult r = run_cli({"dot", "--input", input});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("graph G {") == 0);

  std::string gram = temp_path("demo.gram");
  REQUIRE(run_cli({"induce", "--input", input, "--out", gram}).code == 0);
  RunResult g = run_cli({"dot", "--grammar", gram});
  REQUIRE(g.code == 0);
  CHECK(g.out.find("cluster_residual") != std::string::npos);
}

TEST_CASE("cli output files are byte-identical across runs") {
  std::string input = temp_path("grid.el");
  RunResult gen = run_cli({"gen", "--kind", "rect_grid", "--rows", "5", "--cols", "6", "--out", input});
  REQUIRE(gen.code == 0);
  std::string g1 = temp_path("grid1.gram"), g2 = temp_path("grid2.gram");
  REQUIRE(run_cli({"induce", "--input", input, "--out", g1}).code == 0);
  REQUIRE(run_cli({"induce", "--input", input, "--out", g2}).code == 0);
  CHECK(read_text(g1) == read_text(g2));
  CHECK(!read_text(g1).empty());
}

TEST_CASE("cli pdb ingestion") {
  // a tiny four-carbon ring via PDB records, hydrogens stripped
  std::string pdb;
  auto atom = [&](int serial, const char* el) {
    char buf[81];
    std::snprintf(buf, sizeof buf,
                  "ATOM  %5d  %-3s UNK A   1       0.000   0.000   0.000  1.00  0.00          %2s",
                  serial, el, el);
    pdb += std::string(buf) + "\n";
  };
  atom(1, "C");
  atom(2, "C");
  atom(3, "C");
  atom(4, "C");
  atom(5, "H");
  pdb += "CONECT    1    2    5\nCONECT    2    3\nCONECT    3    4\nCONECT    4    1\n";
  std::string input = temp_path("ring.pdb");
  write_text(input, pdb);

  RunResult r = run_cli({"stats", "--input", input, "--format", "pdb", "--strip", "H"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("nodes 4 edges 4") != std::string::npos);

  RunResult rl = run_cli({"stats", "--input", input, "--format", "pdb", "--strip", "H",
                          "--relabel-degree"});
  REQUIRE(rl.code == 0);
  CHECK(rl.out.find("d2-d2") != std::string::npos);
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace graphgram;

namespace {

std::vector<std::pair<std::string, int>> readable(const EdgeLexicon& lex, const TypeTable& types) {
  std::vector<std::pair<std::string, int>> out;
  for (const EdgeLexicon::Entry& e : lex.entries())
    out.emplace_back(key_to_string(e.key, types), static_cast<int>(e.edge_ids.size()));
  return out;
}

}  // namespace

TEST_CASE("build_lexicon") {
  SECTION("demo molecule: {C-C:1, C-H:4, H-H:1} in tour order") {
    Graph g = generate({.kind = GraphKind::demo_molecule});
    EdgeLexicon lex = build_lexicon(g);
    std::vector<std::pair<std::string, int>> expect = {{"C-C", 1}, {"C-H", 4}, {"H-H", 1}};
    CHECK(readable(lex, g.types()) == expect);
    CHECK(lex.total_edges() == g.live_edge_count());
  }

  SECTION("empty graph gives the empty lexicon") {
    Graph g = construct_graph({}, {});
    CHECK(build_lexicon(g).type_count() == 0);
  }

  SECTION("directed 2-cycle keeps two distinct keys") {
    Graph g = construct_graph({{0, "A"}, {1, "B"}}, {{0, 1, "-", true}, {1, 0, "-", true}});
    EdgeLexicon lex = build_lexicon(g);
    std::vector<std::pair<std::string, int>> expect = {{"A>B", 1}, {"B>A", 1}};
    CHECK(readable(lex, g.types()) == expect);
  }
}

TEST_CASE("apply_contraction_delta") {
  SECTION("contraction delta matches a full rebuild") {
    Graph g = generate({.kind = GraphKind::demo_molecule});
    EdgeLexicon lex = build_lexicon(g);
    std::vector<EdgeId> ch = {1, 3};  // C1-H1, C2-H3
    EdgeTypeKey key = edge_type_of(g, 1);
    std::vector<Production> prods;
    ContractionOutcome out = contract_matched(g, key, MatchingResult{ch}, prods);
    apply_contraction_delta(lex, out.delta, g);
    CHECK(lexicon_matches_rebuild(lex, g));
    CHECK(lex.total_edges() == g.live_edge_count());
    // every original C-H edge was matched or rewritten onto a hyper-node
    CHECK(lex.count(key) == 0);
    std::map<std::string, int> kinds;
    for (const EdgeLexicon::Entry& e : lex.entries())
      kinds[key_to_string(e.key, g.types())] = static_cast<int>(e.edge_ids.size());
    CHECK(kinds == std::map<std::string, int>{{"CH.0-CH.0", 1}, {"H-CH.0", 2}, {"H-CH.1", 1}});
  }

  SECTION("empty delta leaves the lexicon unchanged") {
    Graph g = generate({.kind = GraphKind::demo_molecule});
    EdgeLexicon lex = build_lexicon(g);
    auto before = lex.as_count_map();
    apply_contraction_delta(lex, {}, g);
    CHECK(lex.as_count_map() == before);
  }

  SECTION("delta naming an unregistered edge fails") {
    Graph g = generate({.kind = GraphKind::demo_molecule});
    EdgeLexicon lex = build_lexicon(g);
    ContractionDelta delta;
    delta.ops.push_back({true, 0});
    apply_contraction_delta(lex, delta, g);  // first removal fine
    try {
      apply_contraction_delta(lex, delta, g);  // second removal of the same edge
      FAIL("expected UnregisteredEdge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unregistered_edge);
    }
  }
}

TEST_CASE("incremental lexicon stays equal to rebuild across a whole run") {
  for (std::uint32_t seed : {3u, 7u, 19u}) {
    Graph g = testutil::small_random_graph(seed);
    InductionConfig cfg;
    cfg.validate_lexicon = true;  // induce throws if the increments diverge
    CHECK_NOTHROW(induce(g, cfg));
  }
}

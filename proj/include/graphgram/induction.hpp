#pragma once

// The main loop: score edge types, pick the winner, contract its matched
// occurrences into hyper-nodes, rewrite incident edges, repeat until no
// type can be abstracted at least min_support times.

#include "graphgram/core.hpp"
#include "graphgram/grammar.hpp"
#include "graphgram/lexicon.hpp"
#include "graphgram/matching.hpp"

namespace graphgram {

enum class SelectionStrategy {
  matching_count,  // abstractable occurrences via maximum-cardinality matching
  raw_frequency,   // greedy baseline: raw occurrence count, FCFS conflicts
};

struct InductionConfig {
  int min_support = 2;
  std::optional<int> max_iterations;
  SelectionStrategy strategy = SelectionStrategy::matching_count;
  bool inline_single_use = true;
  bool validate_lexicon = false;  // cross-check incremental lexicon against a full rebuild
};

struct TypeScore {
  EdgeTypeKey key;
  int count = 0;  // live occurrences
  int score = 0;  // strategy-dependent
};

struct IterationRecord {
  EdgeTypeKey chosen;
  int matching_size = 0;
  int production_index = k_none;
  std::vector<TypeScore> scores;
};

struct GrammarResult {
  GraphGrammar grammar;
  std::vector<IterationRecord> trace;
  int source_dl = 0;
  int final_dl = 0;
};

/// One row per lexicon entry, in first-appearance order. matching_count
/// scores a type by its maximum matching (how many occurrences can be
/// abstracted simultaneously); raw_frequency scores by occurrence count.
/// Self-loops are excluded either way, so loop-only types score 0.
inline std::vector<TypeScore> score_edge_types(const Graph& g, const EdgeLexicon& lex,
                                               SelectionStrategy strategy) {
  std::vector<TypeScore> out;
  for (const EdgeLexicon::Entry& entry : lex.entries()) {
    TypeScore row;
    row.key = entry.key;
    row.count = static_cast<int>(entry.edge_ids.size());
    if (strategy == SelectionStrategy::matching_count) {
      row.score = max_matching(g, &entry.edge_ids).size();
    } else {
      int non_loops = 0;
      for (EdgeId id : entry.edge_ids) non_loops += g.edge(id).u != g.edge(id).v ? 1 : 0;
      row.score = non_loops;
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// Highest score wins, ties broken by first appearance; no winner at or
/// above min_support means no compression is possible.
inline std::optional<EdgeTypeKey> select_edge_type(const std::vector<TypeScore>& scores,
                                                   const InductionConfig& config) {
  const TypeScore* best = nullptr;
  for (const TypeScore& row : scores)
    if (!best || row.score > best->score) best = &row;
  if (!best || best->score < config.min_support) return std::nullopt;
  return best->key;
}

struct ContractionOutcome {
  int production_index = k_none;
  std::vector<NodeId> hyper_nodes;  // one per matched edge, creation order
  ContractionDelta delta;
};

namespace detail {

inline std::string suggest_name(const TypeTable& types, const EdgeTypeKey& key) {
  std::string name = types.name(key.type_a) + types.name(key.type_b);
  if (name.size() > 24) return "";  // fall back to N<id>
  return name;
}

}  // namespace detail

/// Substitutes each matched occurrence of the chosen type with a hyper-node
/// of a freshly allocated non-terminal type. Edges incident to the matched
/// pair re-attach behind constituent index 0 (the key's first endpoint slot)
/// or 1; an unmatched edge between the pair becomes a self-loop. Returns the
/// production index and the ordered lexicon delta.
inline ContractionOutcome contract_matched(Graph& g, const EdgeTypeKey& key,
                                           const MatchingResult& matching,
                                           std::vector<Production>& productions) {
  std::set<NodeId> matched_nodes;
  for (EdgeId eid : matching.edge_ids) {
    const Graph::Edge& e = g.edge(eid);
    if (!e.alive) fail(Errc::invalid_matching, "retired edge " + std::to_string(eid));
    if (e.u == e.v) fail(Errc::invalid_matching, "self-loop " + std::to_string(eid));
    if (edge_type_of(g, eid) != key)
      fail(Errc::type_mismatch, "edge " + std::to_string(eid) + " is not of the chosen type");
    if (!matched_nodes.insert(e.u).second || !matched_nodes.insert(e.v).second)
      fail(Errc::invalid_matching, "edges share a node");
  }

  TypeId nt = g.types().add_nonterminal(detail::suggest_name(g.types(), key));
  Production prod;
  prod.lhs = nt;
  prod.constituents = {key.type_a, key.type_b};
  prod.edges.push_back({0, key.path_a, 1, key.path_b, key.label, key.directed});
  int production_index = static_cast<int>(productions.size());
  productions.push_back(std::move(prod));

  ContractionOutcome out;
  out.production_index = production_index;

  std::vector<EdgeId> matched = matching.edge_ids;
  std::sort(matched.begin(), matched.end());
  for (EdgeId eid : matched) {
    const Graph::Edge e = g.edge(eid);
    // orient so `first` sits behind the key's first endpoint slot
    NodeId first = e.u, second = e.v;
    if (!key.directed) {
      auto end_u = std::make_pair(g.node(e.u).type, e.path_u);
      auto end_v = std::make_pair(g.node(e.v).type, e.path_v);
      auto slot_a = std::make_pair(key.type_a, key.path_a);
      bool u_fits = end_u == slot_a, v_fits = end_v == slot_a;
      if (u_fits && v_fits) {
        if (e.v < e.u) std::swap(first, second);  // symmetric ends: lower id first
      } else if (!u_fits) {
        std::swap(first, second);
      }
    }
    NodeId h = g.add_hyper(nt, first, second, eid);
    out.hyper_nodes.push_back(h);
    out.delta.ops.push_back({true, eid});

    std::vector<EdgeId> incident = g.incident(first);
    const auto first_end = incident.size();  // edges between the pair appear in both lists
    for (EdgeId other : g.incident(second))
      if (!std::binary_search(incident.begin(), incident.begin() + first_end, other))
        incident.push_back(other);
    std::sort(incident.begin(), incident.end());

    for (EdgeId gid : incident) {
      const Graph::Edge ge = g.edge(gid);
      auto reattach = [&](NodeId n, const PortPath& path) -> std::pair<NodeId, PortPath> {
        if (n != first && n != second) return {n, path};
        PortPath p{n == first ? 0 : 1};
        p.insert(p.end(), path.begin(), path.end());
        return {h, std::move(p)};
      };
      auto [nu, pu] = reattach(ge.u, ge.path_u);
      auto [nv, pv] = reattach(ge.v, ge.path_v);
      EdgeId ng = g.rewrite_edge(gid, nu, std::move(pu), nv, std::move(pv), h);
      out.delta.ops.push_back({true, gid});
      out.delta.ops.push_back({false, ng});
    }
  }
  return out;
}

/// Runs the full induction loop on a copy of the input and returns the
/// grammar, the per-iteration trace and the description lengths. The
/// residual graph keeps the contraction history, so expand() on the result
/// restores the input exactly.
inline GrammarResult induce(Graph graph, InductionConfig config = {}) {
  if (config.min_support < 2) fail(Errc::invalid_parameters, "min_support must be >= 2");

  GrammarResult result;
  result.source_dl = graph_dl(graph);

  std::vector<Production> productions;
  EdgeLexicon lexicon = build_lexicon(graph);
  int iterations = 0;
  while (!config.max_iterations || iterations < *config.max_iterations) {
    std::vector<TypeScore> scores = score_edge_types(graph, lexicon, config.strategy);
    std::optional<EdgeTypeKey> chosen = select_edge_type(scores, config);
    if (!chosen) break;

    const std::vector<EdgeId>* occurrences = nullptr;
    for (const EdgeLexicon::Entry& entry : lexicon.entries())
      if (entry.key == *chosen) occurrences = &entry.edge_ids;
    if (!occurrences) throw std::logic_error("selected type missing from lexicon");

    MatchingResult matching = config.strategy == SelectionStrategy::matching_count
                                  ? max_matching(graph, occurrences)
                                  : greedy_matching(graph, *occurrences);
    // The greedy baseline selects by raw count; if conflicts leave fewer
    // than min_support abstractable occurrences, contraction would not pay
    // for its production, so the run stops here.
    if (matching.size() < config.min_support) break;

    ContractionOutcome outcome = contract_matched(graph, *chosen, matching, productions);
    apply_contraction_delta(lexicon, outcome.delta, graph);
    if (config.validate_lexicon && !lexicon_matches_rebuild(lexicon, graph))
      throw std::logic_error("incremental lexicon diverged from rebuild");

    IterationRecord record;
    record.chosen = *chosen;
    record.matching_size = matching.size();
    record.production_index = outcome.production_index;
    record.scores = std::move(scores);
    result.trace.push_back(std::move(record));
    ++iterations;
  }

  result.grammar = GraphGrammar{std::move(graph), std::move(productions)};
  if (config.inline_single_use) result.grammar = inline_single_use(std::move(result.grammar));
  result.final_dl = description_length(result.grammar).total;
  return result;
}

}  // namespace graphgram

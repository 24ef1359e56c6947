#pragma once

// Edge-type registry: one entry per canonical edge type, holding the live
// occurrence list. Entry order is first appearance, which downstream code
// uses as the deterministic tie-break. Maintained incrementally across
// contractions; a full rebuild is the trusted reference.

#include <list>

#include "graphgram/core.hpp"

namespace graphgram {

class EdgeLexicon {
 public:
  struct Entry {
    EdgeTypeKey key;
    std::vector<EdgeId> edge_ids;  // ascending
  };

  const std::list<Entry>& entries() const { return entries_; }

  int count(const EdgeTypeKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? 0 : static_cast<int>(it->second->edge_ids.size());
  }

  int type_count() const { return static_cast<int>(entries_.size()); }

  int total_edges() const {
    int n = 0;
    for (const Entry& e : entries_) n += static_cast<int>(e.edge_ids.size());
    return n;
  }

  void register_edge(const EdgeTypeKey& key, EdgeId id) {
    auto it = index_.find(key);
    if (it == index_.end()) {
      entries_.push_back({key, {id}});
      index_.emplace(key, std::prev(entries_.end()));
      return;
    }
    auto& ids = it->second->edge_ids;
    ids.insert(std::lower_bound(ids.begin(), ids.end(), id), id);
  }

  void unregister_edge(const EdgeTypeKey& key, EdgeId id) {
    auto it = index_.find(key);
    if (it == index_.end()) fail(Errc::unregistered_edge, "edge " + std::to_string(id));
    auto& ids = it->second->edge_ids;
    auto pos = std::lower_bound(ids.begin(), ids.end(), id);
    if (pos == ids.end() || *pos != id) fail(Errc::unregistered_edge, "edge " + std::to_string(id));
    ids.erase(pos);
    if (ids.empty()) {  // no key keeps count zero
      entries_.erase(it->second);
      index_.erase(it);
    }
  }

  std::map<EdgeTypeKey, int> as_count_map() const {
    std::map<EdgeTypeKey, int> out;
    for (const Entry& e : entries_) out[e.key] = static_cast<int>(e.edge_ids.size());
    return out;
  }

 private:
  std::list<Entry> entries_;
  std::map<EdgeTypeKey, std::list<Entry>::iterator> index_;
};

/// Single tour of the graph: registers every live edge under its canonical
/// type, collecting occurrence lists. Entry order is tour order (ascending
/// edge ids), i.e. first appearance.
inline EdgeLexicon build_lexicon(const Graph& g) {
  EdgeLexicon lex;
  for (EdgeId id : g.live_edges()) lex.register_edge(edge_type_of(g, id), id);
  return lex;
}

/// Ordered remove/add operations produced by one contraction. Interleaving
/// matters: an edge touching two matched pairs is rewritten twice within one
/// contraction, so its intermediate id is added and then removed again.
struct ContractionDelta {
  struct Op {
    bool removed;  // false = added
    EdgeId edge;
  };
  std::vector<Op> ops;
};

/// Replays a contraction delta against the lexicon. Retired edges still
/// carry their old endpoints, so unregistration recomputes the same key the
/// edge was registered under.
inline void apply_contraction_delta(EdgeLexicon& lex, const ContractionDelta& delta, const Graph& g) {
  for (const ContractionDelta::Op& op : delta.ops) {
    if (op.removed)
      lex.unregister_edge(edge_type_of(g, op.edge), op.edge);
    else
      lex.register_edge(edge_type_of(g, op.edge), op.edge);
  }
}

inline bool lexicon_matches_rebuild(const EdgeLexicon& lex, const Graph& g) {
  return lex.as_count_map() == build_lexicon(g).as_count_map();
}

}  // namespace graphgram

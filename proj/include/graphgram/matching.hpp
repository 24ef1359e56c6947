#pragma once

// Exact maximum-cardinality matching on general (non-bipartite) multigraphs.
// Self-loops never participate; parallel edges are collapsed to the lowest
// edge id before matching. Scan order is fixed (ascending node ids, ascending
// edge ids) so repeated runs return the identical edge set.

#include <deque>
#include <numeric>
#include <utility>

#include "graphgram/core.hpp"

namespace graphgram {

struct MatchingResult {
  std::vector<EdgeId> edge_ids;  // ascending
  int size() const { return static_cast<int>(edge_ids.size()); }
};

namespace detail {

// Edmonds' augmenting-path search with blossom shrinking, in the compact
// base[]-array formulation. One phase is O(V*E); at most V/2 phases.
class BlossomSolver {
 public:
  explicit BlossomSolver(int n) : n_(n), adj_(n) {}

  void add_edge(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  const std::vector<int>& solve() {
    match_.assign(n_, -1);
    parent_.assign(n_, -1);
    base_.resize(n_);
    used_.assign(n_, false);
    blossom_.assign(n_, false);
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) {
        int finish = find_path(v);
        if (finish >= 0) augment(finish);
      }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          // odd cycle: shrink the blossom rooted at the lowest common ancestor
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;  // augmenting path found
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int finish) {
    int v = finish;
    while (v >= 0) {
      int pv = parent_[v];
      int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

struct MatchingCandidates {
  std::vector<NodeId> vertices;                       // ascending
  std::map<std::pair<NodeId, NodeId>, EdgeId> pairs;  // unordered pair -> lowest edge id
};

inline MatchingCandidates collect_candidates(const Graph& g, const std::vector<EdgeId>* filter) {
  std::vector<EdgeId> ids = filter ? *filter : g.live_edges();
  std::sort(ids.begin(), ids.end());
  MatchingCandidates out;
  std::set<NodeId> verts;
  for (EdgeId id : ids) {
    const Graph::Edge& e = g.edge(id);
    if (filter && !e.alive) fail(Errc::unknown_edge, "retired edge in filter: " + std::to_string(id));
    if (e.u == e.v) continue;  // loops never match
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = out.pairs.emplace(std::make_pair(key.first, key.second), id);
    if (!inserted) it->second = std::min(it->second, id);
    verts.insert(e.u);
    verts.insert(e.v);
  }
  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

}  // namespace detail

inline MatchingResult max_matching(const Graph& g, const std::vector<EdgeId>* edge_filter = nullptr) {
  detail::MatchingCandidates cand = detail::collect_candidates(g, edge_filter);
  std::map<NodeId, int> index;
  for (std::size_t i = 0; i < cand.vertices.size(); ++i) index[cand.vertices[i]] = static_cast<int>(i);

  detail::BlossomSolver solver(static_cast<int>(cand.vertices.size()));
  for (const auto& [pair, id] : cand.pairs) solver.add_edge(index[pair.first], index[pair.second]);
  const std::vector<int>& mate = solver.solve();

  MatchingResult result;
  for (std::size_t i = 0; i < cand.vertices.size(); ++i) {
    int m = mate[i];
    if (m < 0 || m < static_cast<int>(i)) continue;
    NodeId a = cand.vertices[i], b = cand.vertices[m];
    result.edge_ids.push_back(cand.pairs.at(std::minmax(a, b)));
  }
  std::sort(result.edge_ids.begin(), result.edge_ids.end());
  return result;
}

/// First-come-first-served maximal matching along the type's edge list, the
/// conflict policy of the frequency-greedy baseline.
inline MatchingResult greedy_matching(const Graph& g, const std::vector<EdgeId>& edge_ids) {
  std::vector<EdgeId> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  std::set<NodeId> used;
  MatchingResult result;
  for (EdgeId id : ids) {
    const Graph::Edge& e = g.edge(id);
    if (!e.alive) fail(Errc::unknown_edge, "retired edge in filter: " + std::to_string(id));
    if (e.u == e.v || used.count(e.u) || used.count(e.v)) continue;
    used.insert(e.u);
    used.insert(e.v);
    result.edge_ids.push_back(id);
  }
  return result;
}

/// Exhaustive testing oracle: exact maximum matching cardinality by subset
/// enumeration with pruning. Refuses filtered subgraphs above 20 edges.
inline int brute_force_matching_size(const Graph& g, const std::vector<EdgeId>* edge_filter = nullptr) {
  detail::MatchingCandidates cand = detail::collect_candidates(g, edge_filter);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& [pair, id] : cand.pairs) edges.push_back(pair);
  if (edges.size() > 20)
    fail(Errc::too_large_for_oracle, std::to_string(edges.size()) + " edges (limit 20)");

  std::set<NodeId> used;
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, int picked) -> void {
    best = std::max(best, picked);
    if (i >= edges.size() || picked + static_cast<int>(edges.size() - i) <= best) return;
    auto [u, v] = edges[i];
    if (!used.count(u) && !used.count(v)) {
      used.insert(u);
      used.insert(v);
      self(self, i + 1, picked + 1);
      used.erase(u);
      used.erase(v);
    }
    self(self, i + 1, picked);
  };
  rec(rec, 0, 0);
  return best;
}

/// Checks MatchingResult invariants independently of optimality: edges live,
/// no loops, no two edges sharing a node.
inline bool is_valid_matching(const Graph& g, const std::vector<EdgeId>& edge_ids) {
  std::set<NodeId> used;
  for (EdgeId id : edge_ids) {
    const Graph::Edge& e = g.edge(id);
    if (!e.alive || e.u == e.v) return false;
    if (!used.insert(e.u).second) return false;
    if (!used.insert(e.v).second) return false;
  }
  return true;
}

}  // namespace graphgram

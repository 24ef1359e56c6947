#pragma once

// Typed multigraph with stable node/edge identities, attachment paths for
// hyper-node incidences, and canonical edge typing. Nodes and edges are
// retired (never erased) so a contraction sequence can be unwound exactly.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graphgram {

using NodeId = int;
using EdgeId = int;
using TypeId = int;

inline constexpr int k_none = -1;

/// Attachment path of an edge endpoint: the sequence of constituent indices
/// to follow from a hyper-node down to the concrete attachment point.
/// Empty at terminal nodes; one entry per nesting level otherwise.
using PortPath = std::vector<int>;

enum class Errc {
  duplicate_node_id,
  dangling_endpoint,
  self_loop_in_input,
  mixed_directedness,
  unknown_edge,
  unknown_node,
  too_large_for_oracle,
  unregistered_edge,
  type_mismatch,
  invalid_matching,
  undefined_nonterminal,
  dangling_port,
  unknown_type,
  syntax_error,
  unresolved_conect,
  invalid_parameters,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_node_id: return "DuplicateNodeId";
    case Errc::dangling_endpoint: return "DanglingEndpoint";
    case Errc::self_loop_in_input: return "SelfLoopInInput";
    case Errc::mixed_directedness: return "MixedDirectedness";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::too_large_for_oracle: return "TooLargeForOracle";
    case Errc::unregistered_edge: return "UnregisteredEdge";
    case Errc::type_mismatch: return "TypeMismatch";
    case Errc::invalid_matching: return "InvalidMatching";
    case Errc::undefined_nonterminal: return "UndefinedNonTerminal";
    case Errc::dangling_port: return "DanglingPort";
    case Errc::unknown_type: return "UnknownType";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unresolved_conect: return "UnresolvedConect";
    case Errc::invalid_parameters: return "InvalidParameters";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Registry of node types. Terminal types are interned from input labels;
/// non-terminal types are appended one per contraction and never removed
/// (inlined types simply lose their production).
class TypeTable {
 public:
  TypeId intern_terminal(const std::string& label) {
    if (label.empty() || label.find_first_of(" \t\n\r") != std::string::npos)
      fail(Errc::invalid_parameters, "label must be a non-empty whitespace-free token: '" + label + "'");
    auto it = terminal_ids_.find(label);
    if (it != terminal_ids_.end()) return it->second;
    TypeId id = static_cast<TypeId>(infos_.size());
    infos_.push_back({label, true});
    terminal_ids_.emplace(label, id);
    used_names_.insert(label);
    return id;
  }

  std::optional<TypeId> find_terminal(const std::string& label) const {
    auto it = terminal_ids_.find(label);
    if (it == terminal_ids_.end()) return std::nullopt;
    return it->second;
  }

  /// Adds a non-terminal, uniquifying the suggested name if taken.
  TypeId add_nonterminal(std::string name) {
    if (name.empty()) name = "N" + std::to_string(infos_.size());
    if (used_names_.count(name)) {
      int k = 2;
      while (used_names_.count(name + "_" + std::to_string(k))) ++k;
      name += "_" + std::to_string(k);
    }
    TypeId id = static_cast<TypeId>(infos_.size());
    infos_.push_back({name, false});
    used_names_.insert(infos_.back().name);
    return id;
  }

  bool valid(TypeId t) const { return t >= 0 && t < static_cast<TypeId>(infos_.size()); }
  bool is_terminal(TypeId t) const { return info(t).terminal; }
  const std::string& name(TypeId t) const { return info(t).name; }
  int size() const { return static_cast<int>(infos_.size()); }

 private:
  struct Info {
    std::string name;
    bool terminal;
  };

  const Info& info(TypeId t) const {
    if (!valid(t)) fail(Errc::unknown_type, "type id " + std::to_string(t));
    return infos_[t];
  }

  std::vector<Info> infos_;
  std::map<std::string, TypeId> terminal_ids_;
  std::set<std::string> used_names_;
};

struct NodeSpec {
  NodeId id;
  std::string label;  // empty means unlabeled; collapses to "n"
};

struct EdgeSpec {
  NodeId u;
  NodeId v;
  std::string label = "-";
  bool directed = false;
};

/// Canonical identity of an edge: endpoint (type, path) pairs, label and
/// orientation. For undirected edges the endpoint pairs are sorted ascending
/// by (type id, path) so both traversal directions yield the same key; for
/// directed edges the source endpoint comes first.
struct EdgeTypeKey {
  TypeId type_a = k_none;
  PortPath path_a;
  TypeId type_b = k_none;
  PortPath path_b;
  std::string label = "-";
  bool directed = false;

  auto operator<=>(const EdgeTypeKey&) const = default;
};

inline std::string path_suffix(const PortPath& p) {
  std::string s;
  for (int x : p) s += "." + std::to_string(x);
  return s;
}

inline std::string key_to_string(const EdgeTypeKey& k, const TypeTable& types) {
  std::string s = types.name(k.type_a) + path_suffix(k.path_a);
  s += k.directed ? ">" : "-";
  s += types.name(k.type_b) + path_suffix(k.path_b);
  if (k.label != "-") s += "(" + k.label + ")";
  return s;
}

class Graph {
 public:
  struct Node {
    NodeId id = k_none;
    TypeId type = k_none;
    std::string provenance;
    bool alive = true;
    // contraction record, set for hyper-nodes created by contract_matched
    NodeId sub_first = k_none;   // constituent behind index 0
    NodeId sub_second = k_none;  // constituent behind index 1
    EdgeId via = k_none;         // the matched edge
  };

  struct Edge {
    EdgeId id = k_none;
    NodeId u = k_none;
    NodeId v = k_none;
    PortPath path_u;
    PortPath path_v;
    std::string label = "-";
    bool directed = false;
    bool alive = true;
    EdgeId replaces = k_none;     // pre-image edge this rewrite superseded
    NodeId rewritten_by = k_none; // hyper-node whose contraction caused the rewrite
  };

  Graph() = default;
  explicit Graph(bool directed, TypeTable types = {}) : types_(std::move(types)), directed_(directed) {}

  bool directed() const { return directed_; }
  void set_directed(bool d) { directed_ = d; }
  TypeTable& types() { return types_; }
  const TypeTable& types() const { return types_; }

  bool has_node(NodeId id) const { return index_.count(id) > 0; }

  const Node& node(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) fail(Errc::unknown_node, "node " + std::to_string(id));
    return nodes_[it->second];
  }

  const Edge& edge(EdgeId id) const {
    if (id < 0 || id >= static_cast<EdgeId>(edges_.size()))
      fail(Errc::unknown_edge, "edge " + std::to_string(id));
    return edges_[id];
  }

  int live_node_count() const { return live_nodes_; }
  int live_edge_count() const { return live_edges_; }
  int edge_table_size() const { return static_cast<int>(edges_.size()); }

  /// Live node ids in ascending order.
  std::vector<NodeId> live_nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_nodes_);
    for (const auto& [id, idx] : index_)
      if (nodes_[idx].alive) out.push_back(id);
    return out;
  }

  /// Live edge ids in ascending order.
  std::vector<EdgeId> live_edges() const {
    std::vector<EdgeId> out;
    out.reserve(live_edges_);
    for (const Edge& e : edges_)
      if (e.alive) out.push_back(e.id);
    return out;
  }

  /// All nodes in creation order (retired included); for history replay.
  const std::vector<Node>& node_table() const { return nodes_; }

  /// Incident live edge ids, ascending. A self-loop appears once.
  const std::vector<EdgeId>& incident(NodeId id) const {
    static const std::vector<EdgeId> empty;
    auto it = adjacency_.find(id);
    return it == adjacency_.end() ? empty : it->second;
  }

  NodeId fresh_node_id() const { return next_node_id_; }

  NodeId add_node(NodeId id, TypeId type, std::string provenance = "") {
    if (id < 0) fail(Errc::invalid_parameters, "node ids must be non-negative");
    if (has_node(id)) fail(Errc::duplicate_node_id, "node " + std::to_string(id));
    if (!types_.valid(type)) fail(Errc::unknown_type, "type id " + std::to_string(type));
    index_.emplace(id, nodes_.size());
    nodes_.push_back({id, type, std::move(provenance), true, k_none, k_none, k_none});
    next_node_id_ = std::max(next_node_id_, id + 1);
    ++live_nodes_;
    return id;
  }

  EdgeId add_edge(NodeId u, PortPath path_u, NodeId v, PortPath path_v, std::string label = "-",
                  bool directed = false) {
    if (!has_node(u)) fail(Errc::dangling_endpoint, "edge endpoint " + std::to_string(u));
    if (!has_node(v)) fail(Errc::dangling_endpoint, "edge endpoint " + std::to_string(v));
    if (label.empty()) label = "-";
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, u, v, std::move(path_u), std::move(path_v), std::move(label), directed,
                      true, k_none, k_none});
    attach(u, id);
    if (v != u) attach(v, id);
    ++live_edges_;
    return id;
  }

  /// Creates a hyper-node for a matched edge and retires both endpoints and
  /// the edge itself. Incident edges stay live until rewritten by the caller.
  NodeId add_hyper(TypeId type, NodeId first, NodeId second, EdgeId via) {
    NodeId h = add_node(next_node_id_, type);
    Node& n = node_mut(h);
    n.sub_first = first;
    n.sub_second = second;
    n.via = via;
    retire_edge(via);
    retire_node(first);
    retire_node(second);
    return h;
  }

  /// Re-attaches an edge to new endpoints under a fresh id, linking the
  /// retired original for exact unwinding.
  EdgeId rewrite_edge(EdgeId old_id, NodeId u, PortPath path_u, NodeId v, PortPath path_v,
                      NodeId rewritten_by) {
    const Edge old = edge(old_id);
    if (!old.alive) fail(Errc::unknown_edge, "rewriting retired edge " + std::to_string(old_id));
    retire_edge(old_id);
    EdgeId id = add_edge(u, std::move(path_u), v, std::move(path_v), old.label, old.directed);
    edges_[id].replaces = old_id;
    edges_[id].rewritten_by = rewritten_by;
    return id;
  }

  /// Replaces an edge's attachment paths in place (same endpoints, same id).
  /// Used when a type's constituent layout changes but the attachment point
  /// itself does not, so contraction history stays intact.
  void set_edge_paths(EdgeId id, PortPath path_u, PortPath path_v) {
    Edge& e = edge_mut(id);
    e.path_u = std::move(path_u);
    e.path_v = std::move(path_v);
  }

  void retire_node(NodeId id) {
    Node& n = node_mut(id);
    if (!n.alive) return;
    n.alive = false;
    --live_nodes_;
  }

  void revive_node(NodeId id) {
    Node& n = node_mut(id);
    if (n.alive) return;
    n.alive = true;
    ++live_nodes_;
  }

  void retire_edge(EdgeId id) {
    Edge& e = edge_mut(id);
    if (!e.alive) return;
    e.alive = false;
    --live_edges_;
    detach(e.u, id);
    if (e.v != e.u) detach(e.v, id);
  }

  void revive_edge(EdgeId id) {
    Edge& e = edge_mut(id);
    if (e.alive) return;
    e.alive = true;
    ++live_edges_;
    attach(e.u, id);
    if (e.v != e.u) attach(e.v, id);
  }

  /// Consistency check: adjacency mirrors the edge table, endpoints resolve,
  /// live counters match. For tests.
  bool validate() const {
    int live_n = 0, live_e = 0;
    for (const Node& n : nodes_) live_n += n.alive ? 1 : 0;
    for (const Edge& e : edges_) {
      if (!has_node(e.u) || !has_node(e.v)) return false;
      if (!e.alive) continue;
      ++live_e;
      if (!contains(incident(e.u), e.id)) return false;
      if (!contains(incident(e.v), e.id)) return false;
    }
    for (const auto& [id, inc] : adjacency_)
      for (EdgeId eid : inc) {
        const Edge& e = edge(eid);
        if (!e.alive || (e.u != id && e.v != id)) return false;
      }
    return live_n == live_nodes_ && live_e == live_edges_;
  }

 private:
  Node& node_mut(NodeId id) { return const_cast<Node&>(node(id)); }
  Edge& edge_mut(EdgeId id) { return const_cast<Edge&>(edge(id)); }

  void attach(NodeId n, EdgeId e) {
    auto& inc = adjacency_[n];
    inc.insert(std::lower_bound(inc.begin(), inc.end(), e), e);
  }

  void detach(NodeId n, EdgeId e) {
    auto& inc = adjacency_[n];
    auto it = std::lower_bound(inc.begin(), inc.end(), e);
    if (it != inc.end() && *it == e) inc.erase(it);
  }

  static bool contains(const std::vector<EdgeId>& v, EdgeId e) {
    return std::binary_search(v.begin(), v.end(), e);
  }

  TypeTable types_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::map<NodeId, std::size_t> index_;            // ascending-id iteration order
  std::map<NodeId, std::vector<EdgeId>> adjacency_;
  bool directed_ = false;
  int live_nodes_ = 0;
  int live_edges_ = 0;
  NodeId next_node_id_ = 0;
};

/// Builds a graph from raw node/edge lists. Unlabeled nodes collapse to the
/// single terminal label "n". Rejects duplicate ids, dangling endpoints,
/// input self-loops and mixed edge directedness.
inline Graph construct_graph(const std::vector<NodeSpec>& node_specs,
                             const std::vector<EdgeSpec>& edge_specs) {
  bool directed = false;
  for (std::size_t i = 0; i < edge_specs.size(); ++i) {
    if (i == 0) directed = edge_specs[i].directed;
    if (edge_specs[i].directed != directed)
      fail(Errc::mixed_directedness, "edge " + std::to_string(edge_specs[i].u) + "-" +
                                         std::to_string(edge_specs[i].v));
  }
  Graph g(directed);
  for (const NodeSpec& ns : node_specs) {
    TypeId t = g.types().intern_terminal(ns.label.empty() ? "n" : ns.label);
    g.add_node(ns.id, t, "");
  }
  for (const EdgeSpec& es : edge_specs) {
    if (es.u == es.v)
      fail(Errc::self_loop_in_input, "edge " + std::to_string(es.u) + "-" + std::to_string(es.v));
    if (!g.has_node(es.u)) fail(Errc::dangling_endpoint, "edge endpoint " + std::to_string(es.u));
    if (!g.has_node(es.v)) fail(Errc::dangling_endpoint, "edge endpoint " + std::to_string(es.v));
    g.add_edge(es.u, {}, es.v, {}, es.label, es.directed);
  }
  return g;
}

/// Canonical type of an edge per EdgeTypeKey rules.
inline EdgeTypeKey edge_type_of(const Graph& g, EdgeId id) {
  const Graph::Edge& e = g.edge(id);
  EdgeTypeKey k;
  k.type_a = g.node(e.u).type;
  k.path_a = e.path_u;
  k.type_b = g.node(e.v).type;
  k.path_b = e.path_v;
  k.label = e.label;
  k.directed = e.directed;
  if (!k.directed) {
    if (std::tie(k.type_b, k.path_b) < std::tie(k.type_a, k.path_a)) {
      std::swap(k.type_a, k.type_b);
      std::swap(k.path_a, k.path_b);
    }
  }
  return k;
}

/// Replaces every node's type with a degree-derived terminal: "d<degree>"
/// for undirected graphs, "i<in>o<out>" for directed. A self-loop adds two
/// to the undirected degree and one to each directed count. Intended for
/// flat (all-terminal) graphs straight from ingestion.
inline Graph relabel_by_degree(const Graph& g) {
  std::map<NodeId, int> deg, indeg, outdeg;
  for (NodeId id : g.live_nodes()) deg[id] = indeg[id] = outdeg[id] = 0;
  for (EdgeId eid : g.live_edges()) {
    const Graph::Edge& e = g.edge(eid);
    deg[e.u] += 1;
    deg[e.v] += 1;
    outdeg[e.u] += 1;
    indeg[e.v] += 1;
  }
  Graph out(g.directed());
  for (NodeId id : g.live_nodes()) {
    std::string label = g.directed()
                            ? "i" + std::to_string(indeg[id]) + "o" + std::to_string(outdeg[id])
                            : "d" + std::to_string(deg[id]);
    out.add_node(id, out.types().intern_terminal(label), g.node(id).provenance);
  }
  for (EdgeId eid : g.live_edges()) {
    const Graph::Edge& e = g.edge(eid);
    out.add_edge(e.u, e.path_u, e.v, e.path_v, e.label, e.directed);
  }
  return out;
}

/// Exact equality on the live part: same node ids with the same type names,
/// and the same edge multiset (endpoints, paths, label, direction). Edge ids
/// do not participate.
inline bool graph_equal(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed()) return false;
  if (a.live_node_count() != b.live_node_count()) return false;
  if (a.live_edge_count() != b.live_edge_count()) return false;
  for (NodeId id : a.live_nodes()) {
    if (!b.has_node(id) || !b.node(id).alive) return false;
    if (a.types().name(a.node(id).type) != b.types().name(b.node(id).type)) return false;
  }
  using Norm = std::tuple<NodeId, PortPath, NodeId, PortPath, std::string, bool>;
  auto normalize = [](const Graph& g) {
    std::vector<Norm> out;
    for (EdgeId eid : g.live_edges()) {
      const Graph::Edge& e = g.edge(eid);
      NodeId u = e.u, v = e.v;
      PortPath pu = e.path_u, pv = e.path_v;
      if (!e.directed && std::tie(v, pv) < std::tie(u, pu)) {
        std::swap(u, v);
        std::swap(pu, pv);
      }
      out.emplace_back(u, pu, v, pv, e.label, e.directed);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return normalize(a) == normalize(b);
}

}  // namespace graphgram

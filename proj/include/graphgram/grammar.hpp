#pragma once

// Graph-grammar representation and its operations: expansion back to the
// input graph, description-length accounting, single-use inlining, hierarchy
// depth, and the line-oriented text format.
//
// Expansion has two modes. A grammar produced in-process still carries the
// full contraction history inside its residual graph (retired nodes/edges,
// rewrite links), so expansion replays that history backwards and restores
// the input exactly, node ids included. A grammar parsed from a file has no
// instance history; expansion is then structural: hyper-nodes are replaced
// by their production bodies with deterministically minted node ids.

#include <functional>

#include "graphgram/core.hpp"

namespace graphgram {

struct Production {
  struct BodyEdge {
    int a = 0;
    PortPath path_a;
    int b = 0;
    PortPath path_b;
    std::string label = "-";
    bool directed = false;
  };

  TypeId lhs = k_none;
  std::vector<TypeId> constituents;  // two before inlining, possibly more after
  std::vector<BodyEdge> edges;
};

struct GraphGrammar {
  Graph residual;
  std::vector<Production> productions;  // creation order; a valid topological order

  const TypeTable& types() const { return residual.types(); }

  const Production* production_of(TypeId t) const {
    for (const Production& p : productions)
      if (p.lhs == t) return &p;
    return nullptr;
  }
};

struct DlBreakdown {
  int nodes = 0;
  int edges = 0;
  int productions = 0;
  int total = 0;
};

inline int graph_dl(const Graph& g) { return g.live_node_count() + g.live_edge_count(); }

/// Unit-cost description length: residual nodes + residual edges, plus one
/// per constituent slot and one per body edge of every production (3 per
/// production while bodies are binary).
inline DlBreakdown description_length(const GraphGrammar& gr) {
  DlBreakdown d;
  d.nodes = gr.residual.live_node_count();
  d.edges = gr.residual.live_edge_count();
  d.productions = static_cast<int>(gr.productions.size());
  d.total = d.nodes + d.edges;
  for (const Production& p : gr.productions)
    d.total += static_cast<int>(p.constituents.size() + p.edges.size());
  return d;
}

inline int hierarchy_depth(const GraphGrammar& gr, TypeId t) {
  if (!gr.types().valid(t)) fail(Errc::unknown_type, "type id " + std::to_string(t));
  std::map<TypeId, int> memo;
  std::function<int(TypeId)> depth = [&](TypeId x) -> int {
    if (gr.types().is_terminal(x)) return 0;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    const Production* p = gr.production_of(x);
    if (!p) fail(Errc::unknown_type, "non-terminal without production: " + gr.types().name(x));
    int d = 0;
    for (TypeId c : p->constituents) d = std::max(d, depth(c));
    memo[x] = 1 + d;
    return 1 + d;
  };
  return depth(t);
}

inline int max_hierarchy_depth(const GraphGrammar& gr) {
  int d = 0;
  for (const Production& p : gr.productions) d = std::max(d, hierarchy_depth(gr, p.lhs));
  return d;
}

namespace detail {

inline bool has_instance_history(const Graph& g) {
  for (const Graph::Node& n : g.node_table())
    if (n.alive && !g.types().is_terminal(n.type)) return n.sub_first != k_none;
  return false;
}

inline bool has_live_nonterminal(const Graph& g) {
  for (const Graph::Node& n : g.node_table())
    if (n.alive && !g.types().is_terminal(n.type)) return true;
  return false;
}

// Unwinds the recorded contraction sequence, newest hyper-node first. Every
// rewritten edge is swapped back for its pre-image, so the result is the
// original input graph bit for bit (ids, paths, everything).
inline Graph history_expand(const GraphGrammar& gr) {
  Graph g = gr.residual;
  std::map<NodeId, std::vector<EdgeId>> rewrites;  // hyper id -> edges its contraction introduced
  for (EdgeId id = 0; id < g.edge_table_size(); ++id) {
    const Graph::Edge& e = g.edge(id);
    if (e.rewritten_by != k_none) rewrites[e.rewritten_by].push_back(id);
  }
  const auto& table = g.node_table();
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    // copy: revive/retire below touch the table
    Graph::Node n = *it;
    if (!n.alive || g.types().is_terminal(n.type)) continue;
    if (n.sub_first == k_none)
      fail(Errc::undefined_nonterminal,
           "no contraction record for node " + std::to_string(n.id) + "; expand from history "
           "requires an in-process grammar");
    g.revive_node(n.sub_first);
    g.revive_node(n.sub_second);
    auto rw = rewrites.find(n.id);
    if (rw != rewrites.end())
      for (EdgeId eid : rw->second) {
        g.retire_edge(eid);
        g.revive_edge(g.edge(eid).replaces);
      }
    g.revive_edge(n.via);
    g.retire_node(n.id);
  }
  return g;
}

// Replaces hyper-nodes by their production bodies until only terminals
// remain. Node ids for expansion products are minted deterministically:
// residual-surviving nodes keep their ids, minted terminals are renumbered
// in constituent-order DFS at the end (so inlining, which splices bodies in
// place, does not perturb them).
inline Graph structural_expand(const GraphGrammar& gr) {
  const Graph& res = gr.residual;
  Graph work(res.directed(), res.types());
  for (NodeId id : res.live_nodes()) work.add_node(id, res.node(id).type, res.node(id).provenance);
  for (EdgeId id : res.live_edges()) {
    const Graph::Edge& e = res.edge(id);
    work.add_edge(e.u, e.path_u, e.v, e.path_v, e.label, e.directed);
  }

  std::map<NodeId, std::vector<NodeId>> children;
  auto next_hyper = [&]() -> NodeId {
    for (NodeId id : work.live_nodes())
      if (!work.types().is_terminal(work.node(id).type)) return id;
    return k_none;
  };

  for (NodeId h = next_hyper(); h != k_none; h = next_hyper()) {
    const Production* p = gr.production_of(work.node(h).type);
    if (!p)
      fail(Errc::undefined_nonterminal, work.types().name(work.node(h).type));
    std::vector<NodeId> kids;
    for (TypeId ct : p->constituents) kids.push_back(work.add_node(work.fresh_node_id(), ct));
    children[h] = kids;

    auto resolve = [&](int cid, const PortPath& path) -> std::pair<NodeId, PortPath> {
      if (cid < 0 || cid >= static_cast<int>(kids.size()))
        fail(Errc::dangling_port, "constituent index " + std::to_string(cid));
      return {kids[cid], path};
    };
    for (const Production::BodyEdge& be : p->edges) {
      auto [nu, pu] = resolve(be.a, be.path_a);
      auto [nv, pv] = resolve(be.b, be.path_b);
      work.add_edge(nu, pu, nv, pv, be.label, be.directed);
    }
    for (EdgeId eid : std::vector<EdgeId>(work.incident(h))) {
      const Graph::Edge e = work.edge(eid);
      auto reattach = [&](NodeId node, const PortPath& path) -> std::pair<NodeId, PortPath> {
        if (node != h) return {node, path};
        if (path.empty() || path[0] < 0 || path[0] >= static_cast<int>(kids.size()))
          fail(Errc::dangling_port,
               "path " + path_suffix(path) + " at " + work.types().name(work.node(h).type));
        return {kids[path[0]], PortPath(path.begin() + 1, path.end())};
      };
      auto [nu, pu] = reattach(e.u, e.path_u);
      auto [nv, pv] = reattach(e.v, e.path_v);
      work.retire_edge(eid);
      work.add_edge(nu, pu, nv, pv, e.label, e.directed);
    }
    work.retire_node(h);
  }

  for (EdgeId id : work.live_edges()) {
    const Graph::Edge& e = work.edge(id);
    if (!e.path_u.empty() || !e.path_v.empty())
      fail(Errc::dangling_port, "unresolved attachment on edge " + std::to_string(id));
  }

  // renumber minted terminals in DFS order over the expansion trees
  std::map<NodeId, NodeId> remap;
  NodeId next_id = res.fresh_node_id();
  std::function<void(NodeId, bool)> assign = [&](NodeId id, bool minted) {
    auto kids = children.find(id);
    if (kids == children.end()) {
      if (minted) remap[id] = next_id++;
      return;
    }
    for (NodeId k : kids->second) assign(k, true);
  };
  for (NodeId id : res.live_nodes()) assign(id, false);

  Graph out(res.directed(), res.types());
  std::vector<std::pair<NodeId, NodeId>> nodes;  // (output id, work id)
  for (NodeId id : work.live_nodes()) {
    auto it = remap.find(id);
    nodes.emplace_back(it == remap.end() ? id : it->second, id);
  }
  std::sort(nodes.begin(), nodes.end());
  for (auto [oid, wid] : nodes) out.add_node(oid, work.node(wid).type, work.node(wid).provenance);
  for (EdgeId id : work.live_edges()) {
    const Graph::Edge& e = work.edge(id);
    auto mapped = [&](NodeId n) {
      auto it = remap.find(n);
      return it == remap.end() ? n : it->second;
    };
    out.add_edge(mapped(e.u), {}, mapped(e.v), {}, e.label, e.directed);
  }
  return out;
}

}  // namespace detail

/// Decompression: recursively replaces every hyper-node in the residual
/// graph by its constituents and connecting edges; incident edges re-attach
/// to the constituent named by their stored path. The result contains only
/// terminal nodes.
inline Graph expand(const GraphGrammar& gr) {
  if (!detail::has_live_nonterminal(gr.residual)) return gr.residual;
  if (detail::has_instance_history(gr.residual)) return detail::history_expand(gr);
  return detail::structural_expand(gr);
}

/// Merges every non-terminal whose one and only reference (across production
/// constituents and the residual graph) is a constituent slot of another
/// production, repeating to fixpoint. Bodies generalize to small constituent
/// graphs; expansion output is unchanged.
inline GraphGrammar inline_single_use(GraphGrammar gr) {
  for (;;) {
    std::map<TypeId, int> refs;
    for (const Production& p : gr.productions)
      for (TypeId c : p.constituents) ++refs[c];
    for (NodeId id : gr.residual.live_nodes()) ++refs[gr.residual.node(id).type];

    int host = -1, slot = -1, dead = -1;
    for (std::size_t pi = 0; pi < gr.productions.size() && host < 0; ++pi)
      for (std::size_t ci = 0; ci < gr.productions[pi].constituents.size(); ++ci) {
        TypeId t = gr.productions[pi].constituents[ci];
        if (gr.types().is_terminal(t) || refs[t] != 1) continue;
        for (std::size_t di = 0; di < gr.productions.size(); ++di)
          if (gr.productions[di].lhs == t) {
            host = static_cast<int>(pi);
            slot = static_cast<int>(ci);
            dead = static_cast<int>(di);
            break;
          }
        if (host >= 0) break;
      }
    if (host < 0) return gr;

    const Production donor = gr.productions[dead];
    Production& p = gr.productions[host];
    const TypeId host_type = p.lhs;
    const int j = slot;
    const int m = static_cast<int>(donor.constituents.size());
    const std::vector<TypeId> old_constituents = p.constituents;

    auto map_index = [&](int i) { return i < j ? i : i + m - 1; };

    // Walks a stored path layer by layer against the pre-splice structure,
    // remapping every traversal of the host type: the replaced slot absorbs
    // the next path element, the other slots shift.
    auto rewrite_path = [&](TypeId start, const PortPath& path) -> PortPath {
      PortPath out;
      TypeId cur = start;
      std::size_t i = 0;
      while (i < path.size()) {
        if (gr.types().is_terminal(cur))
          fail(Errc::dangling_port, "path below a terminal");
        int x = path[i];
        if (cur == host_type) {
          if (x < 0 || x >= static_cast<int>(old_constituents.size()))
            fail(Errc::dangling_port, "constituent index " + std::to_string(x));
          if (x != j) {
            out.push_back(map_index(x));
            cur = old_constituents[x];
            ++i;
          } else {
            if (i + 1 >= path.size())
              fail(Errc::dangling_port, "path ends at an inlined constituent");
            int b = path[i + 1];
            if (b < 0 || b >= m) fail(Errc::dangling_port, "constituent index " + std::to_string(b));
            out.push_back(j + b);
            cur = donor.constituents[b];
            i += 2;
          }
        } else {
          const Production* q = gr.production_of(cur);
          if (!q) fail(Errc::undefined_nonterminal, gr.types().name(cur));
          if (x < 0 || x >= static_cast<int>(q->constituents.size()))
            fail(Errc::dangling_port, "constituent index " + std::to_string(x));
          out.push_back(x);
          cur = q->constituents[x];
          ++i;
        }
      }
      return out;
    };

    // Residual edge paths may traverse the host type at any depth. Updated
    // in place so ids and contraction history stay intact.
    {
      Graph& res = gr.residual;
      for (EdgeId id : res.live_edges()) {
        const Graph::Edge& e = res.edge(id);
        PortPath pu = rewrite_path(res.node(e.u).type, e.path_u);
        PortPath pv = rewrite_path(res.node(e.v).type, e.path_v);
        if (pu != e.path_u || pv != e.path_v) res.set_edge_paths(id, std::move(pu), std::move(pv));
      }
    }
    // Body edges of every other production likewise.
    for (std::size_t pi = 0; pi < gr.productions.size(); ++pi) {
      if (static_cast<int>(pi) == host || static_cast<int>(pi) == dead) continue;
      for (Production::BodyEdge& be : gr.productions[pi].edges) {
        be.path_a = rewrite_path(gr.productions[pi].constituents[be.a], be.path_a);
        be.path_b = rewrite_path(gr.productions[pi].constituents[be.b], be.path_b);
      }
    }
    // The host's own edges live in constituent-index space.
    std::vector<Production::BodyEdge> new_edges;
    for (const Production::BodyEdge& be : p.edges) {
      Production::BodyEdge ne = be;
      PortPath a{be.a};
      a.insert(a.end(), be.path_a.begin(), be.path_a.end());
      PortPath b{be.b};
      b.insert(b.end(), be.path_b.begin(), be.path_b.end());
      PortPath ra = rewrite_path(host_type, a);
      PortPath rb = rewrite_path(host_type, b);
      ne.a = ra[0];
      ne.path_a.assign(ra.begin() + 1, ra.end());
      ne.b = rb[0];
      ne.path_b.assign(rb.begin() + 1, rb.end());
      new_edges.push_back(std::move(ne));
    }
    for (const Production::BodyEdge& be : donor.edges) {
      Production::BodyEdge ne = be;
      ne.a += j;
      ne.b += j;
      new_edges.push_back(std::move(ne));
    }
    std::vector<TypeId> spliced(p.constituents.begin(), p.constituents.begin() + j);
    spliced.insert(spliced.end(), donor.constituents.begin(), donor.constituents.end());
    spliced.insert(spliced.end(), p.constituents.begin() + j + 1, p.constituents.end());
    p.constituents = std::move(spliced);
    p.edges = std::move(new_edges);
    gr.productions.erase(gr.productions.begin() + dead);
  }
}

// ---------------------------------------------------------------------------
// Text format. Deterministic, ASCII, LF line endings:
//   T <id> <label>                                 terminals, table order
//   N <id> <name>                                  surviving non-terminals
//   P <lhs> | <tid>:<ports> ... | <a> <b> <label> <d|u> ...
//   V <node-id> <type-id>                          residual nodes, ascending
//   E <u>[.p...] <v>[.p...] <label> <d|u>          residual edges, ascending
// Emitted type ids are a dense renumbering; parsing reproduces the grammar
// exactly (byte-identical re-serialization).
// ---------------------------------------------------------------------------

inline std::string serialize_grammar(const GraphGrammar& gr) {
  const TypeTable& types = gr.types();
  std::map<TypeId, int> emit_id;
  std::ostringstream out;
  for (TypeId t = 0; t < types.size(); ++t)
    if (types.is_terminal(t)) {
      int id = static_cast<int>(emit_id.size());
      emit_id[t] = id;
      out << "T " << id << " " << types.name(t) << "\n";
    }
  for (const Production& p : gr.productions) {
    int id = static_cast<int>(emit_id.size());
    emit_id[p.lhs] = id;
    out << "N " << id << " " << types.name(p.lhs) << "\n";
  }
  auto ports_of = [&](TypeId t) -> int {
    if (types.is_terminal(t)) return 0;
    const Production* p = gr.production_of(t);
    return p ? static_cast<int>(p->constituents.size()) : 0;
  };
  for (const Production& p : gr.productions) {
    out << "P " << emit_id.at(p.lhs) << " |";
    for (TypeId c : p.constituents) out << " " << emit_id.at(c) << ":" << ports_of(c);
    out << " |";
    for (const Production::BodyEdge& e : p.edges)
      out << " " << e.a << path_suffix(e.path_a) << " " << e.b << path_suffix(e.path_b) << " "
          << e.label << " " << (e.directed ? "d" : "u");
    out << "\n";
  }
  for (NodeId id : gr.residual.live_nodes())
    out << "V " << id << " " << emit_id.at(gr.residual.node(id).type) << "\n";
  for (EdgeId id : gr.residual.live_edges()) {
    const Graph::Edge& e = gr.residual.edge(id);
    out << "E " << e.u << path_suffix(e.path_u) << " " << e.v << path_suffix(e.path_v) << " "
        << e.label << " " << (e.directed ? "d" : "u") << "\n";
  }
  return out.str();
}

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": expected id, got '" + tok + "'");
  }
}

// "<id>[.p]*" -> (id, path)
inline std::pair<int, PortPath> parse_attachment(const std::string& tok, int line_no) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= tok.size()) {
    std::size_t dot = tok.find('.', start);
    std::string piece = tok.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    parts.push_back(parse_int(piece, line_no));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return {parts[0], PortPath(parts.begin() + 1, parts.end())};
}

}  // namespace detail

inline GraphGrammar parse_grammar(const std::string& text) {
  GraphGrammar gr;
  Graph& res = gr.residual;
  std::set<TypeId> defined;
  bool directed = false;
  int section = 0;  // T=0 N=1 P=2 V=3 E=4
  auto enter = [&](int s, int line_no) {
    if (s < section)
      fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": section out of order");
    section = s;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tok = detail::split_tokens(line);
    if (tok.empty()) continue;
    const std::string& tag = tok[0];
    if (tag == "T") {
      enter(0, line_no);
      if (tok.size() != 3) fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": T <id> <label>");
      TypeId id = res.types().intern_terminal(tok[2]);
      if (id != detail::parse_int(tok[1], line_no))
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": type ids must be dense");
    } else if (tag == "N") {
      enter(1, line_no);
      if (tok.size() != 3) fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": N <id> <name>");
      TypeId id = res.types().add_nonterminal(tok[2]);
      if (id != detail::parse_int(tok[1], line_no) || res.types().name(id) != tok[2])
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": bad non-terminal declaration");
    } else if (tag == "P") {
      enter(2, line_no);
      std::size_t bar1 = 0, bar2 = 0;
      for (std::size_t i = 1; i < tok.size(); ++i)
        if (tok[i] == "|") (bar1 ? bar2 : bar1) = i;
      if (bar1 == 0 || bar2 == 0 || bar1 != 2)
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": P <lhs> | ... | ...");
      Production p;
      p.lhs = detail::parse_int(tok[1], line_no);
      if (!res.types().valid(p.lhs) || res.types().is_terminal(p.lhs) || defined.count(p.lhs))
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": bad production lhs");
      for (std::size_t i = bar1 + 1; i < bar2; ++i) {
        auto colon = tok[i].find(':');
        if (colon == std::string::npos)
          fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": constituent <id>:<ports>");
        TypeId t = detail::parse_int(tok[i].substr(0, colon), line_no);
        int ports = detail::parse_int(tok[i].substr(colon + 1), line_no);
        if (!res.types().valid(t) || (!res.types().is_terminal(t) && !defined.count(t)))
          fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": constituent not yet defined");
        int expected = res.types().is_terminal(t)
                           ? 0
                           : static_cast<int>(gr.production_of(t)->constituents.size());
        if (ports != expected)
          fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": port count mismatch");
        p.constituents.push_back(t);
      }
      if ((tok.size() - bar2 - 1) % 4 != 0)
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": body edges are 4 tokens each");
      for (std::size_t i = bar2 + 1; i + 3 < tok.size(); i += 4) {
        Production::BodyEdge e;
        auto [a, pa] = detail::parse_attachment(tok[i], line_no);
        auto [b, pb] = detail::parse_attachment(tok[i + 1], line_no);
        if (a >= static_cast<int>(p.constituents.size()) || b >= static_cast<int>(p.constituents.size()))
          fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": edge endpoint out of range");
        e.a = a;
        e.path_a = pa;
        e.b = b;
        e.path_b = pb;
        e.label = tok[i + 2];
        if (tok[i + 3] != "d" && tok[i + 3] != "u")
          fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": direction flag must be d or u");
        e.directed = tok[i + 3] == "d";
        directed = directed || e.directed;
        p.edges.push_back(std::move(e));
      }
      defined.insert(p.lhs);
      gr.productions.push_back(std::move(p));
    } else if (tag == "V") {
      enter(3, line_no);
      if (tok.size() != 3) fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": V <id> <type>");
      TypeId t = detail::parse_int(tok[2], line_no);
      if (!res.types().valid(t) || (!res.types().is_terminal(t) && !defined.count(t)))
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": undefined node type");
      res.add_node(detail::parse_int(tok[1], line_no), t);
    } else if (tag == "E") {
      enter(4, line_no);
      if (tok.size() != 5)
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": E <u> <v> <label> <d|u>");
      auto [u, pu] = detail::parse_attachment(tok[1], line_no);
      auto [v, pv] = detail::parse_attachment(tok[2], line_no);
      if (!res.has_node(u) || !res.has_node(v))
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": edge endpoint not declared");
      if (tok[4] != "d" && tok[4] != "u")
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": direction flag must be d or u");
      bool d = tok[4] == "d";
      directed = directed || d;
      res.add_edge(u, pu, v, pv, tok[3], d);
    } else {
      fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  res.set_directed(directed);
  return gr;
}

}  // namespace graphgram

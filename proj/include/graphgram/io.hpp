#pragma once

// Ingestion and export formats.
//
// Edge list (line oriented, '#' comments, blank lines ignored):
//   node <id> [label]
//   edge <u> <v> [label] [>]     trailing '>' marks a directed edge
//
// PDB subset: ATOM/HETATM records contribute nodes labeled by element,
// CONECT records contribute undirected "-" bonds (duplicates listed from
// both ends collapse). Everything else is ignored.
//
// DOT export covers flat graphs, contracted graphs (hyper-nodes get a
// distinct shape, attachment paths become head/tail labels) and whole
// grammars (one cluster per production plus the residual).

#include <cctype>

#include "graphgram/core.hpp"
#include "graphgram/grammar.hpp"

namespace graphgram {

inline Graph parse_edge_list(const std::string& text) {
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tok = detail::split_tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "node") {
      if (tok.size() < 2 || tok.size() > 3)
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": node <id> [label]");
      nodes.push_back({detail::parse_int(tok[1], line_no), tok.size() == 3 ? tok[2] : ""});
    } else if (tok[0] == "edge") {
      if (tok.size() < 3 || tok.size() > 5)
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": edge <u> <v> [label] [>]");
      EdgeSpec e;
      e.u = detail::parse_int(tok[1], line_no);
      e.v = detail::parse_int(tok[2], line_no);
      std::size_t next = 3;
      if (tok.size() > next && tok[next] != ">") e.label = tok[next++];
      if (tok.size() > next) {
        if (tok[next] != ">")
          fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": trailing token '" +
                                       tok[next] + "'");
        e.directed = true;
        ++next;
      }
      if (next != tok.size())
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": trailing tokens");
      edges.push_back(std::move(e));
    } else {
      fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": unknown record '" + tok[0] + "'");
    }
  }
  return construct_graph(nodes, edges);
}

/// Inverse of parse_edge_list for flat (all-terminal) graphs; byte
/// deterministic, ascending ids.
inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (NodeId id : g.live_nodes())
    out << "node " << id << " " << g.types().name(g.node(id).type) << "\n";
  for (EdgeId id : g.live_edges()) {
    const Graph::Edge& e = g.edge(id);
    if (!e.path_u.empty() || !e.path_v.empty())
      fail(Errc::invalid_parameters, "edge list cannot express attachment paths; expand first");
    out << "edge " << e.u << " " << e.v;
    if (e.label != "-") out << " " << e.label;
    if (e.directed) out << " >";
    out << "\n";
  }
  return out.str();
}

namespace detail {

struct PdbAtom {
  int serial;
  std::string name;
  std::string element;
};

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline std::string field(const std::string& line, std::size_t pos, std::size_t len) {
  if (pos >= line.size()) return "";
  return trim(line.substr(pos, len));
}

inline std::string element_of(const PdbAtom& atom) {
  if (!atom.element.empty()) return atom.element;
  for (char c : atom.name)  // first alphabetic character of the atom name
    if (std::isalpha(static_cast<unsigned char>(c))) return std::string(1, c);
  return "X";
}

}  // namespace detail

/// Strips a PDB file down to atoms and bonds. Elements named in
/// strip_elements are dropped with their bonds; extra_bonds (e.g. to close a
/// chain into a loop) are added by atom serial.
inline Graph parse_pdb_subset(const std::string& text,
                              const std::set<std::string>& strip_elements = {},
                              const std::vector<std::pair<int, int>>& extra_bonds = {}) {
  std::vector<detail::PdbAtom> atoms;
  std::vector<std::pair<int, int>> bonds;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string record = detail::field(line, 0, 6);
    if (record == "ATOM" || record == "HETATM") {
      detail::PdbAtom atom;
      const std::string serial = detail::field(line, 6, 5);
      if (serial.empty())
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": missing atom serial");
      atom.serial = detail::parse_int(serial, line_no);
      atom.name = detail::field(line, 12, 4);
      atom.element = detail::field(line, 76, 2);
      atoms.push_back(std::move(atom));
    } else if (record == "CONECT") {
      const std::string from = detail::field(line, 6, 5);
      if (from.empty())
        fail(Errc::syntax_error, "line " + std::to_string(line_no) + ": empty CONECT");
      int u = detail::parse_int(from, line_no);
      for (std::size_t pos = 11; pos < line.size(); pos += 5) {
        const std::string to = detail::field(line, pos, 5);
        if (to.empty()) continue;
        bonds.emplace_back(u, detail::parse_int(to, line_no));
      }
    }
    // other records carry coordinates, chains, remarks: not our concern
  }

  std::map<int, std::string> element;
  std::map<int, std::string> name;
  for (const detail::PdbAtom& a : atoms) {
    element[a.serial] = detail::element_of(a);
    name[a.serial] = a.name;
  }
  for (const auto& [u, v] : extra_bonds) bonds.emplace_back(u, v);

  std::vector<NodeSpec> nodes;
  std::set<int> kept;
  for (const detail::PdbAtom& a : atoms) {
    if (strip_elements.count(element[a.serial])) continue;
    if (!kept.insert(a.serial).second) fail(Errc::duplicate_node_id, "atom " + std::to_string(a.serial));
    nodes.push_back({a.serial, element[a.serial]});
  }
  std::set<std::pair<int, int>> seen;
  std::vector<EdgeSpec> edges;
  for (const auto& [u, v] : bonds) {
    if (!element.count(u) || !element.count(v))
      fail(Errc::unresolved_conect, "bond " + std::to_string(u) + "-" + std::to_string(v));
    if (!kept.count(u) || !kept.count(v)) continue;  // stripped with its element
    auto [a, b] = std::minmax(u, v);
    if (!seen.insert({a, b}).second) continue;  // bonds are listed from both ends
    edges.push_back({a, b});
  }
  Graph g = construct_graph(nodes, edges);
  return g;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline void dot_edge_line(std::ostringstream& out, const std::string& lhs, const std::string& rhs,
                          const Graph::Edge& e, bool graph_directed) {
  out << "  " << lhs << (graph_directed ? " -> " : " -- ") << rhs;
  std::vector<std::string> attrs;
  if (e.label != "-") attrs.push_back("label=\"" + dot_escape(e.label) + "\"");
  if (!e.path_u.empty()) attrs.push_back("taillabel=\"" + path_suffix(e.path_u).substr(1) + "\"");
  if (!e.path_v.empty()) attrs.push_back("headlabel=\"" + path_suffix(e.path_v).substr(1) + "\"");
  if (!attrs.empty()) {
    out << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "]";
  }
  out << ";\n";
}

inline void dot_graph_body(std::ostringstream& out, const Graph& g, const std::string& prefix) {
  for (NodeId id : g.live_nodes()) {
    const Graph::Node& n = g.node(id);
    out << "  " << prefix << id << " [label=\"" << dot_escape(g.types().name(n.type)) << "\"";
    if (!g.types().is_terminal(n.type)) out << ", shape=box";
    out << "];\n";
  }
  for (EdgeId id : g.live_edges()) {
    const Graph::Edge& e = g.edge(id);
    dot_edge_line(out, prefix + std::to_string(e.u), prefix + std::to_string(e.v), e, g.directed());
  }
}

}  // namespace detail

inline std::string export_dot(const Graph& g) {
  std::ostringstream out;
  out << (g.directed() ? "digraph" : "graph") << " G {\n";
  detail::dot_graph_body(out, g, "");
  out << "}\n";
  return out.str();
}

inline std::string export_dot(const GraphGrammar& gr) {
  const bool directed = gr.residual.directed();
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (std::size_t pi = 0; pi < gr.productions.size(); ++pi) {
    const Production& p = gr.productions[pi];
    out << "  subgraph cluster_p" << pi << " {\n";
    out << "    label=\"" << detail::dot_escape(gr.types().name(p.lhs)) << "\";\n";
    for (std::size_t ci = 0; ci < p.constituents.size(); ++ci) {
      out << "    p" << pi << "_" << ci << " [label=\""
          << detail::dot_escape(gr.types().name(p.constituents[ci])) << "\"";
      if (!gr.types().is_terminal(p.constituents[ci])) out << ", shape=box";
      out << "];\n";
    }
    for (const Production::BodyEdge& be : p.edges) {
      Graph::Edge e;
      e.label = be.label;
      e.directed = be.directed;
      e.path_u = be.path_a;
      e.path_v = be.path_b;
      std::ostringstream tmp;
      detail::dot_edge_line(tmp, "p" + std::to_string(pi) + "_" + std::to_string(be.a),
                            "p" + std::to_string(pi) + "_" + std::to_string(be.b), e, directed);
      out << "  " << tmp.str();
    }
    out << "  }\n";
  }
  out << "  subgraph cluster_residual {\n    label=\"residual\";\n";
  std::ostringstream body;
  detail::dot_graph_body(body, gr.residual, "n");
  std::istringstream lines(body.str());
  std::string line;
  while (std::getline(lines, line)) out << "  " << line << "\n";
  out << "  }\n}\n";
  return out.str();
}

}  // namespace graphgram

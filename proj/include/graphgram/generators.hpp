#pragma once

// Deterministic synthetic graph families for tests, demos and desk-scale
// experiments. Same spec, same graph, on every platform.

#include <random>

#include "graphgram/core.hpp"

namespace graphgram {

enum class GraphKind {
  two_triangles,
  demo_molecule,
  path,
  cycle,
  rect_grid,
  hex_grid,
  nested_tree,
  star_forest,
  nucleotide_chain,
  random_graph,
};

struct GeneratorSpec {
  GraphKind kind = GraphKind::two_triangles;
  int n = 0;                        // path: edges; cycle/random: nodes; nucleotide_chain: units
  int rows = 0, cols = 0;           // grids
  int hubs = 0, leaves = 0;         // star_forest
  int branching = 2, depth = 0;     // nested_tree
  std::vector<std::string> labels;  // path/cycle node labels, applied cyclically
  bool directed = false;            // star_forest edge orientation
  bool loop = false;                // nucleotide_chain closure
  double p = 0.0;                   // random edge probability
  std::uint64_t seed = 0;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::invalid_parameters, what);
}

inline std::string label_at(const std::vector<std::string>& labels, int i) {
  if (labels.empty()) return "n";
  return labels[i % labels.size()];
}

/// Two 3-cycles over uniform labels, bridged by one edge: 6 nodes, 7 edges.
inline Graph gen_two_triangles() {
  std::vector<NodeSpec> nodes;
  for (NodeId i = 0; i < 6; ++i) nodes.push_back({i, "n"});
  std::vector<EdgeSpec> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
  return construct_graph(nodes, edges);
}

/// Fixed 6-atom molecule: two carbons, four hydrogens, one H-H bond. Its
/// edge lexicon has exactly the kinds C-C, C-H and H-H.
inline Graph gen_demo_molecule() {
  std::vector<NodeSpec> nodes = {{0, "C"}, {1, "C"}, {2, "H"}, {3, "H"}, {4, "H"}, {5, "H"}};
  std::vector<EdgeSpec> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}};
  return construct_graph(nodes, edges);
}

inline Graph gen_path(int n_edges, const std::vector<std::string>& labels) {
  require(n_edges >= 0, "path needs n >= 0 edges");
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (NodeId i = 0; i <= n_edges; ++i) nodes.push_back({i, label_at(labels, i)});
  for (NodeId i = 0; i < n_edges; ++i) edges.push_back({i, i + 1});
  return construct_graph(nodes, edges);
}

inline Graph gen_cycle(int n_nodes, const std::vector<std::string>& labels) {
  require(n_nodes >= 3, "cycle needs n >= 3 nodes");
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (NodeId i = 0; i < n_nodes; ++i) nodes.push_back({i, label_at(labels, i)});
  for (NodeId i = 0; i < n_nodes; ++i) edges.push_back({i, (i + 1) % n_nodes});
  return construct_graph(nodes, edges);
}

inline Graph gen_rect_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) nodes.push_back({at(r, c), "n"});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({at(r, c), at(r, c + 1)});
      if (r + 1 < rows) edges.push_back({at(r, c), at(r + 1, c)});
    }
  return construct_graph(nodes, edges);
}

/// Hexagonal lattice in brick-wall form: all horizontal edges, vertical
/// edges on alternating parity.
inline Graph gen_hex_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) nodes.push_back({at(r, c), "n"});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({at(r, c), at(r, c + 1)});
      if (r + 1 < rows && (r + c) % 2 == 0) edges.push_back({at(r, c), at(r + 1, c)});
    }
  return construct_graph(nodes, edges);
}

/// Perfect b-ary tree of the given depth, uniform labels.
inline Graph gen_nested_tree(int branching, int depth) {
  require(branching >= 1 && depth >= 0, "tree needs branching >= 1, depth >= 0");
  std::vector<NodeSpec> nodes = {{0, "n"}};
  std::vector<EdgeSpec> edges;
  std::vector<NodeId> frontier = {0};
  NodeId next = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<NodeId> level;
    for (NodeId parent : frontier)
      for (int b = 0; b < branching; ++b) {
        nodes.push_back({next, "n"});
        edges.push_back({parent, next});
        level.push_back(next);
        ++next;
      }
    frontier = std::move(level);
  }
  return construct_graph(nodes, edges);
}

/// k disjoint stars, one hub with m leaves each; directed edges point hub
/// to leaf.
inline Graph gen_star_forest(int hubs, int leaves, bool directed) {
  require(hubs >= 1 && leaves >= 1, "star forest needs hubs, leaves >= 1");
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (int k = 0; k < hubs; ++k) {
    NodeId hub = k * (leaves + 1);
    nodes.push_back({hub, "n"});
    for (int m = 1; m <= leaves; ++m) {
      nodes.push_back({hub + m, "n"});
      edges.push_back({hub, hub + m, "-", directed});
    }
  }
  return construct_graph(nodes, edges);
}

// One repeated unit: a 5-atom ring (the base proxy) attached to a 7-atom
// backbone (phosphate fork + sugar chain). Units alternate between two
// attachment variants, so the ring and backbone compounds each end up
// referenced by two unit productions. Inter-unit bonds carry per-position
// labels; a uniformly-typed chain would otherwise be pair-chunked into a
// size-dependent hierarchy.
inline constexpr int k_unit_size = 12;

inline Graph gen_nucleotide_chain(int units, bool close_loop) {
  require(units >= 1, "chain needs at least one unit");
  static const char* atom[k_unit_size] = {"ra", "rb", "rc", "rd", "re",   // ring
                                          "p",  "oa", "ob", "sa", "sb", "sc", "sd"};  // backbone
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < units; ++u) {
    NodeId base = u * k_unit_size;
    for (int a = 0; a < k_unit_size; ++a) nodes.push_back({base + a, atom[a]});
    // ring
    edges.push_back({base + 0, base + 1});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 2, base + 3});
    edges.push_back({base + 3, base + 4});
    edges.push_back({base + 4, base + 0});
    // backbone: p forks to oa/ob, ob bridges into the sugar chain
    edges.push_back({base + 5, base + 6});
    edges.push_back({base + 5, base + 7});
    edges.push_back({base + 7, base + 8});
    edges.push_back({base + 8, base + 9});
    edges.push_back({base + 9, base + 10});
    edges.push_back({base + 10, base + 11});
    // base-to-backbone attachment, alternating variant
    edges.push_back({base + (u % 2 == 0 ? 4 : 0), base + 8});
  }
  for (int u = 0; u + 1 < units; ++u)
    edges.push_back({u * k_unit_size + 11, (u + 1) * k_unit_size + 5, "b" + std::to_string(u + 1)});
  if (close_loop && units >= 2)
    edges.push_back({(units - 1) * k_unit_size + 11, 5, "b" + std::to_string(units)});
  return construct_graph(nodes, edges);
}

/// Edge-probability graph over uniform labels. Uses raw mt19937 output with
/// an integer threshold, so draws are identical across platforms.
inline Graph gen_random(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random graph needs n >= 0");
  require(p >= 0.0 && p <= 1.0, "edge probability must be in [0, 1]");
  std::vector<NodeSpec> nodes;
  for (NodeId i = 0; i < n; ++i) nodes.push_back({i, "n"});
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  const auto threshold =
      static_cast<std::uint64_t>(p * 4294967296.0);  // p * 2^32
  std::vector<EdgeSpec> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (static_cast<std::uint64_t>(rng()) < threshold) edges.push_back({u, v});
  return construct_graph(nodes, edges);
}

}  // namespace detail

inline Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::two_triangles: return detail::gen_two_triangles();
    case GraphKind::demo_molecule: return detail::gen_demo_molecule();
    case GraphKind::path: return detail::gen_path(spec.n, spec.labels);
    case GraphKind::cycle: return detail::gen_cycle(spec.n, spec.labels);
    case GraphKind::rect_grid: return detail::gen_rect_grid(spec.rows, spec.cols);
    case GraphKind::hex_grid: return detail::gen_hex_grid(spec.rows, spec.cols);
    case GraphKind::nested_tree: return detail::gen_nested_tree(spec.branching, spec.depth);
    case GraphKind::star_forest: return detail::gen_star_forest(spec.hubs, spec.leaves, spec.directed);
    case GraphKind::nucleotide_chain: return detail::gen_nucleotide_chain(spec.n, spec.loop);
    case GraphKind::random_graph: return detail::gen_random(spec.n, spec.p, spec.seed);
  }
  fail(Errc::invalid_parameters, "unknown generator kind");
}

inline std::optional<GraphKind> kind_from_name(const std::string& name) {
  static const std::map<std::string, GraphKind> kinds = {
      {"two_triangles", GraphKind::two_triangles},
      {"demo_molecule", GraphKind::demo_molecule},
      {"path", GraphKind::path},
      {"cycle", GraphKind::cycle},
      {"rect_grid", GraphKind::rect_grid},
      {"hex_grid", GraphKind::hex_grid},
      {"nested_tree", GraphKind::nested_tree},
      {"star_forest", GraphKind::star_forest},
      {"nucleotide_chain", GraphKind::nucleotide_chain},
      {"random", GraphKind::random_graph},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

}  // namespace graphgram

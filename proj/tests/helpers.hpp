#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "graphgram/graphgram.hpp"

namespace testutil {

using namespace graphgram;

/// Petersen graph: outer 5-cycle, inner pentagram, five spokes.
inline Graph petersen() {
  std::vector<NodeSpec> nodes;
  for (NodeId i = 0; i < 10; ++i) nodes.push_back({i, "n"});
  std::vector<EdgeSpec> edges;
  for (NodeId i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (NodeId i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (NodeId i = 0; i < 5; ++i) edges.push_back({i + 5, 5 + (i + 2) % 5});
  return construct_graph(nodes, edges);
}

/// Small random multigraph for oracle comparisons: at most 9 nodes and 16
/// edges, parallel edges allowed, no self-loops.
inline Graph small_random_graph(std::uint32_t seed) {
  std::mt19937 rng(seed);
  int n = 2 + static_cast<int>(rng() % 8);   // 2..9 nodes
  int m = static_cast<int>(rng() % 17);      // 0..16 edges
  std::vector<NodeSpec> nodes;
  for (NodeId i = 0; i < n; ++i) nodes.push_back({i, "n"});
  std::vector<EdgeSpec> edges;
  for (int e = 0; e < m; ++e) {
    NodeId u = static_cast<NodeId>(rng() % n);
    NodeId v = static_cast<NodeId>(rng() % n);
    if (u == v) continue;
    edges.push_back({u, v});
  }
  return construct_graph(nodes, edges);
}

inline std::string temp_path(const std::string& name) {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path() / "graphgram_tests";
  std::filesystem::create_directories(dir);
  return (dir / (std::to_string(++counter) + "_" + name)).string();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace testutil

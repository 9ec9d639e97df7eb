#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace nielsen {

/// Undirected graph on vertices 0..vertex_count-1 with tokens 1..n placed
/// injectively: placement[t-1] is the vertex holding token t.
struct TokenGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> placement;

  std::size_t tokens() const noexcept { return placement.size(); }
  bool has_edge(std::size_t a, std::size_t b) const;
};

struct Move {
  std::size_t token = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSchedule = std::vector<Move>;

/// "token from to", one move per line.
std::string format_schedule(const MoveSchedule& moves);

/// A vertex of degree >= 3 and three branches leaving it, each at least as
/// long as the number of tokens. `graph` is the input with the edges next to
/// the junction subdivided where a branch was too short; new vertices are
/// appended after the original ones.
struct JunctionLayout {
  std::size_t vertex = 0;
  TokenGraph graph;
  std::array<std::vector<std::size_t>, 3> branches;  // nearest the junction first
};

/// Picks the essential vertex of largest degree (smallest id on ties).
/// Throws NoEssentialVertex for paths and cycles, InvalidArgument for
/// disconnected graphs, bad edges, or placements that are not injective or
/// leave no free vertex.
JunctionLayout validate_graph(const TokenGraph& g);

struct Plan {
  JunctionLayout layout;
  MoveSchedule moves;
  std::size_t length_bound = 0;  // 2 n V + (n^2 + n)(2n + 1), V after subdivision
};

/// Collision-free schedule taking g.placement to goal on layout.graph.
Plan plan(const TokenGraph& g, const std::vector<std::size_t>& goal);

/// Replays moves from g.placement and returns the final placement.
/// Throws IllegalMove or CollisionDetected.
std::vector<std::size_t> simulate(const TokenGraph& g, const MoveSchedule& moves);

}  // namespace nielsen

#include "nielsen/planner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "nielsen/error.hpp"

namespace nielsen {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency adjacency(const TokenGraph& g) {
  Adjacency adj(g.vertex_count);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

// BFS parents from root; SIZE_MAX marks unreached vertices.
std::vector<std::size_t> bfs_parents(const Adjacency& adj, std::size_t root) {
  std::vector<std::size_t> parent(adj.size(), SIZE_MAX);
  parent[root] = root;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u])
      if (parent[w] == SIZE_MAX) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  return parent;
}

std::vector<std::size_t> shortest_path(const Adjacency& adj, std::size_t from, std::size_t to) {
  const std::vector<std::size_t> parent = bfs_parents(adj, to);
  std::vector<std::size_t> path{from};
  while (path.back() != to) path.push_back(parent[path.back()]);
  return path;
}

void check_placement(const TokenGraph& g, const std::vector<std::size_t>& placement, const char* what) {
  std::set<std::size_t> used;
  for (std::size_t v : placement) {
    if (v >= g.vertex_count)
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " uses a vertex outside the graph");
    if (!used.insert(v).second)
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " places two tokens on vertex " + std::to_string(v));
  }
}

// Token positions plus occupancy, recording every move taken.
class Board {
 public:
  Board(std::size_t vertex_count, const std::vector<std::size_t>& placement)
      : pos_(placement), occ_(vertex_count, 0) {
    for (std::size_t t = 0; t < pos_.size(); ++t) occ_[pos_[t]] = t + 1;
  }
  std::size_t at(std::size_t v) const { return occ_[v]; }
  std::size_t where(std::size_t token) const { return pos_[token - 1]; }
  const std::vector<std::size_t>& placement() const { return pos_; }
  const MoveSchedule& moves() const { return moves_; }

  void step(std::size_t token, std::size_t to) {
    const std::size_t from = pos_[token - 1];
    occ_[from] = 0;
    occ_[to] = token;
    pos_[token - 1] = to;
    moves_.push_back({token, from, to});
  }
  // Slides a token along a path starting at its current vertex.
  void walk(const std::vector<std::size_t>& path) {
    const std::size_t token = occ_[path.front()];
    for (std::size_t k = 1; k < path.size(); ++k) step(token, path[k]);
  }

 private:
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> occ_;  // vertex -> token, 0 when free
  MoveSchedule moves_;
};

// Brings the tokens onto the vertices of `targets` in whatever order. Each
// round routes a token from outside toward a free target; a blocking token
// nearer the target goes first, and if it was already a target its old spot
// becomes the new, closer goal.
void gather(const Adjacency& adj, Board& board, const std::vector<std::size_t>& targets) {
  const std::set<std::size_t> target_set(targets.begin(), targets.end());
  const std::size_t n = board.placement().size();
  while (true) {
    std::size_t outside = 0;
    for (std::size_t t = 1; t <= n && !outside; ++t)
      if (!target_set.count(board.where(t))) outside = t;
    if (!outside) return;
    std::size_t goal = SIZE_MAX;
    for (auto it = targets.rbegin(); it != targets.rend(); ++it)
      if (!board.at(*it)) {
        goal = *it;
        break;
      }
    std::vector<std::size_t> path = shortest_path(adj, board.where(outside), goal);
    while (true) {
      std::size_t m = path.size() - 1;
      while (!board.at(path[m])) --m;
      const bool was_target = target_set.count(path[m]) > 0;
      board.walk(std::vector<std::size_t>(path.begin() + static_cast<std::ptrdiff_t>(m), path.end()));
      if (m == 0 || !was_target) break;
      path.resize(m + 1);
    }
  }
}

// Stack of tokens packed at the far end of a branch.
struct Stack {
  const std::vector<std::size_t>* cells;
  std::size_t height = 0;
  std::size_t top_index() const { return cells->size() - height; }
};

void pop_push(Board& board, std::size_t junction, Stack& from, Stack& to) {
  const auto& src = *from.cells;
  const auto& dst = *to.cells;
  std::vector<std::size_t> path;
  for (std::size_t k = from.top_index() + 1; k-- > 0;) path.push_back(src[k]);
  path.push_back(junction);
  const std::size_t landing = dst.size() - to.height - 1;
  for (std::size_t k = 0; k <= landing; ++k) path.push_back(dst[k]);
  board.walk(path);
  --from.height;
  ++to.height;
}

// Contents of a stack from the bottom up.
std::vector<std::size_t> contents(const Board& board, const Stack& s) {
  std::vector<std::size_t> out;
  for (std::size_t k = s.cells->size(); k-- > s.top_index();) out.push_back(board.at((*s.cells)[k]));
  return out;
}

}  // namespace

bool TokenGraph::has_edge(std::size_t a, std::size_t b) const {
  for (auto [x, y] : edges)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

std::string format_schedule(const MoveSchedule& moves) {
  std::ostringstream out;
  for (const Move& m : moves) out << m.token << ' ' << m.from << ' ' << m.to << '\n';
  return out.str();
}

JunctionLayout validate_graph(const TokenGraph& g) {
  if (g.vertex_count == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  for (auto [a, b] : g.edges) {
    if (a >= g.vertex_count || b >= g.vertex_count)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint outside the graph");
    if (a == b) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(a));
  }
  {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : g.edges)
      if (!seen.insert(std::minmax(a, b)).second)
        throw Error(ErrorCode::InvalidArgument, "repeated edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  check_placement(g, g.placement, "placement");
  if (g.tokens() >= g.vertex_count)
    throw Error(ErrorCode::InvalidArgument, "need more vertices than tokens");

  const Adjacency adj = adjacency(g);
  const std::vector<std::size_t> reach = bfs_parents(adj, 0);
  if (std::count(reach.begin(), reach.end(), SIZE_MAX) > 0)
    throw Error(ErrorCode::InvalidArgument, "graph is not connected");

  std::size_t v = SIZE_MAX;
  for (std::size_t u = 0; u < g.vertex_count; ++u)
    if (adj[u].size() >= 3 && (v == SIZE_MAX || adj[u].size() > adj[v].size())) v = u;
  if (v == SIZE_MAX) throw Error(ErrorCode::NoEssentialVertex, "graph is a path or a cycle");

  // Longest downward chain below each vertex of the BFS tree at v.
  const std::vector<std::size_t> parent = bfs_parents(adj, v);
  std::vector<std::vector<std::size_t>> children(g.vertex_count);
  std::vector<std::size_t> order{v};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t w : adj[order[k]])
      if (parent[w] == order[k] && w != v) {
        children[order[k]].push_back(w);
        order.push_back(w);
      }
  std::vector<std::size_t> height(g.vertex_count, 1), down(g.vertex_count, SIZE_MAX);
  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t u = order[k];
    for (std::size_t c : children[u])
      if (height[c] + 1 > height[u] || (height[c] + 1 == height[u] && c < down[u])) {
        height[u] = height[c] + 1;
        down[u] = c;
      }
  }
  std::vector<std::size_t> heads = children[v];
  std::stable_sort(heads.begin(), heads.end(),
                   [&](std::size_t a, std::size_t b) { return height[a] > height[b]; });

  JunctionLayout out;
  out.vertex = v;
  out.graph = g;
  const std::size_t n = g.tokens();
  for (std::size_t b = 0; b < 3; ++b) {
    std::vector<std::size_t> chain;
    for (std::size_t u = heads[b]; u != SIZE_MAX; u = down[u]) chain.push_back(u);
    std::vector<std::size_t> branch;
    if (chain.size() < n) {
      auto& edges = out.graph.edges;
      const std::size_t head = heads[b];
      edges.erase(std::find_if(edges.begin(), edges.end(), [&](auto e) {
        return (e.first == v && e.second == head) || (e.first == head && e.second == v);
      }));
      std::size_t prev = v;
      for (std::size_t k = chain.size(); k < n; ++k) {
        const std::size_t w = out.graph.vertex_count++;
        edges.emplace_back(prev, w);
        branch.push_back(w);
        prev = w;
      }
      edges.emplace_back(prev, head);
    }
    for (std::size_t u : chain) {
      if (branch.size() == n) break;
      branch.push_back(u);
    }
    out.branches[b] = std::move(branch);
  }
  return out;
}

Plan plan(const TokenGraph& g, const std::vector<std::size_t>& goal) {
  Plan out;
  out.layout = validate_graph(g);
  const TokenGraph& h = out.layout.graph;
  if (goal.size() != g.tokens())
    throw Error(ErrorCode::InvalidArgument, "goal has a different number of tokens");
  check_placement(h, goal, "goal");
  const std::size_t n = g.tokens();
  out.length_bound = 2 * n * h.vertex_count + (n * n + n) * (2 * n + 1);
  if (goal == g.placement) return out;

  const Adjacency adj = adjacency(h);
  const auto& branches = out.layout.branches;
  const std::size_t junction = out.layout.vertex;

  Board forward(h.vertex_count, g.placement);
  gather(adj, forward, branches[0]);
  Board backward(h.vertex_count, goal);
  gather(adj, backward, branches[0]);

  // Reorder stack A into the arrangement the backward gather reached, using
  // B and C as buffers.
  Stack a{&branches[0], n}, b{&branches[1], 0}, c{&branches[2], 0};
  const std::vector<std::size_t> wanted = contents(backward, a);
  while (a.height) pop_push(forward, junction, a, b);
  for (std::size_t token : wanted) {
    Stack* holder = &b;
    Stack* other = &c;
    std::vector<std::size_t> stack = contents(forward, b);
    if (std::find(stack.begin(), stack.end(), token) == stack.end()) {
      std::swap(holder, other);
      stack = contents(forward, c);
    }
    while (stack.back() != token) {
      pop_push(forward, junction, *holder, *other);
      stack.pop_back();
    }
    pop_push(forward, junction, *holder, a);
  }

  out.moves = forward.moves();
  const MoveSchedule& tail = backward.moves();
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.moves.push_back({it->token, it->to, it->from});
  return out;
}

std::vector<std::size_t> simulate(const TokenGraph& g, const MoveSchedule& moves) {
  std::vector<std::size_t> pos = g.placement;
  std::vector<std::size_t> occ(g.vertex_count, 0);
  for (std::size_t t = 0; t < pos.size(); ++t) {
    if (pos[t] >= g.vertex_count || occ[pos[t]])
      throw Error(ErrorCode::CollisionDetected, "start placement is not injective");
    occ[pos[t]] = t + 1;
  }
  const Adjacency adj = adjacency(g);
  std::size_t step = 0;
  for (const Move& m : moves) {
    ++step;
    const std::string where = "move " + std::to_string(step) + ": ";
    if (m.token < 1 || m.token > pos.size())
      throw Error(ErrorCode::IllegalMove, where + "no token " + std::to_string(m.token));
    if (pos[m.token - 1] != m.from)
      throw Error(ErrorCode::IllegalMove, where + "token " + std::to_string(m.token) + " is not at vertex " +
                                              std::to_string(m.from));
    if (m.to >= g.vertex_count || !std::binary_search(adj[m.from].begin(), adj[m.from].end(), m.to))
      throw Error(ErrorCode::IllegalMove, where + "no edge " + std::to_string(m.from) + "-" + std::to_string(m.to));
    if (occ[m.to])
      throw Error(ErrorCode::CollisionDetected, where + "vertex " + std::to_string(m.to) + " holds token " +
                                                    std::to_string(occ[m.to]));
    occ[m.from] = 0;
    occ[m.to] = m.token;
    pos[m.token - 1] = m.to;
  }
  return pos;
}

}  // namespace nielsen

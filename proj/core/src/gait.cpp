#include "oriloco/gait.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace oriloco {

void validate(const FluidParams& fluid) {
  if (!(fluid.rho > 0.0) || !(fluid.c_d > 0.0) || !(fluid.v > 0.0))
    throw std::invalid_argument("fluid: rho, c_d, and v must all be positive");
}

double thrust_force(const FluidParams& fluid, double area_mm2) {
  if (area_mm2 < 0.0) throw std::invalid_argument("thrust_force: negative area");
  const double area_m2 = area_mm2 * 1e-6;
  return 0.5 * fluid.c_d * fluid.rho * area_m2 * fluid.v * fluid.v;
}

double edge_thrust(const WorkspaceNode& from, const WorkspaceNode& to) {
  int chebyshev = 0;
  for (int a = 0; a < 3; ++a)
    chebyshev = std::max(chebyshev, std::abs(from.grid_index[a] - to.grid_index[a]));
  if (chebyshev != 1)
    throw std::invalid_argument("edge_thrust: nodes are not grid neighbors");
  return (from.position.y - to.position.y) * (from.area_p + to.area_p) / 2.0;
}

std::vector<std::array<int, 3>> neighbors(const GridSpec& grid,
                                          const std::array<int, 3>& index,
                                          Connectivity conn) {
  if (!grid.contains(index))
    throw std::invalid_argument("neighbors: index outside the grid");
  std::vector<std::array<int, 3>> out;
  out.reserve(conn == Connectivity::Faces ? 6 : 26);
  // Lexicographic offset order yields ascending flat indices directly.
  for (int di = -1; di <= 1; ++di)
    for (int dj = -1; dj <= 1; ++dj)
      for (int dk = -1; dk <= 1; ++dk) {
        if (di == 0 && dj == 0 && dk == 0) continue;
        if (conn == Connectivity::Faces &&
            std::abs(di) + std::abs(dj) + std::abs(dk) != 1)
          continue;
        const std::array<int, 3> cand{index[0] + di, index[1] + dj, index[2] + dk};
        if (grid.contains(cand)) out.push_back(cand);
      }
  return out;
}

StrokeEndpoints select_endpoints(const std::vector<WorkspaceNode>& nodes) {
  if (nodes.empty()) throw std::invalid_argument("select_endpoints: empty workspace");
  int best_x = 0, best_y = 0;
  for (int i = 1; i < static_cast<int>(nodes.size()); ++i) {
    // Strict > keeps the first (lexicographically smallest grid index in
    // sampling order) among ties.
    if (nodes[i].position.x > nodes[best_x].position.x) best_x = i;
    if (nodes[i].position.y < nodes[best_y].position.y) best_y = i;
  }
  if (best_x == best_y)
    throw std::invalid_argument("select_endpoints: start and goal coincide");
  return {best_x, best_y};
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Everything the search passes around: the grid, the node array, and the
// edge-feasibility options.
struct SearchCtx {
  const GridSpec& grid;
  const std::vector<WorkspaceNode>& nodes;
  Connectivity conn;
  std::optional<double> max_step;

  double y(int f) const { return nodes[f].position.y; }

  bool step_ok(int uf, int vf) const {
    if (!max_step) return true;
    const auto& a = nodes[uf].joints.theta;
    const auto& b = nodes[vf].joints.theta;
    for (int i = 0; i < 3; ++i)
      if (std::abs(a[i] - b[i]) > *max_step) return false;
    return true;
  }

  std::vector<int> adj(int uf) const {
    std::vector<int> out;
    for (const auto& idx : neighbors(grid, nodes[uf].grid_index, conn)) {
      const int vf = grid.flat_index(idx);
      if (step_ok(uf, vf)) out.push_back(vf);
    }
    return out;
  }

  double weight(int uf, int vf) const { return edge_thrust(nodes[uf], nodes[vf]); }
  double cost(int uf, int vf) const { return std::abs(edge_thrust(nodes[uf], nodes[vf])); }
};

struct QueueEntry {
  double f;
  int node;
};

// Max-first: highest f pops first; ties pop the smaller node index.
struct MaxOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.f != b.f) return a.f < b.f;
    return a.node > b.node;
  }
};

// Min-first mirror.
struct MinOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    return a.node > b.node;
  }
};

void record_expansion(SearchStats* stats, int node) {
  if (!stats) return;
  ++stats->expanded;
  stats->expanded_nodes.push_back(node);
}

// Best achievable remaining thrust from every node to the goal over
// y-monotone paths; -inf where the goal is unreachable.  Processes nodes
// by ascending y so strictly-descending steps always reference finished
// values; nodes of bitwise-equal y that connect through feasible edges
// form a plateau and share their best descent (a path may wander the
// plateau freely before dropping).
std::vector<double> thrust_remaining(const SearchCtx& ctx, int goal) {
  const int n = static_cast<int>(ctx.nodes.size());
  std::vector<double> rem(n, kNegInf);
  std::vector<double> down(n, kNegInf);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ctx.y(a) != ctx.y(b)) return ctx.y(a) < ctx.y(b);
    return a < b;
  });

  std::vector<int> component;
  std::vector<int> frontier;
  std::vector<char> in_group(n, 0);
  std::vector<char> seen(n, 0);

  std::size_t at = 0;
  while (at < order.size()) {
    std::size_t end = at + 1;
    while (end < order.size() && ctx.y(order[end]) == ctx.y(order[at])) ++end;

    for (std::size_t i = at; i < end; ++i) in_group[order[i]] = 1;

    // Best strict descent per group member.
    for (std::size_t i = at; i < end; ++i) {
      const int u = order[i];
      for (int v : ctx.adj(u)) {
        if (!(ctx.y(v) < ctx.y(u)) || rem[v] == kNegInf) continue;
        const double cand = ctx.weight(u, v) + rem[v];
        if (cand > down[u]) down[u] = cand;
      }
    }

    // Plateau components share the best of their members' descents (and
    // value 0 when the goal itself sits on the plateau: a path may simply
    // end there).
    for (std::size_t i = at; i < end; ++i) {
      const int root = order[i];
      if (seen[root]) continue;
      component.clear();
      frontier.clear();
      frontier.push_back(root);
      seen[root] = 1;
      while (!frontier.empty()) {
        const int u = frontier.back();
        frontier.pop_back();
        component.push_back(u);
        for (int v : ctx.adj(u)) {
          if (!in_group[v] || seen[v] || ctx.y(v) != ctx.y(u)) continue;
          seen[v] = 1;
          frontier.push_back(v);
        }
      }
      double best = kNegInf;
      for (int u : component) {
        if (down[u] > best) best = down[u];
        if (u == goal) best = std::max(best, 0.0);
      }
      if (best != kNegInf)
        for (int u : component) rem[u] = best;
    }

    for (std::size_t i = at; i < end; ++i) in_group[order[i]] = 0;
    at = end;
  }
  return rem;
}

// Exact minimum remaining drag to the goal (plain Dijkstra from the goal
// over the symmetric edge costs); +inf where disconnected.
std::vector<double> drag_remaining(const SearchCtx& ctx, int goal) {
  const int n = static_cast<int>(ctx.nodes.size());
  std::vector<double> rem(n, kPosInf);
  std::vector<char> settled(n, 0);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, MinOrder> open;
  rem[goal] = 0.0;
  open.push({0.0, goal});
  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    if (settled[top.node]) continue;
    settled[top.node] = 1;
    for (int v : ctx.adj(top.node)) {
      if (settled[v]) continue;
      const double cand = ctx.cost(v, top.node) + rem[top.node];
      if (cand < rem[v]) {
        rem[v] = cand;
        open.push({cand, v});
      }
    }
  }
  return rem;
}

// Depth-first reconstruction of the lexicographically smallest optimal
// path.  `continues` must accept exactly the steps that preserve
// optimality (checked with bitwise equality against the remaining-value
// tables, so at least one continuation always matches).  Returns empty on
// budget exhaustion, which callers treat as "fall back to the search's
// parent chain".
struct DfsFrame {
  int node;
  std::vector<int> next;
  std::size_t cursor = 0;
};

template <typename Continues>
std::vector<int> lex_smallest_path(const SearchCtx& ctx, int start, int goal,
                                   Continues continues) {
  const int n = static_cast<int>(ctx.nodes.size());
  const std::size_t budget = 200000 + 64 * static_cast<std::size_t>(n);
  std::size_t steps = 0;

  std::vector<char> visited(n, 0);
  std::vector<DfsFrame> stack;
  stack.push_back({start, ctx.adj(start)});
  visited[start] = 1;
  if (start == goal) return {start};

  while (!stack.empty()) {
    DfsFrame& frame = stack.back();
    if (frame.cursor >= frame.next.size()) {
      visited[frame.node] = 0;
      stack.pop_back();
      continue;
    }
    const int v = frame.next[frame.cursor++];
    if (visited[v] || !continues(frame.node, v)) continue;
    if (++steps > budget) return {};
    visited[v] = 1;
    stack.push_back({v, ctx.adj(v)});
    if (v == goal) {
      std::vector<int> path;
      path.reserve(stack.size());
      for (const DfsFrame& f : stack) path.push_back(f.node);
      return path;
    }
  }
  return {};
}

std::vector<int> parent_chain(const std::vector<int>& parent, int start, int goal) {
  std::vector<int> path;
  for (int u = goal; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  if (path.empty() || path.front() != start) return {};
  return path;
}

GaitPath build_path(const SearchCtx& ctx, const std::vector<int>& flat) {
  GaitPath p;
  p.flat_indices = flat;
  p.nodes.reserve(flat.size());
  for (int f : flat) p.nodes.push_back(ctx.nodes[f]);
  p.edge_strengths.reserve(flat.size() > 0 ? flat.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
    const double w = ctx.weight(flat[i], flat[i + 1]);
    p.edge_strengths.push_back(w);
    p.total_thrust += w;
    p.total_drag += std::abs(w);
  }
  return p;
}

void check_planner_inputs(const SearchCtx& ctx, int start, int goal) {
  const int n = static_cast<int>(ctx.nodes.size());
  if (n == 0) throw std::invalid_argument("planner: empty workspace");
  if (n != ctx.grid.count())
    throw std::invalid_argument("planner: workspace size disagrees with the grid");
  if (start < 0 || start >= n || goal < 0 || goal >= n)
    throw std::invalid_argument("planner: endpoint index outside the workspace");
  if (start == goal) throw std::invalid_argument("planner: start and goal coincide");
}

}  // namespace

std::optional<GaitPath> plan_thrust_stroke(const GridSpec& grid,
                                           const std::vector<WorkspaceNode>& nodes,
                                           const StrokeEndpoints& endpoints,
                                           const PlannerOptions& opts,
                                           SearchStats* stats) {
  const SearchCtx ctx{grid, nodes, opts.connectivity, opts.max_joint_step};
  const int start = endpoints.start, goal = endpoints.goal;
  check_planner_inputs(ctx, start, goal);

  double area_max = 0.0;
  for (const WorkspaceNode& node : nodes) area_max = std::max(area_max, node.area_p);
  const double y_goal = ctx.y(goal);
  auto heuristic = [&](int f) { return area_max * std::abs(ctx.y(f) - y_goal); };

  const int n = static_cast<int>(nodes.size());
  std::vector<double> g(n, kNegInf);
  std::vector<int> parent(n, -1);
  std::vector<char> closed(n, 0);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, MaxOrder> open;

  g[start] = 0.0;
  open.push({heuristic(start), start});
  if (stats) stats->pushed = 1;

  bool found = false;
  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    if (closed[top.node]) continue;
    closed[top.node] = 1;
    record_expansion(stats, top.node);
    if (top.node == goal) {
      found = true;
      break;
    }
    for (int v : ctx.adj(top.node)) {
      if (closed[v] || ctx.y(v) > ctx.y(top.node)) continue;
      const double cand = g[top.node] + ctx.weight(top.node, v);
      if (cand > g[v]) {
        g[v] = cand;
        parent[v] = top.node;
        open.push({cand + heuristic(v), v});
        if (stats) ++stats->pushed;
      }
    }
  }
  if (!found) return std::nullopt;

  const std::vector<double> rem = thrust_remaining(ctx, goal);
  std::vector<int> path = lex_smallest_path(ctx, start, goal, [&](int u, int v) {
    if (ctx.y(v) > ctx.y(u) || rem[v] == kNegInf) return false;
    return ctx.weight(u, v) + rem[v] == rem[u];
  });
  if (path.empty()) path = parent_chain(parent, start, goal);
  if (path.empty()) return std::nullopt;
  return build_path(ctx, path);
}

std::optional<GaitPath> plan_drag_stroke(const GridSpec& grid,
                                         const std::vector<WorkspaceNode>& nodes, int start,
                                         int goal, const PlannerOptions& opts,
                                         SearchStats* stats) {
  const SearchCtx ctx{grid, nodes, opts.connectivity, opts.max_joint_step};
  check_planner_inputs(ctx, start, goal);

  double area_min = nodes.empty() ? 0.0 : nodes.front().area_p;
  for (const WorkspaceNode& node : nodes) area_min = std::min(area_min, node.area_p);
  const double y_goal = ctx.y(goal);
  auto heuristic = [&](int f) { return area_min * std::abs(ctx.y(f) - y_goal); };

  const int n = static_cast<int>(nodes.size());
  std::vector<double> g(n, kPosInf);
  std::vector<int> parent(n, -1);
  std::vector<char> closed(n, 0);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, MinOrder> open;

  g[start] = 0.0;
  open.push({heuristic(start), start});
  if (stats) stats->pushed = 1;

  bool found = false;
  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    if (closed[top.node]) continue;
    closed[top.node] = 1;
    record_expansion(stats, top.node);
    if (top.node == goal) {
      found = true;
      break;
    }
    for (int v : ctx.adj(top.node)) {
      if (closed[v]) continue;
      const double cand = g[top.node] + ctx.cost(top.node, v);
      if (cand < g[v]) {
        g[v] = cand;
        parent[v] = top.node;
        open.push({cand + heuristic(v), v});
        if (stats) ++stats->pushed;
      }
    }
  }
  if (!found) return std::nullopt;

  const std::vector<double> rem = drag_remaining(ctx, goal);
  std::vector<int> path = lex_smallest_path(ctx, start, goal, [&](int u, int v) {
    if (rem[v] == kPosInf) return false;
    return ctx.cost(u, v) + rem[v] == rem[u];
  });
  if (path.empty()) path = parent_chain(parent, start, goal);
  if (path.empty()) return std::nullopt;
  return build_path(ctx, path);
}

std::vector<std::pair<double, double>> stroke_profile(const GaitPath& path) {
  if (path.nodes.empty()) throw std::invalid_argument("stroke_profile: empty path");
  std::vector<std::pair<double, double>> out;
  out.reserve(path.nodes.size());
  for (const WorkspaceNode& node : path.nodes)
    out.emplace_back(node.position.y, node.area_p);
  return out;
}

}  // namespace oriloco

#pragma once

#include <optional>
#include <vector>

#include "oriloco/workspace.hpp"

/// \file
/// \brief Stroke optimization over the rasterized workspace.
///
/// Swimming is split into two strokes over the same joint-space graph:
/// the thrust stroke sweeps the plate backward (-y) and should push as
/// much water as possible; the drag stroke returns to the spread position
/// and should disturb as little as possible.  Edge weight in both cases is
/// |delta y| times the average projected area of the endpoints -- the
/// volume of water swept crossing that edge.
///
/// Thrust maximization is only well posed on y-monotone paths (without the
/// restriction, zig-zagging accumulates unbounded "volume"); on that DAG a
/// best-first search on f = g + H with the overestimating heuristic
/// H_thrust(n) = A_max * |y_n - y_goal| returns the maximum-total path.
/// Drag minimization is a standard A* with the admissible underestimate
/// H_drag(n) = A_min * |y_n - y_goal|.

namespace oriloco {

struct FluidParams {
  double rho = 1000.0;  ///< fluid density, kg/m^3
  double c_d = 1.2;     ///< drag coefficient
  double v = 0.1;       ///< relative speed, m/s
};

void validate(const FluidParams& fluid);

/// Blade-element force 0.5 * C_d * rho * A_p * V^2 in Newtons; the area
/// argument is mm^2 and converted internally.
double thrust_force(const FluidParams& fluid, double area_mm2);

/// Signed strength of traversing from -> to:
/// (y_from - y_to) * (area_from + area_to) / 2.  Positive when the plate
/// moves toward -y (pushing water backward).  Throws std::invalid_argument
/// when the nodes are not grid neighbors (grid indices differing by at
/// most 1 per coordinate).
double edge_thrust(const WorkspaceNode& from, const WorkspaceNode& to);

enum class Connectivity { Faces = 6, Full = 26 };

/// In-bounds neighbor indices of `index`, in ascending flat-index order.
/// Faces: the <= 6 across-face neighbors; Full: all <= 26 cube neighbors.
/// Throws std::invalid_argument for an out-of-grid index.
std::vector<std::array<int, 3>> neighbors(const GridSpec& grid,
                                          const std::array<int, 3>& index,
                                          Connectivity conn = Connectivity::Faces);

/// Where the thrust stroke starts and ends, as flat node indices:
/// start = argmax x (the furthest spread), goal = argmin y.  Ties go to
/// the lexicographically smallest grid index.  Throws
/// std::invalid_argument for an empty workspace or start == goal.
struct StrokeEndpoints {
  int start = 0;
  int goal = 0;
};

StrokeEndpoints select_endpoints(const std::vector<WorkspaceNode>& nodes);

/// A solved stroke.  Nodes are copies of the workspace samples in path
/// order; flat_indices locate them in the source workspace.
struct GaitPath {
  std::vector<WorkspaceNode> nodes;
  std::vector<int> flat_indices;
  std::vector<double> edge_strengths;  ///< signed edge_thrust per step
  double total_thrust = 0.0;           ///< sum of signed strengths
  double total_drag = 0.0;             ///< sum of absolute strengths
};

struct SearchStats {
  int expanded = 0;                 ///< closed-set insertions
  std::size_t pushed = 0;           ///< priority-queue pushes
  std::vector<int> expanded_nodes;  ///< flat indices in expansion order
};

struct PlannerOptions {
  Connectivity connectivity = Connectivity::Faces;
  /// Optional per-edge cap on the largest joint-angle change (rad); unset
  /// means no rate limit.
  std::optional<double> max_joint_step;
};

/// Maximum-thrust y-monotone path start -> goal, or nullopt when no
/// monotone path reaches the goal.  Among equal-total optima the
/// lexicographically smallest flat-index sequence is returned.
std::optional<GaitPath> plan_thrust_stroke(const GridSpec& grid,
                                           const std::vector<WorkspaceNode>& nodes,
                                           const StrokeEndpoints& endpoints,
                                           const PlannerOptions& opts = {},
                                           SearchStats* stats = nullptr);

/// Minimum-drag unconstrained path start -> goal, or nullopt when the goal
/// is disconnected.  Same lexicographic tie-break.
std::optional<GaitPath> plan_drag_stroke(const GridSpec& grid,
                                         const std::vector<WorkspaceNode>& nodes, int start,
                                         int goal, const PlannerOptions& opts = {},
                                         SearchStats* stats = nullptr);

/// Per-node (y_mm, area_mm2) pairs in path order; the trapezoidal
/// integral of this curve over y is exactly the path total.
std::vector<std::pair<double, double>> stroke_profile(const GaitPath& path);

}  // namespace oriloco

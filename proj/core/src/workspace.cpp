#include "oriloco/workspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oriloco/errors.hpp"

namespace oriloco {

void validate(const GridSpec& grid) {
  for (int a = 0; a < 3; ++a) {
    const AxisRange& ax = grid.axis[a];
    if (ax.steps < 2)
      throw std::invalid_argument("grid: axis " + std::to_string(a) +
                                  " needs at least 2 steps");
    if (!(ax.min_rad < ax.max_rad))
      throw std::invalid_argument("grid: axis " + std::to_string(a) +
                                  " needs min < max");
    if (ax.min_rad < 0.0)
      throw std::invalid_argument("grid: axis " + std::to_string(a) +
                                  " minimum is negative");
  }
}

void validate(const GridSpec& grid, const ArmParams& params) {
  validate(grid);
  // The boundary itself is legal (height 0 at the collapse twist); allow
  // rounding slack so a grid spanning the full range validates.
  const double limit = joint_limit(params) + 1e-9;
  for (int a = 0; a < 3; ++a)
    if (grid.axis[a].max_rad > limit)
      throw std::invalid_argument("grid: axis " + std::to_string(a) +
                                  " maximum exceeds the joint limit");
}

void validate(const PlateSpec& plate) {
  if (!(plate.plate_area > 0.0))
    throw std::invalid_argument("plate: plate_area must be positive");
}

double projected_area(const HomTransform& pose, const PlateSpec& plate,
                      const Vec3& forward_axis) {
  return plate.plate_area * std::abs(dot(end_plate_normal(pose), forward_axis));
}

std::vector<WorkspaceNode> sample_workspace(const ArmParams& params, const GridSpec& grid,
                                            const PlateSpec& plate,
                                            const Vec3& forward_axis) {
  validate(grid);
  validate(plate);
  std::vector<WorkspaceNode> nodes;
  nodes.reserve(static_cast<std::size_t>(grid.count()));
  for (int i = 0; i < grid.axis[0].steps; ++i)
    for (int j = 0; j < grid.axis[1].steps; ++j)
      for (int k = 0; k < grid.axis[2].steps; ++k) {
        WorkspaceNode node;
        node.grid_index = {i, j, k};
        node.joints = grid.joints_at(node.grid_index);
        try {
          const HomTransform pose = forward_kinematics(params, node.joints);
          node.position = pose.translation();
          node.normal = end_plate_normal(pose);
          node.area_p = projected_area(pose, plate, forward_axis);
        } catch (const InfeasibleError& e) {
          throw InfeasibleError("workspace node (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                "): " + e.what());
        }
        nodes.push_back(node);
      }
  return nodes;
}

WorkspaceSummary summarize(const std::vector<WorkspaceNode>& nodes, const Vec3& center) {
  WorkspaceSummary s;
  if (nodes.empty()) return s;
  double sum = 0.0;
  s.r_min = (nodes.front().position - center).norm();
  s.r_max = s.r_min;
  for (const WorkspaceNode& node : nodes) {
    const double r = (node.position - center).norm();
    s.r_min = std::min(s.r_min, r);
    s.r_max = std::max(s.r_max, r);
    sum += r;
  }
  s.r_mean = sum / static_cast<double>(nodes.size());
  return s;
}

}  // namespace oriloco

#pragma once

#include <array>
#include <vector>

#include "oriloco/arm.hpp"

/// \file
/// \brief Joint-space rasterization: pose and projected area at every
/// sample of a regular 3D grid over the commanded twists.

namespace oriloco {

/// Inclusive sampling range for one joint.
struct AxisRange {
  double min_rad = 0.0;
  double max_rad = 0.0;
  int steps = 2;  ///< >= 2 samples, endpoints included
};

/// Regular grid over the three commanded twists.  Nodes are ordered by
/// lexicographic grid index (k fastest).
struct GridSpec {
  std::array<AxisRange, 3> axis;

  int count() const { return axis[0].steps * axis[1].steps * axis[2].steps; }

  bool contains(const std::array<int, 3>& idx) const {
    for (int a = 0; a < 3; ++a)
      if (idx[a] < 0 || idx[a] >= axis[a].steps) return false;
    return true;
  }

  int flat_index(const std::array<int, 3>& idx) const {
    return (idx[0] * axis[1].steps + idx[1]) * axis[2].steps + idx[2];
  }

  std::array<int, 3> unflatten(int flat) const {
    std::array<int, 3> idx;
    idx[2] = flat % axis[2].steps;
    flat /= axis[2].steps;
    idx[1] = flat % axis[1].steps;
    idx[0] = flat / axis[1].steps;
    return idx;
  }

  /// Joint angle at grid coordinate g on one axis:
  /// min + g * (max - min) / (steps - 1), evaluated exactly in this form.
  double angle_at(int axis_idx, int g) const {
    const AxisRange& ax = axis[axis_idx];
    return ax.min_rad + g * (ax.max_rad - ax.min_rad) / (ax.steps - 1);
  }

  JointState joints_at(const std::array<int, 3>& idx) const {
    JointState j;
    for (int a = 0; a < 3; ++a) j.theta[a] = angle_at(a, idx[a]);
    return j;
  }
};

/// Throws std::invalid_argument unless every axis has steps >= 2 and
/// min < max with min >= 0.
void validate(const GridSpec& grid);

/// Grid validation plus the kinematic-domain check: every axis maximum
/// must stay within joint_limit(params).
void validate(const GridSpec& grid, const ArmParams& params);

/// The flapping plate on the end of the arm.
struct PlateSpec {
  double plate_area = 600.0;  ///< mm^2
};

void validate(const PlateSpec& plate);

/// One joint-space sample: where the end plate sits and how much area it
/// shows to the forward direction.
struct WorkspaceNode {
  std::array<int, 3> grid_index{0, 0, 0};
  JointState joints;
  Vec3 position;      ///< mm
  Vec3 normal;        ///< unit end-plate normal
  double area_p = 0;  ///< projected area, mm^2
};

/// plate_area * |normal . forward_axis|.  forward_axis must be unit
/// length; the default forward direction is +y.
double projected_area(const HomTransform& pose, const PlateSpec& plate,
                      const Vec3& forward_axis = {0.0, 1.0, 0.0});

/// Evaluate the full grid.  Exactly grid.count() nodes in lexicographic
/// grid-index order.  A kinematic domain error at any sample aborts with
/// the offending grid index in the message.
std::vector<WorkspaceNode> sample_workspace(const ArmParams& params, const GridSpec& grid,
                                            const PlateSpec& plate,
                                            const Vec3& forward_axis = {0.0, 1.0, 0.0});

/// Radial spread of the cloud around a center point (typically the arm
/// base): reported as summary statistics, not asserted.
struct WorkspaceSummary {
  double r_min = 0.0;
  double r_max = 0.0;
  double r_mean = 0.0;
};

WorkspaceSummary summarize(const std::vector<WorkspaceNode>& nodes, const Vec3& center);

}  // namespace oriloco

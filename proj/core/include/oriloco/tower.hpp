#pragma once

#include "oriloco/units.hpp"

/// \file
/// \brief Twisted origami tower: the coupled twist/height actuator cell.
///
/// Each joint of the arm is a tower of n-gon cross-section built from
/// parallelogram panels.  Twisting the top polygon by theta relative to the
/// base pulls the panels inward and shortens the tower:
///
///   H(theta) = sqrt(b^2 - 2 R^2 (1 - cos theta)),   R = a / (2 sin(pi/n))
///
/// R is the circumradius of the basal polygon.  The radicand hits zero at
/// the collapse twist; beyond that the geometry does not exist.

namespace oriloco {

struct TowerGeometry {
  int n_sides = 4;                     ///< polygon sides, >= 3
  double side_a = 15.0;                ///< polygon side length, mm
  double panel_b = 15.0;               ///< panel edge length (rest height), mm
  double theta_int = deg2rad(7.0);     ///< built-in twist at rest, rad
};

/// Throws std::invalid_argument unless n_sides >= 3, both lengths are
/// positive, and theta_int lies in [0, max_twist).
void validate(const TowerGeometry& geom);

/// Circumradius of the basal polygon, mm.
double circumradius(const TowerGeometry& geom);

/// Height at total twist theta (rad), mm.  Decreases monotonically on
/// [0, max_twist] and reaches b at theta = 0.  Throws InfeasibleError when
/// theta lies beyond the collapse point.
double tower_height(const TowerGeometry& geom, double theta);

/// Twist at which the tower folds flat (H = 0), rad.  When the radicand
/// never vanishes (b^2 >= 4 R^2) the twist is unbounded up to a half turn
/// and pi is returned.
double max_twist(const TowerGeometry& geom);

}  // namespace oriloco

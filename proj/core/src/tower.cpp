#include "oriloco/tower.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oriloco/errors.hpp"

namespace oriloco {

void validate(const TowerGeometry& geom) {
  if (geom.n_sides < 3)
    throw std::invalid_argument("tower: n_sides must be >= 3, got " +
                                std::to_string(geom.n_sides));
  if (!(geom.side_a > 0.0))
    throw std::invalid_argument("tower: side_a must be positive");
  if (!(geom.panel_b > 0.0))
    throw std::invalid_argument("tower: panel_b must be positive");
  if (!(geom.theta_int >= 0.0) || geom.theta_int >= max_twist(geom))
    throw std::invalid_argument("tower: theta_int must lie in [0, max_twist)");
}

double circumradius(const TowerGeometry& geom) {
  return geom.side_a / (2.0 * std::sin(kPi / geom.n_sides));
}

double tower_height(const TowerGeometry& geom, double theta) {
  const double r = circumradius(geom);
  const double b2 = geom.panel_b * geom.panel_b;
  double radicand = b2 - 2.0 * r * r * (1.0 - std::cos(theta));
  // Rounding in the cos/acos round trip leaves the radicand a few dozen
  // ulp off zero right at the collapse twist, and sqrt amplifies 1e-14 of
  // radicand noise to 1e-7 mm of height.  Snap the collapse window to a
  // clean fold-flat height; reject genuinely impossible twists.
  if (std::abs(radicand) < 1e-12 * b2) radicand = 0.0;
  if (radicand < 0.0)
    throw InfeasibleError("tower: twist " + std::to_string(theta) +
                          " rad is beyond the collapse point");
  return std::sqrt(radicand);
}

double max_twist(const TowerGeometry& geom) {
  const double r = circumradius(geom);
  const double b2 = geom.panel_b * geom.panel_b;
  const double c = 1.0 - b2 / (2.0 * r * r);
  if (c <= -1.0) return kPi;
  return std::acos(c);
}

}  // namespace oriloco

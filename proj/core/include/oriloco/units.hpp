#pragma once

/// \file
/// \brief Angle conversions and shared numeric constants.
///
/// Convention used across the library: angles are radians and lengths are
/// millimetres internally; degrees appear only at external boundaries
/// (config files, CSV columns, CLI flags).

namespace oriloco {

constexpr double kPi = 3.14159265358979323846;

constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }

constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }

}  // namespace oriloco

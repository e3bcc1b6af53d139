#pragma once

#include <string>
#include <vector>

#include "oriloco/arm.hpp"
#include "oriloco/crawl.hpp"
#include "oriloco/gait.hpp"
#include "oriloco/workspace.hpp"

/// \file
/// \brief One YAML run configuration feeding every workflow.
///
/// Angles in the file are degrees, lengths millimetres.  Every key is
/// optional and falls back to the documented default; unknown keys are
/// rejected (typo safety).  Validation failures throw ConfigError with
/// file:line and the offending key path.

namespace oriloco {

/// Triangular actuation schedule for one crawl cycle.
struct ProfileSpec {
  double lo_rad = 0.1;
  double hi_rad = 0.5;
  int samples_per_half = 20;
};

struct RunConfig {
  ArmParams arm;
  PlateSpec plate;
  FluidParams fluid;
  LegParams leg_front;  ///< defaults are the symmetric catalog legs
  LegParams leg_rear;
  CrawlParams crawl;
  ProfileSpec profile;
  GridSpec grid;
  PlannerOptions planner;
  int trace_cycles = 3;
  std::string out_dir = "out";
  /// Advisory notes gathered at load time (geometry bound checks); never
  /// fatal.
  std::vector<std::string> warnings;
};

/// The built-in defaults: 4-sided 15 mm towers at 7 deg rest twist,
/// 16/10 mm links, a 21^3 grid over the full joint range, and the
/// symmetric short legs used by the crawl studies.
RunConfig default_config();

/// Parse + validate a YAML config file.  Relative dh_table paths resolve
/// against the config file's directory.
RunConfig load_config(const std::string& path);

}  // namespace oriloco

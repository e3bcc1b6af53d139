#include "oriloco/config.hpp"

#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>

#include "oriloco/errors.hpp"

namespace oriloco {

RunConfig default_config() {
  RunConfig cfg;
  const double limit = joint_limit(cfg.arm);
  for (int a = 0; a < 3; ++a) cfg.grid.axis[a] = {0.0, limit, 21};
  return cfg;
}

namespace {

namespace fs = std::filesystem;

[[noreturn]] void bail(const std::string& file, const YAML::Node& node,
                       const std::string& key, const std::string& what) {
  const int line = node.IsDefined() ? node.Mark().line + 1 : 0;
  throw ConfigError(file + ":" + std::to_string(line) + ": " + key + ": " + what);
}

// A named view into one mapping node; every accessor produces key-path
// context on failure.
struct Section {
  const std::string& file;
  YAML::Node node;  // may be undefined: all lookups then fall through to defaults
  std::string path;

  std::string key_path(const std::string& key) const {
    return path.empty() ? key : path + "." + key;
  }

  bool present() const { return node.IsDefined() && !node.IsNull(); }

  Section sub(const std::string& key) const {
    if (!present()) return {file, YAML::Node(YAML::NodeType::Undefined), key_path(key)};
    const YAML::Node child = node[key];
    if (child.IsDefined() && !child.IsNull() && !child.IsMap())
      bail(file, child, key_path(key), "expected a mapping");
    return {file, child, key_path(key)};
  }

  double num(const std::string& key, double fallback) const {
    if (!present()) return fallback;
    const YAML::Node child = node[key];
    if (!child.IsDefined() || child.IsNull()) return fallback;
    try {
      return child.as<double>();
    } catch (const YAML::Exception&) {
      bail(file, child, key_path(key), "expected a number");
    }
  }

  int integer(const std::string& key, int fallback) const {
    if (!present()) return fallback;
    const YAML::Node child = node[key];
    if (!child.IsDefined() || child.IsNull()) return fallback;
    try {
      return child.as<int>();
    } catch (const YAML::Exception&) {
      bail(file, child, key_path(key), "expected an integer");
    }
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!present()) return fallback;
    const YAML::Node child = node[key];
    if (!child.IsDefined() || child.IsNull()) return fallback;
    try {
      return child.as<std::string>();
    } catch (const YAML::Exception&) {
      bail(file, child, key_path(key), "expected a string");
    }
  }

  bool has(const std::string& key) const {
    if (!present()) return false;
    const YAML::Node child = node[key];
    return child.IsDefined() && !child.IsNull();
  }

  std::array<double, 3> triple(const std::string& key,
                               const std::array<double, 3>& fallback) const {
    if (!has(key)) return fallback;
    const YAML::Node child = node[key];
    if (!child.IsSequence() || child.size() != 3)
      bail(file, child, key_path(key), "expected a sequence of 3 numbers");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
      try {
        out[i] = child[i].as<double>();
      } catch (const YAML::Exception&) {
        bail(file, child[i], key_path(key), "expected a number");
      }
    }
    return out;
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    if (!present()) return;
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& entry : node) {
      const std::string key = entry.first.as<std::string>();
      if (!allowed.count(key))
        bail(file, entry.first, key_path(key), "unknown key");
    }
  }
};

GridSpec load_grid(const Section& grid_sec, const GridSpec& fallback) {
  static const char* names[3] = {"joint1", "joint2", "joint3"};
  GridSpec grid = fallback;
  grid_sec.allow_only({"joint1", "joint2", "joint3"});
  for (int a = 0; a < 3; ++a) {
    const Section ax = grid_sec.sub(names[a]);
    ax.allow_only({"min_deg", "max_deg", "steps"});
    grid.axis[a].min_rad = deg2rad(ax.num("min_deg", rad2deg(fallback.axis[a].min_rad)));
    grid.axis[a].max_rad = deg2rad(ax.num("max_deg", rad2deg(fallback.axis[a].max_rad)));
    grid.axis[a].steps = ax.integer("steps", fallback.axis[a].steps);
  }
  return grid;
}

LegParams load_leg(const Section& leg_sec, const LegParams& fallback) {
  leg_sec.allow_only({"h_mm", "H_mm", "b_mm", "r_mm"});
  LegParams leg;
  leg.h = leg_sec.num("h_mm", fallback.h);
  leg.H_leg = leg_sec.num("H_mm", fallback.H_leg);
  leg.b = leg_sec.num("b_mm", fallback.b);
  leg.r = leg_sec.num("r_mm", fallback.r);
  return leg;
}

HomTransform load_base(const Section& arm_sec) {
  const std::array<double, 3> xyz = arm_sec.triple("base_xyz_mm", {0.0, 0.0, 0.0});
  const std::array<double, 3> rpy = arm_sec.triple("base_rpy_deg", {0.0, 0.0, 0.0});
  const HomTransform rot = HomTransform::rot_z(deg2rad(rpy[2])) *
                           HomTransform::rot_y(deg2rad(rpy[1])) *
                           HomTransform::rot_x(deg2rad(rpy[0]));
  return HomTransform::from_translation({xyz[0], xyz[1], xyz[2]}) * rot;
}

// Re-tag bare invalid_argument validation failures with config context.
template <typename Fn>
void check(const std::string& file, const std::string& section, Fn fn) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(file + ": " + section + ": " + e.what());
  }
}

}  // namespace

RunConfig load_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    throw ConfigError("cannot open config file '" + path + "'");
  } catch (const YAML::ParserException& e) {
    throw ConfigError(path + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (root.IsDefined() && !root.IsNull() && !root.IsMap())
    throw ConfigError(path + ": top level must be a mapping");

  RunConfig cfg = default_config();
  const Section top{path, root, ""};
  top.allow_only({"robot", "profile", "grid", "planner", "trace", "output"});

  const Section robot = top.sub("robot");
  robot.allow_only({"tower", "arm", "plate", "fluid", "legs", "crawl"});

  const Section tower = robot.sub("tower");
  tower.allow_only({"sides", "side_mm", "panel_mm", "initial_twist_deg"});
  cfg.arm.tower.n_sides = tower.integer("sides", cfg.arm.tower.n_sides);
  cfg.arm.tower.side_a = tower.num("side_mm", cfg.arm.tower.side_a);
  cfg.arm.tower.panel_b = tower.num("panel_mm", cfg.arm.tower.panel_b);
  cfg.arm.tower.theta_int =
      deg2rad(tower.num("initial_twist_deg", rad2deg(cfg.arm.tower.theta_int)));

  const Section arm = top.sub("robot").sub("arm");
  arm.allow_only({"support_mm", "padding_mm", "dh_table", "base_xyz_mm", "base_rpy_deg"});
  cfg.arm.support_link = arm.num("support_mm", cfg.arm.support_link);
  cfg.arm.padding_link = arm.num("padding_mm", cfg.arm.padding_link);
  cfg.arm.base = load_base(arm);
  if (arm.has("dh_table")) {
    fs::path table_path = arm.text("dh_table", "");
    if (table_path.is_relative()) table_path = fs::path(path).parent_path() / table_path;
    cfg.arm.dh_table = load_dh_table(table_path.string());
  }

  const Section plate = robot.sub("plate");
  plate.allow_only({"area_mm2"});
  cfg.plate.plate_area = plate.num("area_mm2", cfg.plate.plate_area);

  const Section fluid = robot.sub("fluid");
  fluid.allow_only({"density", "drag_coeff", "speed"});
  cfg.fluid.rho = fluid.num("density", cfg.fluid.rho);
  cfg.fluid.c_d = fluid.num("drag_coeff", cfg.fluid.c_d);
  cfg.fluid.v = fluid.num("speed", cfg.fluid.v);

  const Section legs = robot.sub("legs");
  legs.allow_only({"front", "rear"});
  cfg.leg_front = load_leg(legs.sub("front"), cfg.leg_front);
  cfg.leg_rear = load_leg(legs.sub("rear"), cfg.leg_rear);

  const Section crawl = robot.sub("crawl");
  crawl.allow_only({"arc_mm", "mass_kg", "gravity", "mu_pelma", "mu_toe", "dt_s",
                    "theta_max_deg", "solver_max_iter", "solver_tol"});
  cfg.crawl.arc_length = crawl.num("arc_mm", cfg.crawl.arc_length);
  cfg.crawl.mass = crawl.num("mass_kg", cfg.crawl.mass);
  cfg.crawl.gravity = crawl.num("gravity", cfg.crawl.gravity);
  cfg.crawl.mu_pelma = crawl.num("mu_pelma", cfg.crawl.mu_pelma);
  cfg.crawl.mu_toe = crawl.num("mu_toe", cfg.crawl.mu_toe);
  cfg.crawl.dt = crawl.num("dt_s", cfg.crawl.dt);
  cfg.crawl.theta_max = deg2rad(crawl.num("theta_max_deg", rad2deg(cfg.crawl.theta_max)));
  cfg.crawl.solver_max_iter = crawl.integer("solver_max_iter", cfg.crawl.solver_max_iter);
  cfg.crawl.solver_tol = crawl.num("solver_tol", cfg.crawl.solver_tol);

  const Section profile = top.sub("profile");
  profile.allow_only({"low_deg", "high_deg", "samples_per_half"});
  cfg.profile.lo_rad = deg2rad(profile.num("low_deg", rad2deg(cfg.profile.lo_rad)));
  cfg.profile.hi_rad = deg2rad(profile.num("high_deg", rad2deg(cfg.profile.hi_rad)));
  cfg.profile.samples_per_half =
      profile.integer("samples_per_half", cfg.profile.samples_per_half);

  const RunConfig defaults_with_arm = [&] {
    RunConfig d;
    d.arm = cfg.arm;
    const double limit = joint_limit(cfg.arm);
    for (int a = 0; a < 3; ++a) d.grid.axis[a] = {0.0, limit, 21};
    return d;
  }();
  cfg.grid = load_grid(top.sub("grid"), defaults_with_arm.grid);

  const Section planner = top.sub("planner");
  planner.allow_only({"connectivity", "max_step_deg", "tie_break"});
  const int conn = planner.integer("connectivity", 6);
  if (conn == 6)
    cfg.planner.connectivity = Connectivity::Faces;
  else if (conn == 26)
    cfg.planner.connectivity = Connectivity::Full;
  else
    bail(path, planner.node, "planner.connectivity", "must be 6 or 26");
  if (planner.has("max_step_deg"))
    cfg.planner.max_joint_step = deg2rad(planner.num("max_step_deg", 0.0));
  const std::string tie = planner.text("tie_break", "lex");
  if (tie != "lex")
    bail(path, planner.node, "planner.tie_break",
         "only the lexicographic mode 'lex' is supported");

  const Section trace = top.sub("trace");
  trace.allow_only({"cycles"});
  cfg.trace_cycles = trace.integer("cycles", cfg.trace_cycles);
  if (cfg.trace_cycles < 1)
    bail(path, trace.node, "trace.cycles", "must be >= 1");

  const Section output = top.sub("output");
  output.allow_only({"dir"});
  cfg.out_dir = output.text("dir", cfg.out_dir);

  // Structural validation with file context.
  check(path, "robot.tower/arm", [&] { validate(cfg.arm); });
  check(path, "robot.plate", [&] { validate(cfg.plate); });
  check(path, "robot.fluid", [&] { validate(cfg.fluid); });
  check(path, "robot.legs.front", [&] { validate(cfg.leg_front); });
  check(path, "robot.legs.rear", [&] { validate(cfg.leg_rear); });
  check(path, "robot.crawl", [&] { validate(cfg.crawl); });
  check(path, "grid", [&] { validate(cfg.grid, cfg.arm); });
  check(path, "profile", [&] {
    if (!(cfg.profile.lo_rad > 0.0) || !(cfg.profile.lo_rad < cfg.profile.hi_rad))
      throw std::invalid_argument("profile needs 0 < low_deg < high_deg");
    if (!(cfg.profile.hi_rad < cfg.crawl.theta_max))
      throw std::invalid_argument("profile high_deg must stay below crawl.theta_max_deg");
    if (cfg.profile.samples_per_half < 1)
      throw std::invalid_argument("profile samples_per_half must be >= 1");
  });

  // Advisory geometry bounds at the tallest commanded stance; never fatal.
  try {
    cfg.warnings =
        geometry_warnings(cfg.crawl, cfg.leg_front, cfg.leg_rear, cfg.profile.lo_rad);
  } catch (const std::exception&) {
    // The stance itself is infeasible; the run that needs it will say so.
  }

  return cfg;
}

}  // namespace oriloco

// Command-line front end for the oriloco toolkit.
//
// Subcommands:
//   crawl-sim       simulate one crawl cycle and write crawl_trace.csv
//   crawl-sweep     sweep the friction coefficient and write crawl_sweep.csv
//   swim-workspace  sample the arm workspace grid and write workspace.csv
//   swim-plan       plan thrust + drag strokes and write the plan artifacts
//   swim-trace      replay a plan over several cycles into swim_trace.csv
//
// Exit codes: 0 success, 2 configuration error, 3 infeasible geometry,
// 4 no path found by the planner.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oriloco/arm.hpp"
#include "oriloco/config.hpp"
#include "oriloco/crawl.hpp"
#include "oriloco/errors.hpp"
#include "oriloco/gait.hpp"
#include "oriloco/io.hpp"
#include "oriloco/units.hpp"
#include "oriloco/workspace.hpp"

namespace fs = std::filesystem;
using namespace oriloco;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNoPath = 4;

struct CliOptions {
  std::string config_path;
  std::string out_dir;         // overrides output.dir when non-empty
  std::uint64_t seed = 12345;  // reserved for randomized tooling
  int connectivity = 0;        // 6 or 26 when set, 0 = keep config value
};

RunConfig load(const CliOptions& opt) {
  RunConfig cfg = load_config(opt.config_path);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (opt.connectivity == 6) cfg.planner.connectivity = Connectivity::Faces;
  if (opt.connectivity == 26) cfg.planner.connectivity = Connectivity::Full;
  return cfg;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw ConfigError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
  return dir;
}

void print_warnings(const RunConfig& cfg) {
  for (const auto& w : cfg.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

std::vector<double> resolve_profile(const RunConfig& cfg, const std::string& profile_path) {
  if (profile_path.empty())
    return triangular_profile(cfg.profile.lo_rad, cfg.profile.hi_rad,
                              cfg.profile.samples_per_half);
  std::vector<double> profile;
  read_file(profile_path, [&](std::istream& in) {
    profile = read_theta_profile(in, profile_path);
  });
  return profile;
}

int cmd_crawl_sim(const CliOptions& opt, const std::string& profile_path) {
  RunConfig cfg = load(opt);
  print_warnings(cfg);
  std::vector<double> profile = resolve_profile(cfg, profile_path);
  CrawlTrace trace = simulate_crawl(cfg.crawl, cfg.leg_front, cfg.leg_rear, profile);
  fs::path out = ensure_out_dir(cfg) / "crawl_trace.csv";
  write_file(out.string(), [&](std::ostream& o) { write_crawl_trace(o, trace); });
  std::printf("crawl-sim: %zu samples, net dx %s mm, net dy %s mm\n", trace.samples.size(),
              fmt9(trace.net_dx).c_str(), fmt9(trace.net_dy).c_str());
  if (trace.contact_loss)
    std::fprintf(stderr, "warning: a ground reaction went negative during the cycle\n");
  std::printf("wrote %s\n", out.string().c_str());
  return kExitOk;
}

int cmd_crawl_sweep(const CliOptions& opt, std::vector<double> mu_values) {
  RunConfig cfg = load(opt);
  print_warnings(cfg);
  if (mu_values.empty()) mu_values = {0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<double> profile = resolve_profile(cfg, "");
  std::vector<SweepRow> rows =
      friction_sweep(cfg.crawl, cfg.leg_front, cfg.leg_rear, profile, mu_values);
  fs::path out = ensure_out_dir(cfg) / "crawl_sweep.csv";
  write_file(out.string(), [&](std::ostream& o) { write_sweep(o, rows); });
  std::printf("crawl-sweep: %zu friction values\n", rows.size());
  for (const auto& r : rows)
    std::printf("  mu %s: net dx %s mm, peak friction front %s N rear %s N\n",
                fmt9(r.mu).c_str(), fmt9(r.net_dx).c_str(), fmt9(r.fric_front_max).c_str(),
                fmt9(r.fric_rear_max).c_str());
  std::printf("wrote %s\n", out.string().c_str());
  return kExitOk;
}

int cmd_swim_workspace(const CliOptions& opt) {
  RunConfig cfg = load(opt);
  print_warnings(cfg);
  std::vector<WorkspaceNode> nodes = sample_workspace(cfg.arm, cfg.grid, cfg.plate);
  WorkspaceSummary sum = summarize(nodes, cfg.arm.base.translation());
  fs::path out = ensure_out_dir(cfg) / "workspace.csv";
  write_file(out.string(), [&](std::ostream& o) { write_workspace(o, nodes); });
  std::printf("swim-workspace: %zu nodes, reach min %s max %s mean %s mm\n", nodes.size(),
              fmt9(sum.r_min).c_str(), fmt9(sum.r_max).c_str(), fmt9(sum.r_mean).c_str());
  std::printf("wrote %s\n", out.string().c_str());
  return kExitOk;
}

int cmd_swim_plan(const CliOptions& opt) {
  RunConfig cfg = load(opt);
  print_warnings(cfg);
  std::vector<WorkspaceNode> nodes = sample_workspace(cfg.arm, cfg.grid, cfg.plate);
  StrokeEndpoints ends = select_endpoints(nodes);
  SearchStats thrust_stats{};
  SearchStats drag_stats{};
  std::optional<GaitPath> thrust =
      plan_thrust_stroke(cfg.grid, nodes, ends, cfg.planner, &thrust_stats);
  if (!thrust) {
    std::fprintf(stderr, "error: no forward-monotone thrust path reaches the goal\n");
    return kExitNoPath;
  }
  std::optional<GaitPath> drag =
      plan_drag_stroke(cfg.grid, nodes, ends.goal, ends.start, cfg.planner, &drag_stats);
  if (!drag) {
    std::fprintf(stderr, "error: no return path from the stroke end to the start\n");
    return kExitNoPath;
  }

  PlanDocument doc;
  doc.thrust = make_stroke_record("thrust", *thrust, thrust_stats);
  doc.drag = make_stroke_record("drag", *drag, drag_stats);

  fs::path dir = ensure_out_dir(cfg);
  fs::path plan_path = dir / "gait_plan.txt";
  write_file(plan_path.string(), [&](std::ostream& o) { write_plan(o, doc); });

  std::vector<ProfileRow> profile_rows;
  std::vector<JointRow> joint_rows;
  const std::pair<const char*, const GaitPath*> strokes[] = {{"thrust", &*thrust},
                                                            {"drag", &*drag}};
  for (const auto& [name, path] : strokes) {
    auto curve = stroke_profile(*path);
    for (std::size_t i = 0; i < curve.size(); ++i) {
      profile_rows.push_back({name, static_cast<int>(i), curve[i].first, curve[i].second,
                              thrust_force(cfg.fluid, curve[i].second)});
      joint_rows.push_back({name, static_cast<int>(i), path->nodes[i].joints});
    }
  }
  fs::path profile_path = dir / "gait_profile.csv";
  write_file(profile_path.string(), [&](std::ostream& o) { write_stroke_profile(o, profile_rows); });
  fs::path joints_path = dir / "gait_joints.csv";
  write_file(joints_path.string(), [&](std::ostream& o) { write_joint_series(o, joint_rows); });

  std::printf("swim-plan: start node %d (x %s mm), goal node %d (y %s mm)\n", ends.start,
              fmt9(nodes[ends.start].position.x).c_str(), ends.goal,
              fmt9(nodes[ends.goal].position.y).c_str());
  std::printf("  thrust: %zu nodes, total %s, expanded %d\n", thrust->nodes.size(),
              fmt9(thrust->total_thrust).c_str(), thrust_stats.expanded);
  std::printf("  drag:   %zu nodes, total %s, expanded %d\n", drag->nodes.size(),
              fmt9(drag->total_drag).c_str(), drag_stats.expanded);
  std::printf("wrote %s\n", plan_path.string().c_str());
  std::printf("wrote %s\n", profile_path.string().c_str());
  std::printf("wrote %s\n", joints_path.string().c_str());
  return kExitOk;
}

int cmd_swim_trace(const CliOptions& opt, const std::string& plan_arg) {
  RunConfig cfg = load(opt);
  print_warnings(cfg);
  fs::path dir = ensure_out_dir(cfg);
  std::string plan_path = plan_arg.empty() ? (dir / "gait_plan.txt").string() : plan_arg;
  PlanDocument doc;
  read_file(plan_path, [&](std::istream& in) { doc = read_plan(in, plan_path); });

  std::vector<SwimTraceRow> rows;
  for (int cycle = 0; cycle < cfg.trace_cycles; ++cycle) {
    int step = 0;
    for (const PlanStrokeRecord* stroke : {&doc.thrust, &doc.drag}) {
      for (const auto& node : stroke->nodes) {
        HomTransform pose = forward_kinematics(cfg.arm, node.joints);
        rows.push_back({cycle, step++, stroke->stroke, node.joints, pose.translation()});
      }
    }
  }
  fs::path out = dir / "swim_trace.csv";
  write_file(out.string(), [&](std::ostream& o) { write_swim_trace(o, rows); });
  std::printf("swim-trace: %d cycle(s), %zu rows\n", cfg.trace_cycles, rows.size());
  std::printf("wrote %s\n", out.string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and trajectory planning for a crawling/swimming origami robot"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string profile_path;
  std::string plan_path;
  std::vector<double> mu_values;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "YAML run configuration")->required();
    cmd->add_option("--out", opt.out_dir, "output directory (overrides the configured one)");
    cmd->add_option("--seed", opt.seed, "seed for randomized tooling");
    cmd->add_option("--connectivity", opt.connectivity, "grid connectivity override")
        ->check(CLI::IsMember({6, 26}));
  };

  CLI::App* sim = app.add_subcommand("crawl-sim", "simulate one crawl cycle");
  add_common(sim);
  sim->add_option("profile", profile_path, "bending-angle profile file (degrees, one per line)");

  CLI::App* sweep = app.add_subcommand("crawl-sweep", "sweep the friction coefficient");
  add_common(sweep);
  sweep->add_option("--mu", mu_values, "friction coefficients to sweep");

  CLI::App* ws = app.add_subcommand("swim-workspace", "sample the paddle workspace grid");
  add_common(ws);

  CLI::App* plan = app.add_subcommand("swim-plan", "plan thrust and drag strokes");
  add_common(plan);

  CLI::App* trace = app.add_subcommand("swim-trace", "replay a stroke plan over several cycles");
  add_common(trace);
  trace->add_option("plan", plan_path, "plan file (default: <out>/gait_plan.txt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_crawl_sim(opt, profile_path);
    if (sweep->parsed()) return cmd_crawl_sweep(opt, mu_values);
    if (ws->parsed()) return cmd_swim_workspace(opt);
    if (plan->parsed()) return cmd_swim_plan(opt);
    if (trace->parsed()) return cmd_swim_trace(opt, plan_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}

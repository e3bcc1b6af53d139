#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "oriloco/config.hpp"
#include "oriloco/crawl.hpp"
#include "oriloco/errors.hpp"
#include "oriloco/gait.hpp"
#include "oriloco/io.hpp"
#include "oriloco/workspace.hpp"

using namespace oriloco;

namespace {

namespace fs = std::filesystem;

// Every file format below promises: write -> read -> write reproduces the
// first byte stream exactly.  The %.9g round trip behind that promise is
// checked on its own first.

struct ScratchDir {
  fs::path dir;
  ScratchDir() : dir(fs::current_path() / "io_scratch") {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string file(const std::string& name) const { return (dir / name).string(); }
  std::string put(const std::string& name, const std::string& text) const {
    const std::string path = file(name);
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
  }
};

std::string render(const std::function<void(std::ostream&)>& body) {
  std::ostringstream out;
  body(out);
  return out.str();
}

template <typename Fn>
std::string config_error(Fn fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  FAIL("expected a ConfigError");
  return {};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

doctest::Approx near(double v) { return doctest::Approx(v).epsilon(1e-8); }

}  // namespace

TEST_CASE("fmt9 prints shortest %.9g form and reparses to a fixed point") {
  CHECK(fmt9(0.0) == "0");
  CHECK(fmt9(-0.0) == "-0");
  CHECK(fmt9(0.49) == "0.49");
  CHECK(fmt9(1.0 / 3.0) == "0.333333333");
  CHECK(fmt9(12345678901.0) == "1.23456789e+10");

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-60, 60);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(mant(rng), expo(rng));
    char ref[40];
    std::snprintf(ref, sizeof ref, "%.9g", x);
    const std::string s = fmt9(x);
    CHECK(s == ref);
    // printing the reparsed value must reproduce the same text
    const double y = std::strtod(s.c_str(), nullptr);
    CHECK(fmt9(y) == s);
    // and reparsing that text lands on the same double again
    CHECK(std::strtod(fmt9(y).c_str(), nullptr) == y);
  }
}

TEST_CASE("theta profile files round-trip and tolerate comments") {
  const std::vector<double> profile = triangular_profile(0.1, 0.5, 20);
  const std::string first =
      render([&](std::ostream& o) { write_theta_profile(o, profile); });

  std::istringstream in(first);
  const std::vector<double> back = read_theta_profile(in, "p.txt");
  REQUIRE(back.size() == profile.size());
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == near(profile[i]));

  const std::string second =
      render([&](std::ostream& o) { write_theta_profile(o, back); });
  CHECK(second == first);

  std::istringstream hand("# preamble\n5\n\n# middle\n10 # trailing note\n");
  const std::vector<double> vals = read_theta_profile(hand, "hand.txt");
  REQUIRE(vals.size() == 2);
  CHECK(vals[0] == deg2rad(5.0));
  CHECK(vals[1] == deg2rad(10.0));

  std::istringstream two("5 6\n");
  CHECK(contains(config_error([&] { read_theta_profile(two, "t.txt"); }),
                 "expected one value per line"));
  std::istringstream junk("abc\n");
  CHECK(contains(config_error([&] { read_theta_profile(junk, "t.txt"); }),
                 "not a number"));
}

TEST_CASE("crawl traces round-trip byte for byte") {
  const CrawlParams params;
  const LegParams leg;
  const CrawlTrace trace =
      simulate_crawl(params, leg, leg, triangular_profile(0.1, 0.5, 10));
  REQUIRE(trace.samples.size() == 21);

  const std::string first =
      render([&](std::ostream& o) { write_crawl_trace(o, trace); });
  std::istringstream in(first);
  const CrawlTrace back = read_crawl_trace(in, "trace.csv");
  REQUIRE(back.samples.size() == trace.samples.size());
  for (std::size_t i = 0; i < back.samples.size(); ++i) {
    CHECK(back.samples[i].phase == trace.samples[i].phase);
    CHECK(back.samples[i].t == near(trace.samples[i].t));
    CHECK(back.samples[i].x == near(trace.samples[i].x));
    CHECK(back.samples[i].f_front == near(trace.samples[i].f_front));
  }
  CHECK(back.net_dx == doctest::Approx(trace.net_dx).epsilon(1e-6));
  CHECK(back.net_dy == doctest::Approx(trace.net_dy).epsilon(1e-6));

  const std::string second =
      render([&](std::ostream& o) { write_crawl_trace(o, back); });
  CHECK(second == first);

  // each malformed stream names the file, the line, and the defect
  std::istringstream bad_header("time,stuff\n");
  CHECK(contains(config_error([&] { read_crawl_trace(bad_header, "b.csv"); }),
                 "unexpected header"));

  const auto row_start = first.find('\n') + 1;
  const auto row_end = first.find('\n', row_start);
  std::string one_row = first.substr(0, row_end + 1);
  const auto last_comma = one_row.rfind(',');
  std::string short_row = one_row.substr(0, last_comma) + "\n";
  std::istringstream missing(short_row);
  CHECK(contains(config_error([&] { read_crawl_trace(missing, "b.csv"); }),
                 "expected 9 fields, got 8"));

  std::string wrong_phase = one_row;
  const auto pos = wrong_phase.find("first");
  REQUIRE(pos != std::string::npos);
  wrong_phase.replace(pos, 5, "third");
  std::istringstream phase(wrong_phase);
  const std::string msg = config_error([&] { read_crawl_trace(phase, "b.csv"); });
  CHECK(contains(msg, "unknown phase 'third'"));
  CHECK(contains(msg, "b.csv:2:"));
}

TEST_CASE("friction sweeps round-trip byte for byte") {
  const CrawlParams params;
  const LegParams leg;
  const std::vector<SweepRow> rows = friction_sweep(
      params, leg, leg, triangular_profile(0.1, 0.5, 8), {0.2, 0.4});
  REQUIRE(rows.size() == 2);

  const std::string first = render([&](std::ostream& o) { write_sweep(o, rows); });
  std::istringstream in(first);
  const std::vector<SweepRow> back = read_sweep(in, "sweep.csv");
  REQUIRE(back.size() == 2);
  CHECK(back[0].mu == 0.2);
  CHECK(back[1].mu == 0.4);
  CHECK(back[0].net_dx == near(rows[0].net_dx));
  CHECK(back[1].fric_front_max == near(rows[1].fric_front_max));

  const std::string second = render([&](std::ostream& o) { write_sweep(o, back); });
  CHECK(second == first);
}

TEST_CASE("workspace tables round-trip byte for byte") {
  const ArmParams arm;
  GridSpec grid;
  for (int a = 0; a < 3; ++a) grid.axis[a] = {0.0, 0.6, 3};
  const std::vector<WorkspaceNode> nodes = sample_workspace(arm, grid, PlateSpec{});
  REQUIRE(nodes.size() == 27);

  const std::string first =
      render([&](std::ostream& o) { write_workspace(o, nodes); });
  std::istringstream in(first);
  const std::vector<WorkspaceNode> back = read_workspace(in, "ws.csv");
  REQUIRE(back.size() == nodes.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].grid_index == nodes[i].grid_index);
    for (int a = 0; a < 3; ++a)
      CHECK(back[i].joints.theta[a] == near(nodes[i].joints.theta[a]));
    CHECK(back[i].position.x == near(nodes[i].position.x));
    CHECK(back[i].area_p == near(nodes[i].area_p));
  }

  const std::string second =
      render([&](std::ostream& o) { write_workspace(o, back); });
  CHECK(second == first);

  std::istringstream bad_int(
      std::string("grid_i,grid_j,grid_k,theta1_deg,theta2_deg,theta3_deg,x_mm,y_mm,"
                  "z_mm,nx,ny,nz,area_mm2\n") +
      "x,0,0,0,0,0,0,0,0,0,1,0,600\n");
  CHECK(contains(config_error([&] { read_workspace(bad_int, "ws.csv"); }),
                 "not an integer"));
}

TEST_CASE("plan documents round-trip byte for byte") {
  const GridSpec grid = oracles::cube_grid(3);
  const std::vector<WorkspaceNode> nodes = oracles::layered_workspace(grid, 777);

  SearchStats stats_t, stats_d;
  const auto thrust = plan_thrust_stroke(grid, nodes, {0, 26}, {}, &stats_t);
  const auto drag = plan_drag_stroke(grid, nodes, 0, 26, {}, &stats_d);
  REQUIRE(thrust.has_value());
  REQUIRE(drag.has_value());

  PlanDocument doc;
  doc.thrust = make_stroke_record("thrust", *thrust, stats_t);
  doc.drag = make_stroke_record("drag", *drag, stats_d);

  const std::string first = render([&](std::ostream& o) { write_plan(o, doc); });
  std::istringstream in(first);
  const PlanDocument back = read_plan(in, "plan.txt");
  REQUIRE(back.thrust.nodes.size() == doc.thrust.nodes.size());
  REQUIRE(back.drag.nodes.size() == doc.drag.nodes.size());
  for (std::size_t i = 0; i < back.thrust.nodes.size(); ++i) {
    CHECK(back.thrust.nodes[i].grid_index == doc.thrust.nodes[i].grid_index);
    CHECK(back.thrust.nodes[i].area_p == near(doc.thrust.nodes[i].area_p));
  }
  CHECK(back.thrust.nodes_expanded == doc.thrust.nodes_expanded);
  CHECK(back.thrust.path_length == doc.thrust.path_length);
  CHECK(back.thrust.total_thrust == near(doc.thrust.total_thrust));
  CHECK(back.drag.total_drag == near(doc.drag.total_drag));
  CHECK(back.thrust.edge_strengths.size() == doc.thrust.edge_strengths.size());

  const std::string second = render([&](std::ostream& o) { write_plan(o, back); });
  CHECK(second == first);

  // structural errors
  PlanDocument swapped;
  swapped.thrust = doc.drag;
  swapped.drag = doc.thrust;
  const std::string swapped_text =
      render([&](std::ostream& o) { write_plan(o, swapped); });
  std::istringstream sw(swapped_text);
  CHECK(contains(config_error([&] { read_plan(sw, "plan.txt"); }),
                 "first section must be the thrust stroke"));

  std::istringstream garbage("hello world\n");
  CHECK(contains(config_error([&] { read_plan(garbage, "plan.txt"); }),
                 "expected 'stroke <name>'"));

  std::istringstream truncated("stroke thrust\nnodes 3\n");
  CHECK(contains(config_error([&] { read_plan(truncated, "plan.txt"); }),
                 "unexpected end of file"));

  std::istringstream out_of_order(
      "stroke thrust\nnodes 2\n"
      "1 0 0 0 0 0 0 0 0 0 1\n"
      "0 0 0 1 0 0 0 0 0 0 1\n");
  CHECK(contains(config_error([&] { read_plan(out_of_order, "plan.txt"); }),
                 "node rows out of order"));

  std::istringstream narrow_row(
      "stroke thrust\nnodes 1\n"
      "0 0 0 0 0 0 0 0 0 0\n");
  CHECK(contains(config_error([&] { read_plan(narrow_row, "plan.txt"); }),
                 "node row needs 11 fields"));
}

TEST_CASE("stroke profile, joint series and swim trace round-trip") {
  const GridSpec grid = oracles::cube_grid(3);
  const std::vector<WorkspaceNode> nodes = oracles::layered_workspace(grid, 901);
  const auto thrust = plan_thrust_stroke(grid, nodes, {0, 26});
  const auto drag = plan_drag_stroke(grid, nodes, 0, 26);
  REQUIRE(thrust.has_value());
  REQUIRE(drag.has_value());

  std::vector<ProfileRow> profile;
  const auto pairs = stroke_profile(*thrust);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double strength = i == 0 ? 0.0 : thrust->edge_strengths[i - 1];
    profile.push_back({"thrust", static_cast<int>(i), pairs[i].first,
                       pairs[i].second, strength});
  }
  const std::string p1 =
      render([&](std::ostream& o) { write_stroke_profile(o, profile); });
  std::istringstream pin(p1);
  const std::vector<ProfileRow> pback = read_stroke_profile(pin, "profile.csv");
  REQUIRE(pback.size() == profile.size());
  CHECK(pback[0].stroke == "thrust");
  CHECK(pback[2].step == 2);
  CHECK(pback[1].y_mm == near(profile[1].y_mm));
  const std::string p2 =
      render([&](std::ostream& o) { write_stroke_profile(o, pback); });
  CHECK(p2 == p1);

  std::vector<JointRow> joints;
  for (std::size_t i = 0; i < thrust->nodes.size(); ++i)
    joints.push_back({"thrust", static_cast<int>(i), thrust->nodes[i].joints});
  for (std::size_t i = 0; i < drag->nodes.size(); ++i)
    joints.push_back({"drag", static_cast<int>(i), drag->nodes[i].joints});
  const std::string j1 =
      render([&](std::ostream& o) { write_joint_series(o, joints); });
  std::istringstream jin(j1);
  const std::vector<JointRow> jback = read_joint_series(jin, "joints.csv");
  REQUIRE(jback.size() == joints.size());
  CHECK(jback.back().stroke == "drag");
  CHECK(jback[0].joints.theta[0] == near(joints[0].joints.theta[0]));
  const std::string j2 =
      render([&](std::ostream& o) { write_joint_series(o, jback); });
  CHECK(j2 == j1);

  std::vector<SwimTraceRow> swim;
  for (int cycle = 1; cycle <= 2; ++cycle) {
    for (std::size_t i = 0; i < thrust->nodes.size(); ++i)
      swim.push_back({cycle, static_cast<int>(i), "thrust",
                      thrust->nodes[i].joints, thrust->nodes[i].position});
    for (std::size_t i = 0; i < drag->nodes.size(); ++i)
      swim.push_back({cycle, static_cast<int>(i), "drag", drag->nodes[i].joints,
                      drag->nodes[i].position});
  }
  const std::string s1 =
      render([&](std::ostream& o) { write_swim_trace(o, swim); });
  std::istringstream sin(s1);
  const std::vector<SwimTraceRow> sback = read_swim_trace(sin, "swim.csv");
  REQUIRE(sback.size() == swim.size());
  CHECK(sback.front().cycle == 1);
  CHECK(sback.back().cycle == 2);
  CHECK(sback[0].position.y == near(swim[0].position.y));
  const std::string s2 =
      render([&](std::ostream& o) { write_swim_trace(o, sback); });
  CHECK(s2 == s1);
}

TEST_CASE("write_file and read_file surface filesystem failures") {
  const ScratchDir scratch;
  const std::string path = scratch.file("values.txt");
  write_file(path, [](std::ostream& o) { o << "7\n"; });
  std::vector<double> vals;
  read_file(path, [&](std::istream& in) { vals = read_theta_profile(in, path); });
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == deg2rad(7.0));

  CHECK(contains(config_error([&] {
          write_file(scratch.file("no_dir/x.txt"), [](std::ostream&) {});
        }),
        "cannot create output file"));
  CHECK(contains(config_error([&] { read_file(scratch.file("absent.txt"), [](std::istream&) {}); }),
        "cannot open input file"));
}

TEST_CASE("default configuration is self-consistent") {
  const RunConfig cfg = default_config();
  const double limit = joint_limit(cfg.arm);
  for (int a = 0; a < 3; ++a) {
    CHECK(cfg.grid.axis[a].min_rad == 0.0);
    CHECK(cfg.grid.axis[a].max_rad == limit);
    CHECK(cfg.grid.axis[a].steps == 21);
  }
  CHECK(cfg.trace_cycles == 3);
  CHECK(cfg.out_dir == "out");
  CHECK(cfg.planner.connectivity == Connectivity::Faces);
  CHECK_FALSE(cfg.planner.max_joint_step.has_value());
  CHECK(cfg.profile.lo_rad == 0.1);
  CHECK(cfg.profile.hi_rad == 0.5);
  CHECK(cfg.profile.samples_per_half == 20);
  CHECK(cfg.plate.plate_area == 600.0);
  CHECK(cfg.fluid.rho == 1000.0);
  CHECK(cfg.warnings.empty());
  CHECK_NOTHROW(validate(cfg.grid, cfg.arm));
}

TEST_CASE("an empty config file yields the defaults") {
  const ScratchDir scratch;
  const std::string path = scratch.put("empty.yaml", "");
  const RunConfig cfg = load_config(path);
  const RunConfig def = default_config();
  CHECK(cfg.arm.tower.n_sides == def.arm.tower.n_sides);
  CHECK(cfg.arm.support_link == def.arm.support_link);
  CHECK(cfg.crawl.arc_length == def.crawl.arc_length);
  CHECK(cfg.grid.axis[0].steps == 21);
  CHECK(cfg.grid.axis[0].max_rad == joint_limit(cfg.arm));
  CHECK(cfg.trace_cycles == 3);
  CHECK(cfg.out_dir == "out");
}

TEST_CASE("a fully specified config lands in every field") {
  const ScratchDir scratch;
  const std::string path = scratch.put("full.yaml",
                                       "robot:\n"
                                       "  tower:\n"
                                       "    sides: 3\n"
                                       "    side_mm: 12\n"
                                       "    panel_mm: 14\n"
                                       "    initial_twist_deg: 5\n"
                                       "  arm:\n"
                                       "    support_mm: 20\n"
                                       "    padding_mm: 8\n"
                                       "    base_xyz_mm: [1.5, -2.0, 3.25]\n"
                                       "    base_rpy_deg: [0, 0, 90]\n"
                                       "  plate:\n"
                                       "    area_mm2: 450\n"
                                       "  fluid:\n"
                                       "    density: 998\n"
                                       "    drag_coeff: 1.1\n"
                                       "    speed: 0.2\n"
                                       "  legs:\n"
                                       "    front: {h_mm: 7, H_mm: 9, b_mm: 4.5, r_mm: 3}\n"
                                       "    rear: {h_mm: 6, H_mm: 8, b_mm: 4, r_mm: 3}\n"
                                       "  crawl:\n"
                                       "    arc_mm: 90\n"
                                       "    mass_kg: 0.2\n"
                                       "    gravity: 9.81\n"
                                       "    mu_pelma: 0.5\n"
                                       "    mu_toe: 0.2\n"
                                       "    dt_s: 0.04\n"
                                       "    theta_max_deg: 40\n"
                                       "    solver_max_iter: 150\n"
                                       "    solver_tol: 1e-11\n"
                                       "profile:\n"
                                       "  low_deg: 8\n"
                                       "  high_deg: 30\n"
                                       "  samples_per_half: 10\n"
                                       "grid:\n"
                                       "  joint1: {min_deg: 0, max_deg: 40, steps: 5}\n"
                                       "  joint2: {min_deg: 5, max_deg: 35, steps: 4}\n"
                                       "  joint3: {min_deg: 0, max_deg: 30, steps: 3}\n"
                                       "planner:\n"
                                       "  connectivity: 26\n"
                                       "  max_step_deg: 30\n"
                                       "  tie_break: lex\n"
                                       "trace:\n"
                                       "  cycles: 2\n"
                                       "output:\n"
                                       "  dir: results\n");
  const RunConfig cfg = load_config(path);

  CHECK(cfg.arm.tower.n_sides == 3);
  CHECK(cfg.arm.tower.side_a == 12.0);
  CHECK(cfg.arm.tower.panel_b == 14.0);
  CHECK(cfg.arm.tower.theta_int == deg2rad(5.0));
  CHECK(cfg.arm.support_link == 20.0);
  CHECK(cfg.arm.padding_link == 8.0);

  const HomTransform want_base =
      HomTransform::from_translation({1.5, -2.0, 3.25}) *
      (HomTransform::rot_z(deg2rad(90.0)) * HomTransform::rot_y(0.0) *
       HomTransform::rot_x(0.0));
  CHECK(cfg.arm.base.translation().x == want_base.translation().x);
  CHECK(cfg.arm.base.translation().y == want_base.translation().y);
  CHECK(cfg.arm.base.translation().z == want_base.translation().z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(cfg.arm.base.rotation()(i, j) == want_base.rotation()(i, j));

  CHECK(cfg.plate.plate_area == 450.0);
  CHECK(cfg.fluid.rho == 998.0);
  CHECK(cfg.fluid.c_d == 1.1);
  CHECK(cfg.fluid.v == 0.2);
  CHECK(cfg.leg_front.h == 7.0);
  CHECK(cfg.leg_front.b == 4.5);
  CHECK(cfg.leg_rear.H_leg == 8.0);
  CHECK(cfg.leg_rear.r == 3.0);
  CHECK(cfg.crawl.arc_length == 90.0);
  CHECK(cfg.crawl.mass == 0.2);
  CHECK(cfg.crawl.gravity == 9.81);
  CHECK(cfg.crawl.mu_pelma == 0.5);
  CHECK(cfg.crawl.mu_toe == 0.2);
  CHECK(cfg.crawl.dt == 0.04);
  CHECK(cfg.crawl.theta_max == deg2rad(40.0));
  CHECK(cfg.crawl.solver_max_iter == 150);
  CHECK(cfg.crawl.solver_tol == 1e-11);
  CHECK(cfg.profile.lo_rad == deg2rad(8.0));
  CHECK(cfg.profile.hi_rad == deg2rad(30.0));
  CHECK(cfg.profile.samples_per_half == 10);
  CHECK(cfg.grid.axis[0].min_rad == 0.0);
  CHECK(cfg.grid.axis[0].max_rad == deg2rad(40.0));
  CHECK(cfg.grid.axis[0].steps == 5);
  CHECK(cfg.grid.axis[1].min_rad == deg2rad(5.0));
  CHECK(cfg.grid.axis[1].steps == 4);
  CHECK(cfg.grid.axis[2].max_rad == deg2rad(30.0));
  CHECK(cfg.grid.axis[2].steps == 3);
  CHECK(cfg.planner.connectivity == Connectivity::Full);
  REQUIRE(cfg.planner.max_joint_step.has_value());
  CHECK(*cfg.planner.max_joint_step == deg2rad(30.0));
  CHECK(cfg.trace_cycles == 2);
  CHECK(cfg.out_dir == "results");
  CHECK(cfg.warnings.empty());
}

TEST_CASE("a config without a grid keeps the arm-derived default grid") {
  const ScratchDir scratch;
  // a smaller built-in twist leaves more commandable range, so the fallback
  // grid must follow the loaded arm, not the built-in defaults
  const std::string path = scratch.put("nogrid.yaml",
                                       "robot:\n"
                                       "  tower: {initial_twist_deg: 2}\n"
                                       "  arm: {support_mm: 20}\n");
  const RunConfig cfg = load_config(path);
  CHECK(cfg.arm.tower.theta_int == deg2rad(2.0));
  const double limit = joint_limit(cfg.arm);
  CHECK(limit > joint_limit(default_config().arm));
  for (int a = 0; a < 3; ++a) {
    CHECK(cfg.grid.axis[a].max_rad == limit);
    CHECK(cfg.grid.axis[a].steps == 21);
  }
}

TEST_CASE("dh_table paths resolve against the config file location") {
  const ScratchDir scratch;
  fs::create_directories(scratch.dir / "tables");
  write_file((scratch.dir / "tables" / "alt.dh").string(),
             [](std::ostream& o) { write_dh_table(o, variant_dh_table()); });

  const std::string rel = scratch.put("rel.yaml",
                                      "robot:\n"
                                      "  arm:\n"
                                      "    dh_table: tables/alt.dh\n");
  const RunConfig cfg = load_config(rel);
  REQUIRE(cfg.arm.dh_table.size() == 6);
  CHECK(cfg.arm.dh_table[2].a == -90.0);
  CHECK(cfg.arm.dh_table[2].d.sym == DHSym::TowerH1);
  CHECK(cfg.arm.dh_table[2].d.scale == 0.5);
  CHECK(cfg.arm.dh_table[0].d.sym == DHSym::TowerH0);
  CHECK(cfg.arm.dh_table[5].d.sym == DHSym::PaddingLink);

  const std::string abs = scratch.put(
      "abs.yaml",
      "robot:\n  arm:\n    dh_table: " + (scratch.dir / "tables" / "alt.dh").string() +
          "\n");
  const RunConfig cfg_abs = load_config(abs);
  CHECK(cfg_abs.arm.dh_table[2].d.sym == DHSym::TowerH1);

  const std::string missing = scratch.put("missing.yaml",
                                          "robot:\n"
                                          "  arm:\n"
                                          "    dh_table: tables/nope.dh\n");
  CHECK_THROWS_AS(load_config(missing), ConfigError);
}

TEST_CASE("malformed configs die with located errors") {
  const ScratchDir scratch;

  CHECK(contains(config_error([&] { load_config(scratch.file("absent.yaml")); }),
                 "cannot open config file"));

  const std::string seq = scratch.put("seq.yaml", "- 1\n- 2\n");
  CHECK(contains(config_error([&] { load_config(seq); }),
                 "top level must be a mapping"));

  const std::string broken = scratch.put("broken.yaml", "robot: [oops\n");
  CHECK(contains(config_error([&] { load_config(broken); }), "broken.yaml"));

  const std::string top_key = scratch.put("topkey.yaml", "robots:\n  tower: {}\n");
  const std::string top_msg = config_error([&] { load_config(top_key); });
  CHECK(contains(top_msg, "unknown key"));
  CHECK(contains(top_msg, "robots"));

  const std::string nested = scratch.put("nested.yaml",
                                         "robot:\n"
                                         "  tower:\n"
                                         "    bogus: 1\n");
  const std::string nested_msg = config_error([&] { load_config(nested); });
  CHECK(contains(nested_msg, ":3: robot.tower.bogus: unknown key"));

  const std::string scalar = scratch.put("scalar.yaml", "robot: 7\n");
  const std::string scalar_msg = config_error([&] { load_config(scalar); });
  CHECK(contains(scalar_msg, "robot"));
  CHECK(contains(scalar_msg, "expected a mapping"));

  const std::string num = scratch.put("num.yaml",
                                      "robot:\n  tower:\n    side_mm: hello\n");
  const std::string num_msg = config_error([&] { load_config(num); });
  CHECK(contains(num_msg, "robot.tower.side_mm"));
  CHECK(contains(num_msg, "expected a number"));

  const std::string integer = scratch.put("int.yaml",
                                          "robot:\n  tower:\n    sides: 6.5\n");
  const std::string int_msg = config_error([&] { load_config(integer); });
  CHECK(contains(int_msg, "robot.tower.sides"));
  CHECK(contains(int_msg, "expected an integer"));

  const std::string text = scratch.put("text.yaml", "output:\n  dir: [a, b]\n");
  CHECK(contains(config_error([&] { load_config(text); }), "expected a string"));

  const std::string pair = scratch.put("pair.yaml",
                                       "robot:\n  arm:\n    base_xyz_mm: [1, 2]\n");
  CHECK(contains(config_error([&] { load_config(pair); }),
                 "expected a sequence of 3 numbers"));

  const std::string elem = scratch.put(
      "elem.yaml", "robot:\n  arm:\n    base_rpy_deg: [1, x, 3]\n");
  CHECK(contains(config_error([&] { load_config(elem); }), "expected a number"));

  const std::string conn = scratch.put("conn.yaml", "planner:\n  connectivity: 8\n");
  const std::string conn_msg = config_error([&] { load_config(conn); });
  CHECK(contains(conn_msg, "planner.connectivity"));
  CHECK(contains(conn_msg, "must be 6 or 26"));

  const std::string tie = scratch.put("tie.yaml", "planner:\n  tie_break: random\n");
  CHECK(contains(config_error([&] { load_config(tie); }),
                 "only the lexicographic mode 'lex' is supported"));

  const std::string cyc = scratch.put("cycles.yaml", "trace:\n  cycles: 0\n");
  const std::string cyc_msg = config_error([&] { load_config(cyc); });
  CHECK(contains(cyc_msg, "trace.cycles"));
  CHECK(contains(cyc_msg, "must be >= 1"));
}

TEST_CASE("invalid parameter values carry section context") {
  const ScratchDir scratch;

  const std::string mu = scratch.put("mu.yaml",
                                     "robot:\n  crawl:\n    mu_pelma: 1.5\n");
  CHECK(contains(config_error([&] { load_config(mu); }), "robot.crawl:"));

  const std::string legs = scratch.put(
      "legs.yaml", "robot:\n  legs:\n    front: {b_mm: 2, r_mm: 5}\n");
  CHECK(contains(config_error([&] { load_config(legs); }), "robot.legs.front:"));

  const std::string plate = scratch.put("plate.yaml",
                                        "robot:\n  plate:\n    area_mm2: 0\n");
  CHECK(contains(config_error([&] { load_config(plate); }), "robot.plate:"));

  const std::string fluid = scratch.put("fluid.yaml",
                                        "robot:\n  fluid:\n    density: -1\n");
  CHECK(contains(config_error([&] { load_config(fluid); }), "robot.fluid:"));

  const std::string arm = scratch.put("arm.yaml",
                                      "robot:\n  arm:\n    support_mm: 10\n");
  CHECK(contains(config_error([&] { load_config(arm); }), "robot.tower/arm:"));

  const std::string grid = scratch.put(
      "grid.yaml", "grid:\n  joint1: {max_deg: 84}\n");
  CHECK(contains(config_error([&] { load_config(grid); }), "grid:"));

  const std::string order = scratch.put("order.yaml",
                                        "profile:\n  low_deg: 30\n  high_deg: 20\n");
  CHECK(contains(config_error([&] { load_config(order); }),
                 "profile needs 0 < low_deg < high_deg"));

  const std::string high = scratch.put("high.yaml", "profile:\n  high_deg: 35\n");
  CHECK(contains(config_error([&] { load_config(high); }),
                 "must stay below crawl.theta_max_deg"));

  const std::string samples = scratch.put("samples.yaml",
                                          "profile:\n  samples_per_half: 0\n");
  CHECK(contains(config_error([&] { load_config(samples); }),
                 "samples_per_half must be >= 1"));
}

TEST_CASE("oversized geometry warns without failing the load") {
  const ScratchDir scratch;
  const std::string path = scratch.put("tall.yaml",
                                       "robot:\n"
                                       "  legs:\n"
                                       "    front: {h_mm: 60, H_mm: 30, b_mm: 4, r_mm: 3}\n"
                                       "    rear: {h_mm: 60, H_mm: 30, b_mm: 4, r_mm: 3}\n"
                                       "profile:\n"
                                       "  low_deg: 17.2\n");
  const RunConfig cfg = load_config(path);
  REQUIRE_FALSE(cfg.warnings.empty());
  CHECK(contains(cfg.warnings.front(), "standing height"));
}

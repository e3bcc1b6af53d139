// Microbenchmarks for the hot paths: the tower height law, the DH chain,
// the stance solver, a full crawl cycle, workspace sampling, and the two
// stroke planners on the default workspace.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "oriloco/arm.hpp"
#include "oriloco/config.hpp"
#include "oriloco/crawl.hpp"
#include "oriloco/gait.hpp"
#include "oriloco/tower.hpp"
#include "oriloco/workspace.hpp"

using namespace oriloco;

namespace {

std::vector<JointState> random_joints(std::size_t count) {
  const ArmParams arm;
  const double limit = joint_limit(arm);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> joint(0.0, limit);
  std::vector<JointState> out(count);
  for (auto& j : out) j = JointState{{joint(rng), joint(rng), joint(rng)}};
  return out;
}

struct DefaultWorkspace {
  RunConfig cfg = default_config();
  std::vector<WorkspaceNode> nodes = sample_workspace(cfg.arm, cfg.grid, cfg.plate);
  StrokeEndpoints ends = select_endpoints(nodes);
};

const DefaultWorkspace& default_workspace() {
  static const DefaultWorkspace ws;
  return ws;
}

}  // namespace

static void BM_TowerHeight(benchmark::State& state) {
  const TowerGeometry geom;
  const double top = max_twist(geom);
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-4;
    if (theta >= top) theta = 0.0;
    benchmark::DoNotOptimize(tower_height(geom, theta));
  }
}
BENCHMARK(BM_TowerHeight);

static void BM_ForwardKinematics(benchmark::State& state) {
  const ArmParams arm;
  const std::vector<JointState> joints = random_joints(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_kinematics(arm, joints[i++ & 1023]));
  }
}
BENCHMARK(BM_ForwardKinematics);

static void BM_ClosedFormPose(benchmark::State& state) {
  const ArmParams arm;
  const std::vector<JointState> joints = random_joints(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_pose(arm, joints[i++ & 1023]));
  }
}
BENCHMARK(BM_ClosedFormPose);

static void BM_SolveState(benchmark::State& state) {
  const CrawlParams params;
  const LegParams leg;
  double theta = 0.1;
  for (auto _ : state) {
    theta += 1e-3;
    if (theta >= 0.5) theta = 0.1;
    benchmark::DoNotOptimize(solve_state(params, leg, leg, theta));
  }
}
BENCHMARK(BM_SolveState);

static void BM_SimulateCrawlCycle(benchmark::State& state) {
  const CrawlParams params;
  const LegParams leg;
  const std::vector<double> ramp = triangular_profile(0.1, 0.5, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_crawl(params, leg, leg, ramp));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ramp.size()));
}
BENCHMARK(BM_SimulateCrawlCycle);

static void BM_SampleWorkspace(benchmark::State& state) {
  const ArmParams arm;
  const int steps = static_cast<int>(state.range(0));
  GridSpec grid;
  const double limit = joint_limit(arm);
  for (int a = 0; a < 3; ++a) grid.axis[a] = {0.0, limit, steps};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_workspace(arm, grid, PlateSpec{}));
  }
  state.SetItemsProcessed(state.iterations() * grid.count());
}
BENCHMARK(BM_SampleWorkspace)->Arg(5)->Arg(11)->Arg(21);

static void BM_PlanThrustStroke(benchmark::State& state) {
  const DefaultWorkspace& ws = default_workspace();
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_thrust_stroke(ws.cfg.grid, ws.nodes, ws.ends));
  }
}
BENCHMARK(BM_PlanThrustStroke);

static void BM_PlanDragStroke(benchmark::State& state) {
  const DefaultWorkspace& ws = default_workspace();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        plan_drag_stroke(ws.cfg.grid, ws.nodes, ws.ends.goal, ws.ends.start));
  }
}
BENCHMARK(BM_PlanDragStroke);

BENCHMARK_MAIN();

#include "oriloco/arm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "oriloco/errors.hpp"
#include "oriloco/units.hpp"

namespace oriloco {

void validate(const ArmParams& params) {
  validate(params.tower);
  if (!(params.support_link > params.tower.side_a))
    throw std::invalid_argument(
        "arm: support_link must exceed the tower side length so stacked towers clear");
  if (!(params.padding_link > 0.0))
    throw std::invalid_argument("arm: padding_link must be positive");
  validate(params.dh_table);
}

double joint_limit(const ArmParams& params) {
  return max_twist(params.tower) - params.tower.theta_int;
}

CoupledValues coupled_joint_values(const ArmParams& params, const JointState& joints) {
  CoupledValues cv;
  for (int i = 0; i < 3; ++i) {
    if (joints.theta[i] < 0.0)
      throw std::invalid_argument("arm: commanded twist " + std::to_string(i) +
                                  " is negative");
    cv.twist_total[i] = params.tower.theta_int + joints.theta[i];
    cv.height[i] = tower_height(params.tower, cv.twist_total[i]);
  }
  cv.extension[0] = cv.height[0] + params.support_link;
  cv.extension[1] = cv.height[1] + params.support_link;
  cv.extension[2] = cv.height[2] + params.padding_link;
  return cv;
}

namespace {

// Resolve a cell against the coupled values / fixed dimensions; the only
// call site guarantees validated rows.
double resolve_cell(const DHCell& cell, const ArmParams& params, const CoupledValues& cv) {
  switch (cell.sym) {
    case DHSym::Lit: return cell.lit;
    case DHSym::PairExt0: return cell.scale * cv.extension[0];
    case DHSym::PairExt1: return cell.scale * cv.extension[1];
    case DHSym::PairExt2: return cell.scale * cv.extension[2];
    case DHSym::TowerH0: return cell.scale * cv.height[0];
    case DHSym::TowerH1: return cell.scale * cv.height[1];
    case DHSym::TowerH2: return cell.scale * cv.height[2];
    case DHSym::Twist0: return cell.scale * cv.twist_total[0];
    case DHSym::Twist1: return cell.scale * cv.twist_total[1];
    case DHSym::Twist2: return cell.scale * cv.twist_total[2];
    case DHSym::SupportLink: return cell.scale * params.support_link;
    case DHSym::PaddingLink: return cell.scale * params.padding_link;
    case DHSym::SupportMinusHalfSide:
      return cell.scale * (params.support_link - 0.5 * params.tower.side_a);
  }
  throw std::logic_error("dh: unhandled symbol");
}

}  // namespace

HomTransform forward_kinematics(const ArmParams& params, const JointState& joints) {
  validate(params.dh_table);
  const CoupledValues cv = coupled_joint_values(params, joints);
  HomTransform pose = params.base;
  for (const DHRow& row : params.dh_table) {
    const double d = resolve_cell(row.d, params, cv);
    const double theta = resolve_cell(row.theta, params, cv);
    pose = pose * dh_matrix(row.alpha, row.a, d, theta + row.offset);
  }
  return pose;
}

HomTransform closed_form_pose(const ArmParams& params, const JointState& joints) {
  const CoupledValues cv = coupled_joint_values(params, joints);
  const double c0 = std::cos(cv.twist_total[0]), s0 = std::sin(cv.twist_total[0]);
  const double c1 = std::cos(cv.twist_total[1]), s1 = std::sin(cv.twist_total[1]);
  const double c2 = std::cos(cv.twist_total[2]), s2 = std::sin(cv.twist_total[2]);
  const double d0 = cv.extension[0], d1 = cv.extension[1], d2 = cv.extension[2];
  const double a = params.tower.side_a;

  Mat3 r;
  r(0, 0) = c0 * c1 * c2 - s0 * s2;
  r(0, 1) = -c0 * c1 * s2 - s0 * c2;
  r(0, 2) = -c0 * s1;
  r(1, 0) = s0 * c1 * c2 + c0 * s2;
  r(1, 1) = -s0 * c1 * s2 + c0 * c2;
  r(1, 2) = -s0 * s1;
  r(2, 0) = s1 * c2;
  r(2, 1) = -s1 * s2;
  r(2, 2) = c1;
  const Vec3 t{-d2 * c0 * s1 - 0.5 * a * s0 + d1 * s0,
               -d2 * s0 * s1 + 0.5 * a * c0 - d1 * c0,
               d2 * c1 - 0.5 * a + d0};
  return params.base * HomTransform{r, t};
}

Vec3 end_plate_normal(const HomTransform& pose) { return pose.rotation().col(2); }

DiscrepancyReport compare_fk(const ArmParams& params, int samples, std::uint64_t seed,
                             PoseFn route_a, PoseFn route_b) {
  if (samples < 1) throw std::invalid_argument("compare_fk: samples must be >= 1");
  if (!route_a) route_a = [](const ArmParams& p, const JointState& j) {
    return forward_kinematics(p, j);
  };
  if (!route_b) route_b = [](const ArmParams& p, const JointState& j) {
    return closed_form_pose(p, j);
  };

  const double limit = joint_limit(params);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(0.0, limit);

  DiscrepancyReport rep;
  rep.samples = samples;
  for (int k = 0; k < samples; ++k) {
    JointState joints;
    for (double& th : joints.theta) th = draw(rng);
    const HomTransform ta = route_a(params, joints);
    const HomTransform tb = route_b(params, joints);

    const Vec3 dt = ta.translation() - tb.translation();
    const double pos_dev = dt.norm();
    if (pos_dev > rep.max_pos_dev) {
      rep.max_pos_dev = pos_dev;
      rep.argmax_pos = joints;
    }
    rep.max_axis_dev.x = std::max(rep.max_axis_dev.x, std::abs(dt.x));
    rep.max_axis_dev.y = std::max(rep.max_axis_dev.y, std::abs(dt.y));
    rep.max_axis_dev.z = std::max(rep.max_axis_dev.z, std::abs(dt.z));

    const double orient_dev = rotation_angle_between(ta.rotation(), tb.rotation());
    if (orient_dev > rep.max_orient_dev) {
      rep.max_orient_dev = orient_dev;
      rep.argmax_orient = joints;
    }
  }
  return rep;
}

}  // namespace oriloco

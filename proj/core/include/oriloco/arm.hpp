#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "oriloco/dh.hpp"
#include "oriloco/tower.hpp"
#include "oriloco/transform.hpp"

/// \file
/// \brief Forward kinematics of the 3-DoF arm of serially stacked towers.
///
/// Each tower both twists and shortens, so it is modeled as a coupled
/// revolute + prismatic pair: commanding twist theta_i fixes the total
/// angle theta_int + theta_i and, through the tower height law, the total
/// prismatic extension of the pair.  Pairs are indexed 0..2 root-to-tip.

namespace oriloco {

struct ArmParams {
  TowerGeometry tower;
  double support_link = 16.0;  ///< separation between stacked towers, mm
  double padding_link = 10.0;  ///< spacer under the end plate, mm
  DHTable dh_table = default_dh_table();
  HomTransform base;  ///< arm mount on the body; identity for a lone arm
};

/// Throws std::invalid_argument unless the tower validates, both links are
/// positive with support_link > tower.side_a (the stacked towers must
/// clear each other), and the table passes DH validation.
void validate(const ArmParams& params);

/// Commanded twist of towers 0..2, rad.  Valid range per joint is
/// [0, joint_limit(params)] so the total angle stays inside the tower's
/// feasible domain.
struct JointState {
  std::array<double, 3> theta{0.0, 0.0, 0.0};
};

/// Upper bound on each commanded twist: max_twist - theta_int.
double joint_limit(const ArmParams& params);

/// The coupling at the heart of the arm: each pair's prismatic value is a
/// deterministic function of its revolute value.
struct CoupledValues {
  std::array<double, 3> twist_total;  ///< theta_int + theta_i, rad
  std::array<double, 3> height;       ///< tower height at that twist, mm
  std::array<double, 3> extension;    ///< height + link length (support, support, padding), mm
};

/// Throws std::invalid_argument for negative commanded twist; propagates
/// the tower's domain error when the total angle passes the collapse point.
CoupledValues coupled_joint_values(const ArmParams& params, const JointState& joints);

/// End pose by composing the six DH rows in table order, with symbolic
/// cells bound from coupled_joint_values and the base transform applied
/// in front.
HomTransform forward_kinematics(const ArmParams& params, const JointState& joints);

/// End pose by direct evaluation of the single closed-form matrix in the
/// total twists and pair extensions (a is the tower side length).  This is
/// an independent route from the DH chain; the two are reconciled by
/// compare_fk, not assumed identical.
HomTransform closed_form_pose(const ArmParams& params, const JointState& joints);

/// Outward normal of the end plate: third column of the rotation block.
Vec3 end_plate_normal(const HomTransform& pose);

/// What compare_fk found, with enough context to reproduce the worst case.
struct DiscrepancyReport {
  int samples = 0;
  double max_pos_dev = 0.0;          ///< worst |pos_a - pos_b|, mm
  Vec3 max_axis_dev;                 ///< worst per-axis |delta|, tracked independently
  double max_orient_dev = 0.0;       ///< worst relative rotation angle, rad
  JointState argmax_pos;             ///< joints at the worst position deviation
  JointState argmax_orient;          ///< joints at the worst orientation deviation
};

using PoseFn = std::function<HomTransform(const ArmParams&, const JointState&)>;

/// Evaluate two pose routes at uniformly random joint states and report
/// their worst disagreement.  Defaults compare forward_kinematics against
/// closed_form_pose; pass explicit routes to reconcile anything else
/// (e.g. the chain against a step-by-step composition oracle).
/// Throws std::invalid_argument when samples < 1.
DiscrepancyReport compare_fk(const ArmParams& params, int samples,
                             std::uint64_t seed = 12345, PoseFn route_a = nullptr,
                             PoseFn route_b = nullptr);

}  // namespace oriloco

#pragma once

#include <string>
#include <vector>

#include "oriloco/units.hpp"

/// \file
/// \brief Inchworm crawling: equivalent-leg geometry, the one-DoF
/// arc/chord constraint, per-cycle displacement, and ground reactions.
///
/// The bent body is an arc of fixed length whose circumference angle theta
/// is the single degree of freedom.  Each leg assembly collapses to an
/// "equivalent leg" (length l, inclination alpha') hinged at the chord
/// end.  Asymmetric legs tilt the chord by beta, closing the loop
///
///   a(theta) * sin(beta) = l_f cos(alpha'_f) - l_r cos(alpha'_r),
///   alpha_f = theta - beta,  alpha_r = theta + beta,
///
/// which is solved per theta by damped fixed-point iteration.  A cycle
/// alternates which foot anchors: the front-rolling first half drives the
/// body forward off the front pelma, the second half drags the rear up.

namespace oriloco {

/// One leg assembly: strut lengths h and H_leg, mount offset b, and foot
/// roller radius r (all mm).  The defaults are short legs: the standing
/// robot fits the 85 x 110 mm design envelope at every stance, and the
/// chord contraction outweighs the leg splay so the body accelerates
/// forward through both halves of a triangular cycle (the regime the
/// reaction-force study describes).
struct LegParams {
  double h = 6.0;
  double H_leg = 8.0;
  double b = 4.0;
  double r = 3.0;
};

/// Throws std::invalid_argument unless all lengths are positive and r < b.
void validate(const LegParams& leg);

struct CrawlParams {
  double arc_length = 80.0;  ///< body arc length L, mm
  double mass = 0.1;         ///< kg
  double gravity = 9.8;      ///< m/s^2
  double mu_pelma = 0.4;     ///< friction of the plantar (anchoring) surface
  double mu_toe = 0.1;       ///< friction of the toe (sliding) surface
  double dt = 0.05;          ///< sample spacing, s
  double theta_max = 0.6;    ///< solver bound on the circumference angle, rad
  int solver_max_iter = 200;
  double solver_tol = 1e-10;  ///< stop when beta moves less than this, rad
};

void validate(const CrawlParams& params);

/// Equivalent-leg reduction at inclination alpha.
struct LegPose {
  double m_proj = 0.0;   ///< vertical projection (hinge to contact), mm
  double n_proj = 0.0;   ///< horizontal projection, mm
  double len = 0.0;      ///< equivalent leg length l, mm
  double incline = 0.0;  ///< equivalent inclination alpha', rad
};

/// m = h cos(a) - (b - r) sin(a) + (H + r) cos(a)
/// n = h sin(a) + (b - r) cos(a) + (H + r) sin(a)
/// l = sqrt(m^2 + n^2), alpha' = arctan(n / m).
/// Requires alpha in (0, pi/2) -- the boundary alpha = 0 is also accepted
/// since every term stays well defined there.  Throws InfeasibleError when
/// m <= 0 (the arctan branch would leave the intended quadrant).
LegPose leg_equivalent(const LegParams& leg, double alpha);

/// Chord subtending an arc of length L at circumference angle theta:
/// (L / theta) sin(theta), continuously extended to L at theta = 0.
double chord_length(double arc_length, double theta);

/// Fully solved stance at one circumference angle.
struct CrawlState {
  double theta = 0.0;        ///< circumference angle, rad
  double alpha_front = 0.0;  ///< front leg inclination theta - beta, rad
  double alpha_rear = 0.0;   ///< rear leg inclination theta + beta, rad
  LegPose front;
  LegPose rear;
  double beta = 0.0;     ///< chord inclination, rad
  double a_chord = 0.0;  ///< chord length, mm
};

/// Solve the stance closure at theta.  Throws std::invalid_argument for
/// theta outside (0, theta_max); InfeasibleError when the closure argument
/// leaves [-1, 1], a leg degenerates, or iteration fails to converge.
CrawlState solve_state(const CrawlParams& params, const LegParams& front,
                       const LegParams& rear, double theta);

/// COG displacement when the stance deforms from state0 to state1.
/// dx_first applies while the front foot anchors, dx_second while the rear
/// does; dy is the COG height change (common to both).
struct CycleDisplacement {
  double dx_first = 0.0;   ///< mm
  double dx_second = 0.0;  ///< mm
  double dy = 0.0;         ///< mm
};

CycleDisplacement cycle_displacement(const CrawlState& state0, const CrawlState& state1,
                                     const LegParams& front, const LegParams& rear);

/// Central second difference (next - 2 curr + prev) / dt^2; exact for
/// quadratics.
double fd_accel(double prev, double curr, double next, double dt);

enum class CrawlPhase { First, Second };

/// Ground reaction forces from the planar force balance at accelerations
/// (ax, ay), with mu the friction coefficient of the anchoring contact:
///   first:   F_f = (m/2)(+ax/mu + ay + g),  F_r = (m/2)(-ax/mu + ay + g)
///   second:  F_f = (m/2)(-2ax/mu + ay + g), F_r = (m/2)(+2ax/mu + ay + g)
/// A negative reaction is returned as-is with contact_loss set.
struct GroundReactions {
  double front = 0.0;  ///< N
  double rear = 0.0;   ///< N
  bool contact_loss = false;
};

GroundReactions ground_reactions(const CrawlParams& params, CrawlPhase phase, double ax,
                                 double ay, double mu);

/// Coulomb friction magnitude mu * F_R.
double friction_force(double reaction, double mu);

struct CrawlSample {
  double t = 0.0;          ///< s
  double theta = 0.0;      ///< rad
  CrawlPhase phase = CrawlPhase::First;
  double x = 0.0;          ///< COG forward position, mm
  double y = 0.0;          ///< COG height change, mm
  double f_front = 0.0;    ///< front reaction, N
  double f_rear = 0.0;     ///< rear reaction, N
  double fric_front = 0.0; ///< friction at the front contact, N
  double fric_rear = 0.0;  ///< friction at the rear contact, N
};

struct CrawlTrace {
  std::vector<CrawlSample> samples;
  double net_dx = 0.0;  ///< mm over the whole profile
  double net_dy = 0.0;  ///< mm
  bool contact_loss = false;
};

/// Run one actuation cycle given the theta schedule (length >= 3).
/// Samples up to index (N-1)/2 belong to the first (front-anchored)
/// half, the rest to the second.  Accelerations come from fd_accel over the
/// accumulated COG track, endpoints copying the nearest interior value;
/// reactions use the anchoring (pelma) coefficient, while the reported
/// per-foot friction forces pair each foot with the surface it presents
/// in that phase (first: front pelma / rear toe, second: reversed).
/// Solver failures carry the offending sample index.
CrawlTrace simulate_crawl(const CrawlParams& params, const LegParams& front,
                          const LegParams& rear, const std::vector<double>& theta_profile);

/// Symmetric triangular schedule lo -> hi -> lo with samples_per_half
/// intervals per side (2 * samples_per_half + 1 samples, descending half
/// mirroring the ascending half exactly).
std::vector<double> triangular_profile(double lo, double hi, int samples_per_half);

/// One row of the friction sweep: the same cycle re-run with both surface
/// coefficients set to mu.
struct SweepRow {
  double mu = 0.0;
  double f_front_min_first = 0.0, f_front_max_first = 0.0;
  double f_rear_min_first = 0.0, f_rear_max_first = 0.0;
  double f_front_min_second = 0.0, f_front_max_second = 0.0;
  double f_rear_min_second = 0.0, f_rear_max_second = 0.0;
  double net_dx = 0.0;  ///< mm
  double net_dy = 0.0;  ///< mm
  double fric_front_max = 0.0;  ///< N
  double fric_rear_max = 0.0;   ///< N
};

/// Throws std::invalid_argument for an empty mu list.
std::vector<SweepRow> friction_sweep(const CrawlParams& params, const LegParams& front,
                                     const LegParams& rear,
                                     const std::vector<double>& theta_profile,
                                     const std::vector<double>& mu_list);

/// Standing-height / footprint advisory limits; returns human-readable
/// warnings (empty when within bounds).  The stance at theta is solved to
/// obtain the posture being judged.
std::vector<std::string> geometry_warnings(const CrawlParams& params,
                                           const LegParams& front, const LegParams& rear,
                                           double theta, double max_height_mm = 85.0,
                                           double max_footprint_mm = 110.0);

}  // namespace oriloco

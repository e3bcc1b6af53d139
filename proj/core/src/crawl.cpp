#include "oriloco/crawl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oriloco/errors.hpp"

namespace oriloco {

void validate(const LegParams& leg) {
  if (!(leg.h > 0.0) || !(leg.H_leg > 0.0) || !(leg.b > 0.0) || !(leg.r > 0.0))
    throw std::invalid_argument("leg: all dimensions must be positive");
  if (!(leg.r < leg.b))
    throw std::invalid_argument("leg: foot radius r must be smaller than offset b");
}

void validate(const CrawlParams& params) {
  if (!(params.arc_length > 0.0))
    throw std::invalid_argument("crawl: arc_length must be positive");
  if (!(params.mass > 0.0)) throw std::invalid_argument("crawl: mass must be positive");
  if (!(params.gravity > 0.0)) throw std::invalid_argument("crawl: gravity must be positive");
  if (!(params.mu_pelma > 0.0) || params.mu_pelma > 1.0)
    throw std::invalid_argument("crawl: mu_pelma must lie in (0, 1]");
  if (!(params.mu_toe > 0.0) || params.mu_toe > 1.0)
    throw std::invalid_argument("crawl: mu_toe must lie in (0, 1]");
  if (!(params.dt > 0.0)) throw std::invalid_argument("crawl: dt must be positive");
  if (!(params.theta_max > 0.0) || params.theta_max >= kPi)
    throw std::invalid_argument("crawl: theta_max must lie in (0, pi)");
  if (params.solver_max_iter < 1)
    throw std::invalid_argument("crawl: solver_max_iter must be >= 1");
  if (!(params.solver_tol > 0.0))
    throw std::invalid_argument("crawl: solver_tol must be positive");
}

LegPose leg_equivalent(const LegParams& leg, double alpha) {
  if (alpha < 0.0 || alpha >= kPi / 2.0)
    throw std::invalid_argument("leg_equivalent: alpha outside [0, pi/2)");
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  LegPose pose;
  pose.m_proj = leg.h * ca - (leg.b - leg.r) * sa + (leg.H_leg + leg.r) * ca;
  pose.n_proj = leg.h * sa + (leg.b - leg.r) * ca + (leg.H_leg + leg.r) * sa;
  if (!(pose.m_proj > 0.0))
    throw InfeasibleError("leg_equivalent: degenerate geometry, m <= 0 at alpha = " +
                          std::to_string(alpha));
  pose.len = std::sqrt(pose.m_proj * pose.m_proj + pose.n_proj * pose.n_proj);
  pose.incline = std::atan(pose.n_proj / pose.m_proj);
  return pose;
}

double chord_length(double arc_length, double theta) {
  if (theta < 0.0 || theta > kPi)
    throw std::invalid_argument("chord_length: theta outside [0, pi]");
  // sin(t)/t -> 1: below ~1e-8 the quadratic correction is under 1e-16
  // relative, so returning L is the correctly rounded value.
  if (theta < 1e-8) return arc_length;
  return arc_length / theta * std::sin(theta);
}

namespace {

// Closure mismatch at a trial beta: a sin(beta) - (l_f cos a'_f - l_r cos a'_r).
// Positive derivative in beta near the root makes this Newton-friendly.
struct Closure {
  const LegParams& front;
  const LegParams& rear;
  double theta;
  double a_chord;

  double height_gap(double beta, LegPose* f_out = nullptr, LegPose* r_out = nullptr) const {
    const double alpha_f = theta - beta;
    const double alpha_r = theta + beta;
    if (alpha_f < 0.0 || alpha_f >= kPi / 2.0 || alpha_r < 0.0 || alpha_r >= kPi / 2.0)
      throw InfeasibleError("solve_state: trial stance leaves the inclination domain at theta = " +
                            std::to_string(theta));
    const LegPose f = leg_equivalent(front, alpha_f);
    const LegPose r = leg_equivalent(rear, alpha_r);
    if (f_out) *f_out = f;
    if (r_out) *r_out = r;
    return f.len * std::cos(f.incline) - r.len * std::cos(r.incline);
  }

  double next_beta(double beta) const {
    const double s = height_gap(beta) / a_chord;
    if (std::abs(s) > 1.0)
      throw InfeasibleError(
          "solve_state: closure argument " + std::to_string(s) +
          " leaves [-1, 1]; legs cannot both reach the ground at theta = " +
          std::to_string(theta));
    return std::asin(s);
  }

  double residual(double beta) const {
    return a_chord * std::sin(beta) - height_gap(beta);
  }
};

}  // namespace

CrawlState solve_state(const CrawlParams& params, const LegParams& front,
                       const LegParams& rear, double theta) {
  validate(params);
  validate(front);
  validate(rear);
  if (!(theta > 0.0) || !(theta < params.theta_max))
    throw std::invalid_argument("solve_state: theta outside (0, theta_max)");

  const Closure closure{front, rear, theta, chord_length(params.arc_length, theta)};

  // Damped fixed point on beta <- asin(gap / a); the 0.5 damping guards
  // oscillation when the map's slope turns negative near the asin boundary.
  // For strongly bent stances the map contracts slowly (slope approaches 1
  // from below near the solvability edge), so the step tolerance may not be
  // met within the cap; the Newton polish below then finishes the job, and
  // convergence is judged by the closure residual, not the step size.
  double beta = 0.0;
  for (int iter = 0; iter < params.solver_max_iter; ++iter) {
    const double target = closure.next_beta(beta);
    const double step = 0.5 * (target - beta);
    beta += step;
    if (std::abs(step) < params.solver_tol) break;
  }

  // A few Newton steps sharpen the iterate to full residual precision
  // (the step tolerance alone leaves the closure residual near
  // a_chord * tol).  Steps that leave the domain or fail to improve are
  // simply not taken.
  for (int polish = 0; polish < 8; ++polish) {
    const double f = closure.residual(beta);
    if (std::abs(f) < 1e-13) break;
    const double h = 1e-7;
    double fp = 0.0, fm = 0.0;
    try {
      fp = closure.residual(beta + h);
      fm = closure.residual(beta - h);
    } catch (const InfeasibleError&) {
      break;
    }
    const double df = (fp - fm) / (2.0 * h);
    if (df == 0.0) break;
    const double cand = beta - f / df;
    double fc = 0.0;
    try {
      fc = closure.residual(cand);
    } catch (const InfeasibleError&) {
      break;
    }
    if (std::abs(fc) <= std::abs(f))
      beta = cand;
    else
      break;
  }

  CrawlState state;
  state.theta = theta;
  state.beta = beta;
  state.a_chord = closure.a_chord;
  state.alpha_front = theta - beta;
  state.alpha_rear = theta + beta;
  state.front = leg_equivalent(front, state.alpha_front);
  state.rear = leg_equivalent(rear, state.alpha_rear);

  if (std::abs(closure.residual(beta)) > 1e-8)
    throw InfeasibleError("solve_state: no convergence within " +
                          std::to_string(params.solver_max_iter) +
                          " iterations at theta = " + std::to_string(theta) +
                          " (residual " + std::to_string(closure.residual(beta)) + ")");
  return state;
}

CycleDisplacement cycle_displacement(const CrawlState& state0, const CrawlState& state1,
                                     const LegParams& front, const LegParams& rear) {
  const double chord0 = 0.5 * state0.a_chord * std::cos(state0.beta);
  const double chord1 = 0.5 * state1.a_chord * std::cos(state1.beta);

  CycleDisplacement d;
  d.dx_first = state1.front.len * std::sin(state1.front.incline) -
               state0.front.len * std::sin(state0.front.incline) + chord0 - chord1 +
               front.r * (state1.front.incline - state0.front.incline);
  d.dx_second = state0.rear.len * std::sin(state0.rear.incline) -
                state1.rear.len * std::sin(state1.rear.incline) + chord0 - chord1 +
                rear.r * (state0.rear.incline - state1.rear.incline);
  d.dy = (state1.front.len * std::cos(state1.front.incline) -
          state1.rear.len * std::cos(state1.rear.incline)) /
             2.0 -
         (state0.front.len * std::cos(state0.front.incline) -
          state0.rear.len * std::cos(state0.rear.incline)) /
             2.0;
  return d;
}

double fd_accel(double prev, double curr, double next, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("fd_accel: dt must be positive");
  return (next - 2.0 * curr + prev) / (dt * dt);
}

GroundReactions ground_reactions(const CrawlParams& params, CrawlPhase phase, double ax,
                                 double ay, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("ground_reactions: mu must be positive");
  const double half_m = params.mass / 2.0;
  GroundReactions out;
  if (phase == CrawlPhase::First) {
    out.front = half_m * (ax / mu + ay + params.gravity);
    out.rear = half_m * (-ax / mu + ay + params.gravity);
  } else {
    out.front = half_m * (-2.0 * ax / mu + ay + params.gravity);
    out.rear = half_m * (2.0 * ax / mu + ay + params.gravity);
  }
  out.contact_loss = out.front < 0.0 || out.rear < 0.0;
  return out;
}

double friction_force(double reaction, double mu) { return mu * reaction; }

CrawlTrace simulate_crawl(const CrawlParams& params, const LegParams& front,
                          const LegParams& rear, const std::vector<double>& theta_profile) {
  validate(params);
  const int n = static_cast<int>(theta_profile.size());
  if (n < 3)
    throw std::invalid_argument("simulate_crawl: profile needs at least 3 samples");

  std::vector<CrawlState> states;
  states.reserve(theta_profile.size());
  for (int i = 0; i < n; ++i) {
    try {
      states.push_back(solve_state(params, front, rear, theta_profile[i]));
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("simulate_crawl: sample " + std::to_string(i) + ": " +
                            e.what());
    }
  }

  // The ascending half of a triangular profile owns its peak: for an odd
  // 2k+1-sample cycle, samples 0..k are the front-anchored curl and
  // k+1..2k the rear-anchored extension, so the descent steps all land in
  // the second branch.
  const auto phase_of = [n](int i) {
    return i <= (n - 1) / 2 ? CrawlPhase::First : CrawlPhase::Second;
  };

  // COG track: the anchoring foot decides which displacement branch moves
  // the body; height changes regardless.
  std::vector<double> x(n, 0.0), y(n, 0.0);
  for (int i = 1; i < n; ++i) {
    const CycleDisplacement d =
        cycle_displacement(states[i - 1], states[i], front, rear);
    x[i] = x[i - 1] + (phase_of(i) == CrawlPhase::First ? d.dx_first : d.dx_second);
    y[i] = y[i - 1] + d.dy;
  }

  // Accelerations in m/s^2 from the mm track; endpoints copy the nearest
  // interior value.
  std::vector<double> ax(n, 0.0), ay(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    ax[i] = fd_accel(x[i - 1], x[i], x[i + 1], params.dt) * 1e-3;
    ay[i] = fd_accel(y[i - 1], y[i], y[i + 1], params.dt) * 1e-3;
  }
  ax[0] = ax[1];
  ay[0] = ay[1];
  ax[n - 1] = ax[n - 2];
  ay[n - 1] = ay[n - 2];

  CrawlTrace trace;
  trace.samples.reserve(theta_profile.size());
  for (int i = 0; i < n; ++i) {
    const CrawlPhase phase = phase_of(i);
    const GroundReactions gr =
        ground_reactions(params, phase, ax[i], ay[i], params.mu_pelma);
    CrawlSample s;
    s.t = i * params.dt;
    s.theta = theta_profile[i];
    s.phase = phase;
    s.x = x[i];
    s.y = y[i];
    s.f_front = gr.front;
    s.f_rear = gr.rear;
    const double mu_front = phase == CrawlPhase::First ? params.mu_pelma : params.mu_toe;
    const double mu_rear = phase == CrawlPhase::First ? params.mu_toe : params.mu_pelma;
    s.fric_front = friction_force(gr.front, mu_front);
    s.fric_rear = friction_force(gr.rear, mu_rear);
    trace.contact_loss = trace.contact_loss || gr.contact_loss;
    trace.samples.push_back(s);
  }
  trace.net_dx = x[n - 1] - x[0];
  trace.net_dy = y[n - 1] - y[0];
  return trace;
}

std::vector<double> triangular_profile(double lo, double hi, int samples_per_half) {
  if (samples_per_half < 1)
    throw std::invalid_argument("triangular_profile: samples_per_half must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("triangular_profile: need lo < hi");
  const int m = samples_per_half;
  std::vector<double> profile(2 * m + 1);
  for (int i = 0; i <= m; ++i)
    profile[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m);
  // Mirror the ascending half so matched samples are bitwise equal.
  for (int i = 0; i < m; ++i) profile[2 * m - i] = profile[i];
  return profile;
}

std::vector<SweepRow> friction_sweep(const CrawlParams& params, const LegParams& front,
                                     const LegParams& rear,
                                     const std::vector<double>& theta_profile,
                                     const std::vector<double>& mu_list) {
  if (mu_list.empty()) throw std::invalid_argument("friction_sweep: empty mu list");
  std::vector<SweepRow> rows;
  rows.reserve(mu_list.size());
  for (double mu : mu_list) {
    CrawlParams p = params;
    p.mu_pelma = mu;
    p.mu_toe = mu;
    const CrawlTrace trace = simulate_crawl(p, front, rear, theta_profile);

    SweepRow row;
    row.mu = mu;
    row.net_dx = trace.net_dx;
    row.net_dy = trace.net_dy;
    bool saw_first = false, saw_second = false;
    for (const CrawlSample& s : trace.samples) {
      if (s.phase == CrawlPhase::First) {
        if (!saw_first) {
          row.f_front_min_first = row.f_front_max_first = s.f_front;
          row.f_rear_min_first = row.f_rear_max_first = s.f_rear;
          saw_first = true;
        } else {
          row.f_front_min_first = std::min(row.f_front_min_first, s.f_front);
          row.f_front_max_first = std::max(row.f_front_max_first, s.f_front);
          row.f_rear_min_first = std::min(row.f_rear_min_first, s.f_rear);
          row.f_rear_max_first = std::max(row.f_rear_max_first, s.f_rear);
        }
      } else {
        if (!saw_second) {
          row.f_front_min_second = row.f_front_max_second = s.f_front;
          row.f_rear_min_second = row.f_rear_max_second = s.f_rear;
          saw_second = true;
        } else {
          row.f_front_min_second = std::min(row.f_front_min_second, s.f_front);
          row.f_front_max_second = std::max(row.f_front_max_second, s.f_front);
          row.f_rear_min_second = std::min(row.f_rear_min_second, s.f_rear);
          row.f_rear_max_second = std::max(row.f_rear_max_second, s.f_rear);
        }
      }
      row.fric_front_max = std::max(row.fric_front_max, std::abs(s.fric_front));
      row.fric_rear_max = std::max(row.fric_rear_max, std::abs(s.fric_rear));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> geometry_warnings(const CrawlParams& params,
                                           const LegParams& front, const LegParams& rear,
                                           double theta, double max_height_mm,
                                           double max_footprint_mm) {
  std::vector<std::string> warnings;
  const CrawlState state = solve_state(params, front, rear, theta);
  const double front_height = state.front.len * std::cos(state.front.incline);
  const double rear_height = state.rear.len * std::cos(state.rear.incline);
  const double height = std::max(front_height, rear_height);
  if (height > max_height_mm)
    warnings.push_back("standing height " + std::to_string(height) +
                       " mm exceeds the advisory limit of " +
                       std::to_string(max_height_mm) + " mm");
  const double footprint = state.front.len * std::sin(state.front.incline) +
                           state.a_chord * std::cos(state.beta) +
                           state.rear.len * std::sin(state.rear.incline);
  if (footprint > max_footprint_mm)
    warnings.push_back("footprint " + std::to_string(footprint) +
                       " mm exceeds the advisory limit of " +
                       std::to_string(max_footprint_mm) + " mm");
  return warnings;
}

}  // namespace oriloco

#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "oriloco/crawl.hpp"
#include "oriloco/gait.hpp"
#include "oriloco/workspace.hpp"

/// \file
/// \brief Readers and writers for every emitted data format.
///
/// All floats are printed with "%.9g" so identical runs produce
/// byte-identical files, and every writer has a reader that reconstructs
/// the data exactly at the printed precision (write -> read -> write is a
/// byte-level fixed point).  Angles cross these boundaries in degrees.

namespace oriloco {

/// Fixed 9-significant-digit float formatting used by all writers.
std::string fmt9(double v);

// --- crawl trace ---------------------------------------------------------
// CSV columns: t_s,theta_rad,phase,x_mm,y_mm,F_front_N,F_rear_N,
// fric_front_N,fric_rear_N.  phase is "first" or "second".

void write_crawl_trace(std::ostream& out, const CrawlTrace& trace);
CrawlTrace read_crawl_trace(std::istream& in, const std::string& name = "<trace>");

// --- friction sweep ------------------------------------------------------
// CSV columns: mu, per-phase min/max reactions, net displacement, peak
// friction forces.

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep(std::istream& in, const std::string& name = "<sweep>");

// --- theta profile (input) -----------------------------------------------
// One theta_deg value per line; '#' comments and blank lines ignored.

void write_theta_profile(std::ostream& out, const std::vector<double>& profile_rad);
std::vector<double> read_theta_profile(std::istream& in,
                                       const std::string& name = "<profile>");

// --- workspace -----------------------------------------------------------
// CSV columns: grid_i,grid_j,grid_k,theta1_deg,theta2_deg,theta3_deg,
// x_mm,y_mm,z_mm,nx,ny,nz,area_mm2.

void write_workspace(std::ostream& out, const std::vector<WorkspaceNode>& nodes);
std::vector<WorkspaceNode> read_workspace(std::istream& in,
                                          const std::string& name = "<workspace>");

// --- gait plan -----------------------------------------------------------
// Structured text with one section per stroke; per node: step, grid
// index, joint angles (deg), position (mm), area (mm^2); then per-edge
// strengths, totals, and search statistics.

struct PlanNodeRecord {
  std::array<int, 3> grid_index{0, 0, 0};
  JointState joints;
  Vec3 position;
  double area_p = 0.0;
};

struct PlanStrokeRecord {
  std::string stroke;  ///< "thrust" or "drag"
  std::vector<PlanNodeRecord> nodes;
  std::vector<double> edge_strengths;
  double total_thrust = 0.0;
  double total_drag = 0.0;
  int nodes_expanded = 0;
  int path_length = 0;
};

struct PlanDocument {
  PlanStrokeRecord thrust;
  PlanStrokeRecord drag;
};

PlanStrokeRecord make_stroke_record(const std::string& stroke, const GaitPath& path,
                                    const SearchStats& stats);

void write_plan(std::ostream& out, const PlanDocument& doc);
PlanDocument read_plan(std::istream& in, const std::string& name = "<plan>");

// --- stroke profile ------------------------------------------------------
// CSV columns: stroke,step,y_mm,area_mm2,thrust_force_N.

struct ProfileRow {
  std::string stroke;
  int step = 0;
  double y_mm = 0.0;
  double area_mm2 = 0.0;
  double thrust_force_n = 0.0;
};

void write_stroke_profile(std::ostream& out, const std::vector<ProfileRow>& rows);
std::vector<ProfileRow> read_stroke_profile(std::istream& in,
                                            const std::string& name = "<profile>");

// --- joint series --------------------------------------------------------
// CSV columns: stroke,step,theta1_deg,theta2_deg,theta3_deg.

struct JointRow {
  std::string stroke;
  int step = 0;
  JointState joints;
};

void write_joint_series(std::ostream& out, const std::vector<JointRow>& rows);
std::vector<JointRow> read_joint_series(std::istream& in,
                                        const std::string& name = "<joints>");

// --- swim trace ----------------------------------------------------------
// CSV columns: cycle,step,stroke,theta1_deg,theta2_deg,theta3_deg,
// x_mm,y_mm,z_mm.

struct SwimTraceRow {
  int cycle = 0;
  int step = 0;
  std::string stroke;
  JointState joints;
  Vec3 position;
};

void write_swim_trace(std::ostream& out, const std::vector<SwimTraceRow>& rows);
std::vector<SwimTraceRow> read_swim_trace(std::istream& in,
                                          const std::string& name = "<swim>");

// --- file-level helpers --------------------------------------------------

/// Write `body(out)` to `path`, throwing ConfigError when the file cannot
/// be created.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& body);

/// Open `path` and hand the stream to `body`; ConfigError when missing.
void read_file(const std::string& path, const std::function<void(std::istream&)>& body);

}  // namespace oriloco

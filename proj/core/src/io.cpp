#include "oriloco/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "oriloco/errors.hpp"

namespace oriloco {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  throw ConfigError(name + ":" + std::to_string(line) + ": " + what);
}

double to_double(const std::string& tok, const std::string& name, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (tok.empty() || end != begin + tok.size())
    fail(name, line, "not a number: '" + tok + "'");
  return v;
}

int to_int(const std::string& tok, const std::string& name, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (tok.empty() || end != begin + tok.size())
    fail(name, line, "not an integer: '" + tok + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Sequential CSV reader: header check, then fixed-width rows.
struct CsvReader {
  std::istream& in;
  std::string name;
  int lineno = 0;

  void expect_header(const std::string& header) {
    std::string line;
    if (!std::getline(in, line)) fail(name, 1, "missing header row");
    ++lineno;
    if (line != header)
      fail(name, lineno, "unexpected header '" + line + "', want '" + header + "'");
  }

  bool next_row(std::vector<std::string>& fields, std::size_t width) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      fields = split_csv(line);
      if (fields.size() != width)
        fail(name, lineno,
             "expected " + std::to_string(width) + " fields, got " +
                 std::to_string(fields.size()));
      return true;
    }
    return false;
  }
};

// Whitespace-token reader for the structured plan document.
struct LineReader {
  std::istream& in;
  std::string name;
  int lineno = 0;

  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      toks.clear();
      for (std::string t; fields >> t;) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const std::string& context) {
    std::vector<std::string> toks;
    if (!next(toks)) fail(name, lineno, "unexpected end of file, expected " + context);
    return toks;
  }
};

const char* phase_name(CrawlPhase phase) {
  return phase == CrawlPhase::First ? "first" : "second";
}

CrawlPhase parse_phase(const std::string& tok, const std::string& name, int line) {
  if (tok == "first") return CrawlPhase::First;
  if (tok == "second") return CrawlPhase::Second;
  fail(name, line, "unknown phase '" + tok + "'");
}

}  // namespace

// --- crawl trace ---------------------------------------------------------

void write_crawl_trace(std::ostream& out, const CrawlTrace& trace) {
  out << "t_s,theta_rad,phase,x_mm,y_mm,F_front_N,F_rear_N,fric_front_N,fric_rear_N\n";
  for (const CrawlSample& s : trace.samples) {
    out << fmt9(s.t) << ',' << fmt9(s.theta) << ',' << phase_name(s.phase) << ','
        << fmt9(s.x) << ',' << fmt9(s.y) << ',' << fmt9(s.f_front) << ','
        << fmt9(s.f_rear) << ',' << fmt9(s.fric_front) << ',' << fmt9(s.fric_rear)
        << '\n';
  }
}

CrawlTrace read_crawl_trace(std::istream& in, const std::string& name) {
  CsvReader csv{in, name};
  csv.expect_header(
      "t_s,theta_rad,phase,x_mm,y_mm,F_front_N,F_rear_N,fric_front_N,fric_rear_N");
  CrawlTrace trace;
  std::vector<std::string> f;
  while (csv.next_row(f, 9)) {
    CrawlSample s;
    s.t = to_double(f[0], name, csv.lineno);
    s.theta = to_double(f[1], name, csv.lineno);
    s.phase = parse_phase(f[2], name, csv.lineno);
    s.x = to_double(f[3], name, csv.lineno);
    s.y = to_double(f[4], name, csv.lineno);
    s.f_front = to_double(f[5], name, csv.lineno);
    s.f_rear = to_double(f[6], name, csv.lineno);
    s.fric_front = to_double(f[7], name, csv.lineno);
    s.fric_rear = to_double(f[8], name, csv.lineno);
    trace.samples.push_back(s);
  }
  if (!trace.samples.empty()) {
    trace.net_dx = trace.samples.back().x - trace.samples.front().x;
    trace.net_dy = trace.samples.back().y - trace.samples.front().y;
  }
  return trace;
}

// --- friction sweep ------------------------------------------------------

static const char kSweepHeader[] =
    "mu,F_front_min_first_N,F_front_max_first_N,F_rear_min_first_N,F_rear_max_first_N,"
    "F_front_min_second_N,F_front_max_second_N,F_rear_min_second_N,F_rear_max_second_N,"
    "net_dx_mm,net_dy_mm,fric_front_max_N,fric_rear_max_N";

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << fmt9(r.mu) << ',' << fmt9(r.f_front_min_first) << ','
        << fmt9(r.f_front_max_first) << ',' << fmt9(r.f_rear_min_first) << ','
        << fmt9(r.f_rear_max_first) << ',' << fmt9(r.f_front_min_second) << ','
        << fmt9(r.f_front_max_second) << ',' << fmt9(r.f_rear_min_second) << ','
        << fmt9(r.f_rear_max_second) << ',' << fmt9(r.net_dx) << ',' << fmt9(r.net_dy)
        << ',' << fmt9(r.fric_front_max) << ',' << fmt9(r.fric_rear_max) << '\n';
  }
}

std::vector<SweepRow> read_sweep(std::istream& in, const std::string& name) {
  CsvReader csv{in, name};
  csv.expect_header(kSweepHeader);
  std::vector<SweepRow> rows;
  std::vector<std::string> f;
  while (csv.next_row(f, 13)) {
    SweepRow r;
    r.mu = to_double(f[0], name, csv.lineno);
    r.f_front_min_first = to_double(f[1], name, csv.lineno);
    r.f_front_max_first = to_double(f[2], name, csv.lineno);
    r.f_rear_min_first = to_double(f[3], name, csv.lineno);
    r.f_rear_max_first = to_double(f[4], name, csv.lineno);
    r.f_front_min_second = to_double(f[5], name, csv.lineno);
    r.f_front_max_second = to_double(f[6], name, csv.lineno);
    r.f_rear_min_second = to_double(f[7], name, csv.lineno);
    r.f_rear_max_second = to_double(f[8], name, csv.lineno);
    r.net_dx = to_double(f[9], name, csv.lineno);
    r.net_dy = to_double(f[10], name, csv.lineno);
    r.fric_front_max = to_double(f[11], name, csv.lineno);
    r.fric_rear_max = to_double(f[12], name, csv.lineno);
    rows.push_back(r);
  }
  return rows;
}

// --- theta profile -------------------------------------------------------

void write_theta_profile(std::ostream& out, const std::vector<double>& profile_rad) {
  out << "# theta_deg, one sample per line\n";
  for (double th : profile_rad) out << fmt9(rad2deg(th)) << '\n';
}

std::vector<double> read_theta_profile(std::istream& in, const std::string& name) {
  std::vector<double> profile;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    std::string extra;
    if (fields >> extra) fail(name, lineno, "expected one value per line");
    profile.push_back(deg2rad(to_double(tok, name, lineno)));
  }
  return profile;
}

// --- workspace -----------------------------------------------------------

static const char kWorkspaceHeader[] =
    "grid_i,grid_j,grid_k,theta1_deg,theta2_deg,theta3_deg,x_mm,y_mm,z_mm,nx,ny,nz,"
    "area_mm2";

void write_workspace(std::ostream& out, const std::vector<WorkspaceNode>& nodes) {
  out << kWorkspaceHeader << '\n';
  for (const WorkspaceNode& n : nodes) {
    out << n.grid_index[0] << ',' << n.grid_index[1] << ',' << n.grid_index[2] << ','
        << fmt9(rad2deg(n.joints.theta[0])) << ',' << fmt9(rad2deg(n.joints.theta[1]))
        << ',' << fmt9(rad2deg(n.joints.theta[2])) << ',' << fmt9(n.position.x) << ','
        << fmt9(n.position.y) << ',' << fmt9(n.position.z) << ',' << fmt9(n.normal.x)
        << ',' << fmt9(n.normal.y) << ',' << fmt9(n.normal.z) << ',' << fmt9(n.area_p)
        << '\n';
  }
}

std::vector<WorkspaceNode> read_workspace(std::istream& in, const std::string& name) {
  CsvReader csv{in, name};
  csv.expect_header(kWorkspaceHeader);
  std::vector<WorkspaceNode> nodes;
  std::vector<std::string> f;
  while (csv.next_row(f, 13)) {
    WorkspaceNode n;
    for (int a = 0; a < 3; ++a) n.grid_index[a] = to_int(f[a], name, csv.lineno);
    for (int a = 0; a < 3; ++a)
      n.joints.theta[a] = deg2rad(to_double(f[3 + a], name, csv.lineno));
    n.position = {to_double(f[6], name, csv.lineno), to_double(f[7], name, csv.lineno),
                  to_double(f[8], name, csv.lineno)};
    n.normal = {to_double(f[9], name, csv.lineno), to_double(f[10], name, csv.lineno),
                to_double(f[11], name, csv.lineno)};
    n.area_p = to_double(f[12], name, csv.lineno);
    nodes.push_back(n);
  }
  return nodes;
}

// --- gait plan -----------------------------------------------------------

PlanStrokeRecord make_stroke_record(const std::string& stroke, const GaitPath& path,
                                    const SearchStats& stats) {
  PlanStrokeRecord rec;
  rec.stroke = stroke;
  rec.nodes.reserve(path.nodes.size());
  for (const WorkspaceNode& n : path.nodes) {
    PlanNodeRecord pn;
    pn.grid_index = n.grid_index;
    pn.joints = n.joints;
    pn.position = n.position;
    pn.area_p = n.area_p;
    rec.nodes.push_back(pn);
  }
  rec.edge_strengths = path.edge_strengths;
  rec.total_thrust = path.total_thrust;
  rec.total_drag = path.total_drag;
  rec.nodes_expanded = stats.expanded;
  rec.path_length = static_cast<int>(path.nodes.size());
  return rec;
}

namespace {

void write_stroke(std::ostream& out, const PlanStrokeRecord& rec) {
  out << "stroke " << rec.stroke << '\n';
  out << "nodes " << rec.nodes.size() << '\n';
  out << "# step grid_i grid_j grid_k theta1_deg theta2_deg theta3_deg x_mm y_mm z_mm "
         "area_mm2\n";
  for (std::size_t i = 0; i < rec.nodes.size(); ++i) {
    const PlanNodeRecord& n = rec.nodes[i];
    out << i << ' ' << n.grid_index[0] << ' ' << n.grid_index[1] << ' '
        << n.grid_index[2] << ' ' << fmt9(rad2deg(n.joints.theta[0])) << ' '
        << fmt9(rad2deg(n.joints.theta[1])) << ' ' << fmt9(rad2deg(n.joints.theta[2]))
        << ' ' << fmt9(n.position.x) << ' ' << fmt9(n.position.y) << ' '
        << fmt9(n.position.z) << ' ' << fmt9(n.area_p) << '\n';
  }
  out << "edges " << rec.edge_strengths.size() << '\n';
  out << "# step strength\n";
  for (std::size_t i = 0; i < rec.edge_strengths.size(); ++i)
    out << i << ' ' << fmt9(rec.edge_strengths[i]) << '\n';
  out << "total_thrust " << fmt9(rec.total_thrust) << '\n';
  out << "total_drag " << fmt9(rec.total_drag) << '\n';
  out << "nodes_expanded " << rec.nodes_expanded << '\n';
  out << "path_length " << rec.path_length << '\n';
}

PlanStrokeRecord read_stroke(LineReader& lines) {
  PlanStrokeRecord rec;
  auto toks = lines.require("'stroke <name>'");
  if (toks.size() != 2 || toks[0] != "stroke")
    fail(lines.name, lines.lineno, "expected 'stroke <name>'");
  rec.stroke = toks[1];

  toks = lines.require("'nodes <count>'");
  if (toks.size() != 2 || toks[0] != "nodes")
    fail(lines.name, lines.lineno, "expected 'nodes <count>'");
  const int n_nodes = to_int(toks[1], lines.name, lines.lineno);

  for (int i = 0; i < n_nodes; ++i) {
    toks = lines.require("a node row");
    if (toks.size() != 11) fail(lines.name, lines.lineno, "node row needs 11 fields");
    if (to_int(toks[0], lines.name, lines.lineno) != i)
      fail(lines.name, lines.lineno, "node rows out of order");
    PlanNodeRecord pn;
    for (int a = 0; a < 3; ++a)
      pn.grid_index[a] = to_int(toks[1 + a], lines.name, lines.lineno);
    for (int a = 0; a < 3; ++a)
      pn.joints.theta[a] = deg2rad(to_double(toks[4 + a], lines.name, lines.lineno));
    pn.position = {to_double(toks[7], lines.name, lines.lineno),
                   to_double(toks[8], lines.name, lines.lineno),
                   to_double(toks[9], lines.name, lines.lineno)};
    pn.area_p = to_double(toks[10], lines.name, lines.lineno);
    rec.nodes.push_back(pn);
  }

  toks = lines.require("'edges <count>'");
  if (toks.size() != 2 || toks[0] != "edges")
    fail(lines.name, lines.lineno, "expected 'edges <count>'");
  const int n_edges = to_int(toks[1], lines.name, lines.lineno);
  for (int i = 0; i < n_edges; ++i) {
    toks = lines.require("an edge row");
    if (toks.size() != 2) fail(lines.name, lines.lineno, "edge row needs 2 fields");
    if (to_int(toks[0], lines.name, lines.lineno) != i)
      fail(lines.name, lines.lineno, "edge rows out of order");
    rec.edge_strengths.push_back(to_double(toks[1], lines.name, lines.lineno));
  }

  auto scalar = [&](const char* key) -> std::string {
    auto t = lines.require(std::string("'") + key + " <value>'");
    if (t.size() != 2 || t[0] != key)
      fail(lines.name, lines.lineno, std::string("expected '") + key + " <value>'");
    return t[1];
  };
  rec.total_thrust = to_double(scalar("total_thrust"), lines.name, lines.lineno);
  rec.total_drag = to_double(scalar("total_drag"), lines.name, lines.lineno);
  rec.nodes_expanded = to_int(scalar("nodes_expanded"), lines.name, lines.lineno);
  rec.path_length = to_int(scalar("path_length"), lines.name, lines.lineno);
  return rec;
}

}  // namespace

void write_plan(std::ostream& out, const PlanDocument& doc) {
  out << "# gait plan\n";
  write_stroke(out, doc.thrust);
  out << '\n';
  write_stroke(out, doc.drag);
}

PlanDocument read_plan(std::istream& in, const std::string& name) {
  LineReader lines{in, name};
  PlanDocument doc;
  doc.thrust = read_stroke(lines);
  doc.drag = read_stroke(lines);
  if (doc.thrust.stroke != "thrust")
    fail(name, lines.lineno, "first section must be the thrust stroke");
  if (doc.drag.stroke != "drag")
    fail(name, lines.lineno, "second section must be the drag stroke");
  return doc;
}

// --- stroke profile ------------------------------------------------------

void write_stroke_profile(std::ostream& out, const std::vector<ProfileRow>& rows) {
  out << "stroke,step,y_mm,area_mm2,thrust_force_N\n";
  for (const ProfileRow& r : rows)
    out << r.stroke << ',' << r.step << ',' << fmt9(r.y_mm) << ',' << fmt9(r.area_mm2)
        << ',' << fmt9(r.thrust_force_n) << '\n';
}

std::vector<ProfileRow> read_stroke_profile(std::istream& in, const std::string& name) {
  CsvReader csv{in, name};
  csv.expect_header("stroke,step,y_mm,area_mm2,thrust_force_N");
  std::vector<ProfileRow> rows;
  std::vector<std::string> f;
  while (csv.next_row(f, 5)) {
    ProfileRow r;
    r.stroke = f[0];
    r.step = to_int(f[1], name, csv.lineno);
    r.y_mm = to_double(f[2], name, csv.lineno);
    r.area_mm2 = to_double(f[3], name, csv.lineno);
    r.thrust_force_n = to_double(f[4], name, csv.lineno);
    rows.push_back(r);
  }
  return rows;
}

// --- joint series --------------------------------------------------------

void write_joint_series(std::ostream& out, const std::vector<JointRow>& rows) {
  out << "stroke,step,theta1_deg,theta2_deg,theta3_deg\n";
  for (const JointRow& r : rows)
    out << r.stroke << ',' << r.step << ',' << fmt9(rad2deg(r.joints.theta[0])) << ','
        << fmt9(rad2deg(r.joints.theta[1])) << ',' << fmt9(rad2deg(r.joints.theta[2]))
        << '\n';
}

std::vector<JointRow> read_joint_series(std::istream& in, const std::string& name) {
  CsvReader csv{in, name};
  csv.expect_header("stroke,step,theta1_deg,theta2_deg,theta3_deg");
  std::vector<JointRow> rows;
  std::vector<std::string> f;
  while (csv.next_row(f, 5)) {
    JointRow r;
    r.stroke = f[0];
    r.step = to_int(f[1], name, csv.lineno);
    for (int a = 0; a < 3; ++a)
      r.joints.theta[a] = deg2rad(to_double(f[2 + a], name, csv.lineno));
    rows.push_back(r);
  }
  return rows;
}

// --- swim trace ----------------------------------------------------------

void write_swim_trace(std::ostream& out, const std::vector<SwimTraceRow>& rows) {
  out << "cycle,step,stroke,theta1_deg,theta2_deg,theta3_deg,x_mm,y_mm,z_mm\n";
  for (const SwimTraceRow& r : rows)
    out << r.cycle << ',' << r.step << ',' << r.stroke << ','
        << fmt9(rad2deg(r.joints.theta[0])) << ',' << fmt9(rad2deg(r.joints.theta[1]))
        << ',' << fmt9(rad2deg(r.joints.theta[2])) << ',' << fmt9(r.position.x) << ','
        << fmt9(r.position.y) << ',' << fmt9(r.position.z) << '\n';
}

std::vector<SwimTraceRow> read_swim_trace(std::istream& in, const std::string& name) {
  CsvReader csv{in, name};
  csv.expect_header("cycle,step,stroke,theta1_deg,theta2_deg,theta3_deg,x_mm,y_mm,z_mm");
  std::vector<SwimTraceRow> rows;
  std::vector<std::string> f;
  while (csv.next_row(f, 9)) {
    SwimTraceRow r;
    r.cycle = to_int(f[0], name, csv.lineno);
    r.step = to_int(f[1], name, csv.lineno);
    r.stroke = f[2];
    for (int a = 0; a < 3; ++a)
      r.joints.theta[a] = deg2rad(to_double(f[3 + a], name, csv.lineno));
    r.position = {to_double(f[6], name, csv.lineno), to_double(f[7], name, csv.lineno),
                  to_double(f[8], name, csv.lineno)};
    rows.push_back(r);
  }
  return rows;
}

// --- file-level helpers --------------------------------------------------

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot create output file '" + path + "'");
  body(out);
  out.flush();
  if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

void read_file(const std::string& path, const std::function<void(std::istream&)>& body) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  body(in);
}

}  // namespace oriloco

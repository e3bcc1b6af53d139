#include "oriloco/dh.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oriloco/errors.hpp"
#include "oriloco/units.hpp"

namespace oriloco {

bool is_joint_symbol(DHSym sym) {
  switch (sym) {
    case DHSym::PairExt0:
    case DHSym::PairExt1:
    case DHSym::PairExt2:
    case DHSym::TowerH0:
    case DHSym::TowerH1:
    case DHSym::TowerH2:
    case DHSym::Twist0:
    case DHSym::Twist1:
    case DHSym::Twist2:
      return true;
    default:
      return false;
  }
}

bool is_param_symbol(DHSym sym) {
  switch (sym) {
    case DHSym::SupportLink:
    case DHSym::PaddingLink:
    case DHSym::SupportMinusHalfSide:
      return true;
    default:
      return false;
  }
}

std::string dh_symbol_token(DHSym sym) {
  switch (sym) {
    case DHSym::Lit: return "";
    case DHSym::PairExt0: return "D0";
    case DHSym::PairExt1: return "D1";
    case DHSym::PairExt2: return "D2";
    case DHSym::TowerH0: return "H0";
    case DHSym::TowerH1: return "H1";
    case DHSym::TowerH2: return "H2";
    case DHSym::Twist0: return "T0";
    case DHSym::Twist1: return "T1";
    case DHSym::Twist2: return "T2";
    case DHSym::SupportLink: return "LS";
    case DHSym::PaddingLink: return "LP";
    case DHSym::SupportMinusHalfSide: return "LS-A/2";
  }
  return "";
}

namespace {

bool is_twist_symbol(DHSym sym) {
  return sym == DHSym::Twist0 || sym == DHSym::Twist1 || sym == DHSym::Twist2;
}

}  // namespace

void validate(const DHRow& row) {
  const bool d_joint = is_joint_symbol(row.d.sym);
  const bool t_joint = is_joint_symbol(row.theta.sym);
  if (d_joint && t_joint)
    throw std::invalid_argument("dh: a row may bind at most one joint-dependent cell");
  if (row.theta.sym != DHSym::Lit && !is_twist_symbol(row.theta.sym))
    throw std::invalid_argument("dh: the theta column only accepts twist symbols");
  if (is_twist_symbol(row.d.sym))
    throw std::invalid_argument("dh: twist symbols are angles and cannot sit in d");
}

void validate(const DHTable& table) {
  if (table.size() != 6)
    throw std::invalid_argument("dh: the arm chain needs exactly 6 rows, got " +
                                std::to_string(table.size()));
  for (const DHRow& row : table) validate(row);
}

HomTransform dh_matrix(double alpha, double a, double d, double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  Mat3 r;
  r(0, 0) = ct; r(0, 1) = -ca * st; r(0, 2) = sa * st;
  r(1, 0) = st; r(1, 1) = ca * ct;  r(1, 2) = -sa * ct;
  r(2, 0) = 0.0; r(2, 1) = sa;      r(2, 2) = ca;
  return {r, {a * ct, a * st, d}};
}

HomTransform dh_transform(const DHRow& row, std::optional<double> value) {
  validate(row);
  if (is_param_symbol(row.d.sym))
    throw std::invalid_argument(
        "dh: row holds the parameter symbol " + dh_symbol_token(row.d.sym) +
        "; bind it through an arm, not dh_transform");
  const bool wants_value = is_joint_symbol(row.d.sym) || is_joint_symbol(row.theta.sym);
  if (wants_value && !value)
    throw std::invalid_argument("dh: row has a joint-dependent cell but no value was bound");
  if (!wants_value && value)
    throw std::invalid_argument("dh: row is fully constant; refusing a bound value");

  const double d = is_joint_symbol(row.d.sym) ? row.d.scale * *value : row.d.lit;
  const double theta = is_joint_symbol(row.theta.sym) ? row.theta.scale * *value : row.theta.lit;
  return dh_matrix(row.alpha, row.a, d, theta + row.offset);
}

DHTable default_dh_table() {
  auto lit = [](double v) { return DHCell::literal(v); };
  auto sym = [](DHSym s) { return DHCell::symbol(s); };
  return {
      {0.0,            0.0, sym(DHSym::PairExt0), lit(0.0),            0.0},
      {deg2rad(90.0),  0.0, lit(0.0),             sym(DHSym::Twist0),  deg2rad(180.0)},
      {deg2rad(-90.0), 0.0, sym(DHSym::PairExt1), lit(0.0),            0.0},
      {deg2rad(90.0),  0.0, lit(0.0),             sym(DHSym::Twist1),  deg2rad(90.0)},
      {0.0,            0.0, sym(DHSym::PairExt2), lit(0.0),            0.0},
      {0.0,            0.0, lit(0.0),             sym(DHSym::Twist2),  deg2rad(-80.0)},
  };
}

DHTable variant_dh_table() {
  auto lit = [](double v) { return DHCell::literal(v); };
  auto sym = [](DHSym s, double scale = 1.0) { return DHCell::symbol(s, scale); };
  return {
      {0.0,           0.0,   sym(DHSym::TowerH0),            lit(0.0),           0.0},
      {deg2rad(90.0), 0.0,   sym(DHSym::SupportLink),        sym(DHSym::Twist0), deg2rad(180.0)},
      {0.0,           -90.0, sym(DHSym::TowerH1, 0.5),       lit(0.0),           0.0},
      {deg2rad(90.0), 0.0,   sym(DHSym::SupportMinusHalfSide), sym(DHSym::Twist1), deg2rad(90.0)},
      {0.0,           0.0,   sym(DHSym::TowerH2),            lit(0.0),           0.0},
      {0.0,           0.0,   sym(DHSym::PaddingLink),        sym(DHSym::Twist2), deg2rad(-80.0)},
  };
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
  throw ConfigError(name + ":" + std::to_string(line) + ": " + what);
}

bool parse_number(const std::string& tok, double& out) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + tok.size() && !tok.empty();
}

DHCell parse_d_cell(const std::string& tok, const std::string& name, int line) {
  double v = 0.0;
  if (parse_number(tok, v)) return DHCell::literal(v);
  if (tok == "D0") return DHCell::symbol(DHSym::PairExt0);
  if (tok == "D1") return DHCell::symbol(DHSym::PairExt1);
  if (tok == "D2") return DHCell::symbol(DHSym::PairExt2);
  if (tok == "H0") return DHCell::symbol(DHSym::TowerH0);
  if (tok == "H1") return DHCell::symbol(DHSym::TowerH1);
  if (tok == "H2") return DHCell::symbol(DHSym::TowerH2);
  if (tok == "H0/2") return DHCell::symbol(DHSym::TowerH0, 0.5);
  if (tok == "H1/2") return DHCell::symbol(DHSym::TowerH1, 0.5);
  if (tok == "H2/2") return DHCell::symbol(DHSym::TowerH2, 0.5);
  if (tok == "LS") return DHCell::symbol(DHSym::SupportLink);
  if (tok == "LP") return DHCell::symbol(DHSym::PaddingLink);
  if (tok == "LS-A/2") return DHCell::symbol(DHSym::SupportMinusHalfSide);
  parse_fail(name, line, "unknown d-column token '" + tok + "'");
}

DHCell parse_theta_cell(const std::string& tok, const std::string& name, int line) {
  double v = 0.0;
  if (parse_number(tok, v)) return DHCell::literal(deg2rad(v));
  if (tok == "T0") return DHCell::symbol(DHSym::Twist0);
  if (tok == "T1") return DHCell::symbol(DHSym::Twist1);
  if (tok == "T2") return DHCell::symbol(DHSym::Twist2);
  parse_fail(name, line, "unknown theta-column token '" + tok + "'");
}

}  // namespace

DHTable parse_dh_table(std::istream& in, const std::string& name) {
  DHTable table;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 5)
      parse_fail(name, lineno,
                 "expected 5 columns (alpha_deg a_mm d theta offset_deg), got " +
                     std::to_string(toks.size()));
    DHRow row;
    double alpha_deg = 0.0, offset_deg = 0.0;
    if (!parse_number(toks[0], alpha_deg))
      parse_fail(name, lineno, "alpha_deg is not a number: '" + toks[0] + "'");
    if (!parse_number(toks[1], row.a))
      parse_fail(name, lineno, "a_mm is not a number: '" + toks[1] + "'");
    row.d = parse_d_cell(toks[2], name, lineno);
    row.theta = parse_theta_cell(toks[3], name, lineno);
    if (!parse_number(toks[4], offset_deg))
      parse_fail(name, lineno, "offset_deg is not a number: '" + toks[4] + "'");
    row.alpha = deg2rad(alpha_deg);
    row.offset = deg2rad(offset_deg);
    try {
      validate(row);
    } catch (const std::invalid_argument& e) {
      parse_fail(name, lineno, e.what());
    }
    table.push_back(row);
  }
  return table;
}

DHTable load_dh_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("dh table: cannot open '" + path + "'");
  return parse_dh_table(in, path);
}

namespace {

std::string cell_text(const DHCell& cell, bool angle) {
  char buf[40];
  if (cell.sym == DHSym::Lit) {
    std::snprintf(buf, sizeof buf, "%.9g", angle ? rad2deg(cell.lit) : cell.lit);
    return buf;
  }
  std::string tok = dh_symbol_token(cell.sym);
  if (cell.scale == 0.5) tok += "/2";
  return tok;
}

}  // namespace

void write_dh_table(std::ostream& out, const DHTable& table) {
  out << "# alpha_deg  a_mm  d_mm  theta_deg  offset_deg\n";
  char buf[40];
  for (const DHRow& row : table) {
    std::snprintf(buf, sizeof buf, "%.9g", rad2deg(row.alpha));
    out << buf << "  ";
    std::snprintf(buf, sizeof buf, "%.9g", row.a);
    out << buf << "  " << cell_text(row.d, false) << "  " << cell_text(row.theta, true)
        << "  ";
    std::snprintf(buf, sizeof buf, "%.9g", rad2deg(row.offset));
    out << buf << "\n";
  }
}

}  // namespace oriloco

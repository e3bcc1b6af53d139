#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oriloco/transform.hpp"

/// \file
/// \brief Denavit-Hartenberg rows with symbolic cells, plus table I/O.
///
/// The arm's kinematic chain is described by a six-row DH table.  Because
/// each twist joint drags a prismatic extension along with it, the d and
/// theta columns may hold symbols that are resolved from the arm's coupled
/// joint values at evaluation time, instead of plain numbers.  Keeping the
/// table data-driven lets alternate transcriptions of the chain be loaded
/// from disk and cross-checked against each other.

namespace oriloco {

/// What a symbolic cell stands for.  Joint-dependent symbols resolve from
/// the current joint state; parameter symbols resolve from fixed arm
/// dimensions and may share a row with a joint-dependent theta.
enum class DHSym : std::uint8_t {
  Lit,               ///< plain number, no symbol
  PairExt0,          ///< total prismatic extension of pair 1 (tower height + link)
  PairExt1,          ///< ... pair 2
  PairExt2,          ///< ... pair 3
  TowerH0,           ///< bare tower height of pair 1
  TowerH1,           ///< ... pair 2
  TowerH2,           ///< ... pair 3
  Twist0,            ///< total twist angle of pair 1
  Twist1,            ///< ... pair 2
  Twist2,            ///< ... pair 3
  SupportLink,       ///< supporting-link length
  PaddingLink,       ///< padding-link length
  SupportMinusHalfSide,  ///< supporting-link length minus half the tower side
};

bool is_joint_symbol(DHSym sym);
bool is_param_symbol(DHSym sym);

/// File token for a symbol (e.g. "D0", "H1", "T2", "LS"); empty for Lit.
std::string dh_symbol_token(DHSym sym);

/// One table cell: either a literal or scale * symbol-value.
struct DHCell {
  DHSym sym = DHSym::Lit;
  double lit = 0.0;    ///< literal value (mm or rad) when sym == Lit
  double scale = 1.0;  ///< multiplier applied to a resolved symbol value

  static DHCell literal(double v) { return {DHSym::Lit, v, 1.0}; }
  static DHCell symbol(DHSym s, double scale = 1.0) { return {s, 0.0, scale}; }
};

/// One DH row.  The transform it denotes is
///
///   [ cos t   -cos(alpha) sin t    sin(alpha) sin t   a cos t ]
///   [ sin t    cos(alpha) cos t   -sin(alpha) cos t   a sin t ]
///   [ 0        sin(alpha)          cos(alpha)         d       ]
///
/// with t = theta + offset.  The offset participates in every evaluation,
/// whether theta came from a literal or a bound joint value.
struct DHRow {
  double alpha = 0.0;   ///< link twist, rad
  double a = 0.0;       ///< link length, mm
  DHCell d;             ///< link offset, mm
  DHCell theta;         ///< joint angle contribution, rad
  double offset = 0.0;  ///< constant added to theta, rad
};

using DHTable = std::vector<DHRow>;

/// Throws std::invalid_argument if both d and theta are joint-dependent,
/// or a parameter symbol sits in the theta column / a twist symbol in d.
void validate(const DHRow& row);

/// Row-wise validation for a whole table.
void validate(const DHTable& table);

/// Evaluate the row matrix from four resolved scalars.
HomTransform dh_matrix(double alpha, double a, double d, double theta);

/// Evaluate one row, binding its joint-dependent cell (if any) to `value`.
/// Throws std::invalid_argument when a value is supplied to a fully
/// constant row, when a joint-dependent row gets none, or when the row
/// holds a parameter symbol (those only resolve through an arm).
HomTransform dh_transform(const DHRow& row, std::optional<double> value = std::nullopt);

/// Built-in table for the three coupled twist/extension pairs: each pair
/// contributes a prismatic row (d = D_i) and a twist row carrying the
/// mounting offsets 180, 90, -80 degrees.
DHTable default_dh_table();

/// Alternate transcription of the same chain that separates tower heights
/// from link lengths (and splits the middle tower in half).  Kept for
/// cross-checking; it is not numerically identical to the default table.
DHTable variant_dh_table();

/// Parse a whitespace-separated table: one row per line, columns
/// alpha_deg, a_mm, d_mm, theta_deg, offset_deg.  '#' starts a comment.
/// The d column accepts D0..D2, H0..H2, H0/2..H2/2, LS, LP, LS-A/2; the
/// theta column accepts T0..T2.  Angles are converted to radians on load.
/// Throws ConfigError with <name>:<line> context on malformed input.
DHTable parse_dh_table(std::istream& in, const std::string& name = "<dh>");

/// parse_dh_table over a file; throws ConfigError if unreadable.
DHTable load_dh_table(const std::string& path);

/// Serialize in the format parse_dh_table accepts (degrees restored).
void write_dh_table(std::ostream& out, const DHTable& table);

}  // namespace oriloco

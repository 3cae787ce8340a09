#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symsep {

inline constexpr const char* kToolVersion = "0.1.0";

struct GridPoint {
  double x, y, value;
};

/// Tabulated scan of a scalar field over a 2-parameter slice, plus an
/// optional boundary-curve series, for figure reproduction.
struct GridResult {
  std::string axis_x, axis_y;
  std::vector<GridPoint> grid;
  std::vector<GridPoint> boundary;
  int resolution = 0;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
};

/// CSV with a metadata comment line, a header (series + axis names + value),
/// and one row per point. Numbers use 17 significant digits, '.' separator,
/// '\n' line endings; emit(parse(emit(g))) is byte-identical to emit(g).
std::string grid_to_csv(const GridResult& g);
GridResult grid_from_csv(const std::string& csv);

/// Maximal SU(3)-orbit negativity over the (tau3, tau2) eigenvalue simplex;
/// boundary series is the SAS border sqrt(tau2) + sqrt(tau3) = 1.
GridResult fig1_grid(int resolution);

/// Same field over the (tau3, r) wedge, tau2 recovered from the radius
/// relation; boundary series is the SAS border in these coordinates.
GridResult fig2_grid(int resolution);

/// Three-qubit not-SAS indicator over the (tau3, tau4) projection of the
/// sorted simplex (1 where some admissible tau2 meets the condition);
/// boundary series carries the boundary-spectrum radius.
GridResult fig3_grid(int resolution);

}  // namespace symsep

#include "symsep/grid.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "symsep/three_qubit.hpp"
#include "symsep/two_qubit.hpp"

namespace symsep {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double linpoint(double lo, double hi, int i, int n) {
  if (n == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
}

}  // namespace

std::string grid_to_csv(const GridResult& g) {
  std::string out;
  out += "# resolution=" + std::to_string(g.resolution) +
         " seed=" + std::to_string(g.seed) + " version=" + g.tool_version + "\n";
  out += "series," + g.axis_x + "," + g.axis_y + ",value\n";
  for (const auto& p : g.grid) {
    out += "grid," + fmt(p.x) + "," + fmt(p.y) + "," + fmt(p.value) + "\n";
  }
  for (const auto& p : g.boundary) {
    out += "boundary," + fmt(p.x) + "," + fmt(p.y) + "," + fmt(p.value) + "\n";
  }
  return out;
}

GridResult grid_from_csv(const std::string& csv) {
  GridResult g;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw std::invalid_argument("grid_from_csv: missing metadata line");
  }
  if (std::sscanf(line.c_str(), "# resolution=%d seed=%llu", &g.resolution,
                  reinterpret_cast<unsigned long long*>(&g.seed)) != 2) {
    throw std::invalid_argument("grid_from_csv: bad metadata line");
  }
  const auto vpos = line.find("version=");
  if (vpos == std::string::npos) {
    throw std::invalid_argument("grid_from_csv: missing version");
  }
  g.tool_version = line.substr(vpos + 8);

  if (!std::getline(in, line)) {
    throw std::invalid_argument("grid_from_csv: missing header");
  }
  std::istringstream hdr(line);
  std::string series_col;
  std::getline(hdr, series_col, ',');
  std::getline(hdr, g.axis_x, ',');
  std::getline(hdr, g.axis_y, ',');

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string series, xs, ys, vs;
    std::getline(row, series, ',');
    std::getline(row, xs, ',');
    std::getline(row, ys, ',');
    std::getline(row, vs, ',');
    const GridPoint p{std::stod(xs), std::stod(ys), std::stod(vs)};
    if (series == "grid") {
      g.grid.push_back(p);
    } else if (series == "boundary") {
      g.boundary.push_back(p);
    } else {
      throw std::invalid_argument("grid_from_csv: unknown series " + series);
    }
  }
  return g;
}

GridResult fig1_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("fig1_grid: resolution >= 2");
  GridResult g;
  g.axis_x = "tau3";
  g.axis_y = "tau2";
  g.resolution = resolution;
  for (int i = 0; i < resolution; ++i) {
    const double t3 = linpoint(0.0, 1.0 / 3.0, i, resolution);
    for (int j = 0; j < resolution; ++j) {
      const double t2 = linpoint(t3, (1.0 - t3) / 2.0, j, resolution);
      const Spectrum3 s(1.0 - t2 - t3, t2, t3);
      g.grid.push_back({t3, t2, max_negativity_su3(s)});
    }
  }
  for (int i = 0; i < resolution; ++i) {
    const double t3 = linpoint(1.0 / 9.0, 0.25, i, resolution);
    const double t2 = (1.0 - std::sqrt(t3)) * (1.0 - std::sqrt(t3));
    const Spectrum3 s(1.0 - t2 - t3, t2, t3);
    g.boundary.push_back({t3, t2, max_negativity_su3(s)});
  }
  return g;
}

GridResult fig2_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("fig2_grid: resolution >= 2");
  GridResult g;
  g.axis_x = "tau3";
  g.axis_y = "r";
  g.resolution = resolution;
  for (int i = 0; i < resolution; ++i) {
    const double t3 = linpoint(0.0, 1.0 / 3.0, i, resolution);
    const double r_lo = (1.0 - 3.0 * t3) / std::sqrt(6.0);
    const double r_hi = std::sqrt(2.0 / 3.0) * (1.0 - 3.0 * t3);
    for (int j = 0; j < resolution; ++j) {
      const double r = linpoint(r_lo, r_hi, j, resolution);
      // Invert r^2 = 2/3 + 2 (t2^2 + t3^2 + t2 t3 - t2 - t3) for tau2; the
      // root respecting the eigenvalue sorting is the smaller one except at
      // the wedge's lower edge where both coincide. The discriminant is
      // written as 2 r^2 - (1 - 3 t3)^2 / 3, which avoids the cancellation
      // the expanded form suffers near t3 = 1/3.
      const double d = 1.0 - 3.0 * t3;
      double disc = 2.0 * r * r - d * d / 3.0;
      if (disc < 0.0) disc = 0.0;  // only rounding can push it below zero
      const double sq = std::sqrt(disc);
      double t2 = ((1.0 - t3) - sq) / 2.0;
      if (t2 < t3 - 1e-9) t2 = ((1.0 - t3) + sq) / 2.0;
      const Spectrum3 s(1.0 - t2 - t3, t2, t3);
      g.grid.push_back({t3, r, max_negativity_su3(s)});
    }
  }
  // SAS border segment inside the wedge, from the (1/9, 2/(3 sqrt(6))) end
  // point to the (1/4, 1/(2 sqrt(6))) one.
  for (int i = 0; i < resolution; ++i) {
    const double t3 = linpoint(1.0 / 9.0, 0.25, i, resolution);
    const double r = sas_boundary_r(t3);
    const double t2 = (1.0 - std::sqrt(t3)) * (1.0 - std::sqrt(t3));
    const Spectrum3 s(1.0 - t2 - t3, t2, t3);
    g.boundary.push_back({t3, r, max_negativity_su3(s)});
  }
  return g;
}

GridResult fig3_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("fig3_grid: resolution >= 2");
  GridResult g;
  g.axis_x = "tau3";
  g.axis_y = "tau4";
  g.resolution = resolution;
  for (int i = 0; i < resolution; ++i) {
    const double t3 = linpoint(0.0, 1.0 / 3.0, i, resolution);
    const double t4_max = std::min(t3, 1.0 - 3.0 * t3);
    for (int j = 0; j < resolution; ++j) {
      const double t4 = linpoint(0.0, t4_max, j, resolution);
      // 1 when some admissible tau2 (the smallest, tau2 = tau3, is the most
      // favorable) meets the not-SAS condition.
      const bool hit =
          t3 > 0.0 && t3 < 1.0 - t3 - t4 - std::sqrt(3.0 * t3 * t4);
      g.grid.push_back({t3, t4, hit ? 1.0 : 0.0});
    }
  }
  for (int i = 0; i < resolution; ++i) {
    const double t3 = linpoint(0.0, 1.0 / 3.0, i, resolution);
    for (int j = 0; j < resolution; ++j) {
      const double t4 = linpoint(0.0, t3, j, resolution);
      try {
        g.boundary.push_back({t3, t4, r_obs1_boundary(t3, t4)});
      } catch (const std::domain_error&) {
        // outside the valid boundary region
      }
    }
  }
  return g;
}

}  // namespace symsep

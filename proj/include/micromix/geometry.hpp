#pragma once

// Parametric channel networks (split-and-recombine reactor, slanted-groove
// micromixer, plain duct) and their voxelization onto a uniform Cartesian
// grid. Axes: x lateral, y streamwise, z height. Station y = 0 is the first
// confluence plane.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "micromix/errors.hpp"
#include "micromix/field3.hpp"
#include "micromix/units.hpp"

namespace micromix {

enum class DeviceKind { SNR, SGM, PLAIN };
enum class StackAxis { Vertical, Lateral };

inline std::string to_string(DeviceKind k) {
  switch (k) {
    case DeviceKind::SNR: return "snr";
    case DeviceKind::SGM: return "sgm";
    default: return "plain";
  }
}

struct UnitParams {
  double unit_pitch_um = 610.0;
  double channel_width_um = 100.0;
  double channel_height_um = 100.0;
  double branch_width_um = 100.0;    // SNR split branches
  double overlap_length_um = 150.0;  // SNR confluence segment
  double groove_depth_ratio = 0.3;   // SGM, fraction of channel height
  double groove_angle_deg = 45.0;    // SGM, angle of groove lines to x axis
  double groove_pitch_um = 120.0;    // SGM, streamwise spacing of grooves
  StackAxis stack_axis = StackAxis::Vertical;
};

// Axis-aligned fluid volume, half-open in spirit but queried with a small
// symmetric tolerance so cell centers landing exactly on faces are handled
// the same way on both sides of a mirror plane.
struct Box {
  double x0, x1, y0, y1, z0, z1;

  bool contains(double x, double y, double z, double eps) const {
    return x >= x0 - eps && x <= x1 + eps && y >= y0 - eps && y <= y1 + eps &&
           z >= z0 - eps && z <= z1 + eps;
  }
  double volume() const { return (x1 - x0) * (y1 - y0) * (z1 - z0); }
};

// Slanted floor grooves: stripes of lowered floor. A groove line through
// (x, y) satisfies y - x*tan(angle) = const; a stripe is one period band of
// that phase. groove_pitch is measured along the channel axis.
struct GrooveSet {
  double tan_angle = 1.0;
  double pitch_um = 120.0;
  double width_um = 60.0;  // streamwise width of a stripe (pitch / 2)
  double depth_um = 30.0;
  double x0_um = -50.0, x1_um = 50.0;  // channel floor extent
  double y_start_um = 60.0, y_end_um = 7140.0;
  double phase0_um = 60.0;

  bool in_stripe(double x, double y) const {
    if (y < y_start_um || y >= y_end_um) return false;
    if (x < x0_um || x > x1_um) return false;
    const double phase = y - x * tan_angle - phase0_um;
    double m = std::fmod(phase, pitch_um);
    if (m < 0.0) m += pitch_um;
    return m < width_um;
  }

  // Exact area of all stripes clipped to the floor rectangle. The streamwise
  // extent of a stripe at fixed x is piecewise linear in x, so trapezoid
  // integration between breakpoints is exact.
  double clipped_area_um2() const {
    const double w = x1_um - x0_um;
    if (w <= 0.0 || y_end_um <= y_start_um) return 0.0;
    const double slack = std::abs(tan_angle) * w + pitch_um;
    const long k_lo = static_cast<long>(
        std::floor((y_start_um - slack - phase0_um) / pitch_um)) - 1;
    const long k_hi = static_cast<long>(
        std::ceil((y_end_um + slack - phase0_um) / pitch_um)) + 1;
    double total = 0.0;
    for (long k = k_lo; k <= k_hi; ++k) {
      const double base = phase0_um + k * pitch_um;
      // stripe band: y in [base + x*tan, base + width + x*tan)
      auto len = [&](double x) {
        const double lo = std::max(y_start_um, base + x * tan_angle);
        const double hi = std::min(y_end_um, base + width_um + x * tan_angle);
        return std::max(0.0, hi - lo);
      };
      // breakpoints where the clipping changes regime
      std::vector<double> xs = {x0_um, x1_um};
      if (tan_angle != 0.0) {
        for (double yb : {y_start_um, y_end_um}) {
          for (double off : {0.0, width_um}) {
            const double xb = (yb - base - off) / tan_angle;
            if (xb > x0_um && xb < x1_um) xs.push_back(xb);
          }
        }
      }
      std::sort(xs.begin(), xs.end());
      for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
        const double a = xs[s], b = xs[s + 1];
        total += 0.5 * (len(a) + len(b)) * (b - a);
      }
    }
    return total;
  }

  double volume_um3() const { return clipped_area_um2() * depth_um; }
};

struct ChannelNetwork {
  DeviceKind kind = DeviceKind::PLAIN;
  UnitParams unit;
  int unit_count = 1;
  int inlet_count = 2;  // fixed
  double total_length_um = 0.0;
  double lead_in_um = 0.0;  // y extent before the first confluence

  std::vector<Box> boxes;
  std::optional<GrooveSet> grooves;

  // Axis along which the two feed streams abut at the inlet plane.
  StackAxis inlet_split_axis = StackAxis::Lateral;

  // Bounding extents (y runs from -lead_in to total_length - lead_in).
  double xmin_um = 0, xmax_um = 0, zmin_um = 0, zmax_um = 0;
  double ymin_um = 0, ymax_um = 0;

  bool contains(double x, double y, double z, double eps) const {
    for (const Box& b : boxes)
      if (b.contains(x, y, z, eps)) return true;
    if (grooves && z < 0.0 && z >= -grooves->depth_um && grooves->in_stripe(x, y))
      return true;
    return false;
  }

  double analytic_volume_um3() const {
    double v = 0.0;
    for (const Box& b : boxes) v += b.volume();
    if (grooves) v += grooves->volume_um3();
    return v;
  }
};

namespace detail {

inline void require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) throw ValidationError("invalid UnitParams: " + field + " " + why);
}

inline void validate_common(const UnitParams& p) {
  require(p.channel_width_um > 0.0, "channel_width_um", "must be > 0");
  require(p.channel_height_um > 0.0, "channel_height_um", "must be > 0");
  require(p.unit_pitch_um > 0.0, "unit_pitch_um", "must be > 0");
}

inline void validate_snr(const UnitParams& p) {
  validate_common(p);
  require(p.branch_width_um > 0.0, "branch_width_um", "must be > 0");
  require(p.branch_width_um <= p.channel_width_um, "branch_width_um",
          "must be <= channel_width_um");
  require(p.overlap_length_um > 0.0, "overlap_length_um", "must be > 0");
  require(p.overlap_length_um < p.unit_pitch_um, "overlap_length_um",
          "must be < unit_pitch_um");
}

inline void validate_sgm(const UnitParams& p) {
  validate_common(p);
  require(p.groove_depth_ratio > 0.0 && p.groove_depth_ratio <= 0.8,
          "groove_depth_ratio", "must be in (0, 0.8]");
  require(p.groove_angle_deg > 0.0 && p.groove_angle_deg < 90.0,
          "groove_angle_deg", "must be in (0, 90)");
  require(p.groove_pitch_um > 0.0, "groove_pitch_um", "must be > 0");
}

}  // namespace detail

// Split-and-recombine reactor. Each unit: a confluence segment (full
// cross-section), an in-plane split into two branches separated by a solid
// divider, a restack segment where each branch takes one half of the section
// along stack_axis, and a recombined segment up to the next confluence.
inline ChannelNetwork build_snr_network(const UnitParams& p, int units,
                                        bool lead_io = false) {
  detail::validate_snr(p);
  if (units < 1) throw ValidationError("build_snr_network: units must be >= 1");

  const double w = p.channel_width_um;
  const double h = p.channel_height_um;
  const double b = p.branch_width_um;
  const double pitch = p.unit_pitch_um;
  const double split = pitch - p.overlap_length_um;
  const double l_div = 0.25 * split;
  const double l_shift = 0.25 * split;
  const double gap = w / 5.0;  // solid divider between the branches

  ChannelNetwork net;
  net.kind = DeviceKind::SNR;
  net.unit = p;
  net.unit_count = units;
  net.inlet_split_axis = p.stack_axis;
  net.lead_in_um = lead_io ? pitch : 0.0;
  net.total_length_um = units * pitch + (lead_io ? 2.0 * pitch : 0.0);

  const double xw = 0.5 * w;
  const Box lwin{-(0.5 * gap + b), -0.5 * gap, 0, 0, 0, 0};
  const Box rwin{0.5 * gap, 0.5 * gap + b, 0, 0, 0, 0};

  if (lead_io)
    net.boxes.push_back({-xw, xw, -pitch, 0.0, 0.0, h});

  for (int u = 0; u < units; ++u) {
    const double y0 = u * pitch;
    const double y_div = y0 + p.overlap_length_um;
    const double y_shift = y_div + l_div;
    const double y_rec = y_shift + l_shift;
    const double y1 = y0 + pitch;

    net.boxes.push_back({-xw, xw, y0, y_div, 0.0, h});
    net.boxes.push_back({lwin.x0, lwin.x1, y_div, y_shift, 0.0, h});
    net.boxes.push_back({rwin.x0, rwin.x1, y_div, y_shift, 0.0, h});
    if (p.stack_axis == StackAxis::Vertical) {
      net.boxes.push_back({lwin.x0, lwin.x1, y_shift, y_rec, 0.0, 0.5 * h});
      net.boxes.push_back({rwin.x0, rwin.x1, y_shift, y_rec, 0.5 * h, h});
    } else {
      net.boxes.push_back({-xw, 0.0, y_shift, y_rec, 0.0, h});
      net.boxes.push_back({0.0, xw, y_shift, y_rec, 0.0, h});
    }
    net.boxes.push_back({-xw, xw, y_rec, y1, 0.0, h});
  }

  if (lead_io) {
    const double yl = units * pitch;
    net.boxes.push_back({-xw, xw, yl, yl + pitch, 0.0, h});
  }

  net.xmin_um = lwin.x0;
  net.xmax_um = rwin.x1;
  net.zmin_um = 0.0;
  net.zmax_um = h;
  net.ymin_um = -net.lead_in_um;
  net.ymax_um = net.total_length_um - net.lead_in_um;
  return net;
}

// Slanted-groove micromixer: straight channel with groove stripes recessed
// into the floor. The ceiling stays flat; grooves never reach it.
inline ChannelNetwork build_sgm_network(const UnitParams& p, int units) {
  detail::validate_sgm(p);
  if (units < 1) throw ValidationError("build_sgm_network: units must be >= 1");

  const double w = p.channel_width_um;
  const double h = p.channel_height_um;
  const double length = units * p.unit_pitch_um;

  ChannelNetwork net;
  net.kind = DeviceKind::SGM;
  net.unit = p;
  net.unit_count = units;
  net.inlet_split_axis = StackAxis::Lateral;
  net.total_length_um = length;
  net.boxes.push_back({-0.5 * w, 0.5 * w, 0.0, length, 0.0, h});

  GrooveSet g;
  g.tan_angle = std::tan(p.groove_angle_deg * std::numbers::pi / 180.0);
  g.pitch_um = p.groove_pitch_um;
  g.width_um = 0.5 * p.groove_pitch_um;
  g.depth_um = p.groove_depth_ratio * h;
  g.x0_um = -0.5 * w;
  g.x1_um = 0.5 * w;
  g.y_start_um = 0.5 * p.groove_pitch_um;
  g.y_end_um = length - 0.5 * p.groove_pitch_um;
  g.phase0_um = g.y_start_um;
  net.grooves = g;

  net.xmin_um = -0.5 * w;
  net.xmax_um = 0.5 * w;
  net.zmin_um = -g.depth_um;
  net.zmax_um = h;
  net.ymin_um = 0.0;
  net.ymax_um = length;
  return net;
}

// Two feeds merging into one straight rectangular duct.
inline ChannelNetwork build_plain_network(const UnitParams& p, double length_um) {
  detail::validate_common(p);
  if (length_um <= 0.0)
    throw ValidationError("build_plain_network: length must be > 0");

  ChannelNetwork net;
  net.kind = DeviceKind::PLAIN;
  net.unit = p;
  net.unit_count = 1;
  net.inlet_split_axis = StackAxis::Lateral;
  net.total_length_um = length_um;
  const double w = p.channel_width_um, h = p.channel_height_um;
  net.boxes.push_back({-0.5 * w, 0.5 * w, 0.0, length_um, 0.0, h});
  net.xmin_um = -0.5 * w;
  net.xmax_um = 0.5 * w;
  net.zmin_um = 0.0;
  net.zmax_um = h;
  net.ymin_um = 0.0;
  net.ymax_um = length_um;
  return net;
}

enum class CellTag : std::uint8_t {
  Solid = 0,
  Fluid = 1,
  Inlet1 = 2,
  Inlet2 = 3,
  Outlet = 4,
};

inline bool is_fluid(CellTag t) { return t != CellTag::Solid; }

struct DomainGrid {
  double spacing_um = 0.0;
  double spacing_m = 0.0;
  int nx = 0, ny = 0, nz = 0;
  // min corner of the grid (cell centers sit at origin + (i + 1/2) * spacing)
  double origin_x_um = 0.0, origin_y_um = 0.0, origin_z_um = 0.0;
  Field3<CellTag> tags;
  std::size_t fluid_cells = 0;
  std::size_t inlet1_cells = 0, inlet2_cells = 0, outlet_cells = 0;

  bool fluid(int i, int j, int k) const { return is_fluid(tags(i, j, k)); }

  double xc_um(int i) const { return origin_x_um + (i + 0.5) * spacing_um; }
  double yc_um(int j) const { return origin_y_um + (j + 0.5) * spacing_um; }
  double zc_um(int k) const { return origin_z_um + (k + 0.5) * spacing_um; }

  double cell_volume_um3() const { return spacing_um * spacing_um * spacing_um; }
  double fluid_volume_um3() const { return fluid_cells * cell_volume_um3(); }
};

inline DomainGrid voxelize(const ChannelNetwork& net, double spacing_um) {
  const double w = net.unit.channel_width_um;
  const double h = net.unit.channel_height_um;
  if (spacing_um <= 0.0) throw ValidationError("voxelize: spacing must be > 0");
  if (spacing_um > std::min(w, h) / 4.0)
    throw ValidationError(
        "voxelize: spacing too coarse; must be <= min(channel_width, "
        "channel_height)/4");
  if (net.grooves && spacing_um > 0.5 * net.grooves->width_um)
    throw ValidationError(
        "voxelize: groove_pitch too small for this spacing; grooves need at "
        "least two cells per stripe");

  DomainGrid g;
  g.spacing_um = spacing_um;
  g.spacing_m = metres_from_um(spacing_um);

  auto span_cells = [spacing_um](double lo, double hi) {
    return std::max(1, static_cast<int>(
                           std::ceil((hi - lo) / spacing_um - 1e-9)));
  };
  g.nx = span_cells(net.xmin_um, net.xmax_um);
  g.ny = span_cells(net.ymin_um, net.ymax_um);
  g.nz = span_cells(net.zmin_um, net.zmax_um);

  // Center the grid on the geometry so mirror-symmetric networks voxelize to
  // mirror-symmetric masks at any spacing.
  g.origin_x_um = 0.5 * (net.xmin_um + net.xmax_um) - 0.5 * g.nx * spacing_um;
  g.origin_y_um = 0.5 * (net.ymin_um + net.ymax_um) - 0.5 * g.ny * spacing_um;
  g.origin_z_um = 0.5 * (net.zmin_um + net.zmax_um) - 0.5 * g.nz * spacing_um;

  g.tags = Field3<CellTag>(g.nx, g.ny, g.nz, CellTag::Solid);
  const double eps = 1e-9 * std::max({w, h, net.total_length_um});

  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (net.contains(g.xc_um(i), g.yc_um(j), g.zc_um(k), eps)) {
          g.tags(i, j, k) = CellTag::Fluid;
          ++g.fluid_cells;
        }

  // Inlet plane: first streamwise row, halves split along the feed axis.
  const double zmid = 0.5 * h;  // channel mid-height (grooves sit below 0)
  for (int k = 0; k < g.nz; ++k)
    for (int i = 0; i < g.nx; ++i) {
      if (!g.fluid(i, 0, k)) continue;
      bool first;
      if (net.inlet_split_axis == StackAxis::Vertical)
        first = g.zc_um(k) >= zmid;  // stream 1 on top
      else
        first = g.xc_um(i) < 0.0;  // stream 1 on the left
      g.tags(i, 0, k) = first ? CellTag::Inlet1 : CellTag::Inlet2;
      (first ? g.inlet1_cells : g.inlet2_cells)++;
    }
  for (int k = 0; k < g.nz; ++k)
    for (int i = 0; i < g.nx; ++i)
      if (g.fluid(i, g.ny - 1, k)) {
        g.tags(i, g.ny - 1, k) = CellTag::Outlet;
        ++g.outlet_cells;
      }

  if (g.inlet1_cells == 0 || g.inlet2_cells == 0)
    throw ValidationError("voxelize: an inlet stream has no cells; refine spacing");
  if (g.outlet_cells == 0)
    throw ValidationError("voxelize: outlet plane has no fluid cells");

  // Every fluid cell must reach the outlet through fluid (6-connectivity).
  Field3<std::uint8_t> seen(g.nx, g.ny, g.nz, 0);
  std::deque<std::array<int, 3>> queue;
  for (int k = 0; k < g.nz; ++k)
    for (int i = 0; i < g.nx; ++i)
      if (g.fluid(i, g.ny - 1, k)) {
        seen(i, g.ny - 1, k) = 1;
        queue.push_back({i, g.ny - 1, k});
      }
  const int off[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                         {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  while (!queue.empty()) {
    auto [i, j, k] = queue.front();
    queue.pop_front();
    for (const auto& d : off) {
      const int ii = i + d[0], jj = j + d[1], kk = k + d[2];
      if (ii < 0 || jj < 0 || kk < 0 || ii >= g.nx || jj >= g.ny || kk >= g.nz)
        continue;
      if (!g.fluid(ii, jj, kk) || seen(ii, jj, kk)) continue;
      seen(ii, jj, kk) = 1;
      queue.push_back({ii, jj, kk});
    }
  }
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (g.fluid(i, j, k) && !seen(i, j, k))
          throw ValidationError(
              "voxelize: disconnected fluid region at cell (" +
              std::to_string(i) + ", " + std::to_string(j) + ", " +
              std::to_string(k) + ")");

  return g;
}

}  // namespace micromix

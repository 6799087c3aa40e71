#include "strongcp/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace strongcp {

namespace {

using Point2 = std::array<double, 2>;

constexpr double kCanvas = 480.0;
constexpr double kMargin = 24.0;

struct Viewport {
  double xmin, xmax, ymin, ymax;

  Point2 to_canvas(const Point2& p) const {
    const double scale = (kCanvas - 2 * kMargin) / std::max(xmax - xmin, ymax - ymin);
    return {kMargin + (p[0] - xmin) * scale, kCanvas - kMargin - (p[1] - ymin) * scale};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Viewport fit(const PointSetd& points) {
  const Eigen::Vector2d lo = points.rowwise().minCoeff();
  const Eigen::Vector2d hi = points.rowwise().maxCoeff();
  const double extent = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-9});
  const double pad = std::max(0.25 * extent, 0.5);
  // Square viewport so angles are not distorted.
  const double side = extent + 2 * pad;
  const double cx = 0.5 * (lo[0] + hi[0]);
  const double cy = 0.5 * (lo[1] + hi[1]);
  return {cx - side / 2, cx + side / 2, cy - side / 2, cy + side / 2};
}

// Clips a convex polygon to {x : x·u <= b}.
std::vector<Point2> clip(const std::vector<Point2>& poly, const Point2& u, double b) {
  std::vector<Point2> out;
  const auto side = [&](const Point2& p) { return p[0] * u[0] + p[1] * u[1] - b; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& c = poly[(i + 1) % poly.size()];
    const double sa = side(a);
    const double sc = side(c);
    if (sa <= 0) out.push_back(a);
    if ((sa < 0 && sc > 0) || (sa > 0 && sc < 0)) {
      const double t = sa / (sa - sc);
      out.push_back({a[0] + t * (c[0] - a[0]), a[1] + t * (c[1] - a[1])});
    }
  }
  return out;
}

// Segment of the line x·u = b inside the viewport, if any.
std::optional<std::pair<Point2, Point2>> boundary_segment(const Viewport& vp, const Point2& u,
                                                          double b) {
  const Point2 origin{u[0] * b, u[1] * b};
  const Point2 dir{-u[1], u[0]};
  double t0 = -1e300;
  double t1 = 1e300;
  const std::array<std::pair<double, double>, 2> bounds{{{vp.xmin, vp.xmax}, {vp.ymin, vp.ymax}}};
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const auto [lo, hi] = bounds[axis];
    if (std::abs(dir[axis]) < 1e-15) {
      if (origin[axis] < lo || origin[axis] > hi) return std::nullopt;
      continue;
    }
    double a = (lo - origin[axis]) / dir[axis];
    double c = (hi - origin[axis]) / dir[axis];
    if (a > c) std::swap(a, c);
    t0 = std::max(t0, a);
    t1 = std::min(t1, c);
  }
  if (t0 >= t1) return std::nullopt;
  return std::pair{Point2{origin[0] + t0 * dir[0], origin[1] + t0 * dir[1]},
                   Point2{origin[0] + t1 * dir[0], origin[1] + t1 * dir[1]}};
}

}  // namespace

std::string render_svg(const PointSetd& points, const OrientationFamilyd& family,
                       const CenterpointCertificate<double>& certificate) {
  if (points.rows() != 2 || family.dim() != 2) {
    throw DimensionMismatch("render_svg: only planar instances can be plotted");
  }
  if (points.cols() < 1) throw InvalidArgument("render_svg: empty point set");
  const Viewport vp = fit(points);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kCanvas) + "\" height=\"" +
         fmt(kCanvas) + "\" viewBox=\"0 0 " + fmt(kCanvas) + " " + fmt(kCanvas) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kCanvas) + "\" height=\"" + fmt(kCanvas) +
         "\" fill=\"white\"/>\n";

  std::vector<Point2> region{{vp.xmin, vp.ymin}, {vp.xmax, vp.ymin}, {vp.xmax, vp.ymax},
                             {vp.xmin, vp.ymax}};
  for (const auto& h : certificate.halfspaces) {
    region = clip(region, {h.orientation[0], h.orientation[1]}, h.offset);
  }
  if (region.size() >= 3) {
    svg += "<polygon class=\"region-E\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < region.size(); ++i) {
      const auto c = vp.to_canvas(region[i]);
      if (i > 0) svg += ' ';
      svg += fmt(c[0]) + "," + fmt(c[1]);
    }
    svg += "\"/>\n";
  }

  for (std::size_t i = 0; i < certificate.halfspaces.size(); ++i) {
    const auto& h = certificate.halfspaces[i];
    const auto seg = boundary_segment(vp, {h.orientation[0], h.orientation[1]}, h.offset);
    if (!seg) continue;
    const auto a = vp.to_canvas(seg->first);
    const auto b = vp.to_canvas(seg->second);
    svg += "<line class=\"boundary\" data-orientation=\"" + std::to_string(i) + "\" x1=\"" +
           fmt(a[0]) + "\" y1=\"" + fmt(a[1]) + "\" x2=\"" + fmt(b[0]) + "\" y2=\"" + fmt(b[1]) +
           "\" stroke=\"#3182bd\" stroke-width=\"1.5\"/>\n";
  }

  std::map<Point2, std::size_t> multiplicity;
  std::vector<Point2> order;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    const Point2 p{points(0, i), points(1, i)};
    if (multiplicity[p]++ == 0) order.push_back(p);
  }
  const auto chosen_col = static_cast<Eigen::Index>(certificate.chosen_index);
  const Point2 chosen{points(0, chosen_col), points(1, chosen_col)};
  for (const auto& p : order) {
    const auto c = vp.to_canvas(p);
    const bool is_chosen = p == chosen;
    svg += std::string("<circle class=\"") + (is_chosen ? "chosen" : "point") + "\" cx=\"" +
           fmt(c[0]) + "\" cy=\"" + fmt(c[1]) + "\" r=\"" + (is_chosen ? "6" : "4") +
           "\" fill=\"" + (is_chosen ? "#de2d26" : "black") + "\" data-multiplicity=\"" +
           std::to_string(multiplicity[p]) + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace strongcp

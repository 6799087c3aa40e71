#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "strongcp/geometry.hpp"

namespace strongcp {

namespace detail {
inline void require_positive_dimension(int d, const char* what) {
  if (d < 1) throw InvalidArgument(std::string(what) + ": dimension must be at least 1");
}

template <CoordinateScalar Scalar>
Orientation<Scalar> axis_direction(int d, int axis, int sign) {
  Vector<Scalar> v = Vector<Scalar>::Zero(d);
  v[axis] = Scalar(sign);
  return Orientation<Scalar>(std::move(v));
}
}  // namespace detail

/// +e_j, -e_j for every axis j (k = 2d).
template <CoordinateScalar Scalar = double>
OrientationFamily<Scalar> axis_box_family(int d) {
  detail::require_positive_dimension(d, "axis_box_family");
  std::vector<Orientation<Scalar>> out;
  for (int j = 0; j < d; ++j) {
    out.push_back(detail::axis_direction<Scalar>(d, j, +1));
    out.push_back(detail::axis_direction<Scalar>(d, j, -1));
  }
  return OrientationFamily<Scalar>(std::move(out));
}

/// Axis boxes whose last axis is unbounded below: +e_j for all j, -e_j for
/// j < d (k = 2d - 1).
template <CoordinateScalar Scalar = double>
OrientationFamily<Scalar> skyline_family(int d) {
  detail::require_positive_dimension(d, "skyline_family");
  std::vector<Orientation<Scalar>> out;
  for (int j = 0; j < d; ++j) {
    out.push_back(detail::axis_direction<Scalar>(d, j, +1));
    if (j + 1 < d) out.push_back(detail::axis_direction<Scalar>(d, j, -1));
  }
  return OrientationFamily<Scalar>(std::move(out));
}

/// +e_j for all j (k = d).
template <CoordinateScalar Scalar = double>
OrientationFamily<Scalar> orthant_family(int d) {
  detail::require_positive_dimension(d, "orthant_family");
  std::vector<Orientation<Scalar>> out;
  for (int j = 0; j < d; ++j) out.push_back(detail::axis_direction<Scalar>(d, j, +1));
  return OrientationFamily<Scalar>(std::move(out));
}

/// Outward normals of a downward-pointing equilateral triangle, at 90, 210
/// and 330 degrees. Irrational components, so float mode only.
inline OrientationFamilyd downward_triangle_family() {
  constexpr double c = std::numbers::sqrt3 / 2.0;
  std::vector<Orientationd> out;
  out.emplace_back(Vectord{{0.0, 1.0}});
  out.emplace_back(Vectord{{-c, -0.5}});
  out.emplace_back(Vectord{{c, -0.5}});
  return OrientationFamilyd(std::move(out));
}

/// Homothets of a polytope share its facet orientations.
template <CoordinateScalar Scalar = double>
OrientationFamily<Scalar> homothet_family(const std::vector<Vector<Scalar>>& facet_normals) {
  if (facet_normals.empty()) throw InvalidArgument("homothet_family: no facet normals");
  const auto d = facet_normals.front().size();
  if (static_cast<Eigen::Index>(facet_normals.size()) < d + 1) {
    throw InvalidArgument("homothet_family: a bounded polytope in dimension " +
                          std::to_string(d) + " needs at least " + std::to_string(d + 1) +
                          " facet normals");
  }
  return normalize_orientations(facet_normals);
}

}  // namespace strongcp
